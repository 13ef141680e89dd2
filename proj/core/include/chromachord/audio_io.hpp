#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace chromachord {

/// One fixed-duration mono analysis window.
struct AudioChunk {
  std::vector<float> samples;  // exactly chunk_seconds * sample_rate entries
  int sample_rate = 0;
  double start_time = 0.0;  // seconds from stream origin
  std::size_t index = 0;    // position in the chunk sequence
  std::size_t valid_samples = 0;  // samples.size() unless zero-padded
  bool partial = false;           // true when the tail was zero-padded
};

struct StreamConfig {
  int sample_rate = 22050;  // engine rate; input is resampled to this
  double chunk_seconds = 4.0;
  std::string input_path;  // "-" reads standard input

  void validate() const;  // throws ConfigError
};

/// Decoded WAV payload, samples interleaved and scaled to [-1, 1].
struct WavData {
  int sample_rate = 0;
  int channels = 0;
  std::vector<float> samples;
};

/// Parses a RIFF/WAVE byte stream. Supported codecs: PCM 16-bit, PCM
/// 24-bit and IEEE float 32-bit (plus their WAVE_FORMAT_EXTENSIBLE
/// wrappers). Throws DecodeError naming the offending field otherwise.
WavData decode_wav(std::span<const std::uint8_t> bytes);

/// Serializes samples as a 16-bit PCM WAV file image.
std::vector<std::uint8_t> encode_wav16(std::span<const float> samples,
                                       int sample_rate, int channels = 1);

std::vector<std::vector<float>> deinterleave(std::span<const float> interleaved,
                                             int channels);

/// Per-frame arithmetic mean. Mono input is returned unchanged.
std::vector<float> mixdown_mono(const std::vector<std::vector<float>>& channels);

/// Band-limited rate conversion with a 64-tap windowed-sinc kernel.
/// Equal rates return the input bit-identically. Output length is
/// round(n * to_rate / from_rate).
std::vector<float> resample(std::span<const float> input, int from_rate,
                            int to_rate);

/// Splits a mono stream into consecutive non-overlapping chunks. The
/// final short chunk is zero-padded and marked partial. An empty stream
/// yields no chunks.
std::vector<AudioChunk> chunk_stream(std::span<const float> mono,
                                     const StreamConfig& config);

/// Reads a whole file, or standard input when the path is "-".
std::vector<std::uint8_t> read_binary_input(const std::string& path_or_dash);

}  // namespace chromachord
