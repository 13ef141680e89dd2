#include "chromachord/audio_io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iostream>
#include <iterator>
#include <stdexcept>

#include "chromachord/error.hpp"

namespace chromachord {

namespace {

std::uint16_t read_u16(std::span<const std::uint8_t> b, std::size_t off) {
  return static_cast<std::uint16_t>(b[off] | (b[off + 1] << 8));
}

std::uint32_t read_u32(std::span<const std::uint8_t> b, std::size_t off) {
  return static_cast<std::uint32_t>(b[off]) |
         (static_cast<std::uint32_t>(b[off + 1]) << 8) |
         (static_cast<std::uint32_t>(b[off + 2]) << 16) |
         (static_cast<std::uint32_t>(b[off + 3]) << 24);
}

bool tag_at(std::span<const std::uint8_t> b, std::size_t off, const char* tag) {
  return std::memcmp(b.data() + off, tag, 4) == 0;
}

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
  out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xFF));
  out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xFF));
}

float sanitize(float s) {
  if (!std::isfinite(s)) {
    return 0.0f;
  }
  return std::clamp(s, -1.0f, 1.0f);
}

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatIeeeFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

}  // namespace

void StreamConfig::validate() const {
  if (sample_rate < 8000) {
    throw ConfigError("stream sample rate must be at least 8000 Hz");
  }
  if (!(chunk_seconds > 0.0) || !std::isfinite(chunk_seconds)) {
    throw ConfigError("chunk duration must be positive");
  }
}

WavData decode_wav(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 12) {
    throw DecodeError("WAV: stream shorter than the RIFF header");
  }
  if (!tag_at(bytes, 0, "RIFF")) {
    throw DecodeError("WAV: missing RIFF magic");
  }
  if (!tag_at(bytes, 8, "WAVE")) {
    throw DecodeError("WAV: RIFF form type is not WAVE");
  }

  bool have_fmt = false;
  bool have_data = false;
  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint16_t bits = 0;
  std::uint32_t rate = 0;
  std::size_t data_off = 0;
  std::size_t data_len = 0;

  std::size_t off = 12;
  while (off + 8 <= bytes.size()) {
    const std::size_t id_off = off;
    const std::uint32_t size = read_u32(bytes, off + 4);
    off += 8;
    if (off + size > bytes.size()) {
      if (tag_at(bytes, id_off, "data")) {
        throw DecodeError("WAV: data chunk truncated");
      }
      throw DecodeError("WAV: chunk size exceeds stream length");
    }
    if (tag_at(bytes, id_off, "fmt ")) {
      if (size < 16) {
        throw DecodeError("WAV: fmt chunk too small");
      }
      format = read_u16(bytes, off);
      channels = read_u16(bytes, off + 2);
      rate = read_u32(bytes, off + 4);
      bits = read_u16(bytes, off + 14);
      if (format == kFormatExtensible) {
        if (size < 40) {
          throw DecodeError("WAV: extensible fmt chunk too small");
        }
        // First two bytes of the SubFormat GUID carry the format code.
        format = read_u16(bytes, off + 24);
      }
      have_fmt = true;
    } else if (tag_at(bytes, id_off, "data")) {
      data_off = off;
      data_len = size;
      have_data = true;
    }
    off += size + (size & 1);  // chunks are word-aligned
  }

  if (!have_fmt) {
    throw DecodeError("WAV: fmt chunk missing");
  }
  if (!have_data) {
    throw DecodeError("WAV: data chunk missing");
  }
  if (rate == 0) {
    throw DecodeError("WAV: sample rate is zero");
  }
  if (channels == 0) {
    throw DecodeError("WAV: channel count is zero");
  }

  WavData out;
  out.sample_rate = static_cast<int>(rate);
  out.channels = static_cast<int>(channels);
  const std::span<const std::uint8_t> data = bytes.subspan(data_off, data_len);

  if (format == kFormatPcm && bits == 16) {
    const std::size_t n = data.size() / 2;
    out.samples.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto v = static_cast<std::int16_t>(read_u16(data, 2 * i));
      out.samples.push_back(static_cast<float>(v) / 32768.0f);
    }
  } else if (format == kFormatPcm && bits == 24) {
    const std::size_t n = data.size() / 3;
    out.samples.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::int32_t v = data[3 * i] | (data[3 * i + 1] << 8) |
                       (data[3 * i + 2] << 16);
      if (v & 0x800000) {
        v |= ~0xFFFFFF;  // sign-extend
      }
      out.samples.push_back(static_cast<float>(v) / 8388608.0f);
    }
  } else if (format == kFormatIeeeFloat && bits == 32) {
    const std::size_t n = data.size() / 4;
    out.samples.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      out.samples.push_back(
          sanitize(std::bit_cast<float>(read_u32(data, 4 * i))));
    }
  } else {
    throw DecodeError("WAV: unsupported format (format tag " +
                      std::to_string(format) + ", " + std::to_string(bits) +
                      " bits per sample)");
  }
  return out;
}

std::vector<std::uint8_t> encode_wav16(std::span<const float> samples,
                                       int sample_rate, int channels) {
  if (sample_rate <= 0) {
    throw ConfigError("WAV encode: sample rate must be positive");
  }
  if (channels <= 0) {
    throw ConfigError("WAV encode: channel count must be positive");
  }
  const std::uint32_t data_len = static_cast<std::uint32_t>(samples.size() * 2);
  std::vector<std::uint8_t> out;
  out.reserve(44 + data_len);

  const char* riff = "RIFF";
  const char* wave = "WAVEfmt ";
  out.insert(out.end(), riff, riff + 4);
  put_u32(out, 36 + data_len);
  out.insert(out.end(), wave, wave + 8);
  put_u32(out, 16);  // PCM fmt chunk size
  put_u16(out, kFormatPcm);
  put_u16(out, static_cast<std::uint16_t>(channels));
  put_u32(out, static_cast<std::uint32_t>(sample_rate));
  put_u32(out, static_cast<std::uint32_t>(sample_rate * channels * 2));
  put_u16(out, static_cast<std::uint16_t>(channels * 2));
  put_u16(out, 16);  // bits per sample
  const char* data = "data";
  out.insert(out.end(), data, data + 4);
  put_u32(out, data_len);

  for (float s : samples) {
    const double c = std::clamp(double(s), -1.0, 1.0);
    const long v = std::clamp(std::lround(c * 32768.0), -32768l, 32767l);
    put_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(v)));
  }
  return out;
}

std::vector<std::vector<float>> deinterleave(std::span<const float> interleaved,
                                             int channels) {
  if (channels <= 0) {
    throw std::invalid_argument("deinterleave: channel count must be positive");
  }
  const std::size_t frames = interleaved.size() / channels;
  std::vector<std::vector<float>> out(channels);
  for (auto& ch : out) {
    ch.resize(frames);
  }
  for (std::size_t f = 0; f < frames; ++f) {
    for (int c = 0; c < channels; ++c) {
      out[c][f] = interleaved[f * channels + c];
    }
  }
  return out;
}

std::vector<float> mixdown_mono(const std::vector<std::vector<float>>& channels) {
  if (channels.empty()) {
    throw std::invalid_argument("mixdown: no channels");
  }
  const std::size_t frames = channels.front().size();
  for (const auto& ch : channels) {
    if (ch.size() != frames) {
      throw std::invalid_argument("mixdown: channel lengths differ");
    }
  }
  if (channels.size() == 1) {
    return channels.front();
  }
  std::vector<float> out(frames);
  const double inv = 1.0 / static_cast<double>(channels.size());
  for (std::size_t f = 0; f < frames; ++f) {
    double acc = 0.0;
    for (const auto& ch : channels) {
      acc += ch[f];
    }
    out[f] = static_cast<float>(acc * inv);
  }
  return out;
}

std::vector<AudioChunk> chunk_stream(std::span<const float> mono,
                                     const StreamConfig& config) {
  config.validate();
  const auto chunk_len = static_cast<std::size_t>(
      std::llround(config.chunk_seconds * config.sample_rate));
  if (chunk_len == 0) {
    throw ConfigError("chunk duration rounds to zero samples");
  }

  std::vector<AudioChunk> chunks;
  for (std::size_t offset = 0, k = 0; offset < mono.size();
       offset += chunk_len, ++k) {
    AudioChunk chunk;
    chunk.sample_rate = config.sample_rate;
    chunk.start_time = static_cast<double>(k) * config.chunk_seconds;
    chunk.index = k;
    chunk.valid_samples = std::min(chunk_len, mono.size() - offset);
    chunk.partial = chunk.valid_samples < chunk_len;
    chunk.samples.assign(chunk_len, 0.0f);
    std::copy_n(mono.begin() + offset, chunk.valid_samples,
                chunk.samples.begin());
    chunks.push_back(std::move(chunk));
  }
  return chunks;
}

std::vector<std::uint8_t> read_binary_input(const std::string& path_or_dash) {
  if (path_or_dash == "-") {
    return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(std::cin),
                                     std::istreambuf_iterator<char>());
  }
  std::ifstream in(path_or_dash, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open input: " + path_or_dash);
  }
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in),
                                   std::istreambuf_iterator<char>());
}

}  // namespace chromachord
