#include "chromachord/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "chromachord/error.hpp"

namespace chromachord {

namespace {

constexpr double kFadeSeconds = 0.01;

std::array<double, 3> triad_frequencies(const TriadSpec& spec) {
  const int root_midi = 12 * (spec.octave + 1) + spec.root;
  const int third_interval = spec.quality == ChordQuality::kMajor ? 4 : 3;
  return {midi_note_frequency(root_midi),
          midi_note_frequency(root_midi + third_interval),
          midi_note_frequency(root_midi + 7)};
}

void apply_fade(std::vector<float>& samples, int sample_rate) {
  const auto fade_len = static_cast<std::size_t>(
      std::llround(kFadeSeconds * sample_rate));
  if (fade_len == 0 || samples.size() < 2 * fade_len) {
    return;
  }
  for (std::size_t i = 0; i < fade_len; ++i) {
    const float gain = static_cast<float>(i) / fade_len;
    samples[i] *= gain;
    samples[samples.size() - 1 - i] *= gain;
  }
}

}  // namespace

void TriadSpec::validate() const {
  if (root < 0 || root >= kNumPitchClasses) {
    throw ConfigError("triad: root pitch class out of range");
  }
  if (sample_rate <= 0) {
    throw ConfigError("triad: sample rate must be positive");
  }
  if (!(duration_seconds > 0.0)) {
    throw ConfigError("triad: duration must be positive");
  }
  if (amplitude_per_note < 0.0) {
    throw ConfigError("triad: amplitude must be non-negative");
  }
  if (3.0 * amplitude_per_note > 1.0) {
    throw ConfigError("triad: summed amplitude exceeds full scale");
  }
  for (double f : triad_frequencies(*this)) {
    if (!(f < sample_rate / 2.0)) {
      throw ConfigError("triad: note at " + std::to_string(f) +
                        " Hz reaches Nyquist");
    }
  }
}

std::vector<float> synth_sine(double frequency, double seconds,
                              int sample_rate, double amplitude) {
  if (sample_rate <= 0 || !(seconds > 0.0)) {
    throw ConfigError("sine: sample rate and duration must be positive");
  }
  if (!(frequency < sample_rate / 2.0)) {
    throw ConfigError("sine: frequency reaches Nyquist");
  }
  const auto n = static_cast<std::size_t>(std::llround(seconds * sample_rate));
  std::vector<float> samples(n);
  const double w = 2.0 * std::numbers::pi * frequency / sample_rate;
  for (std::size_t i = 0; i < n; ++i) {
    samples[i] = static_cast<float>(amplitude * std::sin(w * i));
  }
  apply_fade(samples, sample_rate);
  return samples;
}

std::vector<float> synth_triad(const TriadSpec& spec) {
  spec.validate();
  const auto freqs = triad_frequencies(spec);
  const auto n = static_cast<std::size_t>(
      std::llround(spec.duration_seconds * spec.sample_rate));
  std::vector<float> samples(n, 0.0f);
  for (double f : freqs) {
    const double w = 2.0 * std::numbers::pi * f / spec.sample_rate;
    for (std::size_t i = 0; i < n; ++i) {
      samples[i] +=
          static_cast<float>(spec.amplitude_per_note * std::sin(w * i));
    }
  }
  apply_fade(samples, spec.sample_rate);
  return samples;
}

}  // namespace chromachord
