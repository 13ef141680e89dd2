// Shared helpers for the test suites. The signal probes here are kept
// independent of the library's analysis path so they can serve as
// oracles against it.
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <vector>

namespace testsupport {

/// Spectral magnitude at one frequency via the Goertzel recurrence.
inline double goertzel_magnitude(std::span<const float> x, double frequency,
                                 int sample_rate) {
  const double w = 2.0 * std::numbers::pi * frequency / sample_rate;
  const double c = 2.0 * std::cos(w);
  double s1 = 0.0;
  double s2 = 0.0;
  for (float v : x) {
    const double s0 = v + c * s1 - s2;
    s2 = s1;
    s1 = s0;
  }
  const double power = s1 * s1 + s2 * s2 - c * s1 * s2;
  return std::sqrt(std::max(0.0, power));
}

/// Plain sine, no fades.
inline std::vector<float> make_sine(double frequency, double seconds,
                                    int sample_rate, double amplitude) {
  const auto n = static_cast<std::size_t>(std::llround(seconds * sample_rate));
  std::vector<float> out(n);
  const double w = 2.0 * std::numbers::pi * frequency / sample_rate;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = static_cast<float>(amplitude * std::sin(w * i));
  }
  return out;
}

inline std::mt19937& rng() {
  static std::mt19937 gen(20250810u);
  return gen;
}

}  // namespace testsupport
