#include <algorithm>
#include <cmath>
#include <numbers>

#include "chromachord/audio_io.hpp"
#include "chromachord/error.hpp"

namespace chromachord {

namespace {

constexpr int kHalfTaps = 32;  // 64-tap kernel

double sinc(double x) {
  if (x == 0.0) {
    return 1.0;
  }
  const double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

// Blackman window on [-1, 1].
double window(double x) {
  const double px = std::numbers::pi * x;
  return 0.42 + 0.5 * std::cos(px) + 0.08 * std::cos(2.0 * px);
}

}  // namespace

std::vector<float> resample(std::span<const float> input, int from_rate,
                            int to_rate) {
  if (from_rate <= 0 || to_rate <= 0) {
    throw ConfigError("resample: rates must be positive");
  }
  if (from_rate == to_rate) {
    return std::vector<float>(input.begin(), input.end());
  }
  if (input.empty()) {
    return {};
  }

  const auto n = static_cast<std::int64_t>(input.size());
  const auto out_len = static_cast<std::size_t>(std::llround(
      static_cast<double>(input.size()) * to_rate / from_rate));
  const double step = static_cast<double>(from_rate) / to_rate;
  const double cutoff =
      std::min(1.0, static_cast<double>(to_rate) / from_rate);

  std::vector<float> out(out_len);
  for (std::size_t j = 0; j < out_len; ++j) {
    const double t = static_cast<double>(j) * step;
    const auto base = static_cast<std::int64_t>(std::floor(t));
    double acc = 0.0;
    double weight_sum = 0.0;
    for (std::int64_t i = base - kHalfTaps + 1; i <= base + kHalfTaps; ++i) {
      if (i < 0 || i >= n) {
        continue;
      }
      const double d = t - static_cast<double>(i);
      const double w = cutoff * sinc(cutoff * d) * window(d / kHalfTaps);
      acc += w * input[static_cast<std::size_t>(i)];
      weight_sum += w;
    }
    // Normalizing by the in-range weights keeps DC gain exactly 1,
    // including at the edges.
    out[j] = std::abs(weight_sum) > 1e-12
                 ? static_cast<float>(acc / weight_sum)
                 : 0.0f;
  }
  return out;
}

}  // namespace chromachord
