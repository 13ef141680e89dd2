#include "chromachord/chord_engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "chromachord/error.hpp"

namespace chromachord {

void EngineConfig::validate() const {
  if (!(tau_tone > 0.0 && tau_tone <= tau_chord && tau_chord < 1.0)) {
    throw ConfigError("engine: thresholds must satisfy 0 < tau_tone <= tau_chord < 1");
  }
  if (n_min < 1) {
    throw ConfigError("engine: n_min must be at least 1");
  }
  if (!(epsilon > 0.0)) {
    throw ConfigError("engine: epsilon must be positive");
  }
}

ChromaVector average_chroma(const Chromagram& chromagram) {
  const Matrix& m = chromagram.values;
  if (m.cols < 1 || m.rows != kNumPitchClasses) {
    throw std::invalid_argument("average: chromagram must be 12 x N with N >= 1");
  }
  ChromaVector avg;
  const double inv = 1.0 / m.cols;
  for (int p = 0; p < kNumPitchClasses; ++p) {
    double sum = 0.0;
    for (int f = 0; f < m.cols; ++f) {
      sum += m.at(p, f);
    }
    avg[p] = sum * inv;
  }
  return avg;
}

ChromaVector emphasize(const ChromaVector& avg) {
  ChromaVector emph;
  for (int p = 0; p < kNumPitchClasses; ++p) {
    emph[p] = avg[p] * avg[p];
  }
  return emph;
}

std::vector<int> significant_tones(const ChromaVector& emph,
                                   const EngineConfig& config) {
  std::vector<int> tones;
  for (int p = 0; p < kNumPitchClasses; ++p) {
    if (emph[p] >= config.tau_tone) {
      tones.push_back(p);
    }
  }
  return tones;
}

GateResult chord_gate(const ChromaVector& emph, const EngineConfig& config) {
  GateResult result;
  for (int p = 0; p < kNumPitchClasses; ++p) {
    if (emph[p] >= config.tau_chord) {
      ++result.count;
    }
  }
  result.passed = result.count >= config.n_min;
  return result;
}

int find_root(const ChromaVector& emph) {
  int best = 0;
  for (int p = 1; p < kNumPitchClasses; ++p) {
    if (emph[p] > emph[best]) {  // ties keep the lowest pitch class
      best = p;
    }
  }
  if (emph[best] <= 0.0) {
    throw std::domain_error("find_root: all-zero chroma vector");
  }
  return best;
}

ChordQuality classify_third(const ChromaVector& emph, int root) {
  const int t_min = (root + 3) % kNumPitchClasses;
  const int t_maj = (root + 4) % kNumPitchClasses;
  return emph[t_maj] > emph[t_min] ? ChordQuality::kMajor
                                   : ChordQuality::kMinor;
}

int third_of(int root, ChordQuality quality) {
  const int interval = quality == ChordQuality::kMajor ? 4 : 3;
  return (root + interval) % kNumPitchClasses;
}

int fifth_of(int root) { return (root + 7) % kNumPitchClasses; }

Confidence confidence(const ChromaVector& emph, int root,
                      const EngineConfig& config) {
  const double maj = emph[(root + 4) % kNumPitchClasses];
  const double min = emph[(root + 3) % kNumPitchClasses];
  Confidence c;
  c.raw = maj / (maj + min + config.epsilon);
  c.pct = std::clamp(std::abs(2.0 * c.raw - 1.0) * 100.0, 0.0, 100.0);
  return c;
}

Strength strength_band(double c_pct) {
  if (!(c_pct >= 0.0 && c_pct <= 100.0)) {
    throw std::domain_error("strength_band: confidence percentage outside [0, 100]");
  }
  if (c_pct >= 95.0) return Strength::kVeryStrong;
  if (c_pct >= 80.0) return Strength::kStrong;
  if (c_pct >= 60.0) return Strength::kModerate;
  if (c_pct >= 40.0) return Strength::kUncertain;
  if (c_pct >= 20.0) return Strength::kWeak;
  return Strength::kVeryWeak;
}

std::optional<ChordEstimate> estimate_chord(const Chromagram& chromagram,
                                            const EngineConfig& config) {
  const ChromaVector avg = average_chroma(chromagram);
  const ChromaVector emph = emphasize(avg);

  const GateResult gate = chord_gate(emph, config);
  if (!gate.passed) {
    return std::nullopt;
  }

  ChordEstimate estimate;
  estimate.root = find_root(emph);
  estimate.quality = classify_third(emph, estimate.root);
  estimate.fifth = fifth_of(estimate.root);
  const Confidence c = confidence(emph, estimate.root, config);
  estimate.c_raw = c.raw;
  estimate.c_pct = c.pct;
  estimate.strength = strength_band(c.pct);
  estimate.significant_tones = significant_tones(emph, config);
  return estimate;
}

}  // namespace chromachord
