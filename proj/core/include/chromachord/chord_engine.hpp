#pragma once

#include <array>
#include <optional>
#include <vector>

#include "chromachord/chroma.hpp"
#include "chromachord/pitch.hpp"

namespace chromachord {

/// 12 per-pitch-class non-negative scalars (C = 0 ... B = 11).
struct ChromaVector {
  std::array<double, kNumPitchClasses> values{};

  double operator[](int pitch_class) const { return values[pitch_class]; }
  double& operator[](int pitch_class) { return values[pitch_class]; }
};

struct EngineConfig {
  double tau_tone = 0.15;   // significance threshold on emphasized chroma
  double tau_chord = 0.2;   // stricter threshold gating chord analysis
  int n_min = 2;            // minimum distinct pitch classes above tau_chord
  double epsilon = 1e-6;    // division guard in the confidence ratio
  Strength display_floor = Strength::kModerate;

  void validate() const;  // throws ConfigError
};

struct ChordEstimate {
  int root = 0;
  ChordQuality quality = ChordQuality::kMajor;
  int fifth = 0;            // always (root + 7) mod 12
  double c_raw = 0.0;       // in [0, 1)
  double c_pct = 0.0;       // in [0, 100]
  Strength strength = Strength::kVeryWeak;
  std::vector<int> significant_tones;  // pitch classes passing tau_tone
};

/// Mean intensity per pitch class across frames. Throws on zero frames.
ChromaVector average_chroma(const Chromagram& chromagram);

/// Squares each value, boosting contrast between dominant and weak
/// tones. Order-preserving on non-negative input.
ChromaVector emphasize(const ChromaVector& avg);

/// Pitch classes with emphasized value >= tau_tone (inclusive), sorted.
std::vector<int> significant_tones(const ChromaVector& emph,
                                   const EngineConfig& config);

struct GateResult {
  int count = 0;     // pitch classes with emphasized value >= tau_chord
  bool passed = false;  // count >= n_min
};

/// Chord analysis proceeds only when at least n_min pitch classes carry
/// strong harmonic presence. Failing the gate is a normal outcome.
GateResult chord_gate(const ChromaVector& emph, const EngineConfig& config);

/// Index of the highest emphasized value; ties break to the lowest
/// pitch class. Throws std::domain_error on an all-zero vector.
int find_root(const ChromaVector& emph);

/// Major exactly when the major-third value strictly exceeds the
/// minor-third value; ties classify as minor.
ChordQuality classify_third(const ChromaVector& emph, int root);

/// Third of the triad: root + 4 semitones (major) or + 3 (minor).
int third_of(int root, ChordQuality quality);

/// Perfect fifth: (root + 7) mod 12.
int fifth_of(int root);

struct Confidence {
  double raw = 0.0;
  double pct = 0.0;
};

/// raw = maj / (maj + min + epsilon), pct = |2 raw - 1| * 100, with pct
/// clamped to [0, 100] against floating-point drift.
Confidence confidence(const ChromaVector& emph, int root,
                      const EngineConfig& config);

/// Six-band rating of a confidence percentage:
///   >= 95 very strong, [80, 95) strong, [60, 80) moderate,
///   [40, 60) uncertain, [20, 40) weak, < 20 very weak.
/// Throws std::domain_error outside [0, 100].
Strength strength_band(double c_pct);

/// Full reduction of a chunk chromagram: average, emphasize, gate,
/// root, third, fifth, confidence, band. Returns std::nullopt when the
/// gate fails (no-chord), which is not an error.
std::optional<ChordEstimate> estimate_chord(const Chromagram& chromagram,
                                            const EngineConfig& config);

}  // namespace chromachord
