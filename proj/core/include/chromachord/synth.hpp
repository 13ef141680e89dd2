#pragma once

#include <vector>

#include "chromachord/pitch.hpp"

namespace chromachord {

/// Deterministic reference triad: three equal-amplitude sines at root,
/// third and fifth.
struct TriadSpec {
  int root = 0;  // pitch class
  ChordQuality quality = ChordQuality::kMajor;
  int octave = 3;  // octave of the root
  double amplitude_per_note = 0.25;
  double duration_seconds = 4.0;
  int sample_rate = 22050;

  void validate() const;  // throws ConfigError (Nyquist, clipping, ...)
};

/// Single sine with 10 ms linear fade-in/out against edge splatter.
std::vector<float> synth_sine(double frequency, double seconds,
                              int sample_rate, double amplitude);

/// Sum of the triad's three sines; bit-identical across runs for the
/// same spec. Peak amplitude never exceeds 3 * amplitude_per_note.
std::vector<float> synth_triad(const TriadSpec& spec);

}  // namespace chromachord
