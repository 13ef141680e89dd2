#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace chromachord {

inline constexpr int kNumPitchClasses = 12;

// Sharp-only spellings, C = 0 through B = 11.
inline constexpr std::array<std::string_view, kNumPitchClasses> kNoteNames = {
    "C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B"};

/// Throws std::out_of_range unless 0 <= pitch_class < 12.
std::string_view note_name(int pitch_class);

/// Accepts letter names with optional '#' or 'b' ("G", "f#", "Db").
std::optional<int> parse_note_name(std::string_view text);

enum class ChordQuality { kMajor, kMinor };

std::string_view quality_name(ChordQuality quality);
std::optional<ChordQuality> parse_quality(std::string_view text);

// Ordered weakest to strongest so display gating can compare bands.
enum class Strength {
  kVeryWeak,
  kWeak,
  kUncertain,
  kModerate,
  kStrong,
  kVeryStrong,
};

std::string_view strength_name(Strength strength);

/// Tolerant of case, spaces and dashes ("very-strong", "Very Strong").
std::optional<Strength> parse_strength(std::string_view text);

/// Equal-temperament frequency of a MIDI note number, A4 (69) = 440 Hz.
double midi_note_frequency(int midi);

/// Frequency of a pitch class at a given octave (C4 = MIDI 60).
double note_frequency(int pitch_class, int octave);

/// Pitch class of the equal-temperament note nearest to a frequency.
int pitch_class_of_frequency(double hz);

}  // namespace chromachord
