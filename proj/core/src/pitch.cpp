#include "chromachord/pitch.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

namespace chromachord {

namespace {

std::string fold_lower_alpha(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  return out;
}

}  // namespace

std::string_view note_name(int pitch_class) {
  if (pitch_class < 0 || pitch_class >= kNumPitchClasses) {
    throw std::out_of_range("pitch class out of range: " +
                            std::to_string(pitch_class));
  }
  return kNoteNames[pitch_class];
}

std::optional<int> parse_note_name(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
    ++i;
  }
  if (i >= text.size()) {
    return std::nullopt;
  }
  int base = 0;
  switch (std::toupper(static_cast<unsigned char>(text[i]))) {
    case 'C': base = 0; break;
    case 'D': base = 2; break;
    case 'E': base = 4; break;
    case 'F': base = 5; break;
    case 'G': base = 7; break;
    case 'A': base = 9; break;
    case 'B': base = 11; break;
    default: return std::nullopt;
  }
  ++i;
  if (i < text.size() && text[i] == '#') {
    base = (base + 1) % 12;
    ++i;
  } else if (i < text.size() && text[i] == 'b') {
    base = (base + 11) % 12;
    ++i;
  }
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
    ++i;
  }
  if (i != text.size()) {
    return std::nullopt;
  }
  return base;
}

std::string_view quality_name(ChordQuality quality) {
  return quality == ChordQuality::kMajor ? "Major" : "Minor";
}

std::optional<ChordQuality> parse_quality(std::string_view text) {
  const std::string folded = fold_lower_alpha(text);
  if (folded == "major" || folded == "maj") {
    return ChordQuality::kMajor;
  }
  if (folded == "minor" || folded == "min") {
    return ChordQuality::kMinor;
  }
  return std::nullopt;
}

std::string_view strength_name(Strength strength) {
  switch (strength) {
    case Strength::kVeryStrong: return "Very Strong";
    case Strength::kStrong: return "Strong";
    case Strength::kModerate: return "Moderate";
    case Strength::kUncertain: return "Uncertain";
    case Strength::kWeak: return "Weak";
    case Strength::kVeryWeak: return "Very Weak";
  }
  return "Very Weak";
}

std::optional<Strength> parse_strength(std::string_view text) {
  const std::string folded = fold_lower_alpha(text);
  if (folded == "verystrong") return Strength::kVeryStrong;
  if (folded == "strong") return Strength::kStrong;
  if (folded == "moderate") return Strength::kModerate;
  if (folded == "uncertain") return Strength::kUncertain;
  if (folded == "weak") return Strength::kWeak;
  if (folded == "veryweak") return Strength::kVeryWeak;
  return std::nullopt;
}

double midi_note_frequency(int midi) {
  return 440.0 * std::pow(2.0, (midi - 69) / 12.0);
}

double note_frequency(int pitch_class, int octave) {
  return midi_note_frequency(12 * (octave + 1) + pitch_class);
}

int pitch_class_of_frequency(double hz) {
  if (hz <= 0.0) {
    throw std::domain_error("frequency must be positive");
  }
  const long midi = std::lround(69.0 + 12.0 * std::log2(hz / 440.0));
  return static_cast<int>(((midi % 12) + 12) % 12);
}

}  // namespace chromachord
