#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "chromachord/chord_engine.hpp"
#include "chromachord/pitch.hpp"

namespace chromachord {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  bool operator==(const Rgb&) const = default;
};

struct NoteColour {
  int pitch_class = 0;
  std::string_view name;
  Rgb rgb;

  bool operator==(const NoteColour&) const = default;
};

/// The fixed Newton-wheel mapping of the 12 pitch classes to colours;
/// accidentals carry the intermediary hues between the naturals.
const std::array<NoteColour, kNumPitchClasses>& note_colour_table();

/// Throws std::out_of_range unless 0 <= pitch_class < 12.
const NoteColour& colour_of(int pitch_class);

/// Colours for (root, third, fifth), in that order.
std::array<NoteColour, 3> chord_colours(const ChordEstimate& estimate);

}  // namespace chromachord
