#include "chromachord/colour_map.hpp"

#include <stdexcept>
#include <string>

namespace chromachord {

namespace {

// Newton-wheel colours; naturals carry Newton's picks, accidentals the
// intermediary hues.
constexpr std::array<NoteColour, kNumPitchClasses> kTable = {{
    {0, "C", {199, 21, 133}},    // red-violet
    {1, "C#", {195, 118, 225}},  // violet
    {2, "D", {255, 0, 0}},       // red
    {3, "D#", {255, 69, 0}},     // red-orange
    {4, "E", {255, 140, 0}},     // orange
    {5, "F", {255, 165, 0}},     // yellow-orange
    {6, "F#", {255, 255, 0}},    // yellow
    {7, "G", {173, 255, 47}},    // yellow-green
    {8, "G#", {0, 255, 0}},      // green
    {9, "A", {83, 183, 183}},    // blue-green
    {10, "A#", {0, 0, 255}},     // blue
    {11, "B", {75, 0, 130}},     // indigo
}};

}  // namespace

const std::array<NoteColour, kNumPitchClasses>& note_colour_table() {
  static const std::array<NoteColour, kNumPitchClasses> table = kTable;
  return table;
}

const NoteColour& colour_of(int pitch_class) {
  if (pitch_class < 0 || pitch_class >= kNumPitchClasses) {
    throw std::out_of_range("colour_of: pitch class out of range: " +
                            std::to_string(pitch_class));
  }
  return note_colour_table()[pitch_class];
}

std::array<NoteColour, 3> chord_colours(const ChordEstimate& estimate) {
  const int third = third_of(estimate.root, estimate.quality);
  return {colour_of(estimate.root), colour_of(third),
          colour_of(estimate.fifth)};
}

}  // namespace chromachord
