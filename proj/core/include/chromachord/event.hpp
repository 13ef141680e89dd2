#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "chromachord/chord_engine.hpp"
#include "chromachord/colour_map.hpp"

namespace chromachord {

enum class EventOutcome { kInitializing, kNoChord, kChord };

std::string_view outcome_name(EventOutcome outcome);

/// One pipeline output record, covering one chunk of stream time.
struct ChordEvent {
  double start_time = 0.0;
  double end_time = 0.0;
  EventOutcome outcome = EventOutcome::kNoChord;
  std::optional<ChordEstimate> estimate;             // set when outcome == kChord
  std::optional<std::array<NoteColour, 3>> colours;  // root, third, fifth
  bool displayed = false;  // strength at or above the display floor
  bool partial = false;    // chunk was zero-padded at end of stream
};

/// Equality over the serialized surface of an event: times and c_pct at
/// the wire's six-decimal granularity; raw confidence and significant
/// tones are not part of the wire record and are ignored.
bool events_equivalent(const ChordEvent& a, const ChordEvent& b);

}  // namespace chromachord
