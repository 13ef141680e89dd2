#include "chromachord/event.hpp"

#include <cmath>

namespace chromachord {

namespace {

// Wire format carries six decimal places.
constexpr double kWireTolerance = 5e-7;

bool close(double a, double b) { return std::abs(a - b) <= kWireTolerance; }

}  // namespace

std::string_view outcome_name(EventOutcome outcome) {
  switch (outcome) {
    case EventOutcome::kInitializing: return "initializing";
    case EventOutcome::kNoChord: return "no-chord";
    case EventOutcome::kChord: return "chord";
  }
  return "no-chord";
}

bool events_equivalent(const ChordEvent& a, const ChordEvent& b) {
  if (a.outcome != b.outcome || a.displayed != b.displayed ||
      a.partial != b.partial) {
    return false;
  }
  if (!close(a.start_time, b.start_time) || !close(a.end_time, b.end_time)) {
    return false;
  }
  if (a.outcome != EventOutcome::kChord) {
    return true;
  }
  if (!a.estimate || !b.estimate || !a.colours || !b.colours) {
    return false;
  }
  const ChordEstimate& ea = *a.estimate;
  const ChordEstimate& eb = *b.estimate;
  if (ea.root != eb.root || ea.quality != eb.quality || ea.fifth != eb.fifth ||
      ea.strength != eb.strength || !close(ea.c_pct, eb.c_pct)) {
    return false;
  }
  for (int i = 0; i < 3; ++i) {
    if ((*a.colours)[i].rgb != (*b.colours)[i].rgb) {
      return false;
    }
  }
  return true;
}

}  // namespace chromachord
