#pragma once

#include <string>

#include "chromachord/event.hpp"

namespace chromachord {

/// One JSON line (no trailing newline) with fixed field order:
/// start_time, end_time, outcome, root, quality, fifth, c_pct,
/// strength, colours, displayed, partial. Estimate fields are omitted
/// unless the outcome is a chord. Numbers carry at most six decimals.
std::string emit_ndjson(const ChordEvent& event);

/// Parses a line produced by emit_ndjson. Fields that are not on the
/// wire (raw confidence, significant tones) are not recovered: c_raw is
/// NaN and significant_tones is empty on the result. Throws
/// DecodeError on malformed input.
ChordEvent parse_ndjson_event(const std::string& line);

}  // namespace chromachord
