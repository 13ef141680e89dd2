#include "chromachord/ndjson.hpp"

#include <cmath>
#include <limits>

#include "chromachord/error.hpp"
#include "json.hpp"

namespace chromachord {

namespace {

using Json = nlohmann::ordered_json;

// Six-decimal wire precision.
double round6(double x) { return std::nearbyint(x * 1e6) / 1e6; }

int parsed_pitch(const Json& j, const char* field) {
  const auto pc = parse_note_name(j.at(field).get<std::string>());
  if (!pc) {
    throw DecodeError(std::string("NDJSON: bad note name in ") + field);
  }
  return *pc;
}

}  // namespace

std::string emit_ndjson(const ChordEvent& event) {
  Json j;
  j["start_time"] = round6(event.start_time);
  j["end_time"] = round6(event.end_time);
  j["outcome"] = outcome_name(event.outcome);
  if (event.outcome == EventOutcome::kChord && event.estimate &&
      event.colours) {
    const ChordEstimate& estimate = *event.estimate;
    j["root"] = note_name(estimate.root);
    j["quality"] = quality_name(estimate.quality);
    j["fifth"] = note_name(estimate.fifth);
    j["c_pct"] = round6(estimate.c_pct);
    j["strength"] = strength_name(estimate.strength);
    Json colours = Json::array();
    for (const NoteColour& colour : *event.colours) {
      colours.push_back({colour.rgb.r, colour.rgb.g, colour.rgb.b});
    }
    j["colours"] = colours;
  }
  j["displayed"] = event.displayed;
  j["partial"] = event.partial;
  return j.dump();
}

ChordEvent parse_ndjson_event(const std::string& line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw DecodeError(std::string("NDJSON: ") + e.what());
  }
  try {
    ChordEvent event;
    event.start_time = j.at("start_time").get<double>();
    event.end_time = j.at("end_time").get<double>();
    const std::string outcome = j.at("outcome").get<std::string>();
    event.displayed = j.at("displayed").get<bool>();
    event.partial = j.at("partial").get<bool>();
    if (outcome == "initializing") {
      event.outcome = EventOutcome::kInitializing;
    } else if (outcome == "no-chord") {
      event.outcome = EventOutcome::kNoChord;
    } else if (outcome == "chord") {
      event.outcome = EventOutcome::kChord;
    } else {
      throw DecodeError("NDJSON: unknown outcome \"" + outcome + "\"");
    }
    if (event.outcome != EventOutcome::kChord) {
      return event;
    }

    ChordEstimate estimate;
    estimate.root = parsed_pitch(j, "root");
    const auto quality = parse_quality(j.at("quality").get<std::string>());
    if (!quality) {
      throw DecodeError("NDJSON: bad quality");
    }
    estimate.quality = *quality;
    estimate.fifth = parsed_pitch(j, "fifth");
    estimate.c_pct = j.at("c_pct").get<double>();
    const auto strength = parse_strength(j.at("strength").get<std::string>());
    if (!strength) {
      throw DecodeError("NDJSON: bad strength");
    }
    estimate.strength = *strength;
    // Not on the wire; see header.
    estimate.c_raw = std::numeric_limits<double>::quiet_NaN();

    const Json& colours = j.at("colours");
    if (!colours.is_array() || colours.size() != 3) {
      throw DecodeError("NDJSON: colours must hold 3 entries");
    }
    const int third = third_of(estimate.root, estimate.quality);
    const std::array<int, 3> pitches = {estimate.root, third, estimate.fifth};
    std::array<NoteColour, 3> triple;
    for (int i = 0; i < 3; ++i) {
      const Json& c = colours[i];
      if (!c.is_array() || c.size() != 3) {
        throw DecodeError("NDJSON: colour entry must be [r, g, b]");
      }
      triple[i] = NoteColour{pitches[i], note_name(pitches[i]),
                             Rgb{c[0].get<std::uint8_t>(),
                                 c[1].get<std::uint8_t>(),
                                 c[2].get<std::uint8_t>()}};
    }
    event.estimate = std::move(estimate);
    event.colours = triple;
    return event;
  } catch (const nlohmann::json::exception& e) {
    throw DecodeError(std::string("NDJSON: ") + e.what());
  }
}

}  // namespace chromachord
