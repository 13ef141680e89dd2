#pragma once

#include <string>

#include "chromachord/colour_map.hpp"
#include "chromachord/event.hpp"

namespace chromachord {

enum class RenderMode {
  kTrueColor,  // 24-bit SGR backgrounds
  kAnsi8,      // nearest of the 8 basic terminal colours
  kPlain,      // no escape sequences
};

struct RenderOptions {
  int width = 80;  // <= 0 falls back to a plain note-name listing
  RenderMode mode = RenderMode::kTrueColor;
};

/// One-octave keyboard block for an event: a header line (chord name,
/// confidence percent, strength) and a C..B key row with the triad keys
/// filled in their table colours. Initializing events render the
/// verbatim status line instead.
std::string render_keyboard(const ChordEvent& event,
                            const RenderOptions& options);

/// Index into the 8 basic ANSI colours nearest to an RGB value.
int nearest_ansi8_index(Rgb rgb);

/// Honors NO_COLOR, then COLORTERM truecolor hints, else 8-colour.
RenderMode detect_render_mode();

}  // namespace chromachord
