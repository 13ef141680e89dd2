#include "chromachord/keyboard.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

namespace chromachord {

namespace {

constexpr const char* kInitializingText = "Initializing chord analysis...";

// Full-intensity nominals of the 8 basic terminal colours.
constexpr Rgb kAnsi8Palette[8] = {
    {0, 0, 0},       {255, 0, 0},   {0, 255, 0},   {255, 255, 0},
    {0, 0, 255},     {255, 0, 255}, {0, 255, 255}, {255, 255, 255},
};

double luminance(Rgb rgb) {
  return 0.2126 * rgb.r + 0.7152 * rgb.g + 0.0722 * rgb.b;
}

std::string pad_center(std::string_view label, int width) {
  std::string cell(static_cast<std::size_t>(width), ' ');
  const int len = std::min<int>(static_cast<int>(label.size()), width);
  const int start = (width - len) / 2;
  for (int i = 0; i < len; ++i) {
    cell[static_cast<std::size_t>(start + i)] = label[i];
  }
  return cell;
}

std::string header_line(const ChordEvent& event) {
  if (event.outcome != EventOutcome::kChord || !event.estimate) {
    return "—";  // em dash
  }
  const ChordEstimate& estimate = *event.estimate;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%s %s  %.1f%%  %s",
                std::string(note_name(estimate.root)).c_str(),
                std::string(quality_name(estimate.quality)).c_str(),
                estimate.c_pct,
                std::string(strength_name(estimate.strength)).c_str());
  return buf;
}

std::string plain_block(const ChordEvent& event) {
  std::string out = header_line(event);
  out += '\n';
  for (int p = 0; p < kNumPitchClasses; ++p) {
    const bool lit =
        event.colours &&
        std::any_of(event.colours->begin(), event.colours->end(),
                    [p](const NoteColour& c) { return c.pitch_class == p; });
    if (p > 0) {
      out += ' ';
    }
    if (lit) {
      out += '[';
      out += kNoteNames[p];
      out += ']';
    } else {
      out += kNoteNames[p];
    }
  }
  out += '\n';
  return out;
}

void append_truecolor_cell(std::string& out, const std::string& text, Rgb bg) {
  char sgr[64];
  const bool dark_text = luminance(bg) >= 140.0;
  const Rgb fg = dark_text ? Rgb{0, 0, 0} : Rgb{255, 255, 255};
  std::snprintf(sgr, sizeof(sgr), "\x1b[48;2;%d;%d;%dm\x1b[38;2;%d;%d;%dm",
                bg.r, bg.g, bg.b, fg.r, fg.g, fg.b);
  out += sgr;
  out += text;
  out += "\x1b[0m";
}

void append_ansi8_cell(std::string& out, const std::string& text, Rgb bg) {
  const int idx = nearest_ansi8_index(bg);
  const bool dark_text = luminance(kAnsi8Palette[idx]) >= 140.0;
  char sgr[32];
  std::snprintf(sgr, sizeof(sgr), "\x1b[%d;%dm", 40 + idx,
                dark_text ? 30 : 37);
  out += sgr;
  out += text;
  out += "\x1b[0m";
}

}  // namespace

int nearest_ansi8_index(Rgb rgb) {
  int best = 0;
  long best_dist = -1;
  for (int i = 0; i < 8; ++i) {
    const long dr = static_cast<long>(rgb.r) - kAnsi8Palette[i].r;
    const long dg = static_cast<long>(rgb.g) - kAnsi8Palette[i].g;
    const long db = static_cast<long>(rgb.b) - kAnsi8Palette[i].b;
    const long dist = dr * dr + dg * dg + db * db;
    if (best_dist < 0 || dist < best_dist) {
      best_dist = dist;
      best = i;
    }
  }
  return best;
}

RenderMode detect_render_mode() {
  if (std::getenv("NO_COLOR") != nullptr) {
    return RenderMode::kPlain;
  }
  const char* colorterm = std::getenv("COLORTERM");
  if (colorterm != nullptr && (std::strstr(colorterm, "truecolor") != nullptr ||
                               std::strstr(colorterm, "24bit") != nullptr)) {
    return RenderMode::kTrueColor;
  }
  return RenderMode::kAnsi8;
}

std::string render_keyboard(const ChordEvent& event,
                            const RenderOptions& options) {
  if (event.outcome == EventOutcome::kInitializing) {
    return std::string(kInitializingText) + "\n";
  }
  if (options.width <= 0 || options.mode == RenderMode::kPlain) {
    return plain_block(event);
  }

  // 12 cells separated by single spaces.
  const int cell_width = std::clamp((options.width - 11) / 12, 1, 6);
  const Rgb neutral{40, 40, 40};

  std::string out = header_line(event);
  out += '\n';
  for (int p = 0; p < kNumPitchClasses; ++p) {
    if (p > 0) {
      out += ' ';
    }
    Rgb bg = neutral;
    if (event.colours) {
      for (const NoteColour& colour : *event.colours) {
        if (colour.pitch_class == p) {
          bg = colour.rgb;
          break;
        }
      }
    }
    const std::string cell = pad_center(kNoteNames[p], cell_width);
    if (options.mode == RenderMode::kTrueColor) {
      append_truecolor_cell(out, cell, bg);
    } else {
      append_ansi8_cell(out, cell, bg);
    }
  }
  out += '\n';
  return out;
}

}  // namespace chromachord
