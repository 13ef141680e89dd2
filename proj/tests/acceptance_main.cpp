// Acceptance suite: end-to-end checks with independent oracles, one
// verdict line per criterion. Exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chromachord/ndjson.hpp"
#include "chromachord/pipeline.hpp"
#include "chromachord/synth.hpp"

using namespace chromachord;

namespace {

int g_failures = 0;

void report(int number, const std::string& title, bool passed,
            const std::string& detail = "") {
  std::printf("%s  %2d  %s%s%s\n", passed ? "PASS" : "FAIL", number,
              title.c_str(), detail.empty() ? "" : " - ", detail.c_str());
  if (!passed) {
    ++g_failures;
  }
}

std::mt19937& rng() {
  static std::mt19937 gen(424242u);
  return gen;
}

const CqtKernel& kernel() {
  static const CqtKernel k(CqtConfig{}, 22050);
  return k;
}

AudioChunk chunk_of(std::vector<float> samples, std::size_t index = 1) {
  AudioChunk chunk;
  chunk.samples = std::move(samples);
  chunk.sample_rate = 22050;
  chunk.valid_samples = chunk.samples.size();
  chunk.index = index;
  chunk.start_time = 4.0 * static_cast<double>(index);
  return chunk;
}

// --- criterion 1: 24-triad matrix ------------------------------------

void criterion_triad_matrix() {
  const auto t0 = std::chrono::steady_clock::now();
  auto workspace = kernel().make_workspace();
  const EngineConfig engine;
  int detected = 0;
  std::string first_miss;
  for (int root = 0; root < 12; ++root) {
    for (ChordQuality quality : {ChordQuality::kMajor, ChordQuality::kMinor}) {
      TriadSpec spec;
      spec.root = root;
      spec.quality = quality;
      spec.duration_seconds = 4.0;
      const auto analysis =
          analyze_chunk(chunk_of(synth_triad(spec)), kernel(), workspace, engine);
      const auto& event = analysis.event;
      const bool ok = event.outcome == EventOutcome::kChord &&
                      event.estimate.has_value() &&
                      event.estimate->root == root &&
                      event.estimate->quality == quality &&
                      event.estimate->fifth == (root + 7) % 12 &&
                      event.estimate->strength >= Strength::kStrong;
      if (ok) {
        ++detected;
      } else if (first_miss.empty()) {
        first_miss = std::string(note_name(root)) + " " +
                     std::string(quality_name(quality));
      }
    }
  }
  const double elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
  char detail[128];
  std::snprintf(detail, sizeof(detail), "%d/24 detected at >= Strong in %.1f s%s%s",
                detected, elapsed, first_miss.empty() ? "" : ", first miss: ",
                first_miss.c_str());
  report(1, "triad matrix: 12 roots x {major, minor}",
         detected == 24 && elapsed < 60.0, detail);
}

// --- criterion 2: formula conformance against brute-force oracles ----

void criterion_formula_conformance() {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> frames_dist(1, 60);
  std::uniform_int_distribution<int> pc_dist(0, 11);
  const EngineConfig engine;

  double worst = 0.0;
  bool bands_exact = true;
  for (int trial = 0; trial < 1000; ++trial) {
    // average_chroma on a random chromagram
    Chromagram chroma;
    chroma.values = Matrix(12, frames_dist(rng()));
    for (auto& v : chroma.values.data) {
      v = unit(rng());
    }
    const ChromaVector avg = average_chroma(chroma);
    for (int p = 0; p < 12; ++p) {
      long double acc = 0.0L;
      for (int f = 0; f < chroma.values.cols; ++f) {
        acc += chroma.values.at(p, f);
      }
      worst = std::max(worst,
                       std::abs(avg[p] - double(acc / chroma.values.cols)));
    }

    // emphasize
    const ChromaVector emph = emphasize(avg);
    for (int p = 0; p < 12; ++p) {
      worst = std::max(worst, std::abs(emph[p] - avg[p] * avg[p]));
    }

    // confidence
    const int root = pc_dist(rng());
    const Confidence c = confidence(emph, root, engine);
    const long double maj = emph[(root + 4) % 12];
    const long double mnr = emph[(root + 3) % 12];
    const long double raw = maj / (maj + mnr + 1e-6L);
    long double pct = std::abs(2.0L * raw - 1.0L) * 100.0L;
    pct = std::min(100.0L, std::max(0.0L, pct));
    worst = std::max(worst, std::abs(c.raw - double(raw)));
    worst = std::max(worst, std::abs(c.pct - double(pct)));

    // strength band, exact
    const double pct_sample = 100.0 * unit(rng());
    Strength expected;
    if (pct_sample < 20.0) expected = Strength::kVeryWeak;
    else if (pct_sample < 40.0) expected = Strength::kWeak;
    else if (pct_sample < 60.0) expected = Strength::kUncertain;
    else if (pct_sample < 80.0) expected = Strength::kModerate;
    else if (pct_sample < 95.0) expected = Strength::kStrong;
    else expected = Strength::kVeryStrong;
    bands_exact = bands_exact && strength_band(pct_sample) == expected;
  }
  char detail[96];
  std::snprintf(detail, sizeof(detail),
                "worst formula deviation %.2e, bands %s", worst,
                bands_exact ? "exact" : "MISMATCHED");
  report(2, "formula conformance on 1000 random chroma vectors",
         worst <= 1e-9 && bands_exact, detail);
}

// --- criterion 3: strength band boundaries ----------------------------

void criterion_band_boundaries() {
  const std::vector<std::pair<double, Strength>> cases = {
      {95.0, Strength::kVeryStrong}, {94.999, Strength::kStrong},
      {80.0, Strength::kStrong},     {79.999, Strength::kModerate},
      {60.0, Strength::kModerate},   {59.999, Strength::kUncertain},
      {40.0, Strength::kUncertain},  {39.999, Strength::kWeak},
      {20.0, Strength::kWeak},       {19.999, Strength::kVeryWeak},
      {0.0, Strength::kVeryWeak},    {100.0, Strength::kVeryStrong},
  };
  bool ok = true;
  for (const auto& [pct, expected] : cases) {
    ok = ok && strength_band(pct) == expected;
  }
  report(3, "strength bands at the published boundaries", ok);
}

// --- criterion 4: colour table fidelity -------------------------------

void criterion_colour_table() {
  // Independent transcription of the published mapping.
  const int expected[12][3] = {
      {199, 21, 133}, {195, 118, 225}, {255, 0, 0},   {255, 69, 0},
      {255, 140, 0},  {255, 165, 0},   {255, 255, 0}, {173, 255, 47},
      {0, 255, 0},    {83, 183, 183},  {0, 0, 255},   {75, 0, 130},
  };
  const char* names[12] = {"C",  "C#", "D",  "D#", "E",  "F",
                           "F#", "G",  "G#", "A",  "A#", "B"};
  bool ok = true;
  for (int p = 0; p < 12; ++p) {
    const NoteColour& colour = colour_of(p);
    ok = ok && colour.rgb.r == expected[p][0] &&
         colour.rgb.g == expected[p][1] && colour.rgb.b == expected[p][2] &&
         colour.name == names[p];
    for (int q = 0; q < p; ++q) {
      ok = ok && !(colour_of(q).rgb == colour.rgb);  // injective
    }
  }
  report(4, "colour table byte-equal to the published mapping, injective", ok);
}

// --- criterion 5: threshold semantics ---------------------------------

void criterion_threshold_semantics() {
  const EngineConfig engine;
  bool ok = true;

  ChromaVector emph;
  emph[5] = 0.15;  // exactly tau_tone
  const auto tones = significant_tones(emph, engine);
  ok = ok && tones == std::vector<int>{5};

  ChromaVector gate_vec;
  gate_vec[2] = 0.2;  // exactly tau_chord
  gate_vec[9] = 0.2;
  const GateResult gate = chord_gate(gate_vec, engine);
  ok = ok && gate.count == 2 && gate.passed;

  // single strong tone -> no chord
  Chromagram solo;
  solo.values = Matrix(12, 4);
  for (int f = 0; f < 4; ++f) {
    solo.values.at(7, f) = 1.0;
  }
  ok = ok && !estimate_chord(solo, engine).has_value();

  report(5, "inclusive thresholds at 0.15/0.2 and the two-tone minimum", ok);
}

// --- criterion 6: rotation equivariance -------------------------------

void criterion_rotation_equivariance() {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> kdist(1, 11);
  const EngineConfig engine;
  int checked = 0;
  int skipped = 0;
  bool ok = true;
  for (int trial = 0; trial < 500; ++trial) {
    ChromaVector emph;
    for (int p = 0; p < 12; ++p) {
      emph[p] = unit(rng());
    }
    const double peak =
        *std::max_element(emph.values.begin(), emph.values.end());
    if (std::count(emph.values.begin(), emph.values.end(), peak) > 1) {
      ++skipped;
      continue;
    }
    const int root = find_root(emph);
    if (emph[(root + 3) % 12] == emph[(root + 4) % 12]) {
      ++skipped;
      continue;
    }
    const int k = kdist(rng());
    ChromaVector rotated;
    for (int p = 0; p < 12; ++p) {
      rotated[(p + k) % 12] = emph[p];
    }
    const int root_r = find_root(rotated);
    const Confidence c = confidence(emph, root, engine);
    const Confidence c_r = confidence(rotated, root_r, engine);
    ok = ok && root_r == (root + k) % 12 &&
         fifth_of(root_r) == (fifth_of(root) + k) % 12 &&
         classify_third(rotated, root_r) == classify_third(emph, root) &&
         c.raw == c_r.raw && c.pct == c_r.pct &&
         strength_band(c.pct) == strength_band(c_r.pct);
    ++checked;
  }
  char detail[64];
  std::snprintf(detail, sizeof(detail), "%d checked, %d tie cases skipped",
                checked, skipped);
  report(6, "rotation equivariance over 500 random vectors", ok && checked > 0,
         detail);
}

// --- criterion 7: near-real-time throughput ---------------------------

void criterion_throughput() {
  TriadSpec spec;
  spec.root = 0;
  spec.quality = ChordQuality::kMajor;
  spec.duration_seconds = 60.0;
  const auto mono = synth_triad(spec);

  std::ostringstream ndjson;
  PipelineSinks sinks;
  sinks.ndjson = &ndjson;
  StreamConfig stream;
  const auto result =
      run_pipeline_on_samples(mono, stream, CqtConfig{}, EngineConfig{}, sinks);

  bool ok = result.exit_code == 0 && !result.chunk_process_seconds.empty();
  double mean = 0.0;
  double peak = 0.0;
  for (double t : result.chunk_process_seconds) {
    mean += t;
    peak = std::max(peak, t);
  }
  if (!result.chunk_process_seconds.empty()) {
    mean /= static_cast<double>(result.chunk_process_seconds.size());
  }
  const double budget = stream.chunk_seconds;
  ok = ok && mean < 0.25 * budget && peak < budget;
  char detail[96];
  std::snprintf(detail, sizeof(detail),
                "mean %.3f s, peak %.3f s per %.0f s chunk", mean, peak,
                budget);
  report(7, "60 s file: mean per-chunk time < 25% of chunk duration", ok,
         detail);
}

// --- criterion 8: initialization behavior -----------------------------

void criterion_init_behavior() {
  bool ok = true;
  const std::vector<std::vector<float>> inputs = {
      std::vector<float>(22050 * 8, 0.0f),   // silence
      synth_triad(TriadSpec{0, ChordQuality::kMajor, 3, 0.25, 12.0, 22050}),
      std::vector<float>(22050 * 4, 0.1f),   // single chunk
  };
  for (const auto& mono : inputs) {
    std::ostringstream ndjson;
    PipelineSinks sinks;
    sinks.ndjson = &ndjson;
    StreamConfig stream;
    const auto result = run_pipeline_on_samples(mono, stream, CqtConfig{},
                                                EngineConfig{}, sinks);
    ok = ok && result.exit_code == 0 && !result.events.empty();
    if (!result.events.empty()) {
      const ChordEvent& first = result.events.front();
      ok = ok && first.outcome == EventOutcome::kInitializing &&
           first.start_time == 0.0 &&
           first.end_time == stream.chunk_seconds;
      RenderOptions options;
      options.mode = RenderMode::kPlain;
      ok = ok && render_keyboard(first, options) ==
                     "Initializing chord analysis...\n";
    }
  }
  report(8, "every run opens with the verbatim initializing event", ok);
}

// --- criterion 9: serial contract -------------------------------------

void criterion_serial_contract() {
  std::uniform_int_distribution<int> count_dist(0, 3);
  std::uniform_int_distribution<int> byte_dist(0, 255);
  std::uniform_int_distribution<int> pc_dist(0, 11);

  bool ok = true;

  // 1000 random frames through the mock transport
  MockSerialTransport mock;
  std::vector<SerialFrame> sent;
  for (int i = 0; i < 1000; ++i) {
    SerialFrame frame;
    const int count = count_dist(rng());
    for (int n = 0; n < count; ++n) {
      frame.notes.push_back(
          {static_cast<std::uint8_t>(pc_dist(rng())),
           Rgb{static_cast<std::uint8_t>(byte_dist(rng())),
               static_cast<std::uint8_t>(byte_dist(rng())),
               static_cast<std::uint8_t>(byte_dist(rng()))}});
    }
    sent.push_back(frame);
    mock.write(encode_frame(frame));
  }
  ok = ok && mock.frames().size() == 1000 && mock.errors().empty();
  for (std::size_t i = 0; ok && i < sent.size(); ++i) {
    ok = mock.frames()[i] == sent[i];
  }

  // exhaustive single-byte corruption on a blank and a full frame
  ChordEvent no_chord;
  no_chord.outcome = EventOutcome::kNoChord;
  ChordEvent g_major;
  g_major.outcome = EventOutcome::kChord;
  ChordEstimate estimate;
  estimate.root = 7;
  estimate.quality = ChordQuality::kMajor;
  estimate.fifth = 2;
  g_major.estimate = estimate;
  g_major.colours = chord_colours(estimate);
  g_major.displayed = true;

  for (const auto& bytes :
       {encode_serial(no_chord), encode_serial(g_major)}) {
    for (std::size_t pos = 0; pos < bytes.size(); ++pos) {
      for (int delta = 1; delta <= 255; ++delta) {
        auto corrupted = bytes;
        corrupted[pos] ^= static_cast<std::uint8_t>(delta);
        if (decode_frame(corrupted).has_value()) {
          ok = false;
        }
      }
    }
  }

  // gated-out chords blank the LEDs
  ChordEvent gated = g_major;
  gated.displayed = false;
  ok = ok && encode_serial(gated) == std::vector<std::uint8_t>{0xC0, 0x00, 0xC0};
  ok = ok && encode_serial(no_chord) == std::vector<std::uint8_t>{0xC0, 0x00, 0xC0};

  report(9, "serial frames round-trip; all single-byte corruptions caught", ok);
}

// --- criterion 10: end-to-end sink consistency ------------------------

void criterion_sink_consistency() {
  TriadSpec spec;
  spec.root = 0;  // C major -> C, E, G
  spec.quality = ChordQuality::kMajor;
  spec.duration_seconds = 12.0;
  const auto wav = encode_wav16(synth_triad(spec), 22050);

  // feed through the decode path as a real file image
  const WavData decoded = decode_wav(wav);
  const auto mono = mixdown_mono(deinterleave(decoded.samples, decoded.channels));

  std::ostringstream ndjson;
  std::ostringstream rendered;
  MockSerialTransport mock;
  PipelineSinks sinks;
  sinks.ndjson = &ndjson;
  sinks.renderer = &rendered;
  sinks.render_options.mode = RenderMode::kTrueColor;
  sinks.serial = &mock;
  StreamConfig stream;
  const auto result = run_pipeline_on_samples(mono, stream, CqtConfig{},
                                              EngineConfig{}, sinks);

  const Rgb expected[3] = {{199, 21, 133}, {255, 140, 0}, {173, 255, 47}};
  bool ok = result.exit_code == 0 && result.events.size() == 3;

  if (ok) {
    // NDJSON view
    std::istringstream lines(ndjson.str());
    std::string line;
    std::getline(lines, line);  // initializing
    std::getline(lines, line);
    const ChordEvent parsed = parse_ndjson_event(line);
    ok = ok && parsed.outcome == EventOutcome::kChord &&
         parsed.colours.has_value() && parsed.displayed;
    // serial view
    ok = ok && mock.frames().size() >= 2 && mock.frames()[1].notes.size() == 3;
    if (ok) {
      for (int i = 0; i < 3; ++i) {
        ok = ok && (*parsed.colours)[i].rgb == expected[i];
        ok = ok && mock.frames()[1].notes[i].rgb == expected[i];
        char sgr[32];
        std::snprintf(sgr, sizeof(sgr), "48;2;%d;%d;%d", expected[i].r,
                      expected[i].g, expected[i].b);
        ok = ok && rendered.str().find(sgr) != std::string::npos;
      }
    }
  }
  report(10, "C-major file: NDJSON, render and serial colours all match", ok);
}

}  // namespace

int main() {
  criterion_triad_matrix();
  criterion_formula_conformance();
  criterion_band_boundaries();
  criterion_colour_table();
  criterion_threshold_semantics();
  criterion_rotation_equivariance();
  criterion_throughput();
  criterion_init_behavior();
  criterion_serial_contract();
  criterion_sink_consistency();

  std::printf("acceptance: %d/10 criteria passed\n", 10 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
