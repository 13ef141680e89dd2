// chromachord: chord estimation from WAV audio with colour-mapped output.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "chromachord/colour_map.hpp"
#include "chromachord/error.hpp"
#include "chromachord/pipeline.hpp"

namespace {

using namespace chromachord;

void print_colour_table() {
  for (const NoteColour& colour : note_colour_table()) {
    std::printf("%-2s  %2d  (%3d, %3d, %3d)\n",
                std::string(colour.name).c_str(), colour.pitch_class,
                colour.rgb.r, colour.rgb.g, colour.rgb.b);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Detects major/minor triads in WAV audio and emits "
               "colour-mapped chord events"};

  std::string input;
  StreamConfig stream;
  CqtConfig cqt;
  EngineConfig engine;
  std::string display_floor;
  std::string ndjson_path;
  std::string serial_path;
  std::string dump_chroma_path;
  bool render = false;
  bool list_colours = false;

  app.add_option("--input", input, "WAV file path, or - for standard input");
  app.add_option("--sample-rate", stream.sample_rate,
                 "Engine sample rate in Hz (input is resampled)")
      ->capture_default_str();
  app.add_option("--chunk-seconds", stream.chunk_seconds,
                 "Analysis window duration in seconds")
      ->capture_default_str();
  app.add_option("--tau-tone", engine.tau_tone,
                 "Significance threshold on emphasized chroma")
      ->capture_default_str();
  app.add_option("--tau-chord", engine.tau_chord,
                 "Chord-tone threshold gating analysis")
      ->capture_default_str();
  app.add_option("--n-min", engine.n_min,
                 "Minimum chord tones required for analysis")
      ->capture_default_str();
  app.add_option("--display-floor", display_floor,
                 "Weakest strength band still displayed (default: moderate)");
  app.add_option("--ndjson", ndjson_path,
                 "Write one JSON event per line to a file, or - for stdout");
  app.add_flag("--render", render, "Render a coloured keyboard per event");
  app.add_option("--serial", serial_path,
                 "Send LED frames to a device path, or 'mock' for loopback");
  app.add_option("--dump-chroma", dump_chroma_path,
                 "Write the analyzed chromagram as CSV");
  app.add_flag("--list-colours", list_colours,
               "Print the note colour table and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (list_colours) {
    print_colour_table();
    return 0;
  }
  if (input.empty()) {
    std::cerr << "chromachord: --input is required (use - for stdin)\n";
    return 1;
  }
  stream.input_path = input;

  if (!display_floor.empty()) {
    const auto floor = parse_strength(display_floor);
    if (!floor) {
      std::cerr << "chromachord: unknown strength band \"" << display_floor
                << "\"\n";
      return 1;
    }
    engine.display_floor = *floor;
  }

  PipelineSinks sinks;
  std::ofstream ndjson_file;
  std::ofstream chroma_file;
  std::unique_ptr<FileByteSink> serial_file;
  MockSerialTransport mock_serial;

  try {
    if (!ndjson_path.empty()) {
      if (ndjson_path == "-") {
        sinks.ndjson = &std::cout;
      } else {
        ndjson_file.open(ndjson_path);
        if (!ndjson_file) {
          throw SinkError("cannot open " + ndjson_path);
        }
        sinks.ndjson = &ndjson_file;
      }
    }
    if (render) {
      sinks.renderer = &std::cout;
      sinks.render_options.mode = detect_render_mode();
    }
    if (!serial_path.empty()) {
      if (serial_path == "mock") {
        sinks.serial = &mock_serial;
      } else {
        serial_file = std::make_unique<FileByteSink>(serial_path);
        sinks.serial = serial_file.get();
      }
    }
    if (!dump_chroma_path.empty()) {
      chroma_file.open(dump_chroma_path);
      if (!chroma_file) {
        throw SinkError("cannot open " + dump_chroma_path);
      }
      sinks.chroma_csv = &chroma_file;
    }
  } catch (const SinkError& e) {
    std::cerr << "chromachord: " << e.what() << "\n";
    return 2;
  }

  // Default output when nothing else was asked for.
  if (sinks.ndjson == nullptr && sinks.renderer == nullptr &&
      sinks.serial == nullptr && sinks.chroma_csv == nullptr) {
    sinks.ndjson = &std::cout;
  }

  const PipelineResult result = run_pipeline(stream, cqt, engine, sinks);
  if (result.exit_code != 0) {
    std::cerr << "chromachord: " << result.error << "\n";
  }
  if (sinks.serial == &mock_serial) {
    std::cerr << "serial(mock): " << mock_serial.frames().size()
              << " frame(s), " << mock_serial.errors().size()
              << " error(s)\n";
  }
  return result.exit_code;
}
