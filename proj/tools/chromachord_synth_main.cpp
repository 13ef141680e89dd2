// chromachord-synth: deterministic reference triads as 16-bit PCM WAV.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "chromachord/audio_io.hpp"
#include "chromachord/synth.hpp"

int main(int argc, char** argv) {
  using namespace chromachord;

  CLI::App app{"Synthesizes a reference sine triad and writes a WAV file"};

  std::string root_name;
  std::string quality_name;
  std::string out_path;
  TriadSpec spec;

  app.add_option("--root", root_name, "Root note name (C, C#, ..., B)")
      ->required();
  app.add_option("--quality", quality_name, "major or minor")->required();
  app.add_option("--seconds", spec.duration_seconds, "Duration in seconds")
      ->capture_default_str();
  app.add_option("--octave", spec.octave, "Octave of the root")
      ->capture_default_str();
  app.add_option("--amplitude", spec.amplitude_per_note,
                 "Linear gain per note (sum must stay below full scale)")
      ->capture_default_str();
  app.add_option("--sample-rate", spec.sample_rate, "Sample rate in Hz")
      ->capture_default_str();
  app.add_option("--out", out_path, "Output WAV path, or - for stdout")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const auto root = parse_note_name(root_name);
  if (!root) {
    std::cerr << "chromachord-synth: unknown note \"" << root_name << "\"\n";
    return 1;
  }
  spec.root = *root;

  const auto quality = parse_quality(quality_name);
  if (!quality) {
    std::cerr << "chromachord-synth: quality must be major or minor\n";
    return 1;
  }
  spec.quality = *quality;

  try {
    const std::vector<float> samples = synth_triad(spec);
    const std::vector<std::uint8_t> wav =
        encode_wav16(samples, spec.sample_rate);
    if (out_path == "-") {
      std::cout.write(reinterpret_cast<const char*>(wav.data()),
                      static_cast<std::streamsize>(wav.size()));
      std::cout.flush();
      if (!std::cout) {
        std::cerr << "chromachord-synth: write to stdout failed\n";
        return 2;
      }
    } else {
      std::ofstream out(out_path, std::ios::binary);
      out.write(reinterpret_cast<const char*>(wav.data()),
                static_cast<std::streamsize>(wav.size()));
      if (!out) {
        std::cerr << "chromachord-synth: cannot write " << out_path << "\n";
        return 2;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "chromachord-synth: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
