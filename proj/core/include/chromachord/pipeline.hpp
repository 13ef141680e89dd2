#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "chromachord/audio_io.hpp"
#include "chromachord/chord_engine.hpp"
#include "chromachord/chroma.hpp"
#include "chromachord/event.hpp"
#include "chromachord/keyboard.hpp"
#include "chromachord/serial.hpp"

namespace chromachord {

/// Output destinations. At least one must be enabled for a run.
struct PipelineSinks {
  std::ostream* ndjson = nullptr;
  std::ostream* renderer = nullptr;
  RenderOptions render_options;
  ByteSink* serial = nullptr;
  std::ostream* chroma_csv = nullptr;  // debug dump of analyzed chunks
};

struct PipelineResult {
  int exit_code = 0;   // 0 clean, 1 input error, 2 sink error
  std::string error;   // diagnostic when exit_code != 0
  std::vector<ChordEvent> events;
  std::vector<double> chunk_process_seconds;  // analyzed chunks only
};

struct ChunkAnalysis {
  ChordEvent event;
  Chromagram chromagram;
};

/// Per-chunk analysis path: chromagram, chord estimate, colours,
/// display gating. The caller owns the initialization-delay policy.
ChunkAnalysis analyze_chunk(const AudioChunk& chunk, const CqtKernel& kernel,
                            CqtWorkspace& workspace,
                            const EngineConfig& engine);

/// Runs the already-decoded mono stream through chunking, the
/// first-chunk initialization event, per-chunk analysis and emission.
PipelineResult run_pipeline_on_samples(std::span<const float> mono,
                                       const StreamConfig& stream,
                                       const CqtConfig& cqt,
                                       const EngineConfig& engine,
                                       const PipelineSinks& sinks);

/// End to end: read the configured input, decode WAV, mix down,
/// resample to the engine rate, then analyze and emit.
PipelineResult run_pipeline(const StreamConfig& stream, const CqtConfig& cqt,
                            const EngineConfig& engine,
                            const PipelineSinks& sinks);

}  // namespace chromachord
