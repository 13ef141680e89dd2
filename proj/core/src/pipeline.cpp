#include "chromachord/pipeline.hpp"

#include <chrono>
#include <ostream>
#include <utility>

#include "chromachord/error.hpp"
#include "chromachord/ndjson.hpp"

namespace chromachord {

namespace {

bool any_sink(const PipelineSinks& sinks) {
  return sinks.ndjson != nullptr || sinks.renderer != nullptr ||
         sinks.serial != nullptr || sinks.chroma_csv != nullptr;
}

void emit(const ChordEvent& event, const PipelineSinks& sinks) {
  if (sinks.ndjson != nullptr) {
    *sinks.ndjson << emit_ndjson(event) << '\n';
    if (!sinks.ndjson->good()) {
      throw SinkError("ndjson sink write failed");
    }
  }
  if (sinks.renderer != nullptr) {
    *sinks.renderer << render_keyboard(event, sinks.render_options);
    if (!sinks.renderer->good()) {
      throw SinkError("render sink write failed");
    }
  }
  if (sinks.serial != nullptr) {
    sinks.serial->write(encode_serial(event));
  }
}

void flush_streams(const PipelineSinks& sinks) {
  if (sinks.ndjson != nullptr) {
    sinks.ndjson->flush();
  }
  if (sinks.renderer != nullptr) {
    sinks.renderer->flush();
  }
  if (sinks.chroma_csv != nullptr) {
    sinks.chroma_csv->flush();
  }
}

ChordEvent initializing_event(const AudioChunk& chunk,
                              const StreamConfig& stream) {
  ChordEvent event;
  event.start_time = chunk.start_time;
  event.end_time =
      chunk.partial
          ? chunk.start_time +
                static_cast<double>(chunk.valid_samples) / chunk.sample_rate
          : static_cast<double>(chunk.index + 1) * stream.chunk_seconds;
  event.outcome = EventOutcome::kInitializing;
  event.partial = chunk.partial;
  return event;
}

}  // namespace

ChunkAnalysis analyze_chunk(const AudioChunk& chunk, const CqtKernel& kernel,
                            CqtWorkspace& workspace,
                            const EngineConfig& engine) {
  ChunkAnalysis analysis;
  analysis.chromagram = chromagram_of(chunk, kernel, workspace);

  ChordEvent& event = analysis.event;
  event.start_time = chunk.start_time;
  const double chunk_seconds =
      static_cast<double>(chunk.samples.size()) / chunk.sample_rate;
  event.end_time =
      chunk.partial
          ? chunk.start_time +
                static_cast<double>(chunk.valid_samples) / chunk.sample_rate
          : static_cast<double>(chunk.index + 1) * chunk_seconds;
  event.partial = chunk.partial;

  if (auto estimate = estimate_chord(analysis.chromagram, engine)) {
    event.outcome = EventOutcome::kChord;
    event.colours = chord_colours(*estimate);
    event.displayed = estimate->strength >= engine.display_floor;
    event.estimate = std::move(estimate);
  } else {
    event.outcome = EventOutcome::kNoChord;
  }
  return analysis;
}

PipelineResult run_pipeline_on_samples(std::span<const float> mono,
                                       const StreamConfig& stream,
                                       const CqtConfig& cqt,
                                       const EngineConfig& engine,
                                       const PipelineSinks& sinks) {
  PipelineResult result;
  try {
    stream.validate();
    cqt.validate(stream.sample_rate);
    engine.validate();
    if (!any_sink(sinks)) {
      throw ConfigError("pipeline: no output sink enabled");
    }

    const CqtKernel kernel(cqt, stream.sample_rate);
    CqtWorkspace workspace = kernel.make_workspace();
    const std::vector<AudioChunk> chunks = chunk_stream(mono, stream);

    // Frames of every analyzed chunk, concatenated for --dump-chroma.
    Matrix csv_values(kNumPitchClasses, 0);
    double csv_frame_rate = 0.0;

    for (const AudioChunk& chunk : chunks) {
      ChordEvent event;
      if (chunk.index == 0) {
        // First chunk is consumed as analysis warm-up.
        event = initializing_event(chunk, stream);
      } else {
        const auto t0 = std::chrono::steady_clock::now();
        ChunkAnalysis analysis = analyze_chunk(chunk, kernel, workspace, engine);
        const auto t1 = std::chrono::steady_clock::now();
        result.chunk_process_seconds.push_back(
            std::chrono::duration<double>(t1 - t0).count());
        event = std::move(analysis.event);
        if (sinks.chroma_csv != nullptr) {
          const Matrix& frames = analysis.chromagram.values;
          Matrix merged(kNumPitchClasses, csv_values.cols + frames.cols);
          for (int r = 0; r < kNumPitchClasses; ++r) {
            for (int c = 0; c < csv_values.cols; ++c) {
              merged.at(r, c) = csv_values.at(r, c);
            }
            for (int c = 0; c < frames.cols; ++c) {
              merged.at(r, csv_values.cols + c) = frames.at(r, c);
            }
          }
          csv_values = std::move(merged);
          csv_frame_rate = analysis.chromagram.frame_rate;
        }
      }
      result.events.push_back(event);
      emit(event, sinks);
    }

    if (sinks.chroma_csv != nullptr) {
      Chromagram dump;
      dump.values = std::move(csv_values);
      dump.frame_rate = csv_frame_rate;
      write_chroma_csv(*sinks.chroma_csv, dump);
      if (!sinks.chroma_csv->good()) {
        throw SinkError("chroma CSV sink write failed");
      }
    }
    flush_streams(sinks);
    return result;
  } catch (const SinkError& e) {
    flush_streams(sinks);
    result.exit_code = 2;
    result.error = e.what();
    return result;
  } catch (const std::exception& e) {
    result.exit_code = 1;
    result.error = e.what();
    return result;
  }
}

PipelineResult run_pipeline(const StreamConfig& stream, const CqtConfig& cqt,
                            const EngineConfig& engine,
                            const PipelineSinks& sinks) {
  std::vector<float> mono;
  try {
    // Reject bad configuration before consuming any input.
    stream.validate();
    cqt.validate(stream.sample_rate);
    engine.validate();
    const std::vector<std::uint8_t> bytes = read_binary_input(stream.input_path);
    const WavData wav = decode_wav(bytes);
    mono = mixdown_mono(deinterleave(wav.samples, wav.channels));
    if (wav.sample_rate != stream.sample_rate) {
      mono = resample(mono, wav.sample_rate, stream.sample_rate);
    }
  } catch (const std::exception& e) {
    PipelineResult result;
    result.exit_code = 1;
    result.error = e.what();
    return result;
  }
  return run_pipeline_on_samples(mono, stream, cqt, engine, sinks);
}

}  // namespace chromachord
