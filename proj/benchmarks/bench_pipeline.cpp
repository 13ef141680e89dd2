#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "chromachord/chord_engine.hpp"
#include "chromachord/chroma.hpp"
#include "chromachord/pipeline.hpp"
#include "chromachord/synth.hpp"

namespace {

using namespace chromachord;

const CqtKernel& kernel() {
  static const CqtKernel k(CqtConfig{}, 22050);
  return k;
}

AudioChunk triad_chunk() {
  TriadSpec spec;
  spec.root = 7;
  spec.quality = ChordQuality::kMajor;
  AudioChunk chunk;
  chunk.samples = synth_triad(spec);
  chunk.sample_rate = spec.sample_rate;
  chunk.valid_samples = chunk.samples.size();
  chunk.index = 1;
  chunk.start_time = 4.0;
  return chunk;
}

void BM_CqtChunk(benchmark::State& state) {
  const AudioChunk chunk = triad_chunk();
  auto workspace = kernel().make_workspace();
  for (auto _ : state) {
    benchmark::DoNotOptimize(cqt_magnitudes(chunk, kernel(), workspace));
  }
}
BENCHMARK(BM_CqtChunk)->Unit(benchmark::kMillisecond);

void BM_AnalyzeChunk(benchmark::State& state) {
  const AudioChunk chunk = triad_chunk();
  auto workspace = kernel().make_workspace();
  const EngineConfig engine;
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze_chunk(chunk, kernel(), workspace, engine));
  }
}
BENCHMARK(BM_AnalyzeChunk)->Unit(benchmark::kMillisecond);

void BM_EstimateChord(benchmark::State& state) {
  std::mt19937 gen(7u);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Chromagram chroma;
  chroma.values = Matrix(12, 173);
  for (auto& v : chroma.values.data) {
    v = unit(gen);
  }
  normalize_columns_max(chroma.values);
  const EngineConfig engine;
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_chord(chroma, engine));
  }
}
BENCHMARK(BM_EstimateChord);

void BM_Resample44kTo22k(benchmark::State& state) {
  TriadSpec spec;
  spec.root = 0;
  spec.sample_rate = 44100;
  const auto samples = synth_triad(spec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(resample(samples, 44100, 22050));
  }
}
BENCHMARK(BM_Resample44kTo22k)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
