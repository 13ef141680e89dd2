#pragma once

#include <iosfwd>
#include <memory>
#include <span>
#include <vector>

#include "chromachord/audio_io.hpp"

namespace chromachord {

struct CqtConfig {
  double f_min = 32.703;     // C1
  int bins_per_octave = 12;  // must be a positive multiple of 12
  int n_octaves = 7;
  int hop_length = 512;      // samples per frame advance

  int n_bins() const { return bins_per_octave * n_octaves; }

  /// Throws ConfigError when the geometry is invalid for the sample
  /// rate (top octave at or above Nyquist, non-12-multiple bins, ...).
  void validate(int sample_rate) const;
};

/// Dense row-major matrix of magnitudes.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(std::size_t(r) * c, 0.0) {}

  double& at(int r, int c) { return data[std::size_t(r) * cols + c]; }
  double at(int r, int c) const { return data[std::size_t(r) * cols + c]; }
};

/// 12 x N pitch-class intensity matrix (rows C..B). Every non-silent
/// column is scaled so its maximum is exactly 1; silent columns stay
/// all-zero.
struct Chromagram {
  Matrix values;
  double frame_rate = 0.0;  // frames per second
};

class CqtWorkspace;

/// Sparse spectral kernels for one (config, sample rate) pair.
///
/// Each bin k is a Hann-windowed complex exponential at
/// f_min * 2^(k / bins_per_octave) with a constant Q across bins; its
/// FFT is truncated at 0.5% of peak magnitude and applied against the
/// FFT of each frame. Kernels are not length-normalized, so the
/// response to a fixed-amplitude tone grows with kernel length, i.e.
/// lower bins weigh in stronger than higher ones.
///
/// Construction does all FFT planning. A built kernel is read-only and
/// may be shared across threads; pass one CqtWorkspace per thread.
class CqtKernel {
 public:
  CqtKernel(const CqtConfig& config, int sample_rate);
  ~CqtKernel();
  CqtKernel(const CqtKernel&) = delete;
  CqtKernel& operator=(const CqtKernel&) = delete;

  const CqtConfig& config() const;
  int sample_rate() const;
  int fft_size() const;

  /// Center frequency of bin k: f_min * 2^(k / bins_per_octave).
  double bin_frequency(int bin) const;

  CqtWorkspace make_workspace() const;

  /// Magnitudes for one frame centered at `center`; indices outside
  /// the signal are treated as zeros. `out` must hold n_bins entries.
  void frame_magnitudes(std::span<const float> samples, std::int64_t center,
                        CqtWorkspace& workspace, std::span<double> out) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Scratch buffers for CqtKernel::frame_magnitudes. Not thread-safe;
/// create one per thread via CqtKernel::make_workspace().
class CqtWorkspace {
 public:
  ~CqtWorkspace();
  CqtWorkspace(CqtWorkspace&&) noexcept;
  CqtWorkspace& operator=(CqtWorkspace&&) noexcept;

 private:
  friend class CqtKernel;
  struct Impl;
  explicit CqtWorkspace(std::unique_ptr<Impl> impl);
  std::unique_ptr<Impl> impl_;
};

/// Constant-Q magnitudes of one chunk, n_bins rows by
/// floor(samples / hop_length) + 1 frame columns.
Matrix cqt_magnitudes(const AudioChunk& chunk, const CqtKernel& kernel,
                      CqtWorkspace& workspace);

/// Convenience overload that builds a kernel for this call only.
Matrix cqt_magnitudes(const AudioChunk& chunk, const CqtConfig& config);

/// Pitch class a CQT bin folds into (bin 0 sits at f_min).
int pitch_class_of_bin(int bin, const CqtConfig& config);

/// Sums bin magnitudes per pitch class; no normalization. Every bin
/// contributes to exactly one of the 12 rows.
Matrix fold_pitch_classes(const Matrix& cqt, const CqtConfig& config);

/// Scales each non-zero column so its maximum is exactly 1. Idempotent.
void normalize_columns_max(Matrix& m);

/// fold_pitch_classes followed by per-column max normalization.
Chromagram fold_to_chroma(const Matrix& cqt, const CqtConfig& config,
                          double frame_rate = 0.0);

/// Full chunk-to-chromagram path: CQT, fold, normalize.
Chromagram chromagram_of(const AudioChunk& chunk, const CqtKernel& kernel,
                         CqtWorkspace& workspace);

/// CSV dump: 12 rows labeled C..B, one column per frame.
void write_chroma_csv(std::ostream& out, const Chromagram& chromagram);

}  // namespace chromachord
