#include "chromachord/chroma.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <mutex>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "chromachord/error.hpp"
#include "chromachord/pitch.hpp"

namespace chromachord {

namespace {

// Q is chosen so that one semitone equals two DFT bins of every atom,
// putting neighbouring pitch classes at the Hann window's first null.
constexpr double kFilterScale = 2.0;

// Spectral kernel entries below this fraction of the kernel's peak
// magnitude are dropped.
constexpr double kKernelTruncation = 0.005;

struct FftwDeleter {
  void operator()(void* p) const { fftw_free(p); }
};

using RealBuffer = std::unique_ptr<double[], FftwDeleter>;
using ComplexBuffer = std::unique_ptr<fftw_complex[], FftwDeleter>;

RealBuffer alloc_real(std::size_t n) {
  return RealBuffer(fftw_alloc_real(n));
}

ComplexBuffer alloc_complex(std::size_t n) {
  return ComplexBuffer(fftw_alloc_complex(n));
}

// FFTW planning is not thread-safe; execution on distinct buffers is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

void CqtConfig::validate(int sample_rate) const {
  if (sample_rate <= 0) {
    throw ConfigError("CQT: sample rate must be positive");
  }
  if (!(f_min > 0.0)) {
    throw ConfigError("CQT: f_min must be positive");
  }
  if (bins_per_octave <= 0 || bins_per_octave % kNumPitchClasses != 0) {
    throw ConfigError("CQT: bins_per_octave must be a positive multiple of 12");
  }
  if (n_octaves <= 0) {
    throw ConfigError("CQT: octave count must be positive");
  }
  if (hop_length <= 0) {
    throw ConfigError("CQT: hop length must be positive");
  }
  const double top = f_min * std::pow(2.0, n_octaves);
  if (!(top < sample_rate / 2.0)) {
    throw ConfigError("CQT: top octave reaches Nyquist (" +
                      std::to_string(top) + " Hz at " +
                      std::to_string(sample_rate) + " Hz)");
  }
}

struct CqtWorkspace::Impl {
  RealBuffer time;
  ComplexBuffer freq;
};

CqtWorkspace::CqtWorkspace(std::unique_ptr<Impl> impl) : impl_(std::move(impl)) {}
CqtWorkspace::~CqtWorkspace() = default;
CqtWorkspace::CqtWorkspace(CqtWorkspace&&) noexcept = default;
CqtWorkspace& CqtWorkspace::operator=(CqtWorkspace&&) noexcept = default;

struct CqtKernel::Impl {
  CqtConfig config;
  int sample_rate = 0;
  int n_fft = 0;
  std::vector<double> bin_freqs;

  // Sparse conjugated spectral kernel per bin, scale folded in.
  struct Sparse {
    std::vector<int> idx;
    std::vector<std::complex<double>> coeff;
  };
  std::vector<Sparse> kernels;

  fftw_plan r2c_plan = nullptr;
  RealBuffer plan_in;
  ComplexBuffer plan_out;

  ~Impl() {
    if (r2c_plan != nullptr) {
      std::lock_guard<std::mutex> lock(planner_mutex());
      fftw_destroy_plan(r2c_plan);
    }
  }
};

CqtKernel::CqtKernel(const CqtConfig& config, int sample_rate)
    : impl_(std::make_unique<Impl>()) {
  config.validate(sample_rate);
  impl_->config = config;
  impl_->sample_rate = sample_rate;

  const int n_bins = config.n_bins();
  const double q =
      kFilterScale / (std::pow(2.0, 1.0 / config.bins_per_octave) - 1.0);

  const int longest =
      static_cast<int>(std::ceil(q * sample_rate / config.f_min));
  int n_fft = 1;
  while (n_fft < longest) {
    n_fft <<= 1;
  }
  impl_->n_fft = n_fft;

  ComplexBuffer atom = alloc_complex(n_fft);
  ComplexBuffer spectrum = alloc_complex(n_fft);
  fftw_plan c2c = nullptr;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    c2c = fftw_plan_dft_1d(n_fft, atom.get(), spectrum.get(), FFTW_FORWARD,
                           FFTW_ESTIMATE);
    impl_->plan_in = alloc_real(n_fft);
    impl_->plan_out = alloc_complex(n_fft / 2 + 1);
    impl_->r2c_plan = fftw_plan_dft_r2c_1d(n_fft, impl_->plan_in.get(),
                                           impl_->plan_out.get(),
                                           FFTW_ESTIMATE);
  }

  impl_->bin_freqs.resize(n_bins);
  impl_->kernels.resize(n_bins);
  const double spectrum_scale = 4.0 / (static_cast<double>(n_fft) * n_fft);

  for (int k = 0; k < n_bins; ++k) {
    const double freq =
        config.f_min * std::pow(2.0, static_cast<double>(k) /
                                          config.bins_per_octave);
    impl_->bin_freqs[k] = freq;

    const int atom_len = static_cast<int>(std::ceil(q * sample_rate / freq));
    const int start = (n_fft - atom_len) / 2;
    std::fill_n(reinterpret_cast<double*>(atom.get()), 2 * std::size_t(n_fft),
                0.0);
    const double center = (atom_len - 1) / 2.0;
    for (int j = 0; j < atom_len; ++j) {
      const double hann =
          atom_len > 1
              ? 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * j /
                                      (atom_len - 1)))
              : 1.0;
      const double phase =
          2.0 * std::numbers::pi * freq * (j - center) / sample_rate;
      atom[start + j][0] = hann * std::cos(phase);
      atom[start + j][1] = hann * std::sin(phase);
    }
    fftw_execute(c2c);

    double peak = 0.0;
    for (int j = 0; j < n_fft; ++j) {
      peak = std::max(peak, std::hypot(spectrum[j][0], spectrum[j][1]));
    }
    const double threshold = kKernelTruncation * peak;
    auto& sparse = impl_->kernels[k];
    for (int j = 0; j <= n_fft / 2; ++j) {
      const std::complex<double> value(spectrum[j][0], spectrum[j][1]);
      if (std::abs(value) >= threshold) {
        sparse.idx.push_back(j);
        sparse.coeff.push_back(std::conj(value) * spectrum_scale);
      }
    }
  }

  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(c2c);
  }
}

CqtKernel::~CqtKernel() = default;

const CqtConfig& CqtKernel::config() const { return impl_->config; }
int CqtKernel::sample_rate() const { return impl_->sample_rate; }
int CqtKernel::fft_size() const { return impl_->n_fft; }

double CqtKernel::bin_frequency(int bin) const {
  if (bin < 0 || bin >= static_cast<int>(impl_->bin_freqs.size())) {
    throw std::out_of_range("CQT bin out of range");
  }
  return impl_->bin_freqs[bin];
}

CqtWorkspace CqtKernel::make_workspace() const {
  auto impl = std::make_unique<CqtWorkspace::Impl>();
  impl->time = alloc_real(impl_->n_fft);
  impl->freq = alloc_complex(impl_->n_fft / 2 + 1);
  return CqtWorkspace(std::move(impl));
}

void CqtKernel::frame_magnitudes(std::span<const float> samples,
                                 std::int64_t center, CqtWorkspace& workspace,
                                 std::span<double> out) const {
  const int n_fft = impl_->n_fft;
  const auto n = static_cast<std::int64_t>(samples.size());
  double* time = workspace.impl_->time.get();
  fftw_complex* freq = workspace.impl_->freq.get();

  const std::int64_t lo = center - n_fft / 2;
  for (int j = 0; j < n_fft; ++j) {
    const std::int64_t src = lo + j;
    time[j] = (src >= 0 && src < n)
                  ? static_cast<double>(samples[static_cast<std::size_t>(src)])
                  : 0.0;
  }
  fftw_execute_dft_r2c(impl_->r2c_plan, time, freq);

  const int n_bins = impl_->config.n_bins();
  for (int k = 0; k < n_bins; ++k) {
    const auto& sparse = impl_->kernels[k];
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t t = 0; t < sparse.idx.size(); ++t) {
      const fftw_complex& bin = freq[sparse.idx[t]];
      acc += sparse.coeff[t] * std::complex<double>(bin[0], bin[1]);
    }
    out[k] = std::abs(acc);
  }
}

Matrix cqt_magnitudes(const AudioChunk& chunk, const CqtKernel& kernel,
                      CqtWorkspace& workspace) {
  if (chunk.sample_rate != kernel.sample_rate()) {
    throw ConfigError("CQT: chunk sample rate does not match kernel");
  }
  const CqtConfig& config = kernel.config();
  const int n_frames =
      static_cast<int>(chunk.samples.size() / config.hop_length) + 1;
  Matrix m(config.n_bins(), n_frames);

  std::vector<double> column(config.n_bins());
  for (int f = 0; f < n_frames; ++f) {
    const std::int64_t center =
        static_cast<std::int64_t>(f) * config.hop_length;
    kernel.frame_magnitudes(chunk.samples, center, workspace, column);
    for (int k = 0; k < config.n_bins(); ++k) {
      m.at(k, f) = column[k];
    }
  }
  return m;
}

Matrix cqt_magnitudes(const AudioChunk& chunk, const CqtConfig& config) {
  CqtKernel kernel(config, chunk.sample_rate);
  CqtWorkspace workspace = kernel.make_workspace();
  return cqt_magnitudes(chunk, kernel, workspace);
}

int pitch_class_of_bin(int bin, const CqtConfig& config) {
  if (bin < 0 || bin >= config.n_bins()) {
    throw std::out_of_range("CQT bin out of range");
  }
  const int bins_per_semitone = config.bins_per_octave / kNumPitchClasses;
  const int offset = pitch_class_of_frequency(config.f_min);
  return (offset + bin / bins_per_semitone) % kNumPitchClasses;
}

Matrix fold_pitch_classes(const Matrix& cqt, const CqtConfig& config) {
  if (cqt.rows != config.n_bins()) {
    throw std::invalid_argument("fold: bin count does not match config");
  }
  Matrix folded(kNumPitchClasses, cqt.cols);
  for (int bin = 0; bin < cqt.rows; ++bin) {
    const int pc = pitch_class_of_bin(bin, config);
    for (int c = 0; c < cqt.cols; ++c) {
      folded.at(pc, c) += cqt.at(bin, c);
    }
  }
  return folded;
}

void normalize_columns_max(Matrix& m) {
  for (int c = 0; c < m.cols; ++c) {
    double peak = 0.0;
    for (int r = 0; r < m.rows; ++r) {
      peak = std::max(peak, m.at(r, c));
    }
    if (peak > 0.0) {
      for (int r = 0; r < m.rows; ++r) {
        m.at(r, c) /= peak;
      }
    }
  }
}

Chromagram fold_to_chroma(const Matrix& cqt, const CqtConfig& config,
                          double frame_rate) {
  Chromagram chroma;
  chroma.values = fold_pitch_classes(cqt, config);
  chroma.frame_rate = frame_rate;
  normalize_columns_max(chroma.values);
  return chroma;
}

Chromagram chromagram_of(const AudioChunk& chunk, const CqtKernel& kernel,
                         CqtWorkspace& workspace) {
  const Matrix cqt = cqt_magnitudes(chunk, kernel, workspace);
  const double frame_rate = static_cast<double>(chunk.sample_rate) /
                            kernel.config().hop_length;
  return fold_to_chroma(cqt, kernel.config(), frame_rate);
}

void write_chroma_csv(std::ostream& out, const Chromagram& chromagram) {
  char cell[32];
  for (int p = 0; p < kNumPitchClasses; ++p) {
    out << kNoteNames[p];
    for (int f = 0; f < chromagram.values.cols; ++f) {
      std::snprintf(cell, sizeof(cell), ",%.6f", chromagram.values.at(p, f));
      out << cell;
    }
    out << '\n';
  }
}

}  // namespace chromachord
