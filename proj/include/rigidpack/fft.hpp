#pragma once

// Thin RAII wrapper over FFTW's complex 1-D transforms.

#include <fftw3.h>

#include <complex>
#include <memory>
#include <mutex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace rigidpack {

/// In-place forward/backward complex DFT of a fixed length.
/// Unnormalized in both directions, as in FFTW.
class FftPlan {
 public:
  explicit FftPlan(int n) : n_(n), buffer_(fftw_alloc_complex(static_cast<std::size_t>(n))) {
    if (n < 1 || !buffer_) throw std::invalid_argument("bad FFT length");
    std::lock_guard lock(planner_mutex());
    forward_ = fftw_plan_dft_1d(n, buffer_.get(), buffer_.get(), FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    backward_ = fftw_plan_dft_1d(n, buffer_.get(), buffer_.get(), FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!forward_ || !backward_) throw std::runtime_error("FFTW planning failed");
  }
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;
  ~FftPlan() {
    std::lock_guard lock(planner_mutex());
    if (forward_) fftw_destroy_plan(forward_);
    if (backward_) fftw_destroy_plan(backward_);
  }

  int size() const noexcept { return n_; }

  void forward(std::span<std::complex<double>> data) const { run(forward_, data); }
  void backward(std::span<std::complex<double>> data) const { run(backward_, data); }

 private:
  struct FreeBuffer {
    void operator()(fftw_complex* p) const noexcept { fftw_free(p); }
  };

  static std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
  }

  void run(fftw_plan plan, std::span<std::complex<double>> data) const {
    if (static_cast<int>(data.size()) != n_) throw std::invalid_argument("FFT length mismatch");
    // new-array execute; std::complex<double> is layout-compatible with fftw_complex
    auto* p = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(plan, p, p);
  }

  int n_;
  std::unique_ptr<fftw_complex[], FreeBuffer> buffer_;
  fftw_plan forward_ = nullptr;
  fftw_plan backward_ = nullptr;
};

/// Angular wavenumber of DFT bin j for n points spaced dx apart.
inline double fft_wavenumber(int j, int n, double dx) {
  const int m = j <= n / 2 ? j : j - n;
  return 2.0 * std::numbers::pi * m / (n * dx);
}

}  // namespace rigidpack
