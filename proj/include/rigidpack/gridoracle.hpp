#pragma once

// Position-grid representation of a packet, split-operator propagation and
// moments by quadrature. Shares nothing with the number-basis engine except
// the packet description, so it serves as an independent check of it.

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include "rigidpack/errors.hpp"
#include "rigidpack/fft.hpp"
#include "rigidpack/packet.hpp"
#include "rigidpack/units.hpp"

namespace rigidpack {

inline constexpr double kGridBoundaryTolerance = 1e-10;
inline constexpr double kGridNormTolerance = 1e-8;
inline constexpr int kMinStepsPerPeriod = 512;

/// Periodic grid x_j = x_min + j dx, dx = (x_max - x_min) / n_points.
struct GridParams {
  double x_min = -16.0;
  double x_max = 16.0;
  int n_points = 4096;
};

inline GridParams symmetric_grid(double half_width, int n_points) {
  return {-half_width, half_width, n_points};
}

/// Box half-width that clears the classical turning region of the highest
/// number state by six oscillator lengths.
inline double recommended_half_width(const PacketSpec& spec, const Units& u) {
  const double reach = std::hypot(spec.x0() / u.length_scale(),
                                  spec.p0() / u.momentum_scale());
  return (reach + 2.0 * std::sqrt(2.0 * spec.phi().nmax() + 1.0) + 6.0) *
         u.length_scale();
}

class GridState {
 public:
  GridState(double x_min, double x_max, std::vector<Complex> values)
      : x_min_(x_min), x_max_(x_max), values_(std::move(values)) {
    if (!(x_max > x_min)) throw RequestError("grid must have x_max > x_min");
    if (values_.size() < 2 || !std::has_single_bit(values_.size()))
      throw RequestError("grid size must be a power of two");
  }

  double x_min() const noexcept { return x_min_; }
  double x_max() const noexcept { return x_max_; }
  int size() const noexcept { return static_cast<int>(values_.size()); }
  double dx() const noexcept { return (x_max_ - x_min_) / size(); }
  double x(int j) const noexcept { return x_min_ + j * dx(); }

  std::span<const Complex> values() const noexcept { return values_; }
  std::span<Complex> values() noexcept { return values_; }

  /// Trapezoid rule on the periodic grid.
  double norm() const {
    double s = 0.0;
    for (const auto& v : values_) s += std::norm(v);
    return std::sqrt(s * dx());
  }

 private:
  double x_min_;
  double x_max_;
  std::vector<Complex> values_;
};

/// Normalized Hermite functions h_0..h_nmax at dimensionless xi,
/// h_{n+1} = xi sqrt(2/(n+1)) h_n - sqrt(n/(n+1)) h_{n-1}.
inline std::vector<double> hermite_functions(int nmax, double xi) {
  std::vector<double> h(static_cast<std::size_t>(nmax) + 1);
  h[0] = std::exp(-0.5 * xi * xi) / std::pow(std::numbers::pi, 0.25);
  if (nmax >= 1) h[1] = std::sqrt(2.0) * xi * h[0];
  for (int n = 1; n < nmax; ++n)
    h[n + 1] = xi * std::sqrt(2.0 / (n + 1)) * h[n] - std::sqrt(double(n) / (n + 1)) * h[n - 1];
  return h;
}

/// Samples phi(x - x0) exp(i p0 x / hbar) on the grid.
inline GridState synthesize(const PacketSpec& spec, const Units& u,
                            const GridParams& grid) {
  u.validate();
  if (grid.n_points < 2 || !std::has_single_bit(static_cast<unsigned>(grid.n_points)))
    throw RequestError("grid size must be a power of two");
  const double L = u.length_scale();
  const int nmax = spec.phi().nmax();
  const auto c = spec.phi().coeffs();
  std::vector<Complex> values(static_cast<std::size_t>(grid.n_points));
  const double dx = (grid.x_max - grid.x_min) / grid.n_points;
  const double amp = 1.0 / std::sqrt(L);
  for (int j = 0; j < grid.n_points; ++j) {
    const double x = grid.x_min + j * dx;
    const auto h = hermite_functions(nmax, (x - spec.x0()) / L);
    Complex phi = 0.0;
    for (int n = 0; n <= nmax; ++n) phi += c[n] * h[n];
    values[j] = amp * phi * std::polar(1.0, spec.p0() * x / u.hbar);
  }
  GridState state(grid.x_min, grid.x_max, std::move(values));
  const auto v = state.values();
  const double edge = std::max(std::abs(v.front()), std::abs(v.back())) * std::sqrt(L);
  if (edge > kGridBoundaryTolerance)
    throw GridTooSmall("packet amplitude " + std::to_string(edge) +
                       " at the box edge exceeds 1e-10");
  if (std::abs(state.norm() - 1.0) > kGridNormTolerance)
    throw GridTooSmall("grid norm deviates from 1 by " +
                       std::to_string(std::abs(state.norm() - 1.0)));
  return state;
}

/// Strang splitting: half potential, kinetic via DFT, half potential.
inline GridState propagate(const GridState& g, const Units& u, double t, int n_steps) {
  u.validate();
  if (t == 0.0) return g;
  if (n_steps < 1) throw RequestError("need at least one step");
  const double dt = t / n_steps;
  const double max_phase = 2.0 * std::numbers::pi / kMinStepsPerPeriod;
  if (std::abs(dt) * u.omega > max_phase * (1.0 + 1e-12))
    throw StepTooLarge(std::abs(dt) * u.omega);

  const int n = g.size();
  const double dx = g.dx();
  std::vector<Complex> half_v(n), full_v(n), kin(n);
  for (int j = 0; j < n; ++j) {
    const double x = g.x(j);
    const double v = 0.5 * u.mu * u.omega * u.omega * x * x;
    half_v[j] = std::polar(1.0, -v * dt / (2.0 * u.hbar));
    full_v[j] = half_v[j] * half_v[j];
    const double k = fft_wavenumber(j, n, dx);
    kin[j] = std::polar(1.0 / n, -u.hbar * k * k * dt / (2.0 * u.mu));
  }

  const FftPlan plan(n);
  GridState out = g;
  auto psi = out.values();
  for (int j = 0; j < n; ++j) psi[j] *= half_v[j];
  for (int step = 0; step < n_steps; ++step) {
    plan.forward(psi);
    for (int j = 0; j < n; ++j) psi[j] *= kin[j];
    plan.backward(psi);
    const auto& pot = step + 1 == n_steps ? half_v : full_v;
    for (int j = 0; j < n; ++j) psi[j] *= pot[j];
  }
  return out;
}

namespace detail {

/// (p - shift)^l f via spectral differentiation; Nyquist bin dropped.
inline std::vector<Complex> apply_momentum_power(std::span<const Complex> f, double dx,
                                                 double hbar, double shift, int l) {
  std::vector<Complex> out(f.begin(), f.end());
  if (l == 0) return out;
  const int n = static_cast<int>(f.size());
  const FftPlan plan(n);
  plan.forward(out);
  for (int j = 0; j < n; ++j) {
    if (j == n / 2) {
      out[j] = 0.0;
      continue;
    }
    out[j] *= std::pow(hbar * fft_wavenumber(j, n, dx) - shift, l) / static_cast<double>(n);
  }
  plan.backward(out);
  return out;
}

inline double norm2(const GridState& g) {
  const double nrm = g.norm();
  return nrm * nrm;
}

}  // namespace detail

/// <x> and <p> by quadrature.
inline Center grid_center(const GridState& g, const Units& u) {
  const auto psi = g.values();
  const double dx = g.dx();
  const auto ppsi = detail::apply_momentum_power(psi, dx, u.hbar, 0.0, 1);
  double xs = 0.0;
  Complex ps = 0.0;
  for (int j = 0; j < g.size(); ++j) {
    xs += g.x(j) * std::norm(psi[j]);
    ps += std::conj(psi[j]) * ppsi[j];
  }
  const double n2 = detail::norm2(g);
  return {xs * dx / n2, ps.real() * dx / n2};
}

/// <(x - xbar)^k (p - pbar)^l> by quadrature; real part R_kl, imaginary S_kl.
inline Complex quadrature_moment(const GridState& g, const Units& u, int k, int l) {
  if (k < 0 || l < 0) throw RequestError("moment indices must be nonnegative");
  if (l > 4) throw MomentumOrderTooHigh(l);
  const Center c = grid_center(g, u);
  const auto psi = g.values();
  const auto f = detail::apply_momentum_power(psi, g.dx(), u.hbar, c.p, l);
  Complex sum = 0.0;
  for (int j = 0; j < g.size(); ++j)
    sum += std::conj(psi[j]) * std::pow(g.x(j) - c.x, k) * f[j];
  return sum * g.dx() / detail::norm2(g);
}

/// <phi_m| x^k p^l |phi_n> in physical units, by quadrature on the grid.
inline Complex grid_matrix_element(int m, int n, int k, int l, const Units& u,
                                   const GridParams& grid) {
  if (l > 4) throw MomentumOrderTooHigh(l);
  const auto bra = synthesize(PacketSpec(0.0, 0.0, FockState::number(m)), u, grid);
  const auto ket = synthesize(PacketSpec(0.0, 0.0, FockState::number(n)), u, grid);
  const auto f = detail::apply_momentum_power(ket.values(), ket.dx(), u.hbar, 0.0, l);
  Complex sum = 0.0;
  const auto b = bra.values();
  for (int j = 0; j < bra.size(); ++j) sum += std::conj(b[j]) * std::pow(bra.x(j), k) * f[j];
  return sum * bra.dx();
}

/// |<a|b>|^2 / (<a|a><b|b>).
inline double fidelity(const GridState& a, const GridState& b) {
  if (a.size() != b.size()) throw RequestError("grid size mismatch");
  Complex overlap = 0.0;
  for (int j = 0; j < a.size(); ++j) overlap += std::conj(a.values()[j]) * b.values()[j];
  overlap *= a.dx();
  return std::norm(overlap) / (detail::norm2(a) * detail::norm2(b));
}

struct GridEngineOptions {
  int n_points = 4096;
  double half_width = 0.0;  ///< 0 selects 16 oscillator lengths or the recommended width, whichever is larger
  int steps_per_period = 4096;
};

inline GridParams grid_for(const PacketSpec& spec, const Units& u,
                           const GridEngineOptions& opt) {
  const double hw = opt.half_width > 0.0
                        ? opt.half_width
                        : std::max(16.0 * u.length_scale(), recommended_half_width(spec, u));
  return symmetric_grid(hw, opt.n_points);
}

/// Propagates sample to sample and evaluates the requested moment on the grid.
inline MomentSeries grid_moment_series(const PacketSpec& spec, const Units& u,
                                       MomentKind kind, std::span<const double> t_grid,
                                       const GridEngineOptions& opt = {}) {
  validate_time_grid(t_grid);
  if (kind.l > 4) throw MomentumOrderTooHigh(kind.l);
  GridState g = synthesize(spec, u, grid_for(spec, u, opt));
  MomentSeries out{kind, {t_grid.begin(), t_grid.end()}, {}, {kind.k, kind.l}};
  double t_now = 0.0;
  const double period = u.period();
  for (double t : t_grid) {
    const double span = t - t_now;
    if (span != 0.0) {
      const int steps = std::max(1, static_cast<int>(std::ceil(
                                        std::abs(span) / period * opt.steps_per_period - 1e-9)));
      g = propagate(g, u, span, steps);
      t_now = t;
    }
    out.values.push_back(kind.select(quadrature_moment(g, u, kind.k, kind.l)));
  }
  return out;
}

}  // namespace rigidpack
