#pragma once

// Packets with a prescribed degree of rigidity, and a classifier that
// measures the degree of an arbitrary packet.
//
// A packet has degree N when Q_2..Q_2N are time independent and Q_{2N+2}
// is not (Q_{2N+1} does not matter). Superpositions of phi_{2n_i} (or
// phi_{2n_i+1}) with n_{i+1} - n_i >= N + 1 have degree at least N, because
// x^k p^l with k + l <= 2N cannot connect two different components.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "rigidpack/errors.hpp"
#include "rigidpack/fft.hpp"
#include "rigidpack/fock.hpp"
#include "rigidpack/packet.hpp"
#include "rigidpack/units.hpp"

namespace rigidpack {

struct RigiditySpec {
  int target_N = 1;
  Parity parity = Parity::even;
  std::vector<int> indices;          ///< n_1 < n_2 < ...
  std::vector<Complex> amplitudes;   ///< empty: random if seed is set, else equal
  std::optional<std::uint64_t> seed;
  double x0 = 0.0;
  double p0 = 0.0;
};

/// Number-state index carried by the i-th term.
inline int rigidity_state_index(Parity parity, int n) {
  return parity == Parity::odd ? 2 * n + 1 : 2 * n;
}

/// Random amplitudes with magnitudes in [0.3, 0.7] and uniform phases.
inline std::vector<Complex> generic_amplitudes(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mag(0.3, 0.7);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::vector<Complex> a(count);
  for (auto& c : a) {
    const double m = mag(rng);
    c = std::polar(m, phase(rng));
  }
  return a;
}

inline void check_spacing(const RigiditySpec& spec) {
  if (spec.target_N < 1) throw SpecError("target degree must be positive");
  if (spec.parity == Parity::none) throw SpecError("parity must be even or odd");
  if (spec.indices.empty()) throw SpecError("at least one index is required");
  if (spec.indices.front() < 0) throw SpecError("indices must be nonnegative");
  for (std::size_t i = 1; i < spec.indices.size(); ++i) {
    const int a = spec.indices[i - 1];
    const int b = spec.indices[i];
    if (b <= a) throw SpecError("indices must be strictly increasing");
    if (b - a < spec.target_N + 1) throw SpacingViolation(a, b, spec.target_N);
  }
}

inline PacketSpec generate(const RigiditySpec& spec) {
  check_spacing(spec);
  const int top = rigidity_state_index(spec.parity, spec.indices.back());
  if (top > basis_cap()) throw BasisOverflow(top, basis_cap());

  std::vector<Complex> amps = spec.amplitudes;
  if (amps.empty()) {
    amps = spec.seed ? generic_amplitudes(spec.indices.size(), *spec.seed)
                     : std::vector<Complex>(spec.indices.size(), 1.0);
  }
  if (amps.size() != spec.indices.size())
    throw SpecError("amplitude count does not match index count");
  for (const auto& a : amps)
    if (std::abs(a) <= kParityTolerance) throw SpecError("amplitudes must be nonzero");

  std::vector<Complex> coeffs(static_cast<std::size_t>(top) + 1, 0.0);
  for (std::size_t i = 0; i < amps.size(); ++i)
    coeffs[static_cast<std::size_t>(rigidity_state_index(spec.parity, spec.indices[i]))] = amps[i];
  return PacketSpec(spec.x0, spec.p0, FockState(std::move(coeffs)));
}

struct KFlatness {
  bool flat = false;
  double ptp = 0.0;
};

struct RigidityReport {
  std::optional<int> degree;   ///< nullopt: infinite
  bool lower_bound = false;    ///< flat through K_max, degree reported is K_max/2
  std::map<int, KFlatness> per_K;
  double tolerance_used = 0.0;

  bool infinite() const noexcept { return !degree.has_value(); }
};

inline constexpr double kDefaultRigidityTolerance = 1e-8;

inline RigidityReport classify(const MomentEvaluator& eval, int K_max = 10, int samples = 256,
                               double tol_rel = kDefaultRigidityTolerance) {
  if (K_max > kMaxMomentOrder) throw OrderTooHigh(K_max, kMaxMomentOrder);
  if (K_max < 4 || K_max % 2 != 0) throw RequestError("K_max must be even and at least 4");
  if (samples < 64) throw RequestError("classification needs at least 64 samples");
  if (!(tol_rel > 0.0)) throw RequestError("tolerance must be positive");

  const Units& u = eval.units();
  const auto times = uniform_times(u.period(), samples);
  RigidityReport report;
  report.tolerance_used = tol_rel;
  for (int K = 2; K <= K_max; ++K) {
    const auto series = moment_series(eval, MomentKind::Q(K), times);
    const double scale = std::max(series.max_abs(), std::pow(u.length_scale(), K));
    const double ptp = series.peak_to_peak();
    report.per_K[K] = {ptp <= tol_rel * scale + 1e-12, ptp};
  }

  int degree = 0;
  for (int N = 1; 2 * N <= K_max; ++N) {
    bool ok = true;
    for (int K = 2; K <= 2 * N; ++K) ok = ok && report.per_K[K].flat;
    if (!ok) break;
    degree = N;
  }
  if (2 * degree == K_max) {
    if (eval.spec().phi().support_size() == 1) {
      report.degree.reset();
      return report;
    }
    report.lower_bound = true;
  }
  report.degree = degree;
  return report;
}

inline RigidityReport classify(const PacketSpec& spec, const Units& u, int K_max = 10,
                               int samples = 256,
                               double tol_rel = kDefaultRigidityTolerance) {
  if (K_max > kMaxMomentOrder) throw OrderTooHigh(K_max, kMaxMomentOrder);
  return classify(MomentEvaluator(spec, u), K_max, samples, tol_rel);
}

/// Fraction of the series' spectral power outside the allowed harmonics of
/// the sampled period. The series must cover exactly one period with a
/// power-of-two count of uniform samples.
inline double harmonic_content(const MomentSeries& series, const std::set<int>& allowed) {
  const auto n = series.times.size();
  if (n < 2 || !std::has_single_bit(n))
    throw NonUniformSampling("sample count must be a power of two");
  if (series.values.size() != n) throw NonUniformSampling("times and values differ in length");
  const double dt = (series.times.back() - series.times.front()) / static_cast<double>(n - 1);
  if (!(dt > 0.0)) throw NonUniformSampling("times must increase");
  for (std::size_t j = 1; j < n; ++j)
    if (std::abs(series.times[j] - series.times[j - 1] - dt) > 1e-9 * dt)
      throw NonUniformSampling("samples are not uniformly spaced");

  std::vector<Complex> data(series.values.begin(), series.values.end());
  const int len = static_cast<int>(n);
  FftPlan(len).forward(data);
  double total = 0.0;
  double off = 0.0;
  for (int j = 0; j < len; ++j) {
    const double p = std::norm(data[j]);
    total += p;
    const int h = std::min(j, len - j);
    if (!allowed.contains(h)) off += p;
  }
  return total > 0.0 ? off / total : 0.0;
}

}  // namespace rigidpack
