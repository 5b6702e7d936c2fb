#pragma once

// Wave packets psi_0(x) = phi(x - x0) exp(i p0 x / hbar) and their moments
//   W_kl(t) = <psi_t| (x - xbar_t)^k (p - pbar_t)^l |psi_t> = R_kl + i S_kl.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rigidpack/errors.hpp"
#include "rigidpack/fock.hpp"
#include "rigidpack/ladder.hpp"
#include "rigidpack/units.hpp"

namespace rigidpack {

inline constexpr int kMaxMomentOrder = 12;
inline constexpr double kTruncationTolerance = 1e-10;

class PacketSpec {
 public:
  PacketSpec() = default;
  PacketSpec(double x0, double p0, FockState phi)
      : x0_(x0), p0_(p0), phi_(std::move(phi)), parity_(phi_.parity()) {
    if (!std::isfinite(x0) || !std::isfinite(p0))
      throw SpecError("x0 and p0 must be finite");
  }

  double x0() const noexcept { return x0_; }
  double p0() const noexcept { return p0_; }
  const FockState& phi() const noexcept { return phi_; }
  Parity parity() const noexcept { return parity_; }

  PacketSpec displaced_to(double x0, double p0) const {
    return PacketSpec(x0, p0, phi_);
  }

 private:
  double x0_ = 0.0;
  double p0_ = 0.0;
  FockState phi_;
  Parity parity_ = Parity::even;
};

struct Center {
  double x = 0.0;
  double p = 0.0;
};

enum class EvaluationPath { automatic, parity, general };

namespace detail {

inline const TrigLadderPolynomial& rotated_monomial(int k, int l) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, TrigLadderPolynomial> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({k, l});
  if (it == cache.end())
    it = cache.emplace(std::pair{k, l}, heisenberg_expansion(monomial_word(k, l)))
             .first;
  return it->second;
}

inline const NumericLadderPolynomial& plain_monomial(int k, int l) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, NumericLadderPolynomial> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({k, l});
  if (it == cache.end())
    it = cache.emplace(std::pair{k, l}, to_numeric(expand_word(monomial_word(k, l))))
             .first;
  return it->second;
}

inline double binomial(int n, int k) {
  double b = 1.0;
  for (int j = 1; j <= k; ++j) b = b * (n - k + j) / j;
  return b;
}

inline void check_order(int k, int l) {
  if (k < 0 || l < 0) throw RequestError("moment indices must be nonnegative");
  if (k + l > kMaxMomentOrder) throw OrderTooHigh(k + l, kMaxMomentOrder);
}

/// Centered dimensionless moment of a number-basis state.
inline Complex centered_moment(std::span<const Complex> psi, int k, int l) {
  const double xc = expectation(plain_monomial(1, 0), psi).real();
  const double pc = expectation(plain_monomial(0, 1), psi).real();
  Complex sum = 0.0;
  for (int i = 0; i <= k; ++i) {
    const double bx = binomial(k, i) * std::pow(-xc, k - i);
    for (int j = 0; j <= l; ++j) {
      const double b = bx * binomial(l, j) * std::pow(-pc, l - j);
      sum += b * expectation(plain_monomial(i, j), psi);
    }
  }
  return sum;
}

}  // namespace detail

/// Packet center at time t; follows the classical trajectory of the
/// initial mean position and momentum.
inline Center center(const PacketSpec& spec, const Units& u, double t) {
  double xbar0 = spec.x0();
  double pbar0 = spec.p0();
  if (spec.parity() == Parity::none) {
    const auto c = spec.phi().coeffs();
    xbar0 += u.length_scale() * expectation(detail::plain_monomial(1, 0), c).real();
    pbar0 += u.momentum_scale() * expectation(detail::plain_monomial(0, 1), c).real();
  }
  const double wt = u.omega * t;
  const double mw = u.mu * u.omega;
  return {xbar0 * std::cos(wt) + pbar0 / mw * std::sin(wt),
          pbar0 * std::cos(wt) - mw * xbar0 * std::sin(wt)};
}

struct DisplacedState {
  FockState state;
  double tail_norm = 0.0;
};

/// Number-basis coefficients of phi(x - x0) exp(i p0 x / hbar), truncated at
/// index cap. The displacement exp(alpha a^dag - alpha* a) is applied on a
/// padded basis by splitting it into substeps with ||G dt|| <= 1/2 and
/// summing the Taylor series of each substep.
inline DisplacedState displace_to_fock(const PacketSpec& spec, const Units& u,
                                       int cap) {
  u.validate();
  if (cap < 0) throw RequestError("cap must be nonnegative");
  if (cap > basis_cap()) throw BasisOverflow(cap, basis_cap());
  const double xt = spec.x0() / u.length_scale();
  const double pt = spec.p0() / u.momentum_scale();
  const Complex alpha = Complex(xt, pt) / std::sqrt(2.0);
  const double a2 = std::norm(alpha);

  const int padding = static_cast<int>(std::ceil(4.0 * a2)) + 16;
  const int top = std::max(cap, spec.phi().nmax()) + padding;
  std::vector<Complex> v(static_cast<std::size_t>(top) + 1, 0.0);
  for (int n = 0; n <= spec.phi().nmax(); ++n) v[n] = spec.phi()[n];

  if (a2 > 0.0) {
    const double gen_norm = std::abs(alpha) * 2.0 * std::sqrt(top + 1.0);
    const int substeps = std::max(1, static_cast<int>(std::ceil(gen_norm / 0.5)));
    const Complex a_sub = alpha / static_cast<double>(substeps);
    std::vector<Complex> term(v.size());
    std::vector<Complex> next(v.size());
    for (int step = 0; step < substeps; ++step) {
      term = v;
      for (int j = 1; j < 80; ++j) {
        double tn = 0.0;
        for (int n = 0; n <= top; ++n) {
          Complex g = 0.0;
          if (n > 0) g += a_sub * std::sqrt(static_cast<double>(n)) * term[n - 1];
          if (n < top)
            g -= std::conj(a_sub) * std::sqrt(n + 1.0) * term[n + 1];
          next[n] = g / static_cast<double>(j);
          tn += std::norm(next[n]);
        }
        term.swap(next);
        for (int n = 0; n <= top; ++n) v[n] += term[n];
        if (tn < 1e-36) break;
      }
    }
  }

  const Complex phase = std::polar(1.0, spec.x0() * spec.p0() / (2.0 * u.hbar));
  double tail = 0.0;
  for (int n = cap + 1; n <= top; ++n) tail += std::norm(v[n]);
  if (tail > kTruncationTolerance) throw TruncationError(tail, cap);
  v.resize(static_cast<std::size_t>(cap) + 1);
  for (auto& c : v) c *= phase;
  return {FockState(std::move(v)), tail};
}

/// Truncation index used by the general evaluation path.
inline int general_path_cap(const PacketSpec& spec, const Units& u) {
  const double xt = spec.x0() / u.length_scale();
  const double pt = spec.p0() / u.momentum_scale();
  const double a = std::sqrt(0.5 * (xt * xt + pt * pt));
  const int nmax = spec.phi().nmax();
  const double extra =
      4.0 * a * a + 12.0 * a * std::sqrt(nmax + 1.0) + 24.0;
  return std::min(basis_cap(), nmax + static_cast<int>(std::ceil(extra)));
}

/// Evaluates W_kl(t) for one packet. Immutable after construction.
///
/// The parity path evaluates <phi| X_t^k P_t^l |phi> with Heisenberg-rotated
/// quadratures, which requires phi to have zero mean position and momentum
/// (guaranteed by definite parity). The general path evolves the displaced
/// state's number-basis phases and centers the raw moments by binomial
/// expansion; it accepts any phi.
class MomentEvaluator {
 public:
  MomentEvaluator(PacketSpec spec, Units u,
                  EvaluationPath path = EvaluationPath::automatic)
      : spec_(std::move(spec)), units_(u) {
    units_.validate();
    if (path == EvaluationPath::automatic)
      path = spec_.parity() == Parity::none ? EvaluationPath::general
                                            : EvaluationPath::parity;
    if (path == EvaluationPath::parity && spec_.parity() == Parity::none)
      throw ParityPathInvalid();
    path_ = path;
    if (path_ == EvaluationPath::general)
      psi0_ = displace_to_fock(spec_, units_, general_path_cap(spec_, units_)).state;
  }

  EvaluationPath path() const noexcept { return path_; }
  const PacketSpec& spec() const noexcept { return spec_; }
  const Units& units() const noexcept { return units_; }

  Complex W(int k, int l, double t) const {
    detail::check_order(k, l);
    const double theta = units_.omega * t;
    Complex w;
    if (path_ == EvaluationPath::parity) {
      const auto poly = evaluate_at(detail::rotated_monomial(k, l), theta);
      w = expectation(poly, spec_.phi().coeffs());
    } else {
      const auto psi = psi0_->evolved(theta);
      w = detail::centered_moment(psi, k, l);
    }
    return w * units_.moment_scale(k, l);
  }

  /// Center computed from the evolved state (general path) or from the
  /// classical trajectory (parity path).
  Center center_at(double t) const {
    if (path_ == EvaluationPath::parity) return center(spec_, units_, t);
    const auto psi = psi0_->evolved(units_.omega * t);
    return {units_.length_scale() *
                expectation(detail::plain_monomial(1, 0), psi).real(),
            units_.momentum_scale() *
                expectation(detail::plain_monomial(0, 1), psi).real()};
  }

  /// Number-basis initial state used by the general path.
  const std::optional<FockState>& initial_state() const noexcept {
    return psi0_;
  }

 private:
  PacketSpec spec_;
  Units units_;
  EvaluationPath path_ = EvaluationPath::parity;
  std::optional<FockState> psi0_;
};

inline Complex moment_W(const PacketSpec& spec, const Units& u, int k, int l,
                        double t,
                        EvaluationPath path = EvaluationPath::automatic) {
  detail::check_order(k, l);
  return MomentEvaluator(spec, u, path).W(k, l, t);
}

enum class MomentFamily { Q, P, R, S };

/// Q_K = R_K0, P_K = R_0K, R_kl = Re W_kl, S_kl = Im W_kl.
struct MomentKind {
  MomentFamily family = MomentFamily::Q;
  int k = 2;
  int l = 0;

  static MomentKind Q(int K) { return {MomentFamily::Q, K, 0}; }
  static MomentKind P(int K) { return {MomentFamily::P, 0, K}; }
  static MomentKind R(int k, int l) { return {MomentFamily::R, k, l}; }
  static MomentKind S(int k, int l) { return {MomentFamily::S, k, l}; }

  int order() const noexcept { return k + l; }

  std::string label() const {
    switch (family) {
      case MomentFamily::Q: return "Q" + std::to_string(k);
      case MomentFamily::P: return "P" + std::to_string(l);
      case MomentFamily::R: return "R" + std::to_string(k) + "," + std::to_string(l);
      case MomentFamily::S: return "S" + std::to_string(k) + "," + std::to_string(l);
    }
    return {};
  }

  double select(Complex w) const {
    return family == MomentFamily::S ? w.imag() : w.real();
  }

  friend bool operator==(const MomentKind&, const MomentKind&) = default;
};

/// length^length_power * momentum^momentum_power.
struct UnitsTag {
  int length_power = 0;
  int momentum_power = 0;
  friend bool operator==(const UnitsTag&, const UnitsTag&) = default;
};

struct MomentSeries {
  MomentKind kind;
  std::vector<double> times;
  std::vector<double> values;
  UnitsTag units_tag;

  std::size_t size() const noexcept { return times.size(); }

  double peak_to_peak() const {
    if (values.empty()) return 0.0;
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return *hi - *lo;
  }
  double max_abs() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
  }
};

inline void validate_time_grid(std::span<const double> t_grid) {
  if (t_grid.empty()) throw RequestError("time grid is empty");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!std::isfinite(t_grid[i])) throw RequestError("non-finite time");
    if (i > 0 && !(t_grid[i] > t_grid[i - 1]))
      throw RequestError("time grid must be strictly increasing");
  }
}

inline MomentSeries moment_series(const MomentEvaluator& eval, MomentKind kind,
                                  std::span<const double> t_grid) {
  validate_time_grid(t_grid);
  detail::check_order(kind.k, kind.l);
  MomentSeries out{kind, {t_grid.begin(), t_grid.end()}, {}, {kind.k, kind.l}};
  out.values.reserve(t_grid.size());
  for (double t : t_grid) out.values.push_back(kind.select(eval.W(kind.k, kind.l, t)));
  return out;
}

inline MomentSeries moment_series(const PacketSpec& spec, const Units& u,
                                  MomentKind kind, std::span<const double> t_grid,
                                  EvaluationPath path = EvaluationPath::automatic) {
  return moment_series(MomentEvaluator(spec, u, path), kind, t_grid);
}

/// n uniform instants t0 + j * span / n, j = 0..n-1.
inline std::vector<double> uniform_times(double span, int n, double t0 = 0.0) {
  if (n < 1) throw RequestError("need at least one sample");
  std::vector<double> t(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) t[j] = t0 + span * j / n;
  return t;
}

}  // namespace rigidpack
