#pragma once

// Coupled equations of motion for the centered moments R_kl, S_kl.
//
// The order-K R subset closes once the order K-2 S subset is known and vice
// versa, so a chain of orders 0..K is integrated jointly with classical RK4.

#include <cmath>
#include <span>
#include <vector>

#include "rigidpack/errors.hpp"
#include "rigidpack/packet.hpp"
#include "rigidpack/units.hpp"

namespace rigidpack {

/// R_kl and S_kl for all k + l == order; r[k] holds R_{k, order-k}.
struct MomentVector {
  int order = 0;
  std::vector<double> r;
  std::vector<double> s;

  static MomentVector zero(int order) {
    const auto n = static_cast<std::size_t>(order) + 1;
    return {order, std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  }

  /// R_kl; zero for negative indices.
  double R(int k, int l) const {
    if (k < 0 || l < 0) return 0.0;
    check(k, l);
    return r[static_cast<std::size_t>(k)];
  }
  double S(int k, int l) const {
    if (k < 0 || l < 0) return 0.0;
    check(k, l);
    return s[static_cast<std::size_t>(k)];
  }

  bool well_formed() const {
    const auto n = static_cast<std::size_t>(order) + 1;
    if (order < 0 || r.size() != n || s.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i)
      if (!std::isfinite(r[i]) || !std::isfinite(s[i])) return false;
    return true;
  }

 private:
  void check(int k, int l) const {
    if (k + l != order) throw RequestError("index outside this order");
  }
};

/// chain[K] is the order-K vector.
using MomentChain = std::vector<MomentVector>;

/// Time derivative of the order-K subsets given the order K-2 subsets.
inline MomentVector rhs(const MomentVector& mv, const MomentVector& lower,
                        const Units& u) {
  const int K = mv.order;
  if (K < 2) throw RequestError("orders 0 and 1 are constant");
  if (lower.order != K - 2 || !lower.well_formed()) throw MissingLowerOrder(K, lower.order);
  if (!mv.well_formed()) throw RequestError("malformed moment vector");

  const double inv_mu = 1.0 / u.mu;
  const double mw2 = u.mu * u.omega * u.omega;
  const double hx = u.hbar / (2.0 * u.mu);
  const double hp = u.hbar * u.mu * u.omega * u.omega / 2.0;
  auto R = [&](int k, int l) { return k < 0 || l < 0 || k > K ? 0.0 : mv.R(k, l); };
  auto S = [&](int k, int l) { return k < 0 || l < 0 || k > K ? 0.0 : mv.S(k, l); };

  MomentVector d = MomentVector::zero(K);
  for (int k = 0; k <= K; ++k) {
    const int l = K - k;
    const double ck = k * (k - 1);
    const double cl = l * (l - 1);
    d.r[k] = k * inv_mu * R(k - 1, l + 1) - l * mw2 * R(k + 1, l - 1) +
             (ck != 0 ? hx * ck * lower.S(k - 2, l) : 0.0) -
             (cl != 0 ? hp * cl * lower.S(k, l - 2) : 0.0);
    d.s[k] = k * inv_mu * S(k - 1, l + 1) - l * mw2 * S(k + 1, l - 1) -
             (ck != 0 ? hx * ck * lower.R(k - 2, l) : 0.0) +
             (cl != 0 ? hp * cl * lower.R(k, l - 2) : 0.0);
  }
  return d;
}

/// Orders 0 and 1: R00 = 1, everything else zero.
inline MomentChain base_chain() {
  MomentChain chain{MomentVector::zero(0), MomentVector::zero(1)};
  chain[0].r[0] = 1.0;
  return chain;
}

/// Chain of orders 0..max_order with t = 0 values taken from the evaluator.
inline MomentChain initial_chain(const MomentEvaluator& eval, int max_order) {
  if (max_order < 2 || max_order > kMaxMomentOrder)
    throw OrderTooHigh(max_order, kMaxMomentOrder);
  MomentChain chain = base_chain();
  for (int K = 2; K <= max_order; ++K) {
    auto mv = MomentVector::zero(K);
    for (int k = 0; k <= K; ++k) {
      const Complex w = eval.W(k, K - k, 0.0);
      mv.r[k] = w.real();
      mv.s[k] = w.imag();
    }
    chain.push_back(std::move(mv));
  }
  return chain;
}

struct HierarchyTrajectory {
  std::vector<double> times;
  std::vector<MomentChain> states;

  int max_order() const {
    return states.empty() ? 0 : static_cast<int>(states.front().size()) - 1;
  }

  MomentSeries series(MomentKind kind) const {
    if (kind.order() > max_order())
      throw OrderTooHigh(kind.order(), max_order());
    MomentSeries out{kind, times, {}, {kind.k, kind.l}};
    out.values.reserve(states.size());
    for (const auto& chain : states) {
      const auto& mv = chain[static_cast<std::size_t>(kind.order())];
      out.values.push_back(kind.family == MomentFamily::S ? mv.S(kind.k, kind.l)
                                                          : mv.R(kind.k, kind.l));
    }
    return out;
  }
};

namespace detail {

inline void validate_chain(const MomentChain& chain) {
  if (chain.size() < 3) throw RequestError("chain must reach order 2");
  for (std::size_t K = 0; K < chain.size(); ++K)
    if (chain[K].order != static_cast<int>(K) || !chain[K].well_formed())
      throw MissingLowerOrder(static_cast<int>(K), chain[K].order);
  if (chain[0].r[0] != 1.0 || chain[0].s[0] != 0.0 || chain[1].r[0] != 0.0 ||
      chain[1].r[1] != 0.0 || chain[1].s[0] != 0.0 || chain[1].s[1] != 0.0)
    throw RequestError("orders 0 and 1 must be R00 = 1 and zero otherwise");
}

inline MomentChain chain_derivative(const MomentChain& chain, const Units& u) {
  MomentChain d;
  d.reserve(chain.size());
  d.push_back(MomentVector::zero(0));
  d.push_back(MomentVector::zero(1));
  for (std::size_t K = 2; K < chain.size(); ++K)
    d.push_back(rhs(chain[K], chain[K - 2], u));
  return d;
}

/// y + h * dy
inline MomentChain chain_step(const MomentChain& y, const MomentChain& dy, double h) {
  MomentChain out = y;
  for (std::size_t K = 2; K < y.size(); ++K)
    for (std::size_t i = 0; i < y[K].r.size(); ++i) {
      out[K].r[i] += h * dy[K].r[i];
      out[K].s[i] += h * dy[K].s[i];
    }
  return out;
}

}  // namespace detail

/// Fixed-step classical RK4 from t0 to t1; states are recorded every
/// `record_every` steps (the initial and final states are always recorded
/// when n_steps is a multiple of record_every).
inline HierarchyTrajectory integrate(const MomentChain& init, const Units& u,
                                     double t0, double t1, int n_steps,
                                     int record_every = 1) {
  u.validate();
  detail::validate_chain(init);
  if (n_steps < 1 || record_every < 1) throw RequestError("need at least one step");
  if (!(t1 > t0)) throw RequestError("t_span must be increasing");
  const double h = (t1 - t0) / n_steps;
  if (h * u.omega > 0.2) throw StepTooLarge(h * u.omega);

  HierarchyTrajectory traj;
  traj.times.push_back(t0);
  traj.states.push_back(init);
  MomentChain y = init;
  for (int step = 1; step <= n_steps; ++step) {
    const auto k1 = detail::chain_derivative(y, u);
    const auto k2 = detail::chain_derivative(detail::chain_step(y, k1, h / 2), u);
    const auto k3 = detail::chain_derivative(detail::chain_step(y, k2, h / 2), u);
    const auto k4 = detail::chain_derivative(detail::chain_step(y, k3, h), u);
    for (std::size_t K = 2; K < y.size(); ++K)
      for (std::size_t i = 0; i < y[K].r.size(); ++i) {
        y[K].r[i] += h / 6 * (k1[K].r[i] + 2 * k2[K].r[i] + 2 * k3[K].r[i] + k4[K].r[i]);
        y[K].s[i] += h / 6 * (k1[K].s[i] + 2 * k2[K].s[i] + 2 * k3[K].s[i] + k4[K].s[i]);
      }
    if (step % record_every == 0) {
      traj.times.push_back(t0 + step * h);
      traj.states.push_back(y);
    }
  }
  return traj;
}

}  // namespace rigidpack
