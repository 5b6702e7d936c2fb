#pragma once

// Closed-form second- and fourth-order moment dynamics and the identities
// that hold for every packet.

#include <algorithm>
#include <cmath>

#include "rigidpack/errors.hpp"
#include "rigidpack/packet.hpp"
#include "rigidpack/units.hpp"

namespace rigidpack {

struct SecondMomentInit {
  double q2_0 = 0.0;
  double p2_0 = 0.0;
  double r11_0 = 0.0;

  /// Positivity and the Robertson-Schroedinger bound q2 p2 >= (hbar/2)^2 + r11^2.
  bool satisfies_uncertainty(const Units& u, double rel_tol = 1e-12) const {
    const double bound = 0.25 * u.hbar * u.hbar + r11_0 * r11_0;
    return q2_0 > 0.0 && p2_0 > 0.0 && q2_0 * p2_0 >= bound * (1.0 - rel_tol);
  }
};

struct FourthMomentInit {
  double q4_0 = 0.0;
  double p4_0 = 0.0;
  double r22_0 = 0.0;
  double r13_0 = 0.0;
  double r31_0 = 0.0;
};

struct SecondMoments {
  double q2 = 0.0;
  double p2 = 0.0;
  double r11 = 0.0;
};

inline SecondMoments predict_q2p2r11(const SecondMomentInit& init, const Units& u,
                                     double t) {
  const double mw = u.mu * u.omega;
  const double mw2 = mw * mw;
  const double c2 = std::cos(2.0 * u.omega * t);
  const double s2 = std::sin(2.0 * u.omega * t);
  const double sum = mw2 * init.q2_0 + init.p2_0;
  const double diff = mw2 * init.q2_0 - init.p2_0;
  return {
      sum / (2.0 * mw2) + diff / (2.0 * mw2) * c2 + init.r11_0 / mw * s2,
      sum / 2.0 - diff / 2.0 * c2 - mw * init.r11_0 * s2,
      init.r11_0 * c2 - diff / (2.0 * mw) * s2,
  };
}

/// mu^2 omega^2 q2_t + p2_t - (mu^2 omega^2 q2_0 + p2_0).
inline double conservation_residual(double q2_t, double p2_t,
                                    const SecondMomentInit& init, const Units& u) {
  const double mw2 = std::pow(u.mu * u.omega, 2);
  return mw2 * q2_t + p2_t - mw2 * init.q2_0 - init.p2_0;
}

inline double predict_q4(const FourthMomentInit& init, const Units& u, double t) {
  const double mw = u.mu * u.omega;
  const double mw2 = mw * mw;
  const double mw3 = mw2 * mw;
  const double mw4 = mw2 * mw2;
  const double h2 = u.hbar * u.hbar;
  const double wt = u.omega * t;
  const double constant =
      (3.0 * mw4 * init.q4_0 + 3.0 * init.p4_0 + 6.0 * mw2 * init.r22_0 +
       3.0 * h2 * mw2) /
      (8.0 * mw4);
  const double cos2 = (mw4 * init.q4_0 - init.p4_0) / (2.0 * mw4);
  const double sin2 = (init.r13_0 + mw2 * init.r31_0) / mw3;
  const double cos4 = (mw4 * init.q4_0 + init.p4_0 - 6.0 * mw2 * init.r22_0 -
                       3.0 * h2 * mw2) /
                      (8.0 * mw4);
  const double sin4 = -(init.r13_0 - mw2 * init.r31_0) / (2.0 * mw3);
  return constant + cos2 * std::cos(2.0 * wt) + sin2 * std::sin(2.0 * wt) +
         cos4 * std::cos(4.0 * wt) + sin4 * std::sin(4.0 * wt);
}

inline SecondMomentInit second_moment_init(const MomentEvaluator& eval) {
  return {eval.W(2, 0, 0.0).real(), eval.W(0, 2, 0.0).real(),
          eval.W(1, 1, 0.0).real()};
}

inline FourthMomentInit fourth_moment_init(const MomentEvaluator& eval) {
  return {eval.W(4, 0, 0.0).real(), eval.W(0, 4, 0.0).real(),
          eval.W(2, 2, 0.0).real(), eval.W(1, 3, 0.0).real(),
          eval.W(3, 1, 0.0).real()};
}

/// Absolute residuals of the S-sector identities at one instant.
struct SIdentityResiduals {
  double s11 = 0.0;       ///< S11 - hbar/2
  double s20 = 0.0;
  double s02 = 0.0;
  double s40 = 0.0;
  double s04 = 0.0;
  double s31 = 0.0;       ///< S31 - 3 hbar Q2 / 2
  double s13 = 0.0;       ///< S13 - 3 hbar P2 / 2
  double s22 = 0.0;       ///< S22 - 2 hbar R11
  double s_order3 = 0.0;  ///< max |S_kl|, k + l = 3

  double max() const {
    return std::max({s11, s20, s02, s40, s04, s31, s13, s22, s_order3});
  }
};

inline SIdentityResiduals special_s_identities(const MomentEvaluator& eval,
                                               double t) {
  const double hbar = eval.units().hbar;
  auto S = [&](int k, int l) { return eval.W(k, l, t).imag(); };
  auto R = [&](int k, int l) { return eval.W(k, l, t).real(); };
  SIdentityResiduals r;
  r.s11 = std::abs(S(1, 1) - 0.5 * hbar);
  r.s20 = std::abs(S(2, 0));
  r.s02 = std::abs(S(0, 2));
  r.s40 = std::abs(S(4, 0));
  r.s04 = std::abs(S(0, 4));
  r.s31 = std::abs(S(3, 1) - 1.5 * hbar * R(2, 0));
  r.s13 = std::abs(S(1, 3) - 1.5 * hbar * R(0, 2));
  r.s22 = std::abs(S(2, 2) - 2.0 * hbar * R(1, 1));
  for (int k = 0; k <= 3; ++k) r.s_order3 = std::max(r.s_order3, std::abs(S(k, 3 - k)));
  return r;
}

inline SIdentityResiduals special_s_identities(const PacketSpec& spec,
                                               const Units& u, double t) {
  return special_s_identities(MomentEvaluator(spec, u), t);
}

namespace detail {
// Largest second-order term, in momentum^2 units.
inline double q2_scale(const SecondMomentInit& s, const Units& u) {
  const double mw2 = std::pow(u.mu * u.omega, 2);
  return std::max({u.hbar * u.mu * u.omega, mw2 * s.q2_0, s.p2_0, u.mu * u.omega * std::abs(s.r11_0)});
}
}  // namespace detail

/// Zero anticommutator mean and equal kinetic and potential energy in phi,
/// with moments taken about phi's own center (identical to the raw moments
/// for definite-parity phi). Tolerance 1e-10 relative to hbar * mu * omega.
inline bool constant_width_conditions(const FockState& phi, const Units& u) {
  const MomentEvaluator eval(PacketSpec(0.0, 0.0, phi), u);
  const auto s = second_moment_init(eval);
  const double mw = u.mu * u.omega;
  const double scale = detail::q2_scale(s, u);
  const double tol = 1e-10 * scale;
  return std::abs(2.0 * mw * s.r11_0) <= tol &&
         std::abs(mw * mw * s.q2_0 - s.p2_0) <= tol;
}

/// R13 = R31 = 0, mu^4 omega^4 Q4 = P4, 2 mu^2 omega^2 Q4 - 6 R22 = 3 hbar^2
/// at t = 0, each within 1e-9 of the largest fourth-order term.
inline bool constant_q4_conditions(const FockState& phi, const Units& u) {
  const MomentEvaluator eval(PacketSpec(0.0, 0.0, phi), u);
  const auto f = fourth_moment_init(eval);
  const double mw = u.mu * u.omega;
  const double mw2 = mw * mw;
  const double h2 = u.hbar * u.hbar;
  // Bring every condition to momentum^4 units before comparing.
  const double scale = std::max({h2 * mw2, mw2 * mw2 * f.q4_0, f.p4_0,
                                 6.0 * mw2 * std::abs(f.r22_0),
                                 mw * std::abs(f.r13_0), mw2 * mw * std::abs(f.r31_0)});
  const double tol = 1e-9 * scale;
  return mw * std::abs(f.r13_0) <= tol && mw2 * mw * std::abs(f.r31_0) <= tol &&
         std::abs(mw2 * mw2 * f.q4_0 - f.p4_0) <= tol &&
         std::abs(mw2 * (2.0 * mw2 * f.q4_0 - 6.0 * f.r22_0 - 3.0 * h2)) <= tol;
}

}  // namespace rigidpack
