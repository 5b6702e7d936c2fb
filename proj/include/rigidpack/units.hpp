#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rigidpack {

/// Oscillator parameters of H = p^2/(2 mu) + mu omega^2 x^2 / 2.
struct Units {
  double mu = 1.0;
  double omega = 1.0;
  double hbar = 1.0;

  void validate() const {
    if (!(mu > 0.0) || !(omega > 0.0) || !(hbar > 0.0) || !std::isfinite(mu) ||
        !std::isfinite(omega) || !std::isfinite(hbar))
      throw std::invalid_argument("mu, omega and hbar must be positive");
  }

  /// sqrt(hbar / (mu omega)), the oscillator length.
  double length_scale() const { return std::sqrt(hbar / (mu * omega)); }
  /// sqrt(mu omega hbar).
  double momentum_scale() const { return std::sqrt(mu * omega * hbar); }
  double period() const { return 2.0 * std::numbers::pi / omega; }

  /// Dimension of <x^k p^l>: length^k momentum^l.
  double moment_scale(int k, int l) const {
    return std::pow(length_scale(), k) * std::pow(momentum_scale(), l);
  }
};

}  // namespace rigidpack
