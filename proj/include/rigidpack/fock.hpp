#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rigidpack/errors.hpp"

namespace rigidpack {

using Complex = std::complex<double>;

inline constexpr int kDefaultBasisCap = 256;
inline constexpr double kParityTolerance = 1e-12;

/// Largest number-state index a FockState may hold.
/// RIGIDPACK_BASIS_CAP overrides the default of 256.
inline int basis_cap() {
  if (const char* env = std::getenv("RIGIDPACK_BASIS_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 1'000'000)
      return static_cast<int>(v);
  }
  return kDefaultBasisCap;
}

enum class Parity { even, odd, none };

inline const char* to_string(Parity p) {
  switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    case Parity::none: return "none";
  }
  return "none";
}

/// Normalized state sum_n c_n |n>, n = 0..nmax.
class FockState {
 public:
  FockState() : coeffs_{Complex(1.0)} {}

  /// Normalizes the given amplitudes; trailing zeros are dropped.
  explicit FockState(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
    if (coeffs_.empty()) throw SpecError("empty coefficient list");
    const int nmax = static_cast<int>(coeffs_.size()) - 1;
    if (nmax > basis_cap()) throw BasisOverflow(nmax, basis_cap());
    double norm2 = 0.0;
    for (const auto& c : coeffs_) {
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw SpecError("non-finite coefficient");
      norm2 += std::norm(c);
    }
    if (!(norm2 > 0.0)) throw SpecError("state has zero norm");
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& c : coeffs_) c *= inv;
  }

  static FockState number(int n) {
    if (n < 0) throw SpecError("negative number-state index");
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1, 0.0);
    c.back() = 1.0;
    return FockState(std::move(c));
  }

  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  int nmax() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Complex operator[](int n) const {
    return n >= 0 && n <= nmax() ? coeffs_[static_cast<std::size_t>(n)]
                                 : Complex(0.0);
  }

  double norm() const {
    double s = 0.0;
    for (const auto& c : coeffs_) s += std::norm(c);
    return std::sqrt(s);
  }

  /// Parity of the number-space support (|c_n| <= 1e-12 counts as zero).
  Parity parity() const {
    bool has_even = false;
    bool has_odd = false;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
      if (std::abs(coeffs_[n]) <= kParityTolerance) continue;
      (n % 2 == 0 ? has_even : has_odd) = true;
    }
    if (has_even && has_odd) return Parity::none;
    return has_odd ? Parity::odd : Parity::even;
  }

  /// Number of coefficients above the parity tolerance.
  int support_size() const {
    int count = 0;
    for (const auto& c : coeffs_)
      if (std::abs(c) > kParityTolerance) ++count;
    return count;
  }

  /// c_n -> c_n exp(-i (n + 1/2) phase), phase = omega t.
  std::vector<Complex> evolved(double phase) const {
    std::vector<Complex> out(coeffs_.size());
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
      out[n] = coeffs_[n] *
               std::polar(1.0, -(static_cast<double>(n) + 0.5) * phase);
    return out;
  }

 private:
  std::vector<Complex> coeffs_;
};

}  // namespace rigidpack
