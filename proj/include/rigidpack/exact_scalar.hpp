#pragma once

// Exact scalars for the ladder-operator algebra.
//
// Every coefficient produced by normal ordering products of
// (a + a^dag)/sqrt2 and i(a^dag - a)/sqrt2 is a gaussian rational times an
// integer power of sqrt2. Even powers fold into the rational, so a scalar is
// stored as q or q*sqrt2 with q in Q(i).

#include <complex>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace rigidpack {

class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1) { assign(num, den); }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }
  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    const __int128 n = static_cast<__int128>(a.num_) * b.den_ +
                       static_cast<__int128>(b.num_) * a.den_;
    const __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return from_wide(n, d);
  }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    const __int128 n = static_cast<__int128>(a.num_) * b.num_;
    const __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return from_wide(n, d);
  }
  friend bool operator==(const Rational& a, const Rational& b) = default;

  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  static __int128 gcd_wide(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_wide(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const __int128 g = gcd_wide(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 lim = INT64_MAX;
    if (n > lim || n < -lim || d > lim)
      throw std::overflow_error("exact coefficient exceeds 64-bit range");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(n == 0 ? 1 : d);
    return r;
  }

  void assign(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("zero denominator");
    *this = from_wide(num, den);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

struct GaussianRational {
  Rational re;
  Rational im;

  bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }

  friend GaussianRational operator+(const GaussianRational& a,
                                    const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) {
    return {-a.re, -a.im};
  }
  friend GaussianRational operator*(const GaussianRational& a,
                                    const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational&,
                         const GaussianRational&) = default;
};

/// q or q*sqrt2 with q a gaussian rational.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(std::int64_t n) : q_{Rational(n), Rational(0)} {}
  ExactScalar(GaussianRational q, bool times_sqrt2)
      : q_(q), sqrt2_(times_sqrt2 && !q.is_zero()) {}

  static ExactScalar imaginary_unit() {
    return ExactScalar({Rational(0), Rational(1)}, false);
  }
  /// 1/sqrt2 == (1/2) sqrt2
  static ExactScalar inv_sqrt2() {
    return ExactScalar({Rational(1, 2), Rational(0)}, true);
  }

  const GaussianRational& rational_part() const noexcept { return q_; }
  bool has_sqrt2() const noexcept { return sqrt2_; }
  bool is_zero() const noexcept { return q_.is_zero(); }

  std::complex<double> to_complex() const noexcept {
    const double f = sqrt2_ ? std::sqrt(2.0) : 1.0;
    return {q_.re.to_double() * f, q_.im.to_double() * f};
  }

  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.sqrt2_ != b.sqrt2_)
      throw std::domain_error("sum leaves the q*sqrt2^e representation");
    return ExactScalar(a.q_ + b.q_, a.sqrt2_);
  }
  friend ExactScalar operator-(const ExactScalar& a) {
    return ExactScalar(-a.q_, a.sqrt2_);
  }
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
    return a + (-b);
  }
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    GaussianRational q = a.q_ * b.q_;
    if (a.sqrt2_ && b.sqrt2_) q = q * GaussianRational{Rational(2), Rational(0)};
    return ExactScalar(q, a.sqrt2_ != b.sqrt2_);
  }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.q_ == b.q_ && a.sqrt2_ == b.sqrt2_;
  }

  std::string to_string() const {
    std::string s = "(" + q_.re.to_string() + ")+i(" + q_.im.to_string() + ")";
    return sqrt2_ ? s + "*sqrt2" : s;
  }

 private:
  GaussianRational q_{};
  bool sqrt2_ = false;
};

/// Polynomial in cos(theta), sin(theta) with exact coefficients:
/// sum over (a, b) of coeff * cos^a * sin^b.
class TrigPolynomial {
 public:
  using Exponents = std::pair<int, int>;

  TrigPolynomial() = default;
  TrigPolynomial(std::int64_t n) {
    if (n != 0) terms_.emplace(Exponents{0, 0}, ExactScalar(n));
  }
  TrigPolynomial(const ExactScalar& c, int cos_power, int sin_power) {
    if (!c.is_zero()) terms_.emplace(Exponents{cos_power, sin_power}, c);
  }

  const std::map<Exponents, ExactScalar>& terms() const noexcept {
    return terms_;
  }
  bool is_zero() const noexcept { return terms_.empty(); }

  std::complex<double> evaluate(double theta) const {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    std::complex<double> sum = 0.0;
    for (const auto& [e, coeff] : terms_)
      sum += coeff.to_complex() * std::pow(c, e.first) * std::pow(s, e.second);
    return sum;
  }

  TrigPolynomial& operator+=(const TrigPolynomial& other) {
    for (const auto& [e, coeff] : other.terms_) accumulate(e, coeff);
    return *this;
  }
  friend TrigPolynomial operator+(TrigPolynomial a, const TrigPolynomial& b) {
    return a += b;
  }
  friend TrigPolynomial operator*(const TrigPolynomial& a,
                                  const TrigPolynomial& b) {
    TrigPolynomial out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        out.accumulate({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return out;
  }
  friend bool operator==(const TrigPolynomial&, const TrigPolynomial&) = default;

 private:
  void accumulate(const Exponents& e, const ExactScalar& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(e, c);
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  std::map<Exponents, ExactScalar> terms_;
};

inline bool is_zero(const ExactScalar& c) { return c.is_zero(); }
inline bool is_zero(const TrigPolynomial& c) { return c.is_zero(); }
inline bool is_zero(const std::complex<double>& c) { return c == 0.0; }

inline std::complex<double> to_complex(const ExactScalar& c) {
  return c.to_complex();
}
inline std::complex<double> to_complex(const std::complex<double>& c) {
  return c;
}

}  // namespace rigidpack
