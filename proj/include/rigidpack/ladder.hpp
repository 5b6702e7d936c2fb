#pragma once

// Normal-ordered ladder-operator polynomials.
//
// Works in dimensionless units (hbar = mu = omega = 1) with
//   x = (a + a^dag)/sqrt2,   p = i(a^dag - a)/sqrt2,
// so [x, p] = i. Physical units are restored by the caller.

#include <cmath>
#include <complex>
#include <map>
#include <span>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "rigidpack/errors.hpp"
#include "rigidpack/exact_scalar.hpp"

namespace rigidpack {

enum class Quadrature { X, P };

using Word = std::vector<Quadrature>;

inline constexpr std::size_t kMaxWordLength = 16;

/// Parses a word such as "XXP".
inline Word parse_word(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (char ch : text) {
    if (ch == 'X' || ch == 'x')
      w.push_back(Quadrature::X);
    else if (ch == 'P' || ch == 'p')
      w.push_back(Quadrature::P);
    else
      throw std::invalid_argument(std::string("bad quadrature symbol '") + ch +
                                  "'");
  }
  return w;
}

/// x^k p^l as a word.
inline Word monomial_word(int k, int l) {
  Word w(static_cast<std::size_t>(k), Quadrature::X);
  w.insert(w.end(), static_cast<std::size_t>(l), Quadrature::P);
  return w;
}

/// Linear combination raising * a^dag + lowering * a.
template <class Coeff>
struct LadderLinearForm {
  Coeff raising;
  Coeff lowering;
};

/// Sum of coeff * (a^dag)^r a^s, keyed by (r, s). Zero terms are never stored.
template <class Coeff>
class LadderPolynomial {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, Coeff>;

  LadderPolynomial() = default;

  static LadderPolynomial identity() {
    LadderPolynomial p;
    p.add_term(0, 0, Coeff(1));
    return p;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  int degree() const noexcept {
    int d = 0;
    for (const auto& [key, c] : terms_) d = std::max(d, key.first + key.second);
    return d;
  }

  /// Coefficient of (a^dag)^r a^s, zero if absent.
  Coeff coefficient(int r, int s) const {
    auto it = terms_.find({r, s});
    return it == terms_.end() ? Coeff{} : it->second;
  }

  void add_term(int r, int s, const Coeff& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace({r, s}, c);
    if (inserted) return;
    it->second = it->second + c;
    if (is_zero(it->second)) terms_.erase(it);
  }

  LadderPolynomial& operator+=(const LadderPolynomial& other) {
    for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
    return *this;
  }
  LadderPolynomial& operator-=(const LadderPolynomial& other) {
    for (const auto& [key, c] : other.terms_)
      add_term(key.first, key.second, Coeff(-1) * c);
    return *this;
  }
  friend LadderPolynomial operator+(LadderPolynomial a,
                                    const LadderPolynomial& b) {
    return a += b;
  }
  friend LadderPolynomial operator-(LadderPolynomial a,
                                    const LadderPolynomial& b) {
    return a -= b;
  }
  friend bool operator==(const LadderPolynomial&,
                         const LadderPolynomial&) = default;

  /// Right-multiplies by (raising a^dag + lowering a) and restores normal order.
  ///
  /// (a^dag)^r a^s a          = (a^dag)^r a^(s+1)
  /// (a^dag)^r a^s a^dag      = (a^dag)^(r+1) a^s + s (a^dag)^r a^(s-1)
  /// The second line is the rewrite a a^dag -> a^dag a + 1 pushed through a^s.
  LadderPolynomial times(const LadderLinearForm<Coeff>& f) const {
    LadderPolynomial out;
    for (const auto& [key, c] : terms_) {
      const auto [r, s] = key;
      if (!is_zero(f.lowering)) out.add_term(r, s + 1, c * f.lowering);
      if (!is_zero(f.raising)) {
        out.add_term(r + 1, s, c * f.raising);
        if (s > 0) out.add_term(r, s - 1, c * f.raising * Coeff(s));
      }
    }
    return out;
  }

  /// Applies fn to every coefficient.
  template <class Fn>
  auto transform(Fn&& fn) const {
    using Out = std::decay_t<decltype(fn(std::declval<const Coeff&>()))>;
    LadderPolynomial<Out> out;
    for (const auto& [key, c] : terms_) out.add_term(key.first, key.second, fn(c));
    return out;
  }

 private:
  Terms terms_;
};

using ExactLadderPolynomial = LadderPolynomial<ExactScalar>;
using NumericLadderPolynomial = LadderPolynomial<std::complex<double>>;
/// Coefficients are polynomials in cos(theta), sin(theta).
using TrigLadderPolynomial = LadderPolynomial<TrigPolynomial>;

namespace detail {

template <class Coeff>
LadderPolynomial<Coeff> expand_forms(
    std::span<const LadderLinearForm<Coeff>> forms) {
  auto poly = LadderPolynomial<Coeff>::identity();
  for (const auto& f : forms) poly = poly.times(f);
  return poly;
}

inline LadderLinearForm<ExactScalar> exact_form(Quadrature q) {
  const ExactScalar h = ExactScalar::inv_sqrt2();
  const ExactScalar ih = ExactScalar::imaginary_unit() * h;
  if (q == Quadrature::X) return {h, h};
  return {ih, -ih};
}

inline void check_length(std::size_t n) {
  if (n > kMaxWordLength) throw WordTooLong(n);
}

}  // namespace detail

/// Exact normal-ordered expansion of the product of the word's quadratures.
inline ExactLadderPolynomial expand_word(std::span<const Quadrature> word) {
  detail::check_length(word.size());
  std::vector<LadderLinearForm<ExactScalar>> forms;
  forms.reserve(word.size());
  for (Quadrature q : word) forms.push_back(detail::exact_form(q));
  return detail::expand_forms<ExactScalar>(forms);
}

/// Heisenberg-rotated word with the rotation angle kept symbolic:
///   X -> x cos(theta) + p sin(theta),   P -> p cos(theta) - x sin(theta).
inline TrigLadderPolynomial heisenberg_expansion(
    std::span<const Quadrature> word) {
  detail::check_length(word.size());
  const auto xf = detail::exact_form(Quadrature::X);
  const auto pf = detail::exact_form(Quadrature::P);
  auto cos1 = [](const ExactScalar& c) { return TrigPolynomial(c, 1, 0); };
  auto sin1 = [](const ExactScalar& c) { return TrigPolynomial(c, 0, 1); };
  const LadderLinearForm<TrigPolynomial> x_rot{
      cos1(xf.raising) + sin1(pf.raising), cos1(xf.lowering) + sin1(pf.lowering)};
  const LadderLinearForm<TrigPolynomial> p_rot{
      cos1(pf.raising) + sin1(-xf.raising),
      cos1(pf.lowering) + sin1(-xf.lowering)};
  std::vector<LadderLinearForm<TrigPolynomial>> forms;
  forms.reserve(word.size());
  for (Quadrature q : word) forms.push_back(q == Quadrature::X ? x_rot : p_rot);
  return detail::expand_forms<TrigPolynomial>(forms);
}

/// Evaluates the symbolic rotation at a given angle.
inline NumericLadderPolynomial evaluate_at(const TrigLadderPolynomial& poly,
                                           double theta) {
  return poly.transform(
      [theta](const TrigPolynomial& c) { return c.evaluate(theta); });
}

inline NumericLadderPolynomial heisenberg_word(std::span<const Quadrature> word,
                                               double theta) {
  return evaluate_at(heisenberg_expansion(word), theta);
}

inline NumericLadderPolynomial to_numeric(const ExactLadderPolynomial& poly) {
  return poly.transform([](const ExactScalar& c) { return c.to_complex(); });
}

/// sqrt(n (n-1) ... (n-count+1)), accumulated factor by factor.
inline double sqrt_falling_factorial(int n, int count) {
  double v = 1.0;
  for (int j = 0; j < count; ++j) v *= std::sqrt(static_cast<double>(n - j));
  return v;
}

/// <m| (a^dag)^r a^s |n>.
inline double ladder_matrix_element(int r, int s, int m, int n) {
  if (n - s < 0 || n - s != m - r) return 0.0;
  return sqrt_falling_factorial(n, s) * sqrt_falling_factorial(m, r);
}

template <class Coeff>
std::complex<double> matrix_element(const LadderPolynomial<Coeff>& poly, int m,
                                    int n) {
  std::complex<double> sum = 0.0;
  for (const auto& [key, c] : poly.terms()) {
    const double me = ladder_matrix_element(key.first, key.second, m, n);
    if (me != 0.0) sum += to_complex(c) * me;
  }
  return sum;
}

/// <psi| poly |psi> for psi = sum_n c_n |n>.
template <class Coeff>
std::complex<double> expectation(const LadderPolynomial<Coeff>& poly,
                                 std::span<const std::complex<double>> psi) {
  const int nmax = static_cast<int>(psi.size()) - 1;
  std::complex<double> total = 0.0;
  for (const auto& [key, c] : poly.terms()) {
    const auto [r, s] = key;
    std::complex<double> sum = 0.0;
    for (int n = s; n <= nmax; ++n) {
      const int m = n - s + r;
      if (m > nmax) break;
      if (psi[n] == 0.0 || psi[m] == 0.0) continue;
      sum += std::conj(psi[m]) * psi[n] * ladder_matrix_element(r, s, m, n);
    }
    total += to_complex(c) * sum;
  }
  return total;
}

}  // namespace rigidpack
