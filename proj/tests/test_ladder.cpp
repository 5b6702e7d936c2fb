#include "catch2/catch_amalgamated.hpp"

#include <numbers>
#include <random>

#include "rigidpack/ladder.hpp"
#include "support/oracles.hpp"

using namespace rigidpack;
using Catch::Approx;
using Complex = std::complex<double>;

namespace {

Word random_word(std::mt19937& rng, int length)
{
	std::bernoulli_distribution coin(0.5);
	Word w;
	for (int i = 0; i < length; ++i) w.push_back(coin(rng) ? Quadrature::X : Quadrature::P);
	return w;
}

} // namespace

TEST_CASE("expand_word basics")
{
	const auto x = expand_word(parse_word("X"));
	CHECK(x.size() == 2);
	CHECK(x.coefficient(1, 0) == ExactScalar::inv_sqrt2());
	CHECK(x.coefficient(0, 1) == ExactScalar::inv_sqrt2());

	const auto comm = expand_word(parse_word("XP")) - expand_word(parse_word("PX"));
	REQUIRE(comm.size() == 1);
	CHECK(comm.coefficient(0, 0) == ExactScalar::imaginary_unit());

	// (a + a^dag)^2 / 2 = (a^dag^2 + 2 a^dag a + a^2 + 1) / 2
	const auto xx = expand_word(parse_word("XX"));
	const ExactScalar half({Rational(1, 2), Rational(0)}, false);
	CHECK(xx.size() == 4);
	CHECK(xx.coefficient(2, 0) == half);
	CHECK(xx.coefficient(0, 2) == half);
	CHECK(xx.coefficient(1, 1) == ExactScalar(1));
	CHECK(xx.coefficient(0, 0) == half);
	CHECK(xx.degree() == 2);
}

TEST_CASE("word length guard")
{
	CHECK_NOTHROW(expand_word(Word(16, Quadrature::X)));
	CHECK_THROWS_AS(expand_word(Word(17, Quadrature::P)), WordTooLong);
	CHECK_THROWS_AS(heisenberg_word(Word(17, Quadrature::X), 0.1), WordTooLong);
	CHECK_THROWS_AS(parse_word("XQ"), std::invalid_argument);
}

TEST_CASE("matrix elements")
{
	const auto xx = expand_word(parse_word("XX"));
	CHECK(matrix_element(xx, 0, 2).real() == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
	for (int n = 0; n < 40; ++n)
		CHECK(matrix_element(xx, n, n).real() == Approx(n + 0.5).epsilon(1e-15));
	CHECK(matrix_element(expand_word(parse_word("X")), 0, 0) == Complex(0.0));
	// no overflow far beyond 170!
	CHECK(std::isfinite(ladder_matrix_element(3, 3, 400, 400)));
}

TEST_CASE("expansion agrees with dense truncated matrices")
{
	std::mt19937 rng(7);
	constexpr int dim = 40;
	for (int trial = 0; trial < 40; ++trial) {
		const auto w = random_word(rng, 1 + trial % 8);
		const auto poly = expand_word(w);
		const auto dense = oracle::word_matrix(w, dim);
		for (int m = 0; m <= 12; ++m)
			for (int n = 0; n <= 12; ++n) {
				const auto got = matrix_element(poly, m, n);
				CHECK(std::abs(got - dense[m][n]) <= 1e-11 * (1.0 + std::abs(dense[m][n])));
			}
	}
}

TEST_CASE("adjoint symmetry")
{
	std::mt19937 rng(11);
	for (int trial = 0; trial < 60; ++trial) {
		const auto w = random_word(rng, 1 + trial % 6);
		Word rev(w.rbegin(), w.rend());
		const auto a = expand_word(w);
		const auto b = expand_word(rev);
		for (int m = 0; m <= 12; ++m)
			for (int n = 0; n <= 12; ++n) {
				const auto lhs = matrix_element(a, m, n);
				const auto rhs = std::conj(matrix_element(b, n, m));
				CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs)));
			}
	}
}

TEST_CASE("selection rule")
{
	for (int k = 0; k <= 4; ++k)
		for (int l = 0; l <= 4; ++l) {
			const auto poly = expand_word(monomial_word(k, l));
			for (int m = 0; m <= 14; ++m)
				for (int n = 0; n <= 14; ++n) {
					const int d = std::abs(m - n);
					if (d > k + l || d % 2 != (k + l) % 2)
						CHECK(matrix_element(poly, m, n) == Complex(0.0));
				}
		}
}

TEST_CASE("heisenberg rotation")
{
	const auto x = parse_word("X");
	const auto p = parse_word("P");
	CHECK(heisenberg_word(x, 0.0) == to_numeric(expand_word(x)));

	const auto quarter = heisenberg_word(x, std::numbers::pi / 2);
	const auto px = to_numeric(expand_word(p));
	for (const auto& [key, c] : px.terms())
		CHECK(std::abs(quarter.coefficient(key.first, key.second) - c) < 1e-15);
	CHECK(std::abs(quarter.coefficient(1, 0) + quarter.coefficient(0, 1)) < 1e-15);

	// constant term of X_t P_t is i/2 for every angle
	const auto xp = heisenberg_expansion(parse_word("XP"));
	for (double th : {0.0, 0.4, 1.3, 2.9, -5.0}) {
		const auto c = evaluate_at(xp, th).coefficient(0, 0);
		CHECK(c.real() == Approx(0.0).margin(1e-15));
		CHECK(c.imag() == Approx(0.5).epsilon(1e-14));
	}
}

TEST_CASE("heisenberg expansion at theta = 0 is the plain expansion")
{
	std::mt19937 rng(3);
	for (int trial = 0; trial < 20; ++trial) {
		const auto w = random_word(rng, 1 + trial % 7);
		const auto rotated = heisenberg_word(w, 0.0);
		const auto plain = to_numeric(expand_word(w));
		REQUIRE(rotated.size() == plain.size());
		for (const auto& [key, c] : plain.terms())
			CHECK(std::abs(rotated.coefficient(key.first, key.second) - c) <= 1e-12 * std::abs(c));
	}
}

TEST_CASE("heisenberg rotation is 2 pi periodic")
{
	std::mt19937 rng(5);
	std::uniform_real_distribution<double> angle(-4.0, 4.0);
	for (int trial = 0; trial < 20; ++trial) {
		const auto w = random_word(rng, 1 + trial % 8);
		const auto sym = heisenberg_expansion(w);
		const double th = angle(rng);
		const auto a = evaluate_at(sym, th);
		const auto b = evaluate_at(sym, th + 2 * std::numbers::pi);
		for (const auto& [key, c] : a.terms())
			CHECK(std::abs(b.coefficient(key.first, key.second) - c) <= 1e-12 * (1.0 + std::abs(c)));
	}
}

TEST_CASE("rotated word matches dense conjugation")
{
	// X_t = cos X + sin P, P_t = cos P - sin X built from dense matrices
	constexpr int dim = 40;
	const double th = 0.83;
	const auto X = oracle::quadrature_matrix(Quadrature::X, dim);
	const auto P = oracle::quadrature_matrix(Quadrature::P, dim);
	oracle::Matrix Xt(dim, std::vector<Complex>(dim)), Pt = Xt;
	for (int i = 0; i < dim; ++i)
		for (int j = 0; j < dim; ++j) {
			Xt[i][j] = std::cos(th) * X[i][j] + std::sin(th) * P[i][j];
			Pt[i][j] = std::cos(th) * P[i][j] - std::sin(th) * X[i][j];
		}
	const Word w = parse_word("XXPXP");
	oracle::Matrix m = oracle::word_matrix({}, dim);
	for (auto q : w) m = oracle::multiply(m, q == Quadrature::X ? Xt : Pt);
	const auto poly = heisenberg_word(w, th);
	for (int a = 0; a <= 10; ++a)
		for (int b = 0; b <= 10; ++b)
			CHECK(std::abs(matrix_element(poly, a, b) - m[a][b]) <= 1e-11 * (1.0 + std::abs(m[a][b])));
}
