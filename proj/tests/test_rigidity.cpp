#include "catch2/catch_amalgamated.hpp"

#include <numbers>

#include "rigidpack/closedform.hpp"
#include "rigidpack/ensemble.hpp"
#include "rigidpack/rigidity.hpp"

using namespace rigidpack;
using Catch::Approx;

namespace {

RigiditySpec make(int N, Parity parity, std::vector<int> indices)
{
	RigiditySpec s;
	s.target_N = N;
	s.parity = parity;
	s.indices = std::move(indices);
	return s;
}

double ptp(const PacketSpec& spec, const Units& u, int K)
{
	return moment_series(spec, u, MomentKind::Q(K), uniform_times(u.period(), 128)).peak_to_peak();
}

} // namespace

TEST_CASE("generate maps indices to number states")
{
	const auto even = generate(make(2, Parity::even, {0, 3}));
	CHECK(even.phi().nmax() == 6);
	CHECK(std::abs(even.phi()[0]) == Approx(1 / std::sqrt(2.0)));
	CHECK(std::abs(even.phi()[6]) == Approx(1 / std::sqrt(2.0)));
	CHECK(even.phi().support_size() == 2);
	CHECK(even.parity() == Parity::even);

	const auto odd = generate(make(1, Parity::odd, {0, 2}));
	CHECK(odd.phi().nmax() == 5);
	CHECK(std::abs(odd.phi()[1]) > 0.0);
	CHECK(std::abs(odd.phi()[5]) > 0.0);
	CHECK(odd.parity() == Parity::odd);

	auto seeded = make(1, Parity::even, {1, 3, 5});
	seeded.seed = 42;
	seeded.x0 = 0.3;
	const auto a = generate(seeded);
	const auto b = generate(seeded);
	for (int n = 0; n <= a.phi().nmax(); ++n) CHECK(a.phi()[n] == b.phi()[n]);
	CHECK(a.x0() == 0.3);
	CHECK(std::abs(a.phi()[2] / a.phi()[6]) != Approx(1.0).epsilon(1e-6));
}

TEST_CASE("generic amplitudes")
{
	const auto a = generic_amplitudes(50, 7);
	for (auto c : a) {
		CHECK(std::abs(c) >= 0.3);
		CHECK(std::abs(c) <= 0.7);
	}
	CHECK(generic_amplitudes(3, 7)[0] == a[0]);
	CHECK(generic_amplitudes(3, 8)[0] != a[0]);
}

TEST_CASE("spacing rule is enforced")
{
	CHECK_THROWS_AS(generate(make(3, Parity::even, {0, 2})), SpacingViolation);
	try {
		generate(make(2, Parity::odd, {1, 4, 6}));
		FAIL("expected a spacing violation");
	} catch (const SpacingViolation& e) {
		CHECK(e.first() == 4);
		CHECK(e.second() == 6);
		CHECK(std::string(e.what()).find('4') != std::string::npos);
	}
	CHECK_NOTHROW(generate(make(2, Parity::odd, {1, 4, 7})));
	CHECK_THROWS_AS(generate(make(1, Parity::even, {2, 2})), SpecError);
	CHECK_THROWS_AS(generate(make(1, Parity::none, {0, 2})), SpecError);
	CHECK_THROWS_AS(generate(make(0, Parity::even, {0, 2})), SpecError);
	CHECK_THROWS_AS(generate(make(1, Parity::even, {})), SpecError);
	CHECK_THROWS_AS(generate(make(1, Parity::even, {-1, 2})), SpecError);
	auto amps = make(1, Parity::even, {0, 2});
	amps.amplitudes = {1.0};
	CHECK_THROWS_AS(generate(amps), SpecError);
	amps.amplitudes = {1.0, 0.0};
	CHECK_THROWS_AS(generate(amps), SpecError);
}

TEST_CASE("basis cap is enforced")
{
	CHECK_THROWS_AS(generate(make(1, Parity::odd, {0, 128})), BasisOverflow);
	CHECK_NOTHROW(generate(make(1, Parity::even, {0, 128})));
}

TEST_CASE("classify examples")
{
	const Units u;
	const auto inf = classify(PacketSpec(0.7, -0.2, FockState::number(3)), u, 10);
	CHECK(inf.infinite());
	CHECK(inf.per_K.size() == 9);
	CHECK(inf.tolerance_used == kDefaultRigidityTolerance);

	const auto one = classify(generate(make(1, Parity::even, {0, 2})), u, 6);
	REQUIRE(one.degree);
	CHECK(*one.degree == 1);
	CHECK_FALSE(one.lower_bound);
	CHECK(one.per_K.at(2).flat);
	CHECK_FALSE(one.per_K.at(4).flat);

	const auto zero = classify(PacketSpec(0, 0, FockState({1.0, 0.0, 1.0})), u, 4);
	REQUIRE(zero.degree);
	CHECK(*zero.degree == 0);

	// flat through K_max without a single component: a lower bound only
	const auto bound = classify(generate(make(3, Parity::even, {0, 4})), u, 4);
	REQUIRE(bound.degree);
	CHECK(*bound.degree == 2);
	CHECK(bound.lower_bound);
}

TEST_CASE("classify argument checks")
{
	const Units u;
	const PacketSpec s(0, 0, FockState::number(1));
	CHECK_THROWS_AS(classify(s, u, 14), OrderTooHigh);
	CHECK_THROWS_AS(classify(s, u, 5), RequestError);
	CHECK_THROWS_AS(classify(s, u, 2), RequestError);
	CHECK_THROWS_AS(classify(s, u, 6, 32), RequestError);
	CHECK_THROWS_AS(classify(s, u, 6, 128, 0.0), RequestError);
}

TEST_CASE("degree-two construction")
{
	const Units u{1.4, 0.6, 0.9};
	const auto spec = generate(make(2, Parity::even, {0, 3}));
	for (int K : {2, 3, 4}) CHECK(ptp(spec, u, K) <= 1e-10 * u.moment_scale(K, 0));
	CHECK(ptp(spec, u, 6) > 1e-3 * u.moment_scale(6, 0));

	const auto gap2 = generate(make(1, Parity::even, {0, 2}));
	CHECK(ptp(gap2, Units{}, 4) > 0.1);
}

TEST_CASE("spacing theorem and tightness on random specs")
{
	Rng rng(123);
	const Units u;
	int exact = 0, exact_hits = 0;
	for (int trial = 0; trial < 24; ++trial) {
		const int N = 1 + trial % 3;
		const bool tight = trial % 2 == 0;
		auto rs = random_rigidity_spec(rng, N, tight);
		const auto report = classify(generate(rs), u, 2 * N + 2);
		INFO("N=" << N << " trial=" << trial);
		REQUIRE(report.degree);
		CHECK(*report.degree >= N);
		if (tight) {
			++exact;
			exact_hits += *report.degree == N;
		}
	}
	CHECK(exact_hits == exact);
}

TEST_CASE("W of superposition components never mix below the gap")
{
	// every W_kl with k + l <= 2N is time independent
	const Units u;
	auto rs = make(2, Parity::odd, {0, 3, 6});
	rs.seed = 9;
	rs.x0 = 0.4;
	const MomentEvaluator eval(generate(rs), u);
	const auto times = uniform_times(u.period(), 16);
	for (int k = 0; k <= 4; ++k)
		for (int l = 0; k + l <= 4; ++l) {
			const auto w0 = eval.W(k, l, 0.0);
			for (double t : times) CHECK(std::abs(eval.W(k, l, t) - w0) <= 1e-10 * (1 + std::abs(w0)));
		}
}

TEST_CASE("degree does not depend on the displacement")
{
	const Units u;
	auto rs = make(1, Parity::even, {1, 3});
	rs.seed = 4;
	const auto base = generate(rs);
	const auto a = classify(base, u, 6);
	for (auto [x0, p0] : {std::pair{0.8, 0.0}, {0.0, -1.1}, {0.5, 0.5}}) {
		const auto b = classify(base.displaced_to(x0, p0), u, 6);
		CHECK(b.degree == a.degree);
		for (const auto& [K, f] : a.per_K) CHECK(b.per_K.at(K).flat == f.flat);
	}
}

TEST_CASE("predicates agree with measured flatness")
{
	const Units u;
	for (auto [a, b] : {std::pair{0, 2}, {0, 4}, {0, 6}, {4, 10}, {1, 3}}) {
		std::vector<Complex> c(static_cast<std::size_t>(b) + 1, 0.0);
		c[a] = 0.6;
		c[b] = Complex(0.0, 0.8);
		const PacketSpec spec(0.0, 0.0, FockState(std::move(c)));
		const auto r = classify(spec, u, 4, 256, 1e-9);
		CHECK(constant_width_conditions(spec.phi(), u) == r.per_K.at(2).flat);
		CHECK(constant_q4_conditions(spec.phi(), u) == r.per_K.at(4).flat);
	}
}

TEST_CASE("harmonic content")
{
	Rng rng(2);
	const Units u{1.0, 1.5, 1.0};
	const auto times = uniform_times(u.period(), 256);
	const auto parity = random_parity_packet(rng, u, 10);
	CHECK(harmonic_content(moment_series(parity, u, MomentKind::Q(2), times), {0, 2}) <= 1e-14);
	CHECK(harmonic_content(moment_series(parity, u, MomentKind::Q(4), times), {0, 2, 4}) <= 1e-14);
	const auto mixed = random_mixed_packet(rng, u, 6);
	const auto q3 = moment_series(mixed, u, MomentKind::Q(3), times);
	REQUIRE(q3.peak_to_peak() > 1e-3);
	CHECK(harmonic_content(q3, {1, 3}) <= 1e-14);
	CHECK(harmonic_content(q3, {1}) > 1e-6);

	auto bad = q3;
	bad.times[5] += 1e-3;
	CHECK_THROWS_AS(harmonic_content(bad, {1, 3}), NonUniformSampling);
	bad = q3;
	bad.times.pop_back();
	bad.values.pop_back();
	CHECK_THROWS_AS(harmonic_content(bad, {1, 3}), NonUniformSampling);

	MomentSeries flat{MomentKind::Q(2), times, std::vector<double>(256, 0.0), {2, 0}};
	CHECK(harmonic_content(flat, {0}) == 0.0);
}
