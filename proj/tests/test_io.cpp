#include "catch2/catch_amalgamated.hpp"

#include <filesystem>
#include <fstream>

#include "rigidpack/ensemble.hpp"
#include "rigidpack/io.hpp"

using namespace rigidpack;

TEST_CASE("packet documents round-trip")
{
	Rng rng(10);
	const Units u{1.5, 0.25, 2.0};
	const auto spec = random_mixed_packet(rng, u, 7);
	const auto doc = packet_from_json(nlohmann::json::parse(packet_to_string(spec, u)));
	CHECK(doc.spec.x0() == spec.x0());
	CHECK(doc.spec.p0() == spec.p0());
	CHECK(doc.units.mu == u.mu);
	CHECK(doc.units.hbar == u.hbar);
	REQUIRE(doc.spec.phi().nmax() == spec.phi().nmax());
	for (int n = 0; n <= spec.phi().nmax(); ++n)
		CHECK(std::abs(doc.spec.phi()[n] - spec.phi()[n]) <= 1e-16);
}

TEST_CASE("packet documents: defaults and errors")
{
	const auto doc = packet_from_json(nlohmann::json::parse(R"({"coeffs": [1, 0, 1]})"));
	CHECK(doc.spec.x0() == 0.0);
	CHECK(doc.units.omega == 1.0);
	CHECK(doc.spec.parity() == Parity::even);

	CHECK_THROWS_AS(packet_from_json(nlohmann::json::parse(R"({"x0": 1})")), SpecError);
	CHECK_THROWS_AS(packet_from_json(nlohmann::json::parse(R"({"coeffs": [[1, 2, 3]]})")), SpecError);
	CHECK_THROWS_AS(packet_from_json(nlohmann::json::parse(R"({"coeffs": [0, 0]})")), SpecError);
	CHECK_THROWS_AS(packet_from_json(nlohmann::json::parse(R"({"coeffs": [1], "units": {"mu": -1}})")),
	                SpecError);
	CHECK_THROWS_AS(packet_from_json(nlohmann::json::parse(R"({"coeffs": [1], "x0": "far"})")),
	                SpecError);
	CHECK_THROWS_AS(read_packet_file("/nonexistent/packet.json"), SpecError);

	const auto path = std::filesystem::temp_directory_path() / "rigidpack_io_bad.json";
	std::ofstream(path) << "{ not json";
	CHECK_THROWS_AS(read_packet_file(path.string()), SpecError);
	std::filesystem::remove(path);
}

TEST_CASE("series CSV")
{
	MomentSeries s{MomentKind::Q(2), {0.0, 0.1}, {1.0 / 3.0, 2.5}, {2, 0}};
	CHECK(series_to_csv(s) == "t,value\n0,0.33333333333333331\n0.10000000000000001,2.5\n");
	MomentSeries b = s;
	b.values = {0.0, 2.0};
	std::ostringstream os;
	write_comparison_csv(os, s, b);
	CHECK(os.str() == "t,value,diff\n0,0.33333333333333331,0.33333333333333331\n"
	                  "0.10000000000000001,2.5,0.5\n");
	b.values.pop_back();
	b.times.pop_back();
	CHECK_THROWS_AS(write_comparison_csv(os, s, b), RequestError);
	CHECK(format_double(0.1) == "0.10000000000000001");
	CHECK(std::stod(format_double(M_PI)) == M_PI);
}

TEST_CASE("report JSON")
{
	RigidityReport r;
	r.degree = 1;
	r.per_K[2] = {true, 1e-15};
	r.per_K[4] = {false, 0.25};
	r.tolerance_used = 1e-8;
	const auto j = report_to_json(r);
	CHECK(j["degree"] == 1);
	CHECK(j["per_K"]["2"]["flat"] == true);
	CHECK(j["per_K"]["4"]["ptp"] == 0.25);
	CHECK(j["tol"] == 1e-8);
	r.degree.reset();
	CHECK(report_to_json(r)["degree"] == "inf");
}

TEST_CASE("snapshot CSV")
{
	GridState g(-1.0, 1.0, {Complex(1.0, 0.5), Complex(0.0, -2.0)});
	std::ostringstream os;
	write_snapshot_csv(os, g);
	CHECK(os.str() == "x,re,im,abs2\n-1,1,0.5,1.25\n0,0,-2,4\n");
}
