#pragma once

// File formats: packet JSON documents, moment-series CSV, rigidity-report
// JSON and grid snapshot CSV.

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rigidpack/errors.hpp"
#include "rigidpack/gridoracle.hpp"
#include "rigidpack/packet.hpp"
#include "rigidpack/rigidity.hpp"
#include "rigidpack/units.hpp"

namespace rigidpack {

/// 17 significant digits.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct PacketDocument {
  PacketSpec spec;
  Units units;
};

inline nlohmann::json packet_to_json(const PacketSpec& spec, const Units& u) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : spec.phi().coeffs()) coeffs.push_back({c.real(), c.imag()});
  return {{"coeffs", coeffs},
          {"x0", spec.x0()},
          {"p0", spec.p0()},
          {"units", {{"mu", u.mu}, {"omega", u.omega}, {"hbar", u.hbar}}}};
}

inline PacketDocument packet_from_json(const nlohmann::json& j) {
  try {
    std::vector<Complex> coeffs;
    for (const auto& c : j.at("coeffs")) {
      if (c.is_number()) {
        coeffs.emplace_back(c.get<double>(), 0.0);
      } else {
        if (!c.is_array() || c.size() != 2) throw SpecError("coefficient must be [re, im]");
        coeffs.emplace_back(c[0].get<double>(), c[1].get<double>());
      }
    }
    Units u;
    if (j.contains("units")) {
      const auto& ju = j.at("units");
      u.mu = ju.value("mu", 1.0);
      u.omega = ju.value("omega", 1.0);
      u.hbar = ju.value("hbar", 1.0);
    }
    u.validate();
    return {PacketSpec(j.value("x0", 0.0), j.value("p0", 0.0), FockState(std::move(coeffs))),
            u};
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("malformed packet document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
}

inline PacketDocument read_packet_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw SpecError("cannot parse " + path + ": " + e.what());
  }
  return packet_from_json(j);
}

inline std::string packet_to_string(const PacketSpec& spec, const Units& u) {
  return packet_to_json(spec, u).dump(2) + "\n";
}

/// "t,value" header, one row per sample.
inline void write_series_csv(std::ostream& os, const MomentSeries& s) {
  os << "t,value\n";
  for (std::size_t i = 0; i < s.size(); ++i)
    os << format_double(s.times[i]) << ',' << format_double(s.values[i]) << '\n';
}

/// "t,value,diff" with value from the first series and diff = first - second.
inline void write_comparison_csv(std::ostream& os, const MomentSeries& a,
                                 const MomentSeries& b) {
  if (a.size() != b.size()) throw RequestError("series lengths differ");
  os << "t,value,diff\n";
  for (std::size_t i = 0; i < a.size(); ++i)
    os << format_double(a.times[i]) << ',' << format_double(a.values[i]) << ','
       << format_double(a.values[i] - b.values[i]) << '\n';
}

inline std::string series_to_csv(const MomentSeries& s) {
  std::ostringstream os;
  write_series_csv(os, s);
  return os.str();
}

/// {"degree": int | "inf", "per_K": {"2": {"flat": bool, "ptp": num}, ...},
///  "tol": num, "lower_bound": bool}
inline nlohmann::json report_to_json(const RigidityReport& r) {
  nlohmann::json per_k = nlohmann::json::object();
  for (const auto& [K, f] : r.per_K)
    per_k[std::to_string(K)] = {{"flat", f.flat}, {"ptp", f.ptp}};
  nlohmann::json j;
  if (r.degree)
    j["degree"] = *r.degree;
  else
    j["degree"] = "inf";
  j["per_K"] = per_k;
  j["tol"] = r.tolerance_used;
  j["lower_bound"] = r.lower_bound;
  return j;
}

inline std::string report_to_string(const RigidityReport& r) {
  return report_to_json(r).dump(2) + "\n";
}

/// "x,re,im,abs2" per grid point.
inline void write_snapshot_csv(std::ostream& os, const GridState& g) {
  os << "x,re,im,abs2\n";
  const auto v = g.values();
  for (int j = 0; j < g.size(); ++j)
    os << format_double(g.x(j)) << ',' << format_double(v[j].real()) << ','
       << format_double(v[j].imag()) << ',' << format_double(std::norm(v[j])) << '\n';
}

}  // namespace rigidpack
