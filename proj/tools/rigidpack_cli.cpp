// rigidpack command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid spec,
// 3 invalid request.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rigidpack/rigidpack.hpp"

namespace rp = rigidpack;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadSpec = 2;
constexpr int kExitBadRequest = 3;

struct UnitFlags {
  double mu = 1.0;
  double omega = 1.0;
  double hbar = 1.0;
  CLI::Option* mu_opt = nullptr;
  CLI::Option* omega_opt = nullptr;
  CLI::Option* hbar_opt = nullptr;

  void add(CLI::App& app) {
    mu_opt = app.add_option("--mu", mu, "mass");
    omega_opt = app.add_option("--omega", omega, "angular frequency");
    hbar_opt = app.add_option("--hbar", hbar, "reduced Planck constant");
  }

  // Explicit flags win over whatever the spec file carries.
  rp::Units resolve(rp::Units from_file) const {
    if (mu_opt->count()) from_file.mu = mu;
    if (omega_opt->count()) from_file.omega = omega;
    if (hbar_opt->count()) from_file.hbar = hbar;
    try {
      from_file.validate();
    } catch (const std::invalid_argument& e) {
      throw rp::SpecError(e.what());
    }
    return from_file;
  }

  rp::Units resolve() const { return resolve(rp::Units{}); }
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw rp::RequestError("cannot write " + path);
  out << text;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw rp::SpecError("not an integer list: " + s);
    }
    if (used != item.size()) throw rp::SpecError("not an integer list: " + s);
    out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  int degree = 1;
  std::string parity = "even";
  std::string indices;
  bool random = false;
  std::optional<std::uint64_t> seed;
  double x0 = 0.0;
  double p0 = 0.0;
  std::string output;
};

int run_generate(const GenerateArgs& a, const UnitFlags& uf) {
  const auto u = uf.resolve();
  rp::RigiditySpec spec;
  if (a.random) {
    rp::Rng rng(a.seed.value_or(1));
    spec = rp::random_rigidity_spec(rng, a.degree, false);
  } else {
    if (a.indices.empty()) throw rp::SpecError("--indices is required unless --random is given");
    spec.target_N = a.degree;
    if (a.parity == "even")
      spec.parity = rp::Parity::even;
    else if (a.parity == "odd")
      spec.parity = rp::Parity::odd;
    else
      throw rp::SpecError("parity must be even or odd");
    spec.indices = parse_int_list(a.indices);
    spec.seed = a.seed;
    spec.x0 = a.x0;
    spec.p0 = a.p0;
  }
  // x0, p0 are given in oscillator units
  spec.x0 *= u.length_scale();
  spec.p0 *= u.momentum_scale();

  const auto packet = rp::generate(spec);
  int min_gap = 0;
  for (std::size_t i = 1; i < spec.indices.size(); ++i) {
    const int g = spec.indices[i] - spec.indices[i - 1];
    min_gap = i == 1 ? g : std::min(min_gap, g);
  }
  if (spec.indices.size() > 1)
    std::cerr << "spacing check: ok (smallest gap " << min_gap << " >= " << spec.target_N + 1
              << ")\n";
  else
    std::cerr << "spacing check: ok (single component)\n";
  emit(rp::packet_to_string(packet, u), a.output);
  return kExitOk;
}

// ----------------------------------------------------------------- moments

struct MomentsArgs {
  std::string spec;
  std::optional<int> Q, P;
  std::string R, S;
  std::string engine = "spectral";
  std::string compare;
  double periods = 1.0;
  int samples = 256;
  int steps = 4096;
  int grid_points = 4096;
  std::string output;
};

rp::MomentKind parse_kind(const MomentsArgs& a) {
  const int given = (a.Q ? 1 : 0) + (a.P ? 1 : 0) + (a.R.empty() ? 0 : 1) + (a.S.empty() ? 0 : 1);
  if (given != 1) throw rp::RequestError("give exactly one of --Q, --P, --R, --S");
  auto pair = [](const std::string& s) {
    std::vector<int> v;
    try {
      v = parse_int_list(s);
    } catch (const rp::SpecError&) {
      throw rp::RequestError("expected k,l but got " + s);
    }
    if (v.size() != 2) throw rp::RequestError("expected k,l but got " + s);
    return v;
  };
  rp::MomentKind kind;
  if (a.Q) kind = rp::MomentKind::Q(*a.Q);
  if (a.P) kind = rp::MomentKind::P(*a.P);
  if (!a.R.empty()) {
    const auto v = pair(a.R);
    kind = rp::MomentKind::R(v[0], v[1]);
  }
  if (!a.S.empty()) {
    const auto v = pair(a.S);
    kind = rp::MomentKind::S(v[0], v[1]);
  }
  if (kind.k < 0 || kind.l < 0) throw rp::RequestError("moment indices must be nonnegative");
  if (kind.order() > rp::kMaxMomentOrder) throw rp::OrderTooHigh(kind.order(), rp::kMaxMomentOrder);
  return kind;
}

rp::MomentSeries closed_form_series(const rp::PacketSpec& spec, const rp::Units& u,
                                    rp::MomentKind kind, const std::vector<double>& times) {
  const rp::MomentEvaluator eval(spec, u);
  const bool real = kind.family != rp::MomentFamily::S;
  rp::MomentSeries out{kind, times, {}, {kind.k, kind.l}};
  if (real && kind.order() == 2) {
    const auto init = rp::second_moment_init(eval);
    for (double t : times) {
      const auto s = rp::predict_q2p2r11(init, u, t);
      out.values.push_back(kind.k == 2 ? s.q2 : kind.k == 1 ? s.r11 : s.p2);
    }
    return out;
  }
  if (real && kind.k == 4 && kind.l == 0) {
    const auto init = rp::fourth_moment_init(eval);
    for (double t : times) out.values.push_back(rp::predict_q4(init, u, t));
    return out;
  }
  throw rp::RequestError("closedform engine supports Q2, P2, R11 and Q4 only, not " + kind.label());
}

rp::MomentSeries ode_series(const rp::PacketSpec& spec, const rp::Units& u, rp::MomentKind kind,
                            const MomentsArgs& a) {
  const int per_sample =
      std::max(1, static_cast<int>(std::ceil(a.steps * a.periods / a.samples - 1e-9)));
  const double t_end = a.periods * u.period();
  const auto init = rp::initial_chain(rp::MomentEvaluator(spec, u), std::max(2, kind.order()));
  auto traj = rp::integrate(init, u, 0.0, t_end, per_sample * a.samples, per_sample);
  traj.times.pop_back();
  traj.states.pop_back();
  // uniform_times and the integrator agree to rounding; report the former
  auto s = traj.series(kind);
  s.times = rp::uniform_times(t_end, a.samples);
  return s;
}

rp::MomentSeries engine_series(const std::string& engine, const rp::PacketSpec& spec,
                               const rp::Units& u, rp::MomentKind kind, const MomentsArgs& a) {
  const auto times = rp::uniform_times(a.periods * u.period(), a.samples);
  if (engine == "spectral") return rp::moment_series(spec, u, kind, times);
  if (engine == "closedform") return closed_form_series(spec, u, kind, times);
  if (engine == "ode") return ode_series(spec, u, kind, a);
  if (engine == "grid") {
    rp::GridEngineOptions opt;
    opt.n_points = a.grid_points;
    opt.steps_per_period = a.steps;
    return rp::grid_moment_series(spec, u, kind, times, opt);
  }
  throw rp::RequestError("unknown engine " + engine);
}

int run_moments(const MomentsArgs& a, const UnitFlags& uf) {
  const auto kind = parse_kind(a);
  if (a.samples < 2) throw rp::RequestError("need at least 2 samples");
  if (!(a.periods > 0.0)) throw rp::RequestError("periods must be positive");
  const auto doc = rp::read_packet_file(a.spec);
  const auto u = uf.resolve(doc.units);

  if (a.compare.empty()) {
    emit(rp::series_to_csv(engine_series(a.engine, doc.spec, u, kind, a)), a.output);
    return kExitOk;
  }
  const auto comma = a.compare.find(',');
  if (comma == std::string::npos) throw rp::RequestError("--compare expects engine1,engine2");
  const auto first = engine_series(a.compare.substr(0, comma), doc.spec, u, kind, a);
  const auto second = engine_series(a.compare.substr(comma + 1), doc.spec, u, kind, a);
  std::ostringstream os;
  rp::write_comparison_csv(os, first, second);
  emit(os.str(), a.output);
  double worst = 0.0;
  for (std::size_t i = 0; i < first.size(); ++i)
    worst = std::max(worst, std::abs(first.values[i] - second.values[i]));
  std::cerr << "max abs diff: " << rp::format_double(worst) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
  std::string spec;
  int k_max = 10;
  int samples = 256;
  double tol = rp::kDefaultRigidityTolerance;
  std::string output;
};

int run_classify(const ClassifyArgs& a, const UnitFlags& uf) {
  if (a.k_max > rp::kMaxMomentOrder) throw rp::OrderTooHigh(a.k_max, rp::kMaxMomentOrder);
  const auto doc = rp::read_packet_file(a.spec);
  const auto u = uf.resolve(doc.units);
  emit(rp::report_to_string(rp::classify(doc.spec, u, a.k_max, a.samples, a.tol)), a.output);
  return kExitOk;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::string checks = "all";
  std::string spec;
  std::uint64_t seed = 1;
  int packets = 4;
  int grid_points = 4096;
};

struct CheckResult {
  double residual = 0.0;
  double tolerance = 0.0;
  bool skipped = false;
  bool pass() const { return skipped || residual <= tolerance; }
};

using Ensemble = std::vector<rp::PacketSpec>;

double sampled_scale(const rp::MomentEvaluator& eval, int k, int l,
                     const std::vector<double>& times) {
  double s = eval.units().moment_scale(k, l);
  for (double t : times) s = std::max(s, std::abs(eval.W(k, l, t)));
  return s;
}

// Residuals below are relative: each one is divided by its own scale and
// compared against the tolerance directly.

CheckResult check_conservation(const Ensemble& ens, const rp::Units& u) {
  CheckResult r{0.0, 1e-10};
  const auto times = rp::uniform_times(u.period(), 32);
  for (const auto& spec : ens) {
    const rp::MomentEvaluator eval(spec, u);
    const auto init = rp::second_moment_init(eval);
    const double scale = rp::detail::q2_scale(init, u);
    for (double t : times)
      r.residual = std::max(r.residual,
                            std::abs(rp::conservation_residual(eval.W(2, 0, t).real(),
                                                               eval.W(0, 2, t).real(), init, u)) /
                                scale);
    const auto traj = rp::integrate(rp::initial_chain(eval, 2), u, 0.0, u.period(), 4096, 128);
    for (const auto& chain : traj.states)
      r.residual = std::max(
          r.residual,
          std::abs(rp::conservation_residual(chain[2].R(2, 0), chain[2].R(0, 2), init, u)) / scale);
  }
  return r;
}

CheckResult check_parity(const Ensemble& ens, const rp::Units& u) {
  CheckResult r{0.0, 1e-10, true};
  const auto times = rp::uniform_times(u.period(), 32);
  for (const auto& spec : ens) {
    if (spec.parity() == rp::Parity::none) continue;
    r.skipped = false;
    const rp::MomentEvaluator eval(spec, u);
    for (int K = 1; K <= 7; K += 2)
      for (double t : times)
        r.residual = std::max(r.residual, std::abs(eval.W(K, 0, t).real()) / u.moment_scale(K, 0));
  }
  return r;
}

CheckResult check_s_identities(const Ensemble& ens, const rp::Units& u) {
  CheckResult r{0.0, 1e-10};
  const auto times = rp::uniform_times(u.period(), 16);
  for (const auto& spec : ens) {
    const rp::MomentEvaluator eval(spec, u);
    const double scale = sampled_scale(eval, 2, 2, times);
    for (double t : times)
      r.residual = std::max(r.residual, rp::special_s_identities(eval, t).max() / scale);
  }
  return r;
}

CheckResult check_closedform(const Ensemble& ens, const rp::Units& u) {
  CheckResult r{0.0, 1e-10};
  const auto times = rp::uniform_times(u.period(), 32);
  for (const auto& spec : ens) {
    const rp::MomentEvaluator eval(spec, u);
    const auto s0 = rp::second_moment_init(eval);
    const auto f0 = rp::fourth_moment_init(eval);
    const double s2 = std::sqrt(s0.q2_0 * s0.p2_0);
    for (double t : times) {
      const auto want = rp::predict_q2p2r11(s0, u, t);
      r.residual = std::max({r.residual, std::abs(eval.W(2, 0, t).real() / want.q2 - 1.0),
                             std::abs(eval.W(0, 2, t).real() / want.p2 - 1.0),
                             std::abs(eval.W(1, 1, t).real() - want.r11) / s2,
                             std::abs(eval.W(4, 0, t).real() / rp::predict_q4(f0, u, t) - 1.0)});
    }
  }
  return r;
}

double ode_error(const rp::MomentEvaluator& eval, int steps) {
  const auto& u = eval.units();
  const auto traj =
      rp::integrate(rp::initial_chain(eval, 4), u, 0.0, u.period(), steps, steps / 64);
  double worst = 0.0;
  for (std::size_t i = 0; i < traj.times.size(); ++i)
    for (int K = 2; K <= 4; ++K)
      for (int k = 0; k <= K; ++k) {
        const auto w = eval.W(k, K - k, traj.times[i]);
        const auto& mv = traj.states[i][K];
        worst = std::max({worst, std::abs(mv.R(k, K - k) - w.real()) / u.moment_scale(k, K - k),
                          std::abs(mv.S(k, K - k) - w.imag()) / u.moment_scale(k, K - k)});
      }
  return worst;
}

// Residual is 4 minus the measured convergence order (<= 0.3 passes). Errors
// are pooled over the ensemble so rigid packets, whose error is pure
// rounding, do not mask the trend.
CheckResult check_hierarchy(const Ensemble& ens, const rp::Units& u) {
  CheckResult r{0.0, 0.3};
  double e[3] = {0.0, 0.0, 0.0};
  for (const auto& spec : ens) {
    const rp::MomentEvaluator eval(spec, u);
    for (int i = 0; i < 3; ++i) e[i] = std::max(e[i], ode_error(eval, 1024 << i));
  }
  if (e[0] < 1e-12) return {0.0, 0.3, true};
  r.residual = 4.0 - std::min(std::log2(e[0] / e[1]), std::log2(e[1] / e[2]));
  return r;
}

// Residual counts misclassified specs.
CheckResult check_rigidity(const rp::Units& u, std::uint64_t seed) {
  CheckResult r{0.0, 0.0};
  for (int n : {0, 1, 3, 7}) {
    const auto rep = rp::classify(rp::PacketSpec(0.6 * u.length_scale(), -0.4 * u.momentum_scale(),
                                                 rp::FockState::number(n)),
                                  u, 10);
    if (!rep.infinite()) r.residual += 1.0;
  }
  rp::Rng rng(seed);
  for (int N = 1; N <= 3; ++N) {
    auto spec = rp::random_rigidity_spec(rng, N, false);
    spec.x0 *= u.length_scale();
    spec.p0 *= u.momentum_scale();
    const auto rep = rp::classify(rp::generate(spec), u, 2 * N + 2);
    if (!rep.degree || *rep.degree < N) r.residual += 1.0;
  }
  return r;
}

CheckResult check_harmonics(const Ensemble& ens, const rp::Units& u) {
  CheckResult r{0.0, 1e-12};
  const auto times = rp::uniform_times(u.period(), 256);
  for (const auto& spec : ens) {
    const rp::MomentEvaluator eval(spec, u);
    r.residual = std::max(
        {r.residual, rp::harmonic_content(rp::moment_series(eval, rp::MomentKind::Q(2), times), {0, 2}),
         rp::harmonic_content(rp::moment_series(eval, rp::MomentKind::Q(4), times), {0, 2, 4})});
    if (spec.parity() == rp::Parity::none)
      r.residual = std::max(r.residual, rp::harmonic_content(
                                            rp::moment_series(eval, rp::MomentKind::Q(3), times),
                                            {1, 3}));
  }
  return r;
}

CheckResult check_oracle(const Ensemble& ens, const rp::Units& u, int grid_points) {
  CheckResult r{0.0, 1e-6};
  const auto times = rp::uniform_times(u.period(), 8);
  rp::GridEngineOptions opt;
  opt.n_points = grid_points;
  opt.steps_per_period = 4 * grid_points;
  for (const auto& spec : ens) {
    const rp::MomentEvaluator eval(spec, u);
    auto g = rp::synthesize(spec, u, rp::grid_for(spec, u, opt));
    double t_now = 0.0;
    for (double t : times) {
      if (t > t_now) {
        const int steps =
            static_cast<int>(std::ceil((t - t_now) / u.period() * opt.steps_per_period - 1e-9));
        g = rp::propagate(g, u, t - t_now, std::max(1, steps));
        t_now = t;
      }
      for (int k = 0; k <= 4; ++k)
        for (int l = 0; k + l <= 4; ++l) {
          const auto w = eval.W(k, l, t);
          const double scale = std::max(std::abs(w), u.moment_scale(k, l));
          r.residual = std::max(r.residual, std::abs(rp::quadrature_moment(g, u, k, l) - w) / scale);
        }
      const auto c = rp::grid_center(g, u);
      const auto want = rp::center(spec, u, t);
      r.residual = std::max({r.residual, std::abs(c.x - want.x) / u.length_scale(),
                             std::abs(c.p - want.p) / u.momentum_scale()});
    }
  }
  return r;
}

int run_verify(const VerifyArgs& a, const UnitFlags& uf) {
  static const std::vector<std::string> all = {"conservation", "parity",   "s-identities",
                                               "closedform",   "hierarchy", "rigidity",
                                               "harmonics",    "oracle"};
  std::vector<std::string> selected;
  if (a.checks == "all") {
    selected = all;
  } else {
    std::stringstream ss(a.checks);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (std::find(all.begin(), all.end(), item) == all.end())
        throw rp::RequestError("unknown check " + item);
      selected.push_back(item);
    }
  }
  if (a.packets < 1) throw rp::RequestError("need at least one packet");

  Ensemble ens;
  rp::Units u;
  if (!a.spec.empty()) {
    const auto doc = rp::read_packet_file(a.spec);
    u = uf.resolve(doc.units);
    ens.push_back(doc.spec);
  } else {
    u = uf.resolve();
    rp::Rng rng(a.seed);
    for (int i = 0; i < a.packets; ++i) ens.push_back(rp::random_parity_packet(rng, u, 8));
    for (int i = 0; i < std::max(1, a.packets / 2); ++i)
      ens.push_back(rp::random_mixed_packet(rng, u, 6));
  }

  bool ok = true;
  for (const auto& name : selected) {
    CheckResult r;
    if (name == "conservation") r = check_conservation(ens, u);
    if (name == "parity") r = check_parity(ens, u);
    if (name == "s-identities") r = check_s_identities(ens, u);
    if (name == "closedform") r = check_closedform(ens, u);
    if (name == "hierarchy") r = check_hierarchy(ens, u);
    if (name == "rigidity") r = check_rigidity(u, a.seed);
    if (name == "harmonics") r = check_harmonics(ens, u);
    if (name == "oracle") r = check_oracle(ens, u, a.grid_points);
    char line[160];
    if (r.skipped)
      std::snprintf(line, sizeof line, "%-13s skipped (no applicable packet)\n", name.c_str());
    else
      std::snprintf(line, sizeof line, "%-13s residual %.3e  tol %.1e  %s\n", name.c_str(),
                    r.residual, r.tolerance, r.pass() ? "PASS" : "FAIL");
    std::cout << line;
    ok = ok && r.pass();
  }
  std::cout << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kExitOk : kExitVerifyFailed;
}

// ------------------------------------------------------------- oracle-dump

struct DumpArgs {
  std::string spec;
  double time = 0.0;
  int grid_points = 4096;
  double half_width = 0.0;
  int steps = 4096;
  std::string output;
};

int run_oracle_dump(const DumpArgs& a, const UnitFlags& uf) {
  const auto doc = rp::read_packet_file(a.spec);
  const auto u = uf.resolve(doc.units);
  rp::GridEngineOptions opt;
  opt.n_points = a.grid_points;
  opt.half_width = a.half_width * u.length_scale();
  auto g = rp::synthesize(doc.spec, u, rp::grid_for(doc.spec, u, opt));
  if (a.time != 0.0) {
    const int steps =
        std::max(1, static_cast<int>(std::ceil(std::abs(a.time) / u.period() * a.steps - 1e-9)));
    g = rp::propagate(g, u, a.time, steps);
  }
  std::ostringstream os;
  rp::write_snapshot_csv(os, g);
  emit(os.str(), a.output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moment dynamics and rigidity of harmonic-oscillator wave packets"};
  app.require_subcommand(1);
  app.fallthrough();
  UnitFlags units;
  units.add(app);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "build a packet with a prescribed degree of rigidity");
  generate->add_option("--degree", gen.degree, "target degree N")->check(CLI::PositiveNumber);
  generate->add_option("--parity", gen.parity, "even or odd");
  generate->add_option("--indices", gen.indices, "comma-separated n_i");
  generate->add_flag("--random", gen.random, "draw indices at random (needs --seed)");
  generate->add_option("--seed", gen.seed, "amplitude seed");
  generate->add_option("--x0", gen.x0, "displacement in oscillator lengths");
  generate->add_option("--p0", gen.p0, "momentum kick in oscillator momenta");
  generate->add_option("-o,--output", gen.output, "output file (default stdout)");

  MomentsArgs mom;
  auto* moments = app.add_subcommand("moments", "emit a moment time series as CSV");
  moments->add_option("--spec", mom.spec, "packet JSON")->required();
  moments->add_option("--Q", mom.Q, "Q_K");
  moments->add_option("--P", mom.P, "P_K");
  moments->add_option("--R", mom.R, "R_kl as k,l");
  moments->add_option("--S", mom.S, "S_kl as k,l");
  moments->add_option("--engine", mom.engine, "spectral, ode, grid or closedform");
  moments->add_option("--compare", mom.compare, "engine1,engine2");
  moments->add_option("--periods", mom.periods, "time span in periods");
  moments->add_option("--samples", mom.samples, "number of samples");
  moments->add_option("--steps", mom.steps, "ode/grid steps per period");
  moments->add_option("--grid-points", mom.grid_points, "grid size (power of two)");
  moments->add_option("-o,--output", mom.output, "output file (default stdout)");

  ClassifyArgs cls;
  auto* classify = app.add_subcommand("classify", "measure the degree of rigidity");
  classify->add_option("--spec", cls.spec, "packet JSON")->required();
  classify->add_option("--kmax", cls.k_max, "largest K examined (even)");
  classify->add_option("--samples", cls.samples, "samples per period");
  classify->add_option("--tol", cls.tol, "relative flatness tolerance");
  classify->add_option("-o,--output", cls.output, "output file (default stdout)");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "run the invariant checks");
  verify->add_option("--checks", ver.checks, "comma-separated subset or 'all'");
  verify->add_option("--spec", ver.spec, "check a single packet instead of a random ensemble");
  verify->add_option("--seed", ver.seed, "ensemble seed");
  verify->add_option("--packets", ver.packets, "parity packets in the ensemble");
  verify->add_option("--grid-points", ver.grid_points,
                     "oracle grid size; steps per period are four times this");

  DumpArgs dump;
  auto* oracle_dump = app.add_subcommand("oracle-dump", "write a grid snapshot of the packet");
  oracle_dump->add_option("--spec", dump.spec, "packet JSON")->required();
  oracle_dump->add_option("--time", dump.time, "time of the snapshot");
  oracle_dump->add_option("--grid-points", dump.grid_points, "grid size (power of two)");
  oracle_dump->add_option("--half-width", dump.half_width, "box half-width in oscillator lengths");
  oracle_dump->add_option("--steps", dump.steps, "steps per period");
  oracle_dump->add_option("-o,--output", dump.output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadRequest;
  }

  try {
    if (*generate) return run_generate(gen, units);
    if (*moments) return run_moments(mom, units);
    if (*classify) return run_classify(cls, units);
    if (*verify) return run_verify(ver, units);
    if (*oracle_dump) return run_oracle_dump(dump, units);
  } catch (const rp::SpecError& e) {
    std::cerr << "invalid spec: " << e.what() << '\n';
    return kExitBadSpec;
  } catch (const rp::Error& e) {
    std::cerr << "invalid request: " << e.what() << '\n';
    return kExitBadRequest;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadRequest;
  }
  return kExitBadRequest;
}
