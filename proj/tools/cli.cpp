#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"

#include "freespec/flow.hpp"
#include "freespec/jacobi_bridge.hpp"
#include "freespec/moments.hpp"
#include "freespec/stationary.hpp"
#ifdef FREESPEC_HAS_MATRIX_ORACLE
#include "freespec/matrix_oracle.hpp"
#endif

namespace freespec::cli {

namespace {

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::string shortest(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string csv_field(const json& v) {
  if (v.is_null()) return "";
  if (v.is_number_float()) return shortest(v.get<double>());
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  std::string s = v.get<std::string>();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

// 1, 2, 5, 10, 20, 50, ... below n_max, then n_max itself
std::vector<int> grid_125(int n_max) {
  std::vector<int> g;
  for (long base = 1; base < n_max; base *= 10) {
    for (long m : {1L, 2L, 5L}) {
      if (base * m < n_max) g.push_back(static_cast<int>(base * m));
    }
  }
  g.push_back(n_max);
  return g;
}

}  // namespace

json moments_records(const RankParam& rank, double t, int n_max) {
  const auto table = solve_recursion(rank, n_max);
  json out = json::array();
  for (int n = 1; n <= n_max; ++n) {
    out.push_back({{"n", n}, {"t", t}, {"r_n", r_moment(table, n, t)}, {"s_n", table.s(n).str("t")}});
  }
  return out;
}

json stationary_records(const RankParam& rank, int points) {
  const auto mu = stationary_measure(rank);
  json out = json::array();
  out.push_back({{"kind", "atom"}, {"phi", 0.0}, {"value", rank.abs_kappa().str()}});
  for (int i = 0; i < points; ++i) {
    const double phi = 2.0 * std::numbers::pi * (i + 0.5) / points;
    out.push_back({{"kind", "density"}, {"phi", phi}, {"value", mu.density(phi)}});
  }
  return out;
}

json flow_records(const RankParam& rank, double t_end, int steps, const std::vector<double>& zs) {
  json out = json::array();
  for (double z : zs) {
    for (int k = 0; k <= steps; ++k) {
      const double t = t_end * k / steps;
      json rec = {{"z", z}, {"t", t}, {"psi", nullptr}, {"blown_up", false}};
      try {
        rec["psi"] = number(psi(rank, t, z));
      } catch (const BlowupError&) {
        rec["blown_up"] = true;
      }
      out.push_back(rec);
    }
  }
  return out;
}

json blowup_records(const RankParam& rank, double t) {
  const auto b = blowup_point(rank, t);
  return json::array({{{"t", b.t}, {"a_t", b.a}, {"y_t", b.y}, {"z_t", b.z}, {"residual", b.residual}}});
}

json jacobi_records(const RankParam& rank, double t, int n_max) {
  const auto grid = grid_125(n_max);
  const auto lm = limit_moment(rank, t, grid);
  const std::string weight = corollary_weight(rank).str();
  json out = json::array();
  for (std::size_t i = 0; i < lm.n.size(); ++i) {
    out.push_back({{"n", lm.n[i]},
                   {"value", lm.value[i]},
                   {"limit", lm.predicted_limit},
                   {"error", lm.value[i] - lm.predicted_limit},
                   {"corollary_weight", weight}});
  }
  return out;
}

json verify_records(const std::vector<Check>& checks) {
  json out = json::array();
  for (const auto& c : checks) {
    out.push_back({{"module", c.module},
                   {"name", c.name},
                   {"status", c.skipped ? "skip" : (c.passed ? "pass" : "fail")},
                   {"value", number(c.value)},
                   {"tolerance", c.tolerance},
                   {"detail", c.detail}});
  }
  return out;
}

const std::vector<std::string>& csv_header(const std::string& command) {
  static const std::map<std::string, std::vector<std::string>> headers = {
      {"moments", {"n", "t", "r_n", "s_n"}},
      {"stationary", {"kind", "phi", "value"}},
      {"flow", {"z", "t", "psi", "blown_up"}},
      {"blowup", {"t", "a_t", "y_t", "z_t", "residual"}},
      {"jacobi", {"n", "value", "limit", "error", "corollary_weight"}},
      {"verify", {"module", "name", "status", "value", "tolerance", "detail"}},
      {"simulate", {"theta", "N", "trials", "t", "n", "mean", "std_error", "exact", "z_score"}},
  };
  return headers.at(command);
}

void write_csv(const std::string& command, const json& records, std::ostream& os) {
  const auto& cols = csv_header(command);
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << '\n';
  for (const auto& rec : records) {
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_field(rec.at(cols[i]));
    os << '\n';
  }
}

void write_json(const json& records, std::ostream& os) { os << records.dump(2) << '\n'; }

void print_matrix(const std::vector<Check>& checks, std::ostream& os) {
  std::size_t wm = 6, wn = 5;
  for (const auto& c : checks) {
    wm = std::max(wm, c.module.size());
    wn = std::max(wn, c.name.size());
  }
  os << std::left << std::setw(static_cast<int>(wm)) << "module" << "  " << std::setw(static_cast<int>(wn))
     << "check" << "  status  error      tol\n";
  for (const auto& c : checks) {
    os << std::setw(static_cast<int>(wm)) << c.module << "  " << std::setw(static_cast<int>(wn)) << c.name << "  "
       << std::setw(6) << (c.skipped ? "SKIP" : (c.passed ? "PASS" : "FAIL")) << "  ";
    if (c.skipped) {
      os << c.detail;
    } else if (c.tolerance > 0.0) {
      std::ostringstream e;
      e << std::scientific << std::setprecision(2) << c.value << "   " << c.tolerance;
      os << e.str();
      if (!c.detail.empty()) os << "   " << c.detail;
    } else {
      os << "exact" << (c.detail.empty() ? "" : "      " + c.detail);
    }
    os << '\n';
  }
  std::size_t failed = 0;
  for (const auto& c : checks) failed += (!c.passed && !c.skipped);
  os << (failed ? std::to_string(failed) + " check(s) failed\n" : "all checks passed\n");
}

namespace {

struct Options {
  std::string theta;
  double t = 1.0;
  int n = -1;
  std::string format = "json";
  std::string output = "-";
  int points = 256;
  int steps = 20;
  std::vector<double> zs{-0.9, -0.7, -0.5, -0.3, -0.1, 0.1, 0.3, 0.5, 0.7, 0.9};
  int N = 512;
  int trials = 200;
  double dt = 0.01;
  std::uint64_t seed = 0x5eed5eedULL;
  int threads = 0;
};

class BadArgs : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void require(bool ok, const std::string& msg) {
  if (!ok) throw BadArgs(msg);
}

void emit(const std::string& command, const json& records, const Options& o, std::ostream& out) {
  auto write = [&](std::ostream& os) {
    if (o.format == "csv") {
      write_csv(command, records, os);
    } else {
      write_json(records, os);
    }
  };
  if (o.output == "-") {
    write(out);
    return;
  }
  std::ofstream f(o.output);
  if (!f) throw BadArgs("cannot open " + o.output);
  write(f);
}

int dispatch(const std::string& cmd, const Options& o, std::ostream& out, std::ostream& err) {
  RankParam rank(Rational(1));
  try {
    rank = RankParam(Rational::parse(o.theta));
  } catch (const std::invalid_argument& e) {
    throw BadArgs(e.what());
  }
  require(std::isfinite(o.t) && o.t >= 0.0, "--t must be a non-negative number");

  if (cmd == "moments") {
    const int n = o.n < 0 ? kDefaultMomentOrder : o.n;
    require(n >= 1 && n <= kMaxExactOrder, "--n must lie in [1, " + std::to_string(kMaxExactOrder) + "]");
    emit(cmd, moments_records(rank, o.t, n), o, out);
  } else if (cmd == "stationary") {
    require(o.points >= 1 && o.points <= 1000000, "--points must lie in [1, 1e6]");
    emit(cmd, stationary_records(rank, o.points), o, out);
  } else if (cmd == "flow") {
    require(o.steps >= 1 && o.steps <= 100000, "--steps must lie in [1, 1e5]");
    for (double z : o.zs) require(z > -1.0 && z < 1.0, "--z values must lie in (-1, 1)");
    emit(cmd, flow_records(rank, o.t, o.steps, o.zs), o, out);
  } else if (cmd == "blowup") {
    require(o.t > 0.0, "--t must be positive");
    require(rank.abs_kappa() != Rational(1), "blowup is undefined at theta = 1");
    emit(cmd, blowup_records(rank, o.t), o, out);
  } else if (cmd == "jacobi") {
    const int n = o.n < 0 ? 4000 : o.n;
    require(n >= 1 && n <= 20000, "--n must lie in [1, 20000]");
    emit(cmd, jacobi_records(rank, o.t, n), o, out);
  } else if (cmd == "verify") {
    const auto checks = run_checks(rank);
    print_matrix(checks, out);
    if (o.output != "-") emit(cmd, verify_records(checks), o, out);
    return all_passed(checks) ? kExitOk : kExitVerifyFailed;
  } else if (cmd == "simulate") {
#ifdef FREESPEC_HAS_MATRIX_ORACLE
    const int n = o.n < 0 ? 2 : o.n;
    require(n >= 1 && n <= 8, "--n must lie in [1, 8]");
    require(o.N >= 2 && o.N <= 4096, "--N must lie in [2, 4096]");
    require(o.trials >= 2, "--trials must be at least 2");
    require(o.dt > 0.0 && o.dt <= 0.01, "--dt must lie in (0, 0.01]");
    require(o.threads >= 0, "--threads must be non-negative");
    SimConfig cfg;
    cfg.N = o.N;
    cfg.theta = rank.theta_d();
    cfg.t_end = o.t;
    cfg.dt = o.dt;
    cfg.trials = o.trials;
    cfg.seed = o.seed;
    cfg.threads = o.threads;
    std::vector<int> ns;
    for (int k = 1; k <= n; ++k) ns.push_back(k);
    const auto res = simulate_moments(cfg, ns);
    const auto table = solve_recursion(rank, n);
    json recs = json::array();
    for (const auto& e : res.estimates) {
      const double exact = r_moment(table, e.n, o.t);
      recs.push_back({{"theta", rank.theta().str()}, {"N", res.N}, {"trials", res.trials}, {"t", o.t},
                      {"n", e.n}, {"mean", e.mean}, {"std_error", e.std_error}, {"exact", exact},
                      {"z_score", number((e.mean - exact) / e.std_error)}});
    }
    err << "simulate: " << res.seconds << " s, max unitarity defect " << res.max_unitarity_defect << ", "
        << res.reorthonormalizations << " re-orthonormalization(s)\n";
    emit(cmd, recs, o, out);
#else
    err << "simulate: this build has no matrix oracle (configure with -DFREESPEC_MATRIX_ORACLE=ON)\n";
    return kExitUnavailable;
#endif
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral distribution of S Y_t S Y_t^* and the free Jacobi process"};
  app.require_subcommand(1);
  Options o;

  const auto common = [&](CLI::App* sub, bool uses_t) {
    sub->add_option("--theta", o.theta, "rank parameter, p/q or decimal, in (0, 1]")->required();
    if (uses_t) sub->add_option("--t", o.t, "time");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output,-o", o.output, "output file ('-' for stdout)");
  };

  auto* moments = app.add_subcommand("moments", "exact moments s_n(t) and r_n(t)");
  common(moments, true);
  moments->add_option("--n", o.n, "highest order (default 12)");

  auto* stationary = app.add_subcommand("stationary", "stationary measure: atom and density samples");
  common(stationary, false);
  stationary->add_option("--points", o.points, "number of angle samples");

  auto* flow = app.add_subcommand("flow", "psi(t, z) along the characteristic flow");
  common(flow, true);
  flow->add_option("--steps", o.steps, "time samples in [0, t]");
  flow->add_option("--z", o.zs, "starting points in (-1, 1)");

  auto* blowup = app.add_subcommand("blowup", "blow-up point (a_t, y_t, z_t) at time t");
  common(blowup, true);

  auto* jacobi = app.add_subcommand("jacobi", "free Jacobi moments and their large-n limit");
  common(jacobi, true);
  jacobi->add_option("--n", o.n, "largest n (default 4000)");

  auto* verify = app.add_subcommand("verify", "run all cross-checks, print a pass/fail matrix");
  common(verify, false);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo moments from unitary Brownian motion");
  common(simulate, true);
  simulate->add_option("--n", o.n, "moments 1..n (default 2)");
  simulate->add_option("--N", o.N, "matrix size");
  simulate->add_option("--trials", o.trials, "independent trajectories");
  simulate->add_option("--dt", o.dt, "time step");
  simulate->add_option("--seed", o.seed, "RNG seed");
  simulate->add_option("--threads", o.threads, "worker threads (0: FREESPEC_THREADS or all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadArgs;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return dispatch(cmd, o, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadArgs;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadArgs;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadArgs;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
}

}  // namespace freespec::cli
