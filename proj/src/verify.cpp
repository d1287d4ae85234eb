#include "freespec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "freespec/convolution.hpp"
#include "freespec/flow.hpp"
#include "freespec/jacobi_bridge.hpp"
#include "freespec/moments.hpp"
#include "freespec/ncfree.hpp"
#include "freespec/orthopoly.hpp"
#include "freespec/stationary.hpp"

namespace freespec {

namespace {

class Recorder {
 public:
  explicit Recorder(std::vector<Check>& out) : out_(out) {}

  void exact(const std::string& module, const std::string& name, bool ok, std::string detail = {}) {
    out_.push_back({module, name, ok, false, ok ? 0.0 : 1.0, 0.0, std::move(detail)});
  }
  void bound(const std::string& module, const std::string& name, double err, double tol,
             std::string detail = {}) {
    out_.push_back({module, name, err <= tol, false, err, tol, std::move(detail)});
  }
  void skip(const std::string& module, const std::string& name, std::string why) {
    out_.push_back({module, name, true, true, 0.0, 0.0, std::move(why)});
  }
  // runs body, turning an unexpected exception into a failed check
  template <class F>
  void guarded(const std::string& module, const std::string& name, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      out_.push_back({module, name, false, false, INFINITY, 0.0, std::string("threw: ") + e.what()});
    }
  }

 private:
  std::vector<Check>& out_;
};

void numeric_core(Recorder& rec) {
  rec.guarded("numeric-core", "jacobi_p10(1) = n+1", [&] {
    bool ok = true;
    for (unsigned n = 0; n <= 20; ++n) ok = ok && jacobi_p10(n)(Rational(1)) == Rational(n + 1);
    rec.exact("numeric-core", "jacobi_p10(1) = n+1", ok, "n <= 20");
  });
  rec.guarded("numeric-core", "laguerre three-term recurrence", [&] {
    bool ok = true;
    const Poly x = Poly::monomial(1);
    for (unsigned n = 1; n < 20; ++n) {
      const Poly lhs = Rational(n + 1) * laguerre_l1(n + 1);
      const Poly rhs = (Poly({Rational(2 * n + 2)}) - x) * laguerre_l1(n) - Rational(n + 1) * laguerre_l1(n - 1);
      ok = ok && lhs == rhs;
    }
    rec.exact("numeric-core", "laguerre three-term recurrence", ok, "n <= 20");
  });
}

void moments_engine(Recorder& rec, const RankParam& rank, const MomentTable& table) {
  bool at_zero = true, freq = true;
  for (int n = 1; n <= table.n_max(); ++n) {
    const ExpPoly& s = table.s(n);
    at_zero = at_zero && s.at_zero() == Rational(1);
    freq = freq && s.max_frequency() <= n && s.part(n).degree() <= 0 &&
           s.part(n).coeff(0) == stationary_moment_jacobi(rank, n);
  }
  rec.exact("moments-engine", "s_n(0) = 1", at_zero, "n <= 12");
  rec.exact("moments-engine", "e^{nt} coefficient = r_n(inf)", freq, "n <= 12");

  const auto pde = check_pde_coefficients(table);
  rec.exact("moments-engine", "PDE coefficient identity",
            std::all_of(pde.begin(), pde.end(), [](const PdeCheck& c) { return c.passed; }));

  if (rank.eps().is_zero()) {
    bool ok = true;
    for (int n = 1; n <= table.n_max(); ++n) {
      // r_n = e^{-nt} L_{n-1}^{(1)}(2nt)/n
      const Poly l = laguerre_l1(static_cast<unsigned>(n - 1)).compose(Poly::monomial(1, Rational(2 * n)));
      ok = ok && table.s(n) == ExpPoly(0, l * Rational(1, n));
    }
    rec.exact("moments-engine", "Laguerre closed form", ok);
  } else {
    rec.skip("moments-engine", "Laguerre closed form", "only at eps = 0");
  }

  double worst = 0.0;
  const auto numeric = integrate_moments(rank, 1.0, table.n_max());
  for (int n = 1; n <= table.n_max(); ++n) {
    worst = std::max(worst, std::abs(numeric[static_cast<std::size_t>(n - 1)] - r_moment(table, n, 1.0)));
  }
  rec.bound("moments-engine", "exact vs RK4 at t=1", worst, 1e-9);
}

void stationary(Recorder& rec, const RankParam& rank) {
  bool agree = true;
  for (int n = 1; n <= 12; ++n) agree = agree && stationary_moment_jacobi(rank, n) == stationary_moment_sum(rank, n);
  rec.exact("stationary", "Jacobi formula = Pochhammer sum", agree, "n <= 12");

  const auto taylor = stationary_moments_taylor(rank, 12);
  double worst = 0.0;
  for (int n = 1; n <= 12; ++n) {
    worst = std::max(worst, std::abs(taylor[static_cast<std::size_t>(n - 1)] -
                                     stationary_moment_jacobi(rank, n).to_double()));
  }
  rec.bound("stationary", "Herglotz Taylor coefficients", worst, 1e-10);

  const auto mu = stationary_measure(rank);
  rec.bound("stationary", "total mass", std::abs(mu.total_mass() - 1.0), 1e-8);
  worst = 0.0;
  for (int n = 1; n <= 8; ++n) {
    worst = std::max(worst, std::abs(mu.moment(n) - stationary_moment_jacobi(rank, n).to_double()));
  }
  rec.bound("stationary", "quadrature moments", worst, 1e-8, "n <= 8");
}

void flow(Recorder& rec, const RankParam& rank) {
  if (rank.abs_kappa() == Rational(1)) {
    rec.skip("flow", "conserved identity", "|kappa| = 1: S is scalar");
    rec.skip("flow", "blow-up residual", "|kappa| = 1: S is scalar");
    rec.skip("flow", "atom limit", "|kappa| = 1: S is scalar");
  } else {
    rec.guarded("flow", "conserved identity", [&] {
      double worst = 0.0;
      int used = 0;
      for (double t : {0.1, 0.3, 0.5}) {
        const auto r = integrate_moments(rank, t, 80);
        for (double z : {-0.5, -0.2, 0.2, 0.5}) {
          double ps = 0.0;
          try {
            ps = psi(rank, t, z);
          } catch (const BlowupError&) {
            continue;
          }
          if (std::abs(ps) > 0.9) continue;
          worst = std::max(worst, conserved_identity_residual(rank, r, t, z, 80));
          ++used;
        }
      }
      rec.bound("flow", "conserved identity", worst, 1e-6, std::to_string(used) + " points, N = 80");
    });
    rec.guarded("flow", "blow-up residual", [&] {
      double worst = 0.0;
      for (double t : {0.25, 0.5, 1.0, 2.0}) worst = std::max(worst, blowup_point(rank, t).residual);
      rec.bound("flow", "blow-up residual", worst, 1e-12);
    });
    rec.guarded("flow", "atom limit", [&] {
      const double k = rank.kappa_d();
      const auto path = atom_limit_path(rank, 0.5);
      rec.bound("flow", "atom limit", std::abs(path.back().value - 4.0 * k * k), 1e-6, "t = 0.5");
    });
  }
  rec.guarded("flow", "monotonicity", [&] {
    std::vector<double> grid;
    for (int i = 0; i <= 200; ++i) grid.push_back(0.01 * i);
    rec.exact("flow", "monotonicity", flow_monotonicity_check(rank, grid, 1.1, 1.5));
  });
}

void ncfree(Recorder& rec, const RankParam& rank, const MomentTable& table) {
  bool ok = true;
  for (int n = 1; n <= 5; ++n) {
    const Rational p = p_n_at_zero(rank, n);
    ok = ok && p == p_n_at_zero_halved(rank, n) && p == table.s(n).part(0).coeff(0);
  }
  rec.exact("ncfree", "constant-term identity", ok, "n <= 5");

  rec.guarded("ncfree", "combinatorial moments", [&] {
    double worst = 0.0;
    for (double t : {0.1, 0.5, 1.0, 2.0}) {
      for (int n = 1; n <= 5; ++n) worst = std::max(worst, std::abs(r_n_combinatorial(rank, n, t) - r_moment(table, n, t)));
    }
    rec.bound("ncfree", "combinatorial moments", worst, 1e-10, "n <= 5");
  });

  bool kw = true;
  for (int m = 1; m <= 8; ++m) {
    for_each_nc(m, [&](const NCPartition& p) {
      const auto k = kreweras(p);
      kw = kw && k.is_non_crossing() && p.size() + k.size() == static_cast<std::size_t>(m + 1);
    });
  }
  rec.exact("ncfree", "Kreweras block count", kw, "m <= 8");

  const auto c = cumulants_of_S(rank, 10);
  const auto m = moments_from_cumulants(c);
  bool rt = true;
  for (int k = 1; k <= 10; ++k) rt = rt && m[static_cast<std::size_t>(k)] == (k % 2 ? rank.kappa() : Rational(1));
  rec.exact("ncfree", "cumulant round trip", rt, "k <= 10");
}

void convolution(Recorder& rec, const RankParam& rank) {
  rec.guarded("convolution", "K(G(z)) = z", [&] {
    double worst = 0.0;
    for (double x = 10.0; x <= 1000.0; x *= 1.25) {
      worst = std::max(worst, std::abs(k_transform(rank, cauchy_via_cubic(rank, x)) - x) / x);
    }
    rec.bound("convolution", "K(G(z)) = z", worst, 1e-10, "relative, z in [10, 1000]");
  });
  rec.guarded("convolution", "Laurent moments", [&] {
    const auto num = laurent_moments(rank, 8);
    const auto exact = half_convolution_moments(rank, 8);
    double worst = 0.0;
    for (int k = 1; k <= 8; ++k) {
      worst = std::max(worst, std::abs(num[static_cast<std::size_t>(k)] - exact[static_cast<std::size_t>(k)].to_double()));
    }
    rec.bound("convolution", "Laurent moments", worst, 1e-8, "moments 1..8");
  });
  double worst = 0.0;
  for (cplx z : {cplx(50.0), cplx(3.0), cplx(0.3, 0.8), cplx(-2.0, 0.1), cplx(1e3)}) {
    const auto cub = cubic_at(rank, z);
    for (double v : vieta_residuals(cub, solve_cubic(cub))) worst = std::max(worst, v);
  }
  rec.bound("convolution", "Vieta residuals", worst, 1e-12);
}

void jacobi_bridge(Recorder& rec, const RankParam& rank) {
  double worst = 0.0;
  for (int n = 1; n <= 20; ++n) {
    for (int i = 0; i < 100; ++i) {
      const auto ck = cosine_kernel_identity(n, 2.0 * std::numbers::pi * i / 100.0);
      worst = std::max(worst, std::abs(ck.lhs - ck.rhs));
    }
  }
  rec.bound("jacobi-bridge", "cosine kernel", worst, 1e-12, "n <= 20");

  rec.guarded("jacobi-bridge", "limit at n = 4000", [&] {
    const std::vector<int> grid{100, 1000, 4000};
    const auto lm = limit_moment(rank, 1.0, grid);
    rec.bound("jacobi-bridge", "limit at n = 4000", std::abs(lm.value.back() - lm.predicted_limit), 0.02, "t = 1");
    const double expect = std::max(2.0 * rank.theta_d() - 1.0, 0.0) / rank.theta_d();
    rec.bound("jacobi-bridge", "corollary weight", std::abs(corollary_weight(rank).to_double() - expect), 1e-15);
  });
}

}  // namespace

std::vector<Check> run_checks(const RankParam& rank) {
  std::vector<Check> out;
  Recorder rec(out);
  const auto table = solve_recursion(rank, 12);
  numeric_core(rec);
  moments_engine(rec, rank, table);
  stationary(rec, rank);
  flow(rec, rank);
  ncfree(rec, rank, table);
  convolution(rec, rank);
  jacobi_bridge(rec, rank);
  return out;
}

bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed || c.skipped; });
}

}  // namespace freespec
