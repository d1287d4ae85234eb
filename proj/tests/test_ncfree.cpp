#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>
#include <vector>

#include "freespec/moments.hpp"
#include "freespec/ncfree.hpp"
#include "freespec/stationary.hpp"

using namespace freespec;

namespace {

long catalan(int m) {
  long c = 1;
  for (int k = 0; k < m; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

std::vector<RankParam> ranks() {
  return {RankParam(Rational(1, 2)), RankParam(Rational(3, 4)), RankParam(Rational(4, 5)),
          RankParam(Rational(1))};
}

// Kreweras complement through permutations: K(pi) = pi^{-1} gamma with gamma = (1 2 ... m)
// and each block of pi read as an increasing cycle.
NCPartition kreweras_by_permutation(const NCPartition& p) {
  const int m = p.m;
  std::vector<int> perm(static_cast<std::size_t>(m + 1)), inv(static_cast<std::size_t>(m + 1));
  for (const auto& b : p.blocks) {
    for (std::size_t j = 0; j < b.size(); ++j) perm[b[j]] = b[(j + 1) % b.size()];
  }
  for (int i = 1; i <= m; ++i) inv[perm[i]] = i;
  std::vector<int> k(static_cast<std::size_t>(m + 1));
  for (int i = 1; i <= m; ++i) k[i] = inv[i % m + 1];
  std::vector<int> labels(static_cast<std::size_t>(m), -1);
  int next = 0;
  for (int i = 1; i <= m; ++i) {
    if (labels[i - 1] >= 0) continue;
    for (int j = i; labels[j - 1] < 0; j = k[j]) labels[j - 1] = next;
    ++next;
  }
  return partition_from_labels(labels);
}

NCPartition discrete(int m) {
  std::vector<int> l(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) l[i] = i;
  return partition_from_labels(l);
}

NCPartition full(int m) { return partition_from_labels(std::vector<int>(static_cast<std::size_t>(m), 0)); }

NCPartition rotate(const NCPartition& p) {
  std::vector<int> labels = p.block_of();
  std::vector<int> r(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) r[i] = labels[(i + 1) % labels.size()];
  return partition_from_labels(r);
}

}  // namespace

TEST_CASE("enumeration yields each non-crossing partition once") {
  for (int m = 1; m <= 10; ++m) {
    std::set<std::vector<int>> seen;
    long count = 0;
    for_each_nc(m, [&](const NCPartition& p) {
      ++count;
      CHECK(p.is_valid());
      if (m <= 8) CHECK(p.is_non_crossing());
      seen.insert(p.block_of());
    });
    CHECK(count == catalan(m));
    CHECK(static_cast<long>(seen.size()) == count);
  }
  long c12 = 0;
  for_each_nc(12, [&](const NCPartition&) { ++c12; });
  CHECK(c12 == 208012);
  CHECK(enumerate_nc(2).size() == 2);
  CHECK(enumerate_nc(4).size() == 14);
  CHECK(enumerate_nc(5).size() == 42);
  CHECK(enumerate_nc(6).size() == 132);
  CHECK_THROWS_AS(for_each_nc(0, [](const NCPartition&) {}), std::out_of_range);
  CHECK_THROWS_AS(enumerate_nc(13), std::out_of_range);
}

TEST_CASE("crossing detection") {
  CHECK_FALSE(partition_from_labels({0, 1, 0, 1}).is_non_crossing());
  CHECK(partition_from_labels({0, 1, 1, 0}).is_non_crossing());
}

TEST_CASE("Kreweras complement") {
  CHECK(kreweras(discrete(5)) == full(5));
  CHECK(kreweras(full(5)) == discrete(5));
  for (int m = 1; m <= 8; ++m) {
    for_each_nc(m, [&](const NCPartition& p) {
      const auto k = kreweras(p);
      CHECK(k == kreweras_by_permutation(p));
      CHECK(p.size() + k.size() == static_cast<std::size_t>(m + 1));
      CHECK(k.is_non_crossing());
      CHECK(kreweras(k) == rotate(p));
    });
  }
}

TEST_CASE("even blocks of pi <=> parity-pure blocks of K(pi)") {
  for (int m : {8, 10}) {
    for_each_nc(m, [&](const NCPartition& p) {
      bool pure = true;
      for (const auto& v : kreweras(p).blocks) {
        for (int i : v) pure = pure && (i % 2 == v.front() % 2);
      }
      CHECK(pure == p.all_blocks_even());
    });
  }
}

TEST_CASE("free cumulants of S") {
  const RankParam rank(Rational(4, 5));
  const Rational k = rank.kappa();
  const auto c = cumulants_of_S(rank, 10);
  CHECK(c[1] == k);
  CHECK(c[2] == Rational(1) - k * k);
  CHECK(c[3] == Rational(-2) * k * (Rational(1) - k * k));
  CHECK(c[4] == -(Rational(1) - k * k) * (Rational(1) - Rational(5) * k * k));
  // round trip through the moment-cumulant formula over NC(k)
  for (const auto& r : ranks()) {
    const auto cr = cumulants_of_S(r, 10);
    for (int m = 1; m <= 10; ++m) {
      Rational moment(0);
      for_each_nc(m, [&](const NCPartition& p) {
        Rational term(1);
        for (const auto& b : p.blocks) term *= cr[b.size()];
        moment += term;
      });
      CHECK(moment == (m % 2 ? r.kappa() : Rational(1)));
    }
  }
  const auto haar = cumulants_of_S(RankParam(Rational(1, 2)), 6);
  CHECK(haar[1] == Rational(0));
  CHECK(haar[2] == Rational(1));
  CHECK(haar[3] == Rational(0));
  CHECK(haar[4] == Rational(-1));
  CHECK_THROWS_AS(cumulants_of_S(rank, 0), std::invalid_argument);
}

TEST_CASE("P_n(eps, 0) three ways") {
  for (const auto& r : ranks()) {
    const auto table = solve_recursion(r, 5);
    const Rational eps = r.eps();
    CHECK(p_n_at_zero(r, 1) == Rational(1) - eps);
    CHECK(p_n_at_zero(r, 2) == (Rational(1) - eps) * (Rational(1) + Rational(3) * eps));
    for (int n = 1; n <= 5; ++n) {
      const Rational a = p_n_at_zero(r, n);
      CHECK(a == p_n_at_zero_halved(r, n));
      CHECK(a == table.s(n).part(0).coeff(0));
    }
  }
  for (int n = 1; n <= 5; ++n) {
    CHECK(p_n_at_zero(RankParam(Rational(1, 2)), n) == Rational(1));
    CHECK(p_n_at_zero_halved(RankParam(Rational(1)), n) == Rational(0));
  }
  CHECK_THROWS_AS(p_n_at_zero(RankParam(Rational(1, 2)), 6), std::out_of_range);
  CHECK_THROWS_AS(p_n_at_zero_halved(RankParam(Rational(1, 2)), 0), std::out_of_range);
}

TEST_CASE("unitary Brownian motion moments") {
  CHECK(unitary_bm_moment(0, 3.0) == 1.0);
  CHECK(unitary_bm_moment(1, 0.7) == doctest::Approx(std::exp(-0.35)));
  CHECK(unitary_bm_moment(2, 0.7) == doctest::Approx(std::exp(-0.7) * (1.0 - 0.7)));
  CHECK(unitary_bm_moment(-3, 0.4) == unitary_bm_moment(3, 0.4));
  for (int k = 1; k <= 6; ++k) CHECK(unitary_bm_moment(k, 0.0) == doctest::Approx(1.0));
}

TEST_CASE("combinatorial moments match the recursion") {
  for (const auto& r : {RankParam(Rational(1, 2)), RankParam(Rational(3, 4)), RankParam(Rational(4, 5))}) {
    const auto table = solve_recursion(r, 5);
    for (int n = 1; n <= 5; ++n) {
      CHECK(r_n_combinatorial(r, n, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
      for (double t : {0.1, 0.5, 1.0, 2.0}) {
        CHECK(std::abs(r_n_combinatorial(r, n, t) - r_moment(table, n, t)) < 1e-10);
      }
      CHECK(std::abs(r_n_combinatorial(r, n, 60.0) - stationary_moment_jacobi(r, n).to_double()) <
            1e-8);
    }
    const double t = 0.8;
    CHECK(r_n_combinatorial(r, 1, t) ==
          doctest::Approx(r.eps_d() + (1.0 - r.eps_d()) * std::exp(-t)).epsilon(1e-14));
  }
}
