#include "freespec/ncfree.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "freespec/orthopoly.hpp"

namespace freespec {

std::vector<int> NCPartition::block_of() const {
  std::vector<int> label(static_cast<std::size_t>(m), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int i : blocks[b]) label[static_cast<std::size_t>(i - 1)] = static_cast<int>(b);
  }
  return label;
}

bool NCPartition::is_valid() const {
  std::vector<int> seen(static_cast<std::size_t>(m), 0);
  int prev_min = 0;
  for (const auto& block : blocks) {
    if (block.empty() || block.front() <= prev_min) return false;
    prev_min = block.front();
    for (std::size_t j = 0; j < block.size(); ++j) {
      const int i = block[j];
      if (i < 1 || i > m) return false;
      if (j > 0 && block[j - 1] >= i) return false;
      if (seen[static_cast<std::size_t>(i - 1)]++) return false;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

bool NCPartition::is_non_crossing() const {
  const auto label = block_of();
  // a < b < c < d with a ~ c, b ~ d, a !~ b
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      if (label[a] == label[b]) continue;
      for (int c = b + 1; c < m; ++c) {
        if (label[c] != label[a]) continue;
        for (int d = c + 1; d < m; ++d) {
          if (label[d] == label[b]) return false;
        }
      }
    }
  return true;
}

bool NCPartition::all_blocks_even() const {
  return std::all_of(blocks.begin(), blocks.end(),
                     [](const auto& b) { return b.size() % 2 == 0; });
}

NCPartition partition_from_labels(const std::vector<int>& labels) {
  NCPartition p;
  p.m = static_cast<int>(labels.size());
  std::vector<std::pair<int, std::size_t>> index;  // label -> block position
  for (int i = 1; i <= p.m; ++i) {
    const int l = labels[static_cast<std::size_t>(i - 1)];
    auto it = std::find_if(index.begin(), index.end(), [l](const auto& e) { return e.first == l; });
    if (it == index.end()) {
      index.emplace_back(l, p.blocks.size());
      p.blocks.push_back({i});
    } else {
      p.blocks[it->second].push_back(i);
    }
  }
  return p;
}

namespace {

struct NcWalker {
  int m;
  const std::function<void(const NCPartition&)>& visit;
  NCPartition current;
  std::vector<std::size_t> open;  // stack of blocks that may still grow

  void step(int e) {
    if (e > m) {
      visit(current);
      return;
    }
    // start a new block
    current.blocks.push_back({e});
    open.push_back(current.blocks.size() - 1);
    step(e + 1);
    open.pop_back();
    current.blocks.pop_back();
    // join an open block; everything above it on the stack is closed for good
    for (std::size_t j = open.size(); j-- > 0;) {
      const std::size_t block = open[j];
      std::vector<std::size_t> closed(open.begin() + static_cast<std::ptrdiff_t>(j) + 1, open.end());
      open.resize(j + 1);
      current.blocks[block].push_back(e);
      step(e + 1);
      current.blocks[block].pop_back();
      open.insert(open.end(), closed.begin(), closed.end());
    }
  }
};

void check_n(int n, const char* who) {
  if (n < 1 || n > 5) throw std::out_of_range(std::string(who) + ": n must be in [1, 5]");
}

}  // namespace

void for_each_nc(int m, const std::function<void(const NCPartition&)>& visit) {
  if (m < 1 || m > kMaxNcSize) throw std::out_of_range("for_each_nc: m must be in [1, 12]");
  NcWalker w{m, visit, {}, {}};
  w.current.m = m;
  w.step(1);
}

std::vector<NCPartition> enumerate_nc(int m) {
  std::vector<NCPartition> out;
  for_each_nc(m, [&](const NCPartition& p) { out.push_back(p); });
  return out;
}

NCPartition kreweras(const NCPartition& p) {
  const int m = p.m;
  const auto label = p.block_of();
  // first[b], last[b]: extent of block b
  std::vector<int> first(p.size()), last(p.size());
  for (std::size_t b = 0; b < p.size(); ++b) {
    first[b] = p.blocks[b].front();
    last[b] = p.blocks[b].back();
  }
  // i' ~ j' (i < j) iff {i+1, ..., j} is a union of blocks of p.
  std::vector<int> klabel(static_cast<std::size_t>(m), -1);
  int next = 0;
  for (int i = 1; i <= m; ++i) {
    if (klabel[static_cast<std::size_t>(i - 1)] >= 0) continue;
    klabel[static_cast<std::size_t>(i - 1)] = next;
    int lo = m + 1, hi = 0;  // span of blocks touching {i+1..j}
    for (int j = i + 1; j <= m; ++j) {
      const auto b = static_cast<std::size_t>(label[static_cast<std::size_t>(j - 1)]);
      lo = std::min(lo, first[b]);
      hi = std::max(hi, last[b]);
      // {i+1..j} is closed under p iff every block met so far lies inside it; for
      // a non-crossing p it suffices to compare the extremes.
      if (lo >= i + 1 && hi <= j) klabel[static_cast<std::size_t>(j - 1)] = next;
    }
    ++next;
  }
  return partition_from_labels(klabel);
}

CumulantSeq free_cumulants(const std::vector<Rational>& moments) {
  const std::size_t k_max = moments.empty() ? 0 : moments.size() - 1;
  // m_n = sum_{s=1}^n c_s sum_{i_1 + ... + i_s = n - s} m_{i_1} ... m_{i_s}, m_0 = 1.
  // conv[s][j] = coefficient of x^j in M(x)^s, M(x) = sum_i m_i x^i.
  std::vector<Rational> m(moments);
  if (m.empty()) m.push_back(Rational(1));
  m[0] = Rational(1);
  std::vector<std::vector<Rational>> conv(k_max + 1,
                                          std::vector<Rational>(k_max + 1, Rational(0)));
  conv[0][0] = Rational(1);
  for (std::size_t s = 1; s <= k_max; ++s) {
    for (std::size_t j = 0; j <= k_max; ++j) {
      Rational acc(0);
      for (std::size_t i = 0; i <= j; ++i) acc += conv[s - 1][j - i] * m[i];
      conv[s][j] = acc;
    }
  }
  CumulantSeq out;
  out.c.assign(k_max + 1, Rational(0));
  for (std::size_t n = 1; n <= k_max; ++n) {
    Rational rest(0);
    for (std::size_t s = 1; s < n; ++s) rest += out.c[s] * conv[s][n - s];
    out.c[n] = m[n] - rest;
  }
  return out;
}

std::vector<Rational> moments_from_cumulants(const CumulantSeq& c) {
  const std::size_t k_max = c.k_max();
  std::vector<Rational> m(k_max + 1, Rational(0));
  m[0] = Rational(1);
  for (std::size_t n = 1; n <= k_max; ++n) {
    // [x^j] M(x)^s for j < n only involves m_0..m_{n-1}, which are final
    std::vector<Rational> power(n, Rational(0));
    power[0] = Rational(1);
    Rational acc(0);
    for (std::size_t s = 1; s <= n; ++s) {
      std::vector<Rational> next(n, Rational(0));
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i <= j; ++i) next[j] += power[j - i] * m[i];
      }
      power = std::move(next);
      acc += c.c[s] * power[n - s];
    }
    m[n] = acc;
  }
  return m;
}

CumulantSeq cumulants_of_S(const RankParam& rank, int k_max) {
  if (k_max < 1) throw std::invalid_argument("cumulants_of_S: k_max must be >= 1");
  std::vector<Rational> moments(static_cast<std::size_t>(k_max + 1));
  for (int k = 1; k <= k_max; ++k) moments[static_cast<std::size_t>(k)] = k % 2 ? rank.kappa() : Rational(1);
  return free_cumulants(moments);
}

Rational p_n_at_zero(const RankParam& rank, int n) {
  check_n(n, "p_n_at_zero");
  const auto c = cumulants_of_S(rank, 2 * n);
  Rational acc(0);
  for_each_nc(2 * n, [&](const NCPartition& p) {
    if (!p.all_blocks_even()) return;
    Rational term(1);
    for (const auto& b : p.blocks) term *= c[b.size()];
    acc += term;
  });
  return acc;
}

Rational p_n_at_zero_halved(const RankParam& rank, int n) {
  check_n(n, "p_n_at_zero_halved");
  const auto c = cumulants_of_S(rank, 2 * n);
  // c_k(a1 - a2) = c_k(a1) + (-1)^k c_k(a2)
  std::vector<Rational> diff(static_cast<std::size_t>(2 * n + 1), Rational(0));
  for (std::size_t k = 1; k < diff.size(); ++k) diff[k] = k % 2 ? c[k] - c[k] : c[k] + c[k];
  Rational acc(0);
  for_each_nc(2 * n, [&](const NCPartition& p) {
    Rational term(1);
    for (const auto& b : p.blocks) term *= diff[b.size()] / Rational(2);
    acc += term;
  });
  return acc;
}

double unitary_bm_moment(int k, double t) {
  if (k == 0) return 1.0;
  const int a = std::abs(k);
  const Poly l = laguerre_l1(static_cast<unsigned>(a - 1));
  const long double kt = static_cast<long double>(a) * t;
  return static_cast<double>(std::exp(-0.5L * kt) * l(kt) / a);
}

double r_n_combinatorial(const RankParam& rank, int n, double t) {
  check_n(n, "r_n_combinatorial");
  if (t < 0.0) throw std::domain_error("r_n_combinatorial: t must be non-negative");
  const int m = 2 * n;
  const auto c = cumulants_of_S(rank, m);
  std::vector<double> cd(static_cast<std::size_t>(m + 1));
  for (int k = 1; k <= m; ++k) cd[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k)].to_double();
  std::vector<double> ymom(static_cast<std::size_t>(m + 1));
  for (int k = 0; k <= m; ++k) ymom[static_cast<std::size_t>(k)] = unitary_bm_moment(k, t);

  long double acc = 0.0L;
  for_each_nc(m, [&](const NCPartition& p) {
    long double term = 1.0L;
    for (const auto& b : p.blocks) term *= cd[b.size()];
    if (term == 0.0L) return;
    for (const auto& v : kreweras(p).blocks) {
      int e = 0;
      for (int i : v) e += (i % 2) ? 1 : -1;  // dual point i' carries Y (i odd) or Y^* (i even)
      term *= ymom[static_cast<std::size_t>(std::abs(e))];
    }
    acc += term;
  });
  return static_cast<double>(acc);
}

}  // namespace freespec
