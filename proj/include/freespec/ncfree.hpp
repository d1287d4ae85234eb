#pragma once

#include <functional>
#include <vector>

#include "freespec/rank.hpp"

namespace freespec {

/// Partition of {1, ..., m} into blocks; each block is strictly increasing and
/// blocks are ordered by their smallest element.
struct NCPartition {
  int m = 0;
  std::vector<std::vector<int>> blocks;

  std::size_t size() const { return blocks.size(); }
  /// block_of()[i - 1] = index of the block containing i.
  std::vector<int> block_of() const;
  bool is_valid() const;
  bool is_non_crossing() const;
  bool all_blocks_even() const;

  friend bool operator==(const NCPartition&, const NCPartition&) = default;
};

/// Builds the canonical form from block labels of 1..m (labels arbitrary).
NCPartition partition_from_labels(const std::vector<int>& labels);

constexpr int kMaxNcSize = 12;

/// Calls `visit` once for every non-crossing partition of {1..m}, 1 <= m <= 12.
/// The partition passed in is only valid during the call.
void for_each_nc(int m, const std::function<void(const NCPartition&)>& visit);
/// Materialized version of for_each_nc.
std::vector<NCPartition> enumerate_nc(int m);

/// Kreweras complement. The dual point i' sits between i and i + 1 (cyclically);
/// i' and j' share a block iff no block of p crosses the chord (i', j').
/// Labelled by i, so K(p) is again a partition of {1..m}.
NCPartition kreweras(const NCPartition& p);

/// Free cumulants c[1..k_max] of a variable with moments m_k; c[0] is unused.
struct CumulantSeq {
  std::vector<Rational> c;
  const Rational& operator[](std::size_t k) const { return c.at(k); }
  std::size_t k_max() const { return c.empty() ? 0 : c.size() - 1; }
};

/// Inverts m_k = sum over NC(k) of products of cumulants; `moments[k]` is m_k
/// for k = 1..k_max (index 0 ignored).
CumulantSeq free_cumulants(const std::vector<Rational>& moments);

/// Moments m_0 = 1, m_1..m_{k_max} from free cumulants (inverse of free_cumulants).
std::vector<Rational> moments_from_cumulants(const CumulantSeq& c);

/// Cumulants of the symmetry S = 2P - 1: m_k = kappa (k odd), 1 (k even).
CumulantSeq cumulants_of_S(const RankParam& rank, int k_max);

/// Sum over NC(2n) partitions with only even blocks of prod_V c[|V|], 1 <= n <= 5.
Rational p_n_at_zero(const RankParam& rank, int n);

/// Sum over all of NC(2n) of 2^{-|pi|} prod_V (c_{|V|}(a1) + c_{|V|}(-a2)), where a1, a2
/// are free copies of S. 1 <= n <= 5.
Rational p_n_at_zero_halved(const RankParam& rank, int n);

/// tau(Y_t^k) = e^{-kt/2} L_{k-1}^{(1)}(kt)/k for the free unitary Brownian motion,
/// extended by tau(Y^0) = 1 and tau(Y^{-k}) = tau(Y^k).
double unitary_bm_moment(int k, double t);

/// r_n(t) = tau((S Y_t S Y_t^*)^n) as the sum over NC(2n) of c_pi(S) times the
/// moments of Y_t, Y_t^* along the blocks of K(pi). 1 <= n <= 5, t >= 0.
double r_n_combinatorial(const RankParam& rank, int n, double t);

}  // namespace freespec
