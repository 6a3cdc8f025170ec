#pragma once

// Oracles shared by the test binaries: permutation-based isomorphism,
// cofactor determinants and seeded random graphs.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "spectral_class/exact_linalg.hpp"
#include "spectral_class/graph.hpp"

namespace spectral_class::testing {

/// Tries every bijection; only for small n.
inline bool brute_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (g.relabeled(perm) == h) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Lexicographically smallest adjacency bitstring over all relabelings.
inline std::vector<bool> brute_certificate(const Graph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  do {
    const Graph h = g.relabeled(perm);
    std::vector<bool> bits;
    for (int j = 1; j < h.order(); ++j)
      for (int i = 0; i < j; ++i) bits.push_back(h.adjacent(i, j));
    if (best.empty() || bits < best) best = bits;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// det(xI - A) evaluated at integer x by cofactor expansion.
inline BigInt cofactor_det(const std::vector<std::vector<BigInt>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const BigInt term = m[0][c] * cofactor_det(minor);
    det += (c % 2 == 0) ? term : BigInt(-term);
  }
  return det;
}

inline BigInt char_poly_at(const Graph& g, long long x) {
  const int n = g.order();
  std::vector<std::vector<BigInt>> m(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = (i == j ? BigInt(x) : BigInt(0)) - (g.adjacent(i, j) ? 1 : 0);
  return cofactor_det(m);
}

/// Rank by integer Gauss-Jordan elimination with row gcd reduction; fine for
/// the small matrices used in tests.
inline int naive_rank(std::vector<std::vector<long long>> a) {
  const int n = static_cast<int>(a.size());
  const int m = n ? static_cast<int>(a[0].size()) : 0;
  int rank = 0;
  for (int c = 0; c < m && rank < n; ++c) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (a[r][c] != 0) piv = r;
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    for (int r = 0; r < n; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const long long f = a[r][c], p = a[rank][c];
      for (int k = 0; k < m; ++k) a[r][k] = a[r][k] * p - a[rank][k] * f;
      long long g = 0;
      for (int k = 0; k < m; ++k) g = std::gcd(g, a[r][k]);
      if (g > 1)
        for (int k = 0; k < m; ++k) a[r][k] /= g;
    }
    ++rank;
  }
  return rank;
}

}  // namespace spectral_class::testing
