#pragma once

// Equitable partitions and their quotient matrices.
//
// A partition {V_1..V_m} is equitable when every vertex of V_i has the same
// number q_ij of neighbours in V_j. The eigenvalues of Q = (q_ij) are then a
// sub-multiset of the adjacency eigenvalues, which is checked here as exact
// divisibility of characteristic polynomials.

#include <bit>
#include <optional>
#include <stdexcept>
#include <vector>

#include "spectral_class/exact_linalg.hpp"
#include "spectral_class/graph.hpp"

namespace spectral_class {

using VertexPartition = std::vector<VertexSet>;

inline bool is_partition_of(const Graph& g, const VertexPartition& cells) {
  VertexSet seen = 0;
  for (VertexSet c : cells) {
    if (c == 0 || (c & seen)) return false;
    seen |= c;
  }
  return seen == g.vertices();
}

/// Quotient matrix, or nullopt when the partition is not equitable.
inline std::optional<IntMatrix> try_quotient_matrix(const Graph& g, const VertexPartition& cells) {
  if (!is_partition_of(g, cells)) throw std::invalid_argument("cells do not partition the vertex set");
  const int m = static_cast<int>(cells.size());
  IntMatrix q(m);
  for (int i = 0; i < m; ++i) {
    const int first = std::countr_zero(cells[i]);
    for (int j = 0; j < m; ++j) {
      const int want = std::popcount(g.row(first) & cells[j]);
      for (int v : members(cells[i]))
        if (std::popcount(g.row(v) & cells[j]) != want) return std::nullopt;
      q(i, j) = want;
    }
  }
  return q;
}

inline bool is_equitable(const Graph& g, const VertexPartition& cells) {
  return try_quotient_matrix(g, cells).has_value();
}

inline IntMatrix quotient_matrix(const Graph& g, const VertexPartition& cells) {
  auto q = try_quotient_matrix(g, cells);
  if (!q) throw std::invalid_argument("partition is not equitable");
  return *q;
}

/// Every eigenvalue of the quotient matrix (with multiplicity) is an
/// adjacency eigenvalue: det(xI - Q) divides det(xI - A).
inline bool quotient_eigenvalues_contained(const Graph& g, const VertexPartition& cells) {
  return char_poly(quotient_matrix(g, cells)).divides(char_poly(g));
}

}  // namespace spectral_class
