#pragma once

// Membership in the class of graphs with at most two adjacency eigenvalues
// outside {-2, 0}, plus the structural checks that every connected member
// with two positive eigenvalues must satisfy.

#include <algorithm>
#include <bit>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spectral_class/canonical.hpp"
#include "spectral_class/exact_linalg.hpp"
#include "spectral_class/families.hpp"
#include "spectral_class/graph.hpp"

namespace spectral_class {

// ---------------------------------------------------------------------------
// Forbidden induced subgraphs

struct ForbiddenPattern {
  char id;  // 'a'..'m'
  Graph graph;
};

inline const std::vector<ForbiddenPattern>& forbidden_patterns() {
  static const std::vector<ForbiddenPattern> patterns = [] {
    std::vector<ForbiddenPattern> p;
    p.push_back({'a', complete_multipartite({1, 5})});
    p.push_back({'b', complete_multipartite({2, 3})});
    p.push_back({'c', cycle_graph(5)});
    p.push_back({'d', Graph::from_rows({"00111", "00111", "11000", "11001", "11010"})});
    p.push_back({'e', Graph::from_rows({"00011", "00011", "00001", "11000", "11100"})});
    p.push_back({'f', Graph::from_rows({"000111", "000111", "000111", "111011", "111101", "111110"})});
    p.push_back({'g', Graph::from_rows({"000111", "000011", "000011", "100011", "111101", "111110"})});
    p.push_back({'h', Graph::from_rows({"000111", "000011", "000011", "100000", "111001", "111010"})});
    p.push_back({'i', Graph::from_rows({"000011", "000011", "000011", "000011", "111101", "111110"})});
    p.push_back({'j', Graph::from_rows({"000011", "000011", "000011", "000001", "111001", "111110"})});
    p.push_back({'k', Graph::from_rows({"000011", "000001", "000001", "000001", "100001", "111110"})});
    p.push_back({'l', Graph::from_rows({"000011", "000001", "000001", "000001", "100000", "111100"})});
    p.push_back({'m', Graph::from_rows({"000011", "000011", "000001", "000001", "110000", "111100"})});
    return p;
  }();
  return patterns;
}

namespace detail {

class InducedEmbedding {
 public:
  InducedEmbedding(const Graph& pattern, const Graph& target) : p_(pattern), t_(target) {
    // most constrained first: high degree, then connected to what is placed
    std::vector<int> rest(static_cast<std::size_t>(p_.order()));
    for (int v = 0; v < p_.order(); ++v) rest[v] = v;
    while (!rest.empty()) {
      auto best = std::max_element(rest.begin(), rest.end(), [&](int a, int b) {
        const int ca = placed_neighbours(a), cb = placed_neighbours(b);
        if (ca != cb) return ca < cb;
        if (p_.degree(a) != p_.degree(b)) return p_.degree(a) < p_.degree(b);
        return a > b;
      });
      order_.push_back(*best);
      rest.erase(best);
    }
    map_.assign(static_cast<std::size_t>(p_.order()), -1);
  }

  std::optional<std::vector<int>> find() {
    if (p_.order() > t_.order()) return std::nullopt;
    if (extend(0, 0)) return map_;
    return std::nullopt;
  }

 private:
  int placed_neighbours(int v) const {
    int c = 0;
    for (int u : order_) c += p_.adjacent(u, v) ? 1 : 0;
    return c;
  }

  bool extend(std::size_t depth, VertexSet used) {
    if (depth == order_.size()) return true;
    const int pv = order_[depth];
    VertexSet cand = t_.vertices() & ~used;
    for (std::size_t i = 0; i < depth; ++i) {
      const int pu = order_[i];
      const VertexSet nbrs = t_.row(map_[pu]);
      cand &= p_.adjacent(pu, pv) ? nbrs : ~nbrs;
    }
    const int need = p_.degree(pv);
    for (; cand; cand &= cand - 1) {
      const int tv = std::countr_zero(cand);
      if (t_.degree(tv) < need) continue;
      map_[pv] = tv;
      if (extend(depth + 1, used | bit(tv))) return true;
    }
    map_[pv] = -1;
    return false;
  }

  const Graph& p_;
  const Graph& t_;
  std::vector<int> order_;
  std::vector<int> map_;
};

}  // namespace detail

/// One induced copy of `pattern` in `target`: entry i is the target vertex
/// playing pattern vertex i.
inline std::optional<std::vector<int>> find_induced(const Graph& pattern, const Graph& target) {
  return detail::InducedEmbedding(pattern, target).find();
}

struct ForbiddenHit {
  char pattern;
  std::vector<int> embedding;
};

/// One witness for each forbidden pattern present as an induced subgraph.
inline std::vector<ForbiddenHit> forbidden_scan(const Graph& g) {
  std::vector<ForbiddenHit> hits;
  for (const auto& p : forbidden_patterns())
    if (auto emb = find_induced(p.graph, g)) hits.push_back({p.id, std::move(*emb)});
  return hits;
}

// ---------------------------------------------------------------------------
// Cocliques

struct Coclique {
  int alpha = 0;
  std::vector<int> witness;
};

inline constexpr int kMaxCocliqueVertices = 32;

namespace detail {

// Maximises (size, outgoing edges); the first optimum met in include-first
// ascending-vertex order is the lexicographically smallest one.
class CocliqueSearch {
 public:
  explicit CocliqueSearch(const Graph& g) : g_(g) {}

  Coclique run() {
    branch(0, g_.vertices(), 0, 0);
    return {best_size_, members(best_set_)};
  }

 private:
  int clique_cover_bound(VertexSet cand) const {
    int cover = 0;
    while (cand) {
      VertexSet clique = bit(std::countr_zero(cand));
      VertexSet common = g_.row(std::countr_zero(cand)) & cand;
      while (common) {
        const int v = std::countr_zero(common);
        clique |= bit(v);
        common &= g_.row(v);
      }
      cand &= ~clique;
      ++cover;
    }
    return cover;
  }

  int top_degree_sum(VertexSet cand, int k) const {
    std::vector<int> d;
    for (int v : members(cand)) d.push_back(g_.degree(v));
    std::sort(d.begin(), d.end(), std::greater<>());
    int s = 0;
    for (int i = 0; i < k && i < static_cast<int>(d.size()); ++i) s += d[i];
    return s;
  }

  void branch(VertexSet cur, VertexSet cand, int size, int outgoing) {
    if (!cand) {
      if (size > best_size_ || (size == best_size_ && outgoing > best_out_)) {
        best_size_ = size;
        best_out_ = outgoing;
        best_set_ = cur;
      }
      return;
    }
    const int ub = size + clique_cover_bound(cand);
    if (ub < best_size_) return;
    if (ub == best_size_ && outgoing + top_degree_sum(cand, best_size_ - size) <= best_out_) return;

    const int v = std::countr_zero(cand);
    branch(cur | bit(v), cand & ~bit(v) & ~g_.row(v), size + 1, outgoing + g_.degree(v));
    branch(cur, cand & ~bit(v), size, outgoing);
  }

  const Graph& g_;
  int best_size_ = -1;
  int best_out_ = -1;
  VertexSet best_set_ = 0;
};

}  // namespace detail

/// Maximum coclique; among maximum ones the witness has the most outgoing
/// edges, then is lexicographically smallest.
inline Coclique max_coclique(const Graph& g) {
  if (g.order() > kMaxCocliqueVertices)
    throw GraphError("max_coclique supports at most " + std::to_string(kMaxCocliqueVertices) +
                     " vertices, got " + std::to_string(g.order()));
  return detail::CocliqueSearch(g).run();
}

// ---------------------------------------------------------------------------
// Columns of A + I

struct ColumnPair {
  int i;
  int j;
  bool equal;  // false: almost equal (different weights, <= 2 differing positions)

  friend bool operator==(const ColumnPair&, const ColumnPair&) = default;
};

inline std::vector<ColumnPair> almost_equal_columns(const Graph& g) {
  std::vector<ColumnPair> out;
  for (int i = 0; i < g.order(); ++i) {
    const VertexSet ci = g.row(i) | bit(i);
    for (int j = i + 1; j < g.order(); ++j) {
      const VertexSet cj = g.row(j) | bit(j);
      if (ci == cj) {
        out.push_back({i, j, true});
      } else if (std::popcount(ci) != std::popcount(cj) && std::popcount(ci ^ cj) <= 2) {
        out.push_back({i, j, false});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Spectral checks

inline int positive_eigenvalue_count(const Graph& g) { return inertia(char_poly(g)).positive; }

/// rank(E) = 2 and both nonzero eigenvalues of E = A(A+2I) positive.
inline bool psd_rank2_check(const Graph& g) {
  if (e_rank(g) != 2) return false;
  const CharPoly pe = char_poly(e_matrix<BigInt>(g));
  const int n = g.order();
  if (pe.zero_multiplicity() != n - 2) return false;
  const Polynomial q = pe.divide_by_x_power(n - 2);  // x^2 - p x + r
  const BigInt p = -q.coeff(1);
  const BigInt r = q.coeff(0);
  return p > 0 && r > 0;
}

// ---------------------------------------------------------------------------
// Full report

struct ClassificationReport {
  int order = 0;
  bool in_h = false;
  int residual_degree = 0;
  int e_rank = 0;
  int isolated_count = 0;
  bool in_h_prime = false;
  bool in_h2_prime = false;  // connected, in H', two positive eigenvalues
  bool connected = false;
  int n_pos = 0;
  CharPoly char_poly;
  SpectrumShape shape;
  std::optional<Coclique> coclique;                          // n <= 16
  std::optional<std::vector<FamilyInstance>> family_matches;  // n <= 16
  std::optional<std::vector<ForbiddenHit>> forbidden_hits;    // on request
};

inline constexpr int kMaxReportedStructureVertices = 16;

struct MembershipOptions {
  bool scan_forbidden = false;
};

inline ClassificationReport membership(const Graph& g, MembershipOptions opts = {}) {
  ClassificationReport r;
  r.order = g.order();
  r.char_poly = char_poly(g);
  r.shape = spectrum_shape(r.char_poly);
  r.residual_degree = r.shape.residual_degree() < 0 ? 0 : r.shape.residual_degree();
  r.e_rank = e_rank(g);
  r.in_h = r.e_rank <= 2;
  if (r.in_h != (r.residual_degree <= 2))
    throw std::logic_error("rank(E) and spectrum shape disagree on membership");
  r.isolated_count = g.isolated_count();
  r.in_h_prime = r.in_h && r.isolated_count == 0;
  r.connected = is_connected(g);
  r.n_pos = inertia(r.char_poly).positive;
  r.in_h2_prime = r.in_h_prime && r.connected && r.n_pos == 2;
  if (g.order() <= kMaxReportedStructureVertices) {
    r.coclique = max_coclique(g);
    r.family_matches = recognize(g);
  }
  if (opts.scan_forbidden) r.forbidden_hits = forbidden_scan(g);
  return r;
}

}  // namespace spectral_class
