#pragma once

// Canonical labeling by individualization and refinement.
//
// The search tree individualizes a vertex of the first non-singleton cell and
// refines to an equitable ordered partition. Leaves are compared by
// (refinement trace, relabeled adjacency); the largest leaf is canonical.
// Subtrees are pruned when their trace falls below the best trace seen, or
// when an automorphism that fixes the current prefix maps the candidate vertex
// onto one that was already explored.

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "spectral_class/graph.hpp"
#include "spectral_class/graph6.hpp"

namespace spectral_class {

inline constexpr int kMaxCanonicalVertices = 16;

struct CanonicalForm {
  /// graph6 encoding of the canonically relabeled graph.
  std::string cert;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  std::vector<int> perm;  // perm[v] = canonical position of v
  Graph graph;            // g.relabeled(perm)
  CanonicalForm form;
};

namespace detail {

using Partition = std::vector<VertexSet>;
using Trace = std::vector<int>;

/// Refines to the coarsest equitable partition finer than `cells`. Each split
/// appends label-invariant data to `trace`.
inline void refine(const Graph& g, Partition& cells, Trace& trace) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size(); ++s) {
      const VertexSet splitter = cells[s];
      for (std::size_t c = 0; c < cells.size(); ++c) {
        const VertexSet cell = cells[c];
        if ((cell & (cell - 1)) == 0) continue;
        // counts are < 64, bucket by count
        int lo = 64, hi = -1;
        std::array<VertexSet, 65> bucket{};
        for (VertexSet r = cell; r; r &= r - 1) {
          const int v = std::countr_zero(r);
          const int k = std::popcount(g.row(v) & splitter);
          bucket[k] |= bit(v);
          lo = std::min(lo, k);
          hi = std::max(hi, k);
        }
        if (lo == hi) continue;
        Partition pieces;
        trace.push_back(static_cast<int>(s));
        trace.push_back(static_cast<int>(c));
        for (int k = lo; k <= hi; ++k) {
          if (!bucket[k]) continue;
          pieces.push_back(bucket[k]);
          trace.push_back(k);
          trace.push_back(std::popcount(bucket[k]));
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(),
                     pieces.end());
        c += pieces.size() - 1;
        changed = true;
      }
    }
  }
  trace.push_back(-1);
  trace.push_back(static_cast<int>(cells.size()));
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run() {
    Partition cells;
    if (n_ > 0) cells.push_back(g_.vertices());
    Trace trace;
    std::vector<int> prefix;
    explore(cells, trace, prefix);
    CanonicalLabeling out;
    out.perm = best_perm_;
    out.graph = best_graph_;
    out.form.cert = to_graph6(best_graph_);
    return out;
  }

 private:
  struct Rows {
    std::vector<VertexSet> rows;
    friend auto operator<=>(const Rows&, const Rows&) = default;
  };

  Rows rows_of(const Graph& h) const {
    Rows r;
    r.rows.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) r.rows[v] = h.row(v);
    return r;
  }

  void explore(Partition cells, Trace trace, std::vector<int>& prefix) {
    refine(g_, cells, trace);

    if (have_best_) {
      // Compare on the common prefix; a smaller trace can never win.
      const std::size_t len = std::min(trace.size(), best_trace_.size());
      const auto cmp = std::lexicographical_compare_three_way(
          trace.begin(), trace.begin() + static_cast<std::ptrdiff_t>(len), best_trace_.begin(),
          best_trace_.begin() + static_cast<std::ptrdiff_t>(len));
      if (cmp < 0) return;
    }

    auto target = std::find_if(cells.begin(), cells.end(),
                               [](VertexSet c) { return (c & (c - 1)) != 0; });
    if (target == cells.end()) {
      leaf(cells, trace);
      return;
    }
    const std::size_t t = static_cast<std::size_t>(target - cells.begin());
    const VertexSet cell = *target;

    std::vector<int> explored;
    for (int v : members(cell)) {
      if (!explored.empty() && pruned_by_automorphism(prefix, explored, v)) continue;
      explored.push_back(v);
      Partition child = cells;
      child[t] = cell & ~bit(v);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(t), bit(v));
      prefix.push_back(v);
      explore(std::move(child), trace, prefix);
      prefix.pop_back();
    }
  }

  void leaf(const Partition& cells, const Trace& trace) {
    std::vector<int> perm(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < cells.size(); ++i) perm[std::countr_zero(cells[i])] = static_cast<int>(i);
    Graph h = g_.relabeled(perm);
    Rows r = rows_of(h);

    if (!have_first_) {
      have_first_ = true;
      first_perm_ = perm;
      first_rows_ = r;
    } else if (r == first_rows_) {
      record_automorphism(first_perm_, perm);
    }

    if (!have_best_) {
      have_best_ = true;
      adopt(perm, std::move(h), std::move(r), trace);
      return;
    }
    const auto cmp = std::lexicographical_compare_three_way(trace.begin(), trace.end(),
                                                            best_trace_.begin(), best_trace_.end());
    if (cmp > 0 || (cmp == 0 && r > best_rows_)) {
      adopt(perm, std::move(h), std::move(r), trace);
    } else if (cmp == 0 && r == best_rows_) {
      record_automorphism(best_perm_, perm);
    }
  }

  void adopt(const std::vector<int>& perm, Graph h, Rows r, const Trace& trace) {
    best_perm_ = perm;
    best_graph_ = std::move(h);
    best_rows_ = std::move(r);
    best_trace_ = trace;
  }

  // Both labelings give the same graph, so inv(b) . a is an automorphism.
  void record_automorphism(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> b_inv(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) b_inv[b[v]] = v;
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      gamma[v] = b_inv[a[v]];
      identity = identity && gamma[v] == v;
    }
    if (!identity) automorphisms_.push_back(std::move(gamma));
  }

  bool pruned_by_automorphism(const std::vector<int>& prefix, const std::vector<int>& explored,
                              int v) const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& gamma : automorphisms_) {
      bool fixes = true;
      for (int p : prefix)
        if (gamma[p] != p) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n_; ++x) parent[find(x)] = find(gamma[x]);
    }
    if (!any) return false;
    const int root = find(v);
    return std::any_of(explored.begin(), explored.end(), [&](int u) { return find(u) == root; });
  }

  const Graph& g_;
  int n_;

  bool have_first_ = false;
  std::vector<int> first_perm_;
  Rows first_rows_;

  bool have_best_ = false;
  std::vector<int> best_perm_;
  Graph best_graph_;
  Rows best_rows_;
  Trace best_trace_;

  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace detail

inline CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() > kMaxCanonicalVertices)
    throw GraphError("canonical form supports at most " + std::to_string(kMaxCanonicalVertices) +
                     " vertices, got " + std::to_string(g.order()));
  if (g.order() == 0) return CanonicalLabeling{{}, Graph(0), CanonicalForm{to_graph6(Graph(0))}};
  return detail::CanonicalSearch(g).run();
}

inline CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

inline bool isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace spectral_class
