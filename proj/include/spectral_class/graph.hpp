#pragma once

// Simple undirected graphs on at most 64 vertices, stored as bitset rows.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spectral_class {

inline constexpr int kMaxVertices = 64;

using VertexSet = std::uint64_t;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

constexpr VertexSet low_bits(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(s)));
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw GraphError("vertex count " + std::to_string(n) + " outside 0.." +
                       std::to_string(kMaxVertices));
  }

  Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  /// Builds a graph from rows of '0'/'1' characters; the matrix must be
  /// symmetric with a zero diagonal.
  static Graph from_rows(std::span<const std::string_view> rows) {
    Graph g(static_cast<int>(rows.size()));
    for (int i = 0; i < g.n_; ++i) {
      if (static_cast<int>(rows[i].size()) != g.n_)
        throw GraphError("adjacency row " + std::to_string(i) + " has wrong length");
      for (int j = 0; j < g.n_; ++j) {
        const char c = rows[i][j];
        if (c != '0' && c != '1') throw GraphError("adjacency entries must be 0 or 1");
        if (c == '1') g.rows_[i] |= bit(j);
      }
    }
    for (int i = 0; i < g.n_; ++i) {
      if (g.rows_[i] & bit(i)) throw GraphError("adjacency matrix has a nonzero diagonal");
      for (int j = 0; j < g.n_; ++j)
        if (g.adjacent(i, j) != g.adjacent(j, i))
          throw GraphError("adjacency matrix is not symmetric");
    }
    return g;
  }

  static Graph from_rows(std::initializer_list<std::string_view> rows) {
    return from_rows(std::span<const std::string_view>(rows.begin(), rows.size()));
  }

  int order() const { return n_; }

  VertexSet row(int v) const { return rows_[v]; }
  VertexSet vertices() const { return low_bits(n_); }

  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }

  int degree(int v) const { return std::popcount(rows_[v]); }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    rows_[u] &= ~bit(v);
    rows_[v] &= ~bit(u);
  }

  VertexSet isolated_vertices() const {
    VertexSet s = 0;
    for (int v = 0; v < n_; ++v)
      if (rows_[v] == 0) s |= bit(v);
    return s;
  }

  int isolated_count() const { return std::popcount(isolated_vertices()); }

  /// Graph with vertex v of this graph placed at position perm[v].
  Graph relabeled(std::span<const int> perm) const {
    Graph h(n_);
    for (int v = 0; v < n_; ++v) {
      VertexSet r = rows_[v];
      VertexSet out = 0;
      while (r) {
        out |= bit(perm[std::countr_zero(r)]);
        r &= r - 1;
      }
      h.rows_[perm[v]] = out;
    }
    return h;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v)
      if (a.rows_[v] != b.rows_[v]) return false;
    return true;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw GraphError("vertex " + std::to_string(v) + " out of range for order " +
                       std::to_string(n_));
  }

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> rows_{};
};

// ---------------------------------------------------------------------------
// Standard graphs

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

/// Complete multipartite graph; classes occupy consecutive vertex ranges in
/// the given order.
inline Graph complete_multipartite(std::span<const int> class_sizes) {
  int n = 0;
  for (int s : class_sizes) {
    if (s < 0) throw GraphError("negative class size");
    n += s;
  }
  Graph g(n);
  std::vector<int> cls;
  cls.reserve(static_cast<std::size_t>(n));
  for (int c = 0; c < static_cast<int>(class_sizes.size()); ++c)
    for (int i = 0; i < class_sizes[c]; ++i) cls.push_back(c);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (cls[i] != cls[j]) g.add_edge(i, j);
  return g;
}

inline Graph complete_multipartite(std::initializer_list<int> class_sizes) {
  return complete_multipartite(std::span<const int>(class_sizes.begin(), class_sizes.size()));
}

inline Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

// ---------------------------------------------------------------------------
// Structural operations

inline Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (!g.adjacent(i, j)) h.add_edge(i, j);
  return h;
}

/// Block-diagonal union; vertices of h follow those of g.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  if (g.order() + h.order() > kMaxVertices)
    throw GraphError("disjoint union would exceed " + std::to_string(kMaxVertices) +
                     " vertices");
  Graph u(g.order() + h.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j : members(g.row(i))) u.add_edge(i, j);
  const int off = g.order();
  for (int i = 0; i < h.order(); ++i)
    for (int j : members(h.row(i))) u.add_edge(off + i, off + j);
  return u;
}

inline Graph add_isolated(const Graph& g, int count) {
  return disjoint_union(g, Graph(count));
}

/// Subgraph induced on vs, relabeled in ascending vertex order.
inline Graph induced_subgraph(const Graph& g, VertexSet vs) {
  if (vs & ~g.vertices()) throw GraphError("vertex subset exceeds graph order");
  const std::vector<int> keep = members(vs);
  Graph h(static_cast<int>(keep.size()));
  for (int a = 0; a < h.order(); ++a)
    for (int b = a + 1; b < h.order(); ++b)
      if (g.adjacent(keep[a], keep[b])) h.add_edge(a, b);
  return h;
}

inline Graph induced_subgraph(const Graph& g, std::span<const int> vs) {
  VertexSet s = 0;
  for (int v : vs) {
    if (v < 0 || v >= g.order())
      throw GraphError("vertex " + std::to_string(v) + " out of range for order " +
                       std::to_string(g.order()));
    s |= bit(v);
  }
  return induced_subgraph(g, s);
}

/// Connected components as vertex sets, ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (unseen) {
    VertexSet comp = bit(std::countr_zero(unseen));
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for (int v : members(frontier)) next |= g.row(v);
      next &= ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

/// The 0-vertex graph counts as connected.
inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

/// Removes isolated vertices, keeping the remaining vertices in order.
inline Graph strip_isolated(const Graph& g) {
  return induced_subgraph(g, g.vertices() & ~g.isolated_vertices());
}

}  // namespace spectral_class
