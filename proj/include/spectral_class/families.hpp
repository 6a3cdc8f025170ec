#pragma once

// The catalog of graphs with at most two adjacency eigenvalues outside
// {-2, 0}: constructors in the displayed block order, closed-form spectra,
// and recognition of an arbitrary graph as catalog instances.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spectral_class/canonical.hpp"
#include "spectral_class/exact_linalg.hpp"
#include "spectral_class/graph.hpp"

namespace spectral_class {

enum class FamilyId { G0, G1, G2, G3, G4, G5, G6, G7, G8, G9, G10, G11, G12, CP };

inline constexpr std::array kAllFamilies = {
    FamilyId::G0, FamilyId::G1, FamilyId::G2,  FamilyId::G3,  FamilyId::G4,
    FamilyId::G5, FamilyId::G6, FamilyId::G7,  FamilyId::G8,  FamilyId::G9,
    FamilyId::G10, FamilyId::G11, FamilyId::G12, FamilyId::CP};

inline std::string_view family_name(FamilyId id) {
  static constexpr std::array<std::string_view, 14> names = {
      "G0", "G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8", "G9", "G10", "G11", "G12", "CP"};
  return names[static_cast<std::size_t>(id)];
}

inline std::optional<FamilyId> parse_family_name(std::string_view s) {
  for (FamilyId id : kAllFamilies)
    if (family_name(id) == s) return id;
  return std::nullopt;
}

inline int family_arity(FamilyId id) {
  switch (id) {
    case FamilyId::G0:
    case FamilyId::G2:
    case FamilyId::G5:
    case FamilyId::G8:
      return 2;
    case FamilyId::G4:
    case FamilyId::G6:
    case FamilyId::G9:
    case FamilyId::CP:
      return 1;
    default:
      return 0;
  }
}

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FamilyInstance {
  FamilyId id = FamilyId::G0;
  std::vector<int> params;

  std::string to_string() const {
    std::string s(family_name(id));
    if (!params.empty()) {
      s += '(';
      for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(params[i]);
      }
      s += ')';
    }
    return s;
  }

  friend auto operator<=>(const FamilyInstance&, const FamilyInstance&) = default;
  friend bool operator==(const FamilyInstance&, const FamilyInstance&) = default;
};

/// Throws FamilyError naming the violated bound.
inline void validate(const FamilyInstance& f) {
  const auto& p = f.params;
  const std::string name(family_name(f.id));
  if (static_cast<int>(p.size()) != family_arity(f.id))
    throw FamilyError(name + " takes " + std::to_string(family_arity(f.id)) + " parameter(s), got " +
                      std::to_string(p.size()));
  auto need = [&](bool ok, const char* bound) {
    if (!ok) throw FamilyError(f.to_string() + " violates " + bound);
  };
  switch (f.id) {
    case FamilyId::G0:
      need(p[1] >= 1, "m >= 1");
      need(p[0] >= p[1], "l >= m");
      break;
    case FamilyId::G2:
      need(p[0] >= 3, "k >= 3");
      need(p[1] >= 1, "m >= 1");
      break;
    case FamilyId::G4:
      need(p[0] >= 2, "k >= 2");
      break;
    case FamilyId::G5:
      need(p[1] >= 2, "l >= 2");
      need(p[0] >= p[1], "k >= l");
      break;
    case FamilyId::G6:
      need(p[0] >= 3, "m >= 3");
      break;
    case FamilyId::G8:
      need(p[1] >= 1, "l >= 1");
      need(p[0] >= p[1], "k >= l");
      need(p[0] >= 2, "k >= 2");
      break;
    case FamilyId::G9:
      need(p[0] >= 0, "k >= 0");
      break;
    case FamilyId::CP:
      need(p[0] >= 1, "k >= 1");
      break;
    default:
      break;
  }
}

inline int vertex_count(const FamilyInstance& f) {
  validate(f);
  const auto& p = f.params;
  switch (f.id) {
    case FamilyId::G0: return p[0] + p[1];
    case FamilyId::G1: return 5;
    case FamilyId::G2: return 2 * (p[0] - 1) + p[1];
    case FamilyId::G3: return 10;
    case FamilyId::G4: return 5 + 2 * p[0];
    case FamilyId::G5: return 2 * p[0] + 2 * p[1];
    case FamilyId::G6: return 2 * p[0];
    case FamilyId::G7: return 15;
    case FamilyId::G8: return 2 * p[0] + 2 * p[1] + 1;
    case FamilyId::G9: return 8 + 2 * p[0];
    case FamilyId::G10: return 9;
    case FamilyId::G11: return 9;
    case FamilyId::G12: return 8;
    case FamilyId::CP: return 2 * p[0];
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Constructors

namespace detail {

// Block matrix assembly: `sizes` are the diagonal block orders and
// `edges(bi, bj, i, j)` reports adjacency of local vertex i of block bi and
// local vertex j of block bj.
template <class F>
Graph assemble_blocks(const std::vector<int>& sizes, F&& edges) {
  std::vector<int> offset(sizes.size() + 1, 0);
  for (std::size_t b = 0; b < sizes.size(); ++b) offset[b + 1] = offset[b] + sizes[b];
  Graph g(offset.back());
  for (std::size_t bi = 0; bi < sizes.size(); ++bi)
    for (std::size_t bj = bi; bj < sizes.size(); ++bj)
      for (int i = 0; i < sizes[bi]; ++i)
        for (int j = 0; j < sizes[bj]; ++j) {
          const int u = offset[bi] + i, v = offset[bj] + j;
          if (u < v && edges(static_cast<int>(bi), static_cast<int>(bj), i, j)) g.add_edge(u, v);
        }
  return g;
}

// Adjacency of CP(k) on local indices: classes {2t, 2t+1}.
inline bool cp_adjacent(int i, int j) { return i / 2 != j / 2; }

inline Graph cocktail_party(int k) {
  return assemble_blocks({2 * k}, [](int, int, int i, int j) { return cp_adjacent(i, j); });
}

inline Graph star_k14() { return complete_multipartite({1, 4}); }

}  // namespace detail

inline Graph construct(const FamilyInstance& f) {
  using detail::assemble_blocks;
  using detail::cp_adjacent;
  validate(f);
  const auto& p = f.params;
  switch (f.id) {
    case FamilyId::G0:
      return complete_multipartite({p[0], p[1]});
    case FamilyId::G1:
      return complete_multipartite({1, 1, 3});
    case FamilyId::G2: {
      std::vector<int> sizes(static_cast<std::size_t>(p[0] - 1), 2);
      sizes.push_back(p[1]);
      return complete_multipartite(sizes);
    }
    case FamilyId::G3:
      return disjoint_union(detail::star_k14(), detail::star_k14());
    case FamilyId::G4:
      return disjoint_union(detail::star_k14(), detail::cocktail_party(p[0]));
    case FamilyId::G5:
      return disjoint_union(detail::cocktail_party(p[0]), detail::cocktail_party(p[1]));
    case FamilyId::CP:
      return detail::cocktail_party(p[0]);
    case FamilyId::G6: {
      // [J-I, I; I, J-I]
      return assemble_blocks({p[0], p[0]}, [](int bi, int bj, int i, int j) {
        return bi == bj ? i != j : i == j;
      });
    }
    case FamilyId::G7: {
      // [J-I, J-I, 0; J-I, J-I, 1; 0, 1, 0]
      return assemble_blocks({7, 7, 1}, [](int bi, int bj, int i, int j) {
        if (bj == 2) return bi == 1;
        return i != j;
      });
    }
    case FamilyId::G8: {
      // [C(k), O, 1; O, C(l), 1; 1, 1, 0]
      return assemble_blocks({2 * p[0], 2 * p[1], 1}, [](int bi, int bj, int i, int j) {
        if (bj == 2) return bi != 2;
        return bi == bj && cp_adjacent(i, j);
      });
    }
    case FamilyId::G9: {
      // block orders 2, 3, 3, 2k:
      // [O, O, J, J; O, J-I, J-I, O; J, J-I, J-I, J; J, O, J, C(k)]
      std::vector<int> sizes{2, 3, 3};
      if (p[0] > 0) sizes.push_back(2 * p[0]);
      return assemble_blocks(sizes, [](int bi, int bj, int i, int j) {
        // bi <= bj
        switch (bi * 4 + bj) {
          case 0 * 4 + 0: return false;
          case 0 * 4 + 1: return false;
          case 0 * 4 + 2: return true;
          case 0 * 4 + 3: return true;
          case 1 * 4 + 1: return i != j;
          case 1 * 4 + 2: return i != j;
          case 1 * 4 + 3: return false;
          case 2 * 4 + 2: return i != j;
          case 2 * 4 + 3: return true;
          case 3 * 4 + 3: return cp_adjacent(i, j);
          default: return false;
        }
      });
    }
    case FamilyId::G10:
      return Graph::from_rows({"000011110", "000000001", "000000001", "000011111", "100100110",
                               "100100111", "100111000", "100111001", "011101010"});
    case FamilyId::G11:
      return Graph::from_rows({"000001100", "000001100", "000000011", "000000011", "000001111",
                               "110010101", "110011010", "001110101", "001111010"});
    case FamilyId::G12:
      return Graph::from_rows({"00000010", "00000010", "00000001", "00000001", "00000011",
                               "00000011", "11001101", "00111110"});
  }
  throw FamilyError("unknown family");
}

// ---------------------------------------------------------------------------
// Closed-form spectra

/// x^2 - b x + c
struct Quadratic {
  std::int64_t b = 0;
  std::int64_t c = 0;

  std::int64_t discriminant() const { return b * b - 4 * c; }
  friend bool operator==(const Quadratic&, const Quadratic&) = default;
};

struct SymbolicSpectrum {
  int mult_minus2 = 0;
  int mult_zero = 0;
  std::vector<std::int64_t> linear;    // exact integer eigenvalues beyond -2^t, 0^z
  std::optional<Quadratic> quadratic;  // two further eigenvalues as roots of x^2 - bx + c

  int total_multiplicity() const {
    return mult_minus2 + mult_zero + static_cast<int>(linear.size()) + (quadratic ? 2 : 0);
  }

  Polynomial expand() const {
    Polynomial p = Polynomial::monomial(mult_zero) * Polynomial{2, 1}.pow(mult_minus2);
    for (auto r : linear) p = p * Polynomial::linear(BigInt(r));
    if (quadratic) p = p * Polynomial::quadratic(BigInt(quadratic->b), BigInt(quadratic->c));
    return p;
  }

  /// All eigenvalues, descending.
  std::vector<double> numeric() const {
    std::vector<double> v(static_cast<std::size_t>(mult_zero), 0.0);
    v.insert(v.end(), static_cast<std::size_t>(mult_minus2), -2.0);
    for (auto r : linear) v.push_back(static_cast<double>(r));
    if (quadratic) {
      const double b = static_cast<double>(quadratic->b);
      const double s = std::sqrt(static_cast<double>(quadratic->discriminant()));
      v.push_back((b + s) / 2);
      v.push_back((b - s) / 2);
    }
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
  }

  std::string to_string() const;
};

inline SymbolicSpectrum symbolic_spectrum(const FamilyInstance& f) {
  validate(f);
  const auto& p = f.params;
  SymbolicSpectrum s;
  auto quad_from_center = [](std::int64_t center, std::int64_t radicand) {
    // roots center +- sqrt(radicand)
    return Quadratic{2 * center, center * center - radicand};
  };
  switch (f.id) {
    case FamilyId::G0:
      s.mult_zero = p[0] + p[1] - 2;
      s.quadratic = Quadratic{0, -static_cast<std::int64_t>(p[0]) * p[1]};
      break;
    case FamilyId::G1:
      s.mult_minus2 = 1;
      s.mult_zero = 2;
      s.linear = {-1, 3};
      break;
    case FamilyId::G2: {
      const std::int64_t k = p[0], m = p[1];
      s.mult_minus2 = p[0] - 2;
      s.mult_zero = p[0] + p[1] - 2;
      s.quadratic = quad_from_center(k - 2, k * k + 2 * (k - 1) * (m - 2));
      break;
    }
    case FamilyId::G3:
      // 2K_{1,4} on 10 vertices: the kernel has dimension 6
      s.mult_minus2 = 2;
      s.mult_zero = 6;
      s.linear = {2, 2};
      break;
    case FamilyId::G4:
      s.mult_minus2 = p[0];
      s.mult_zero = p[0] + 3;
      s.linear = {2, 2 * p[0] - 2};
      break;
    case FamilyId::G5:
      s.mult_minus2 = p[0] + p[1] - 2;
      s.mult_zero = p[0] + p[1];
      s.linear = {2 * p[1] - 2, 2 * p[0] - 2};
      break;
    case FamilyId::CP:
      s.mult_minus2 = p[0] - 1;
      s.mult_zero = p[0];
      s.linear = {2 * p[0] - 2};
      break;
    case FamilyId::G6:
      s.mult_minus2 = p[0] - 1;
      s.mult_zero = p[0] - 1;
      s.linear = {p[0] - 2, p[0]};
      break;
    case FamilyId::G7:
      s.mult_minus2 = 7;
      s.mult_zero = 6;
      s.quadratic = quad_from_center(7, 28);  // 7 +- 2 sqrt 7
      break;
    case FamilyId::G8: {
      const std::int64_t k = p[0], l = p[1];
      s.mult_minus2 = p[0] + p[1] - 1;
      s.mult_zero = p[0] + p[1];
      s.quadratic = quad_from_center(k + l - 1, (k - l) * (k - l) + 1);
      break;
    }
    case FamilyId::G9: {
      const std::int64_t k = p[0];
      s.mult_minus2 = p[0] + 3;
      s.mult_zero = p[0] + 3;
      s.quadratic = quad_from_center(k + 3, k * k + 3);
      break;
    }
    case FamilyId::G10:
      s.mult_minus2 = 3;
      s.mult_zero = 4;
      s.quadratic = quad_from_center(3, 2);
      break;
    case FamilyId::G11:
      s.mult_minus2 = 3;
      s.mult_zero = 4;
      s.linear = {2, 4};
      break;
    case FamilyId::G12:
      s.mult_minus2 = 2;
      s.mult_zero = 4;
      s.linear = {1, 3};
      break;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Display

namespace detail {

inline std::string superscript(int k) {
  static constexpr std::array<std::string_view, 10> digits = {"⁰", "¹", "²", "³", "⁴",
                                                              "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s;
  for (char c : std::to_string(k)) s += digits[static_cast<std::size_t>(c - '0')];
  return s;
}

inline std::string signed_int(std::int64_t v) {
  return v < 0 ? "−" + std::to_string(-v) : std::to_string(v);
}

inline std::optional<std::int64_t> exact_sqrt(std::int64_t v) {
  if (v < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  if (r * r == v) return r;
  return std::nullopt;
}

// sqrt(v) = outer * sqrt(inner) with inner square-free
inline std::pair<std::int64_t, std::int64_t> simplify_radical(std::int64_t v) {
  std::int64_t outer = 1, inner = v;
  for (std::int64_t f = 2; f * f <= inner; ++f)
    while (inner % (f * f) == 0) {
      inner /= f * f;
      outer *= f;
    }
  return {outer, inner};
}

inline std::string radical(std::int64_t v) {
  auto [outer, inner] = simplify_radical(v);
  return (outer == 1 ? "" : std::to_string(outer)) + "√" + std::to_string(inner);
}

}  // namespace detail

/// Display with superscript multiplicities, e.g. "{−2², 0⁴, 3±√2}".
inline std::string SymbolicSpectrum::to_string() const {
  std::vector<std::pair<std::int64_t, int>> items;  // value, multiplicity
  auto add = [&](std::int64_t v, int m) {
    if (m == 0) return;
    for (auto& [val, mult] : items)
      if (val == v) {
        mult += m;
        return;
      }
    items.emplace_back(v, m);
  };
  add(-2, mult_minus2);
  add(0, mult_zero);
  for (auto r : linear) add(r, 1);
  std::string irrational;
  if (quadratic) {
    const std::int64_t d = quadratic->discriminant();
    if (auto root = detail::exact_sqrt(d); root && (quadratic->b + *root) % 2 == 0) {
      add((quadratic->b + *root) / 2, 1);
      add((quadratic->b - *root) / 2, 1);
    } else if (quadratic->b % 2 == 0 && d % 4 == 0) {
      const std::int64_t center = quadratic->b / 2;
      irrational = (center == 0 ? "" : detail::signed_int(center)) + "±" + detail::radical(d / 4);
    } else {
      irrational = "(" + detail::signed_int(quadratic->b) + "±" + detail::radical(d) + ")/2";
    }
  }
  std::sort(items.begin(), items.end());
  std::string out = "{";
  bool first = true;
  for (auto [v, m] : items) {
    if (!first) out += ", ";
    first = false;
    out += detail::signed_int(v);
    if (m > 1) out += detail::superscript(m);
  }
  if (!irrational.empty()) out += (first ? "" : ", ") + irrational;
  return out + "}";
}

/// The same display for any char poly whose residual factor has degree <= 2.
inline std::optional<SymbolicSpectrum> symbolic_from_shape(const SpectrumShape& shape) {
  const Polynomial& q = shape.residual;
  if (q.degree() > 2) return std::nullopt;
  SymbolicSpectrum s;
  s.mult_minus2 = shape.mult_minus2;
  s.mult_zero = shape.mult_zero;
  if (q.degree() == 1) s.linear = {static_cast<std::int64_t>(-q.coeff(0))};
  if (q.degree() == 2)
    s.quadratic = Quadratic{static_cast<std::int64_t>(-q.coeff(1)), static_cast<std::int64_t>(q.coeff(0))};
  return s;
}

// ---------------------------------------------------------------------------
// Catalog enumeration and recognition

/// All instances with exactly n vertices, in family-id then parameter order.
inline std::vector<FamilyInstance> catalog_instances(int n) {
  std::vector<FamilyInstance> out;
  auto push = [&](FamilyId id, std::vector<int> params) {
    FamilyInstance f{id, std::move(params)};
    if (vertex_count(f) == n) out.push_back(std::move(f));
  };
  for (int m = 1; 2 * m <= n; ++m) push(FamilyId::G0, {n - m, m});
  push(FamilyId::G1, {});
  for (int k = 3; 2 * (k - 1) + 1 <= n; ++k)
    if (n - 2 * (k - 1) >= 1) push(FamilyId::G2, {k, n - 2 * (k - 1)});
  push(FamilyId::G3, {});
  if (n >= 9 && (n - 5) % 2 == 0) push(FamilyId::G4, {(n - 5) / 2});
  if (n % 2 == 0)
    for (int l = 2; 4 * l <= n; ++l) push(FamilyId::G5, {n / 2 - l, l});
  if (n % 2 == 0 && n >= 6) push(FamilyId::G6, {n / 2});
  push(FamilyId::G7, {});
  if (n % 2 == 1)
    for (int l = 1; 4 * l + 1 <= n; ++l)
      if ((n - 1) / 2 - l >= 2) push(FamilyId::G8, {(n - 1) / 2 - l, l});
  if (n >= 8 && n % 2 == 0) push(FamilyId::G9, {(n - 8) / 2});
  push(FamilyId::G10, {});
  push(FamilyId::G11, {});
  push(FamilyId::G12, {});
  if (n >= 2 && n % 2 == 0) push(FamilyId::CP, {n / 2});
  return out;
}

inline std::vector<FamilyInstance> catalog_instances_up_to(int max_n) {
  std::vector<FamilyInstance> out;
  for (int n = 1; n <= max_n; ++n) {
    auto v = catalog_instances(n);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

namespace detail {

inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace detail

/// Every (id, params) whose construction is isomorphic to g. Overlapping
/// labels (e.g. CP(2) and G0(2,2)) are all reported.
inline std::vector<FamilyInstance> recognize(const Graph& g) {
  if (g.order() > kMaxCanonicalVertices)
    throw GraphError("recognize supports at most " + std::to_string(kMaxCanonicalVertices) +
                     " vertices, got " + std::to_string(g.order()));
  std::vector<FamilyInstance> out;
  const auto degrees = detail::degree_sequence(g);
  std::optional<CanonicalForm> cert;
  for (auto& f : catalog_instances(g.order())) {
    const Graph h = construct(f);
    if (h.edge_count() != g.edge_count() || detail::degree_sequence(h) != degrees) continue;
    if (!cert) cert = canonical_form(g);
    if (canonical_form(h) == *cert) out.push_back(f);
  }
  return out;
}

}  // namespace spectral_class
