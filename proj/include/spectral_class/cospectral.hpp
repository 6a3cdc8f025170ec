#pragma once

// Cospectrality inside the class: equal nonzero spectra among catalog
// instances, cospectral mates obtained by padding with isolated vertices, and
// the determined-by-spectrum decision.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "spectral_class/canonical.hpp"
#include "spectral_class/exact_linalg.hpp"
#include "spectral_class/families.hpp"
#include "spectral_class/graph.hpp"

namespace spectral_class {

/// char_poly / x^(multiplicity of 0): equal keys <=> equal nonzero spectra.
struct NonzeroSpectrumKey {
  Polynomial poly;
  friend bool operator==(const NonzeroSpectrumKey&, const NonzeroSpectrumKey&) = default;
};

inline NonzeroSpectrumKey nonzero_key(const CharPoly& p) {
  return {p.divide_by_x_power(p.zero_multiplicity())};
}

inline NonzeroSpectrumKey nonzero_key(const Graph& g) { return nonzero_key(char_poly(g)); }

namespace detail {

inline FamilyInstance fi(FamilyId id, std::vector<int> p = {}) { return {id, std::move(p)}; }

// Instances sharing the nonzero spectrum of x by a single class rule, plus
// other labels of the same graph.
inline std::vector<FamilyInstance> direct_mates(const FamilyInstance& x) {
  using F = FamilyId;
  std::vector<FamilyInstance> out;
  const auto& p = x.params;
  auto add_group = [&](std::vector<FamilyInstance> group) {
    if (std::find(group.begin(), group.end(), x) != group.end())
      out.insert(out.end(), group.begin(), group.end());
  };

  // K_{l,m} and K_{l',m'} with lm = l'm'
  if (x.id == F::G0) {
    const int prod = p[0] * p[1];
    for (int m = 1; m * m <= prod; ++m)
      if (prod % m == 0) out.push_back(fi(F::G0, {prod / m, m}));
  }
  // {G4(k), G5(k,2)}
  if (x.id == F::G4) out.push_back(fi(F::G5, {p[0], 2}));
  if (x.id == F::G5 && p[1] == 2) out.push_back(fi(F::G4, {p[0]}));
  // {G5(k+1,k), G6(2k), G8(k,k)}, k >= 2
  {
    int k = 0;
    if (x.id == F::G5 && p[0] == p[1] + 1) k = p[1];
    if (x.id == F::G6 && p[0] % 2 == 0) k = p[0] / 2;
    if (x.id == F::G8 && p[0] == p[1]) k = p[0];
    if (k >= 2) add_group({fi(F::G5, {k + 1, k}), fi(F::G6, {2 * k}), fi(F::G8, {k, k})});
  }
  add_group({fi(F::G6, {3}), fi(F::G12)});
  add_group({fi(F::G4, {4}), fi(F::G5, {4, 2}), fi(F::G9, {1})});
  add_group({fi(F::G4, {3}), fi(F::G5, {3, 2}), fi(F::G6, {4}), fi(F::G8, {2, 2}), fi(F::G11)});
  add_group({fi(F::G3), fi(F::G4, {2}), fi(F::G5, {2, 2})});

  // same graph under two labels
  if (x.id == F::CP && p[0] >= 3) out.push_back(fi(F::G2, {p[0], 2}));
  if (x.id == F::G2 && p[1] == 2) out.push_back(fi(F::CP, {p[0]}));
  if (x.id == F::CP && p[0] == 2) out.push_back(fi(F::G0, {2, 2}));
  if (x.id == F::G0 && p[0] == 2 && p[1] == 2) out.push_back(fi(F::CP, {2}));
  return out;
}

}  // namespace detail

/// All catalog instances with the nonzero spectrum of f, closed under the
/// class rules (transitively) and under relabelings of the same graph.
/// Sorted; includes f.
inline std::vector<FamilyInstance> theorem6_class(const FamilyInstance& f) {
  validate(f);
  std::set<FamilyInstance> seen{f};
  std::vector<FamilyInstance> todo{f};
  while (!todo.empty()) {
    const FamilyInstance x = todo.back();
    todo.pop_back();
    for (auto& y : detail::direct_mates(x))
      if (seen.insert(y).second) todo.push_back(y);
  }
  return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------

struct CospectralMate {
  Graph graph;
  FamilyInstance core;
  int padding = 0;  // isolated vertices added to the core

  std::string description() const {
    std::string s = core.to_string();
    if (padding == 1) s += "+K1";
    if (padding > 1) s += "+" + std::to_string(padding) + "K1";
    return s;
  }
};

class NotInClassError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Non-isomorphic graphs in the class with exactly the spectrum of g.
inline std::vector<CospectralMate> cospectral_mates(const Graph& g) {
  if (g.order() > kMaxCanonicalVertices)
    throw GraphError("cospectral_mates supports at most " + std::to_string(kMaxCanonicalVertices) +
                     " vertices");
  if (!in_h_by_rank(g)) throw NotInClassError("graph has more than two eigenvalues outside {-2, 0}");
  const Graph core = strip_isolated(g);
  if (core.order() == 0) return {};
  const auto labels = recognize(core);
  if (labels.empty())
    throw std::logic_error("class member " + to_graph6(core) + " matches no catalog instance");

  std::set<FamilyInstance> klass;
  for (const auto& f : labels) {
    const auto c = theorem6_class(f);
    klass.insert(c.begin(), c.end());
  }

  const CanonicalForm self = canonical_form(g);
  std::set<CanonicalForm> seen{self};
  std::vector<CospectralMate> out;
  for (const auto& f : klass) {
    const int nv = vertex_count(f);
    if (nv > g.order()) continue;
    Graph h = add_isolated(construct(f), g.order() - nv);
    if (!seen.insert(canonical_form(h)).second) continue;
    out.push_back({std::move(h), f, g.order() - nv});
  }
  return out;
}

enum class DsReason { UniqueInClass, BipartiteDivisor, CoincidenceClass };

inline std::string_view ds_reason_name(DsReason r) {
  switch (r) {
    case DsReason::UniqueInClass: return "unique-in-class";
    case DsReason::BipartiteDivisor: return "bipartite-divisor";
    case DsReason::CoincidenceClass: return "theorem6-class";
  }
  return "";
}

struct DsVerdict {
  bool is_ds = true;
  DsReason reason = DsReason::UniqueInClass;
  std::vector<CospectralMate> mates;
};

/// Verdict for any member of the class; isolated vertices are handled by
/// comparing padded cores.
inline DsVerdict ds_verdict(const Graph& g) {
  DsVerdict v;
  v.mates = cospectral_mates(g);
  v.is_ds = v.mates.empty();
  if (!v.is_ds) {
    const auto labels = recognize(strip_isolated(g));
    const bool bipartite = std::any_of(labels.begin(), labels.end(),
                                       [](const FamilyInstance& f) { return f.id == FamilyId::G0; });
    v.reason = bipartite ? DsReason::BipartiteDivisor : DsReason::CoincidenceClass;
  }
  return v;
}

/// Determined-by-spectrum decision for a class member without isolated
/// vertices.
inline DsVerdict is_ds(const Graph& g) {
  if (!in_h_by_rank(g)) throw NotInClassError("graph has more than two eigenvalues outside {-2, 0}");
  if (g.isolated_count() > 0)
    throw NotInClassError("graph has isolated vertices; use ds_verdict for padded graphs");
  return ds_verdict(g);
}

}  // namespace spectral_class
