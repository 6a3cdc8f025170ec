#pragma once

// Exhaustive verification at small orders: every graph with
// rank(A^2 + 2A) <= 2 must be a catalog instance (or a union allowed for
// disconnected members) plus isolated vertices, every catalog instance must
// show up, and spectral coincidences must be exactly the predicted ones.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "spectral_class/canonical.hpp"
#include "spectral_class/classifier.hpp"
#include "spectral_class/cospectral.hpp"
#include "spectral_class/exact_linalg.hpp"
#include "spectral_class/families.hpp"
#include "spectral_class/graph.hpp"
#include "spectral_class/graph6.hpp"

namespace spectral_class {

inline constexpr int kMaxEnumerationOrder = 7;
inline constexpr int kMaxLongEnumerationOrder = 8;
inline constexpr const char* kThreadsEnvVar = "SPECTRAL_CLASS_THREADS";

/// Non-isomorphic graphs on n = 0..8 vertices.
inline constexpr std::array<long long, 9> kKnownGraphCounts = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};

/// Worker count from SPECTRAL_CLASS_THREADS, defaulting to the hardware.
inline int default_thread_count() {
  if (const char* env = std::getenv(kThreadsEnvVar)) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

struct EnumerationOptions {
  bool allow_long = false;  // permit n = 8 (2^28 labeled graphs)
  bool in_h_only = false;   // keep only graphs with rank(E) <= 2
  int threads = 1;
};

namespace detail {

inline std::vector<std::pair<int, int>> vertex_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  return pairs;
}

inline Graph labeled_graph(int n, const std::vector<std::pair<int, int>>& pairs, std::uint64_t mask) {
  Graph g(n);
  for (; mask; mask &= mask - 1) {
    const auto& [i, j] = pairs[static_cast<std::size_t>(std::countr_zero(mask))];
    g.add_edge(i, j);
  }
  return g;
}

/// Splits [0, 2^bits) into chunks keyed by the top bits, runs `work` on each
/// chunk (possibly in parallel), and returns the per-chunk results in chunk
/// order so that reductions do not depend on the worker count.
template <class Result, class Work>
std::vector<Result> run_chunked(int bits, int threads, Work work) {
  const int chunk_bits = std::min(bits, 6);
  const std::uint64_t chunks = std::uint64_t{1} << chunk_bits;
  const std::uint64_t per_chunk = std::uint64_t{1} << (bits - chunk_bits);
  std::vector<Result> results(chunks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++)
      results[c] = work(c * per_chunk, (c + 1) * per_chunk);
  };
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(chunks)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return results;
}

}  // namespace detail

/// One canonical representative per isomorphism class, sorted by cert.
using Census = std::map<CanonicalForm, Graph>;

inline Census enumerate_census(int n, const EnumerationOptions& opts = {}) {
  const int cap = opts.allow_long ? kMaxLongEnumerationOrder : kMaxEnumerationOrder;
  if (n < 0 || n > cap)
    throw std::invalid_argument("enumeration order " + std::to_string(n) + " outside 0.." +
                                std::to_string(cap) +
                                (opts.allow_long ? "" : " (n = 8 needs the long-run flag)"));
  const auto pairs = detail::vertex_pairs(n);
  const int bits = static_cast<int>(pairs.size());
  auto parts = detail::run_chunked<Census>(bits, opts.threads, [&](std::uint64_t lo, std::uint64_t hi) {
    Census local;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      const Graph g = detail::labeled_graph(n, pairs, mask);
      if (opts.in_h_only && !in_h_by_rank(g)) continue;
      auto lab = canonical_labeling(g);
      local.try_emplace(std::move(lab.form), std::move(lab.graph));
    }
    return local;
  });
  Census all;
  for (auto& part : parts) all.merge(part);
  return all;
}

inline std::vector<Graph> enumerate_nonisomorphic(int n, const EnumerationOptions& opts = {}) {
  std::vector<Graph> out;
  for (auto& [cert, g] : enumerate_census(n, opts)) out.push_back(g);
  return out;
}

// ---------------------------------------------------------------------------
// graph6 ingestion

struct Graph6Issue {
  int line = 0;
  std::string message;
};

struct Ingested {
  std::vector<Graph> graphs;
  std::vector<int> lines;  // 1-based source line of each graph
  std::vector<Graph6Issue> errors;
};

class IngestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Newline-separated graph6 records; blank lines are skipped. Errors are
/// collected per line, or thrown at the first bad line with fail_fast.
inline Ingested ingest_graph6(std::istream& in, bool fail_fast = false) {
  Ingested out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.graphs.push_back(from_graph6(line));
      out.lines.push_back(number);
    } catch (const std::exception& e) {
      const std::string msg = "line " + std::to_string(number) + ": " + e.what();
      if (fail_fast) throw IngestError(msg);
      out.errors.push_back({number, msg});
    }
  }
  return out;
}

inline Ingested ingest_graph6(const std::string& path, bool fail_fast = false) {
  std::ifstream in(path);
  if (!in) throw IngestError("cannot open " + path);
  return ingest_graph6(in, fail_fast);
}

// ---------------------------------------------------------------------------
// Verification

struct OrderSummary {
  int n = 0;
  long long scanned = 0;  // non-isomorphic graphs at this order
  long long census_mismatches = 0;  // scanned differs from the known count
  long long in_h = 0;
  long long in_h_prime = 0;
  long long family_match_failures = 0;
  long long catalog_missing = 0;
  long long cospectral_pairs = 0;  // observed pairs with equal char poly
  long long predicted_pairs = 0;   // pairs predicted by the class rules
  long long cospectral_mismatches = 0;
  std::vector<std::string> failure_details;

  long long failures() const {
    return census_mismatches + family_match_failures + catalog_missing + cospectral_mismatches;
  }
};

struct VerificationSummary {
  bool exhaustive = true;
  std::vector<OrderSummary> orders;

  long long total_failures() const {
    long long t = 0;
    for (const auto& o : orders) t += o.failures();
    return t;
  }
};

struct VerifyOptions {
  bool allow_long = false;
  int threads = 1;
};

/// How a class member decomposes after deleting isolated vertices.
enum class Decomposition { Empty, CatalogInstance, ComponentUnion, None };

namespace detail {

inline bool is_star_or_cocktail(const Graph& c) {
  if (c.order() == 5 && isomorphic(c, complete_multipartite({1, 4}))) return true;
  return c.order() >= 4 && c.order() % 2 == 0 &&
         isomorphic(c, construct({FamilyId::CP, {c.order() / 2}}));
}

}  // namespace detail

inline Decomposition decompose(const Graph& g) {
  const Graph core = strip_isolated(g);
  if (core.order() == 0) return Decomposition::Empty;
  if (!recognize(core).empty()) return Decomposition::CatalogInstance;
  const auto comps = components(core);
  if (comps.size() == 2 &&
      std::all_of(comps.begin(), comps.end(), [&](VertexSet s) {
        return detail::is_star_or_cocktail(induced_subgraph(core, s));
      }))
    return Decomposition::ComponentUnion;
  return Decomposition::None;
}

namespace detail {

// Decomposition plus the cospectral cross-check for one order.
// With partial input only observed coincidences can be checked against the
// prediction, not the converse.
inline void check_members(const std::vector<Graph>& members_at_n, OrderSummary& s, bool exhaustive) {
  std::map<std::vector<BigInt>, std::vector<std::size_t>> by_poly;
  std::vector<CanonicalForm> certs;
  for (std::size_t i = 0; i < members_at_n.size(); ++i) {
    const Graph& g = members_at_n[i];
    ++s.in_h;
    if (g.isolated_count() == 0) ++s.in_h_prime;
    if (decompose(g) == Decomposition::None) {
      ++s.family_match_failures;
      s.failure_details.push_back("no catalog decomposition: " + to_graph6(g));
    }
    by_poly[char_poly(g).coeffs()].push_back(i);
    certs.push_back(canonical_form(g));
  }

  for (const auto& [poly, idx] : by_poly) {
    const auto k = static_cast<long long>(idx.size());
    s.cospectral_pairs += k * (k - 1) / 2;
    for (std::size_t a : idx) {
      std::set<CanonicalForm> observed;
      for (std::size_t b : idx)
        if (b != a) observed.insert(certs[b]);
      std::set<CanonicalForm> predicted;
      try {
        for (const auto& m : cospectral_mates(members_at_n[a])) predicted.insert(canonical_form(m.graph));
      } catch (const std::exception& e) {
        ++s.cospectral_mismatches;
        s.failure_details.push_back(std::string("cospectral_mates failed: ") + e.what());
        continue;
      }
      s.predicted_pairs += static_cast<long long>(predicted.size());
      const bool ok = exhaustive ? observed == predicted
                                 : std::includes(predicted.begin(), predicted.end(),
                                                 observed.begin(), observed.end());
      if (!ok) {
        ++s.cospectral_mismatches;
        s.failure_details.push_back("cospectral class mismatch at " + to_graph6(members_at_n[a]));
      }
    }
  }
  s.predicted_pairs /= 2;
}

}  // namespace detail

/// Exhaustive check for every order 1..max_n.
inline VerificationSummary verify_classification(int max_n, const VerifyOptions& opts = {}) {
  VerificationSummary summary;
  EnumerationOptions census_opts{opts.allow_long, false, opts.threads};
  EnumerationOptions h_opts{opts.allow_long, true, opts.threads};
  for (int n = 1; n <= max_n; ++n) {
    OrderSummary s;
    s.n = n;
    s.scanned = static_cast<long long>(enumerate_census(n, census_opts).size());
    if (s.scanned != kKnownGraphCounts[static_cast<std::size_t>(n)]) {
      ++s.census_mismatches;
      s.failure_details.push_back("census count " + std::to_string(s.scanned) + " differs from " +
                                  std::to_string(kKnownGraphCounts[static_cast<std::size_t>(n)]));
    }

    const Census members_census = enumerate_census(n, h_opts);
    std::vector<Graph> members_at_n;
    for (const auto& [cert, g] : members_census) members_at_n.push_back(g);
    detail::check_members(members_at_n, s, true);

    // every catalog instance, padded to n vertices, must be found
    for (const auto& f : catalog_instances_up_to(n)) {
      const Graph h = add_isolated(construct(f), n - vertex_count(f));
      if (!members_census.contains(canonical_form(h))) {
        ++s.catalog_missing;
        s.failure_details.push_back("catalog instance not found: " + f.to_string());
      }
    }
    summary.orders.push_back(std::move(s));
  }
  return summary;
}

/// Same member checks over externally supplied graphs (deduplicated by
/// isomorphism, grouped by order). No completeness claim is made.
inline VerificationSummary verify_graphs(const std::vector<Graph>& graphs) {
  VerificationSummary summary;
  summary.exhaustive = false;
  std::map<int, Census> by_order;
  for (const auto& g : graphs) {
    auto lab = canonical_labeling(g);
    by_order[g.order()].try_emplace(std::move(lab.form), std::move(lab.graph));
  }
  for (const auto& [n, census] : by_order) {
    OrderSummary s;
    s.n = n;
    s.scanned = static_cast<long long>(census.size());
    std::vector<Graph> members_at_n;
    for (const auto& [cert, g] : census)
      if (in_h_by_rank(g)) members_at_n.push_back(g);
    detail::check_members(members_at_n, s, false);
    summary.orders.push_back(std::move(s));
  }
  return summary;
}

}  // namespace spectral_class
