#include <gtest/gtest.h>

#include <random>

#include "spectral_class/classifier.hpp"
#include "spectral_class/harness.hpp"
#include "spectral_class/numeric.hpp"
#include "test_support.hpp"

namespace sc = spectral_class;
using F = sc::FamilyId;

TEST(Membership, CocktailParty) {
  const auto r = sc::membership(sc::construct({F::CP, {3}}));
  EXPECT_TRUE(r.in_h);
  EXPECT_TRUE(r.in_h_prime);
  EXPECT_FALSE(r.in_h2_prime);
  EXPECT_EQ(r.residual_degree, 1);
  EXPECT_EQ(r.n_pos, 1);
  ASSERT_TRUE(r.coclique.has_value());
  EXPECT_EQ(r.coclique->alpha, 2);
  EXPECT_EQ(*r.family_matches, (std::vector<sc::FamilyInstance>{{F::G2, {3, 2}}, {F::CP, {3}}}));
}

TEST(Membership, FiveCycle) {
  const auto r = sc::membership(sc::cycle_graph(5));
  EXPECT_FALSE(r.in_h);
  EXPECT_EQ(r.residual_degree, 5);
  EXPECT_TRUE(r.family_matches->empty());
}

TEST(Membership, StarPlusIsolated) {
  const auto r = sc::membership(sc::add_isolated(sc::complete_multipartite({1, 4}), 1));
  EXPECT_TRUE(r.in_h);
  EXPECT_FALSE(r.in_h_prime);
  EXPECT_EQ(r.isolated_count, 1);
}

TEST(Membership, TriangleResidual) {
  const auto r = sc::membership(sc::complete_graph(3));
  EXPECT_FALSE(r.in_h);
  EXPECT_EQ(r.residual_degree, 3);
  EXPECT_EQ(r.shape.residual, (sc::Polynomial{-2, -3, 0, 1}));
}

TEST(Membership, TwoPositiveInstances) {
  for (const auto& f : sc::catalog_instances_up_to(14)) {
    if (f.id < F::G6 || f.id > F::G12) continue;
    const auto r = sc::membership(sc::construct(f));
    EXPECT_TRUE(r.in_h2_prime) << f.to_string();
  }
}

TEST(Membership, ForbiddenScanOnRequest) {
  EXPECT_FALSE(sc::membership(sc::cycle_graph(5)).forbidden_hits.has_value());
  const auto r = sc::membership(sc::cycle_graph(5), {true});
  ASSERT_TRUE(r.forbidden_hits.has_value());
  EXPECT_FALSE(r.forbidden_hits->empty());
}

TEST(PositiveCount, Examples) {
  EXPECT_EQ(sc::positive_eigenvalue_count(sc::complete_multipartite({2, 3})), 1);
  EXPECT_EQ(sc::positive_eigenvalue_count(sc::construct({F::G6, {4}})), 2);
  EXPECT_EQ(sc::positive_eigenvalue_count(sc::empty_graph(4)), 0);
}

TEST(Coclique, Examples) {
  const auto cp = sc::max_coclique(sc::construct({F::CP, {3}}));
  EXPECT_EQ(cp.alpha, 2);
  ASSERT_EQ(cp.witness.size(), 2U);
  EXPECT_FALSE(sc::construct({F::CP, {3}}).adjacent(cp.witness[0], cp.witness[1]));
  EXPECT_EQ(sc::max_coclique(sc::complete_multipartite({3, 2})).alpha, 3);
  const auto g12 = sc::max_coclique(sc::construct({F::G12, {}}));
  EXPECT_EQ(g12.alpha, 6);
  EXPECT_EQ(g12.witness, (std::vector<int>{0, 1, 2, 3, 4, 5}));
}

TEST(Coclique, AgreesWithSubsetScan) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 13;
    const sc::Graph g = sc::testing::random_graph(rng, n, 0.2 + 0.6 * (trial % 4) / 3.0);
    int best = 0;
    for (sc::VertexSet s = 0; s < (sc::VertexSet{1} << n); ++s) {
      bool independent = true;
      for (int v : sc::members(s)) independent = independent && !(g.row(v) & s);
      if (independent) best = std::max(best, std::popcount(s));
    }
    const auto c = sc::max_coclique(g);
    ASSERT_EQ(c.alpha, best);
    ASSERT_EQ(static_cast<int>(c.witness.size()), best);
    for (int u : c.witness)
      for (int v : c.witness) ASSERT_FALSE(g.adjacent(u, v));
  }
}

TEST(Forbidden, PatternsAreValidGraphs) {
  const auto& patterns = sc::forbidden_patterns();
  ASSERT_EQ(patterns.size(), 13U);
  EXPECT_TRUE(sc::isomorphic(patterns[0].graph, sc::complete_multipartite({1, 5})));
  EXPECT_TRUE(sc::isomorphic(patterns[2].graph, sc::cycle_graph(5)));
}

TEST(Forbidden, ScanExamples) {
  const auto k233 = sc::forbidden_scan(sc::complete_multipartite({2, 3, 3}));
  EXPECT_TRUE(std::any_of(k233.begin(), k233.end(), [](const sc::ForbiddenHit& h) { return h.pattern == 'b'; }));
  const sc::Graph petersen = sc::petersen_graph();
  const auto hits = sc::forbidden_scan(petersen);
  const auto c5 = std::find_if(hits.begin(), hits.end(), [](const sc::ForbiddenHit& h) { return h.pattern == 'c'; });
  ASSERT_NE(c5, hits.end());
  EXPECT_EQ(sc::induced_subgraph(petersen, std::span<const int>(c5->embedding)).edge_count(), 5);
  EXPECT_TRUE(sc::forbidden_scan(sc::construct({F::G8, {2, 2}})).empty());
}

TEST(Forbidden, EmbeddingsAreInduced) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    const sc::Graph g = sc::testing::random_graph(rng, 9);
    for (const auto& hit : sc::forbidden_scan(g)) {
      const auto& p = sc::forbidden_patterns()[static_cast<std::size_t>(hit.pattern - 'a')].graph;
      for (int u = 0; u < p.order(); ++u)
        for (int v = 0; v < p.order(); ++v) ASSERT_EQ(p.adjacent(u, v), g.adjacent(hit.embedding[u], hit.embedding[v]));
    }
  }
}

TEST(Forbidden, AbsentPatternsAreReallyAbsent) {
  // exhaustive subset check on graphs with at most 8 vertices
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const sc::Graph g = sc::testing::random_graph(rng, 8, 0.5);
    const auto hits = sc::forbidden_scan(g);
    for (const auto& p : sc::forbidden_patterns()) {
      const bool reported = std::any_of(hits.begin(), hits.end(), [&](const sc::ForbiddenHit& h) { return h.pattern == p.id; });
      bool present = false;
      for (sc::VertexSet s = 0; s < (sc::VertexSet{1} << 8) && !present; ++s)
        if (std::popcount(s) == p.graph.order()) present = sc::isomorphic(sc::induced_subgraph(g, s), p.graph);
      ASSERT_EQ(reported, present) << p.id << " in " << sc::to_graph6(g);
    }
  }
}

TEST(Columns, Examples) {
  EXPECT_TRUE(sc::almost_equal_columns(sc::complete_multipartite({1, 2, 2})).size() > 0);
  const auto k113 = sc::almost_equal_columns(sc::complete_multipartite({1, 1, 3}));
  EXPECT_NE(std::find(k113.begin(), k113.end(), sc::ColumnPair{0, 1, true}), k113.end());
  EXPECT_TRUE(sc::almost_equal_columns(sc::construct({F::G6, {3}})).empty());
  EXPECT_EQ(sc::almost_equal_columns(sc::complete_graph(2)), (std::vector<sc::ColumnPair>{{0, 1, true}}));
}

TEST(Psd, Examples) {
  EXPECT_TRUE(sc::psd_rank2_check(sc::construct({F::G7, {}})));
  EXPECT_FALSE(sc::psd_rank2_check(sc::cycle_graph(5)));
  EXPECT_FALSE(sc::psd_rank2_check(sc::construct({F::CP, {3}})));
  EXPECT_EQ(sc::e_rank(sc::construct({F::CP, {3}})), 1);
}

// The exact test of membership against counting Jacobi eigenvalues away
// from -2 and 0, over every graph with at most 7 vertices up to isomorphism.
TEST(Membership, AgreesWithJacobiCount) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : sc::enumerate_nonisomorphic(n)) {
      int outside = 0;
      for (double v : sc::eigenvalues(g).values)
        if (std::abs(v) > 1e-6 && std::abs(v + 2) > 1e-6) ++outside;
      ASSERT_EQ(sc::in_h_by_rank(g), outside <= 2) << sc::to_graph6(g);
    }
}
