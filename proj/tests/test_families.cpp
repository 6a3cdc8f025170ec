#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "spectral_class/families.hpp"
#include "test_support.hpp"

namespace sc = spectral_class;
using F = sc::FamilyId;
using sc::Polynomial;

static bool contains(const std::vector<sc::FamilyInstance>& v, const sc::FamilyInstance& f) {
  return std::find(v.begin(), v.end(), f) != v.end();
}

TEST(Families, ConstructExamples) {
  const sc::Graph g63 = sc::construct({F::G6, {3}});
  EXPECT_EQ(g63, sc::Graph::from_rows({"011100", "101010", "110001", "100011", "010101", "001110"}));
  EXPECT_TRUE(sc::testing::brute_isomorphic(sc::construct({F::CP, {2}}), sc::cycle_graph(4)));
  const sc::Graph g90 = sc::construct({F::G9, {0}});
  EXPECT_EQ(g90.order(), 8);
  EXPECT_EQ(g90.edge_count(), 18);
}

TEST(Families, VertexCounts) {
  EXPECT_EQ(sc::vertex_count({F::G0, {4, 1}}), 5);
  EXPECT_EQ(sc::vertex_count({F::G1, {}}), 5);
  EXPECT_EQ(sc::vertex_count({F::G2, {3, 3}}), 7);
  EXPECT_EQ(sc::vertex_count({F::G3, {}}), 10);
  EXPECT_EQ(sc::vertex_count({F::G4, {3}}), 11);
  EXPECT_EQ(sc::vertex_count({F::G5, {3, 2}}), 10);
  EXPECT_EQ(sc::vertex_count({F::G6, {4}}), 8);
  EXPECT_EQ(sc::vertex_count({F::G7, {}}), 15);
  EXPECT_EQ(sc::vertex_count({F::G8, {2, 2}}), 9);
  EXPECT_EQ(sc::vertex_count({F::G9, {1}}), 10);
  EXPECT_EQ(sc::vertex_count({F::G10, {}}), 9);
  EXPECT_EQ(sc::vertex_count({F::G11, {}}), 9);
  EXPECT_EQ(sc::vertex_count({F::G12, {}}), 8);
  EXPECT_EQ(sc::vertex_count({F::CP, {3}}), 6);
  for (const auto& f : sc::catalog_instances_up_to(14)) EXPECT_EQ(sc::construct(f).order(), sc::vertex_count(f));
}

TEST(Families, ValidationNamesTheBound) {
  try {
    sc::validate({F::G6, {2}});
    FAIL();
  } catch (const sc::FamilyError& e) {
    EXPECT_NE(std::string(e.what()).find("m >= 3"), std::string::npos);
  }
  EXPECT_THROW(sc::validate({F::G0, {1, 2}}), sc::FamilyError);
  EXPECT_THROW(sc::validate({F::G2, {2, 1}}), sc::FamilyError);
  EXPECT_THROW(sc::validate({F::G5, {3, 1}}), sc::FamilyError);
  EXPECT_THROW(sc::validate({F::G8, {1, 1}}), sc::FamilyError);
  EXPECT_THROW(sc::validate({F::G7, {1}}), sc::FamilyError);
  EXPECT_THROW(sc::validate({F::CP, {}}), sc::FamilyError);
  EXPECT_NO_THROW(sc::validate({F::G9, {0}}));
}

TEST(Families, SymbolicSpectrumExamples) {
  const auto g233 = sc::symbolic_spectrum({F::G2, {3, 3}});
  EXPECT_EQ(g233.mult_minus2, 1);
  EXPECT_EQ(g233.mult_zero, 4);
  EXPECT_EQ(g233.quadratic, (sc::Quadratic{2, -12}));
  EXPECT_EQ(g233.to_string(), "{−2, 0⁴, 1±√13}");

  const auto g821 = sc::symbolic_spectrum({F::G8, {2, 1}});
  EXPECT_EQ(g821.mult_minus2, 2);
  EXPECT_EQ(g821.mult_zero, 3);
  EXPECT_EQ(g821.quadratic, (sc::Quadratic{4, 2}));

  const auto g522 = sc::symbolic_spectrum({F::G5, {2, 2}});
  EXPECT_EQ(g522.mult_minus2, 2);
  EXPECT_EQ(g522.mult_zero, 4);
  EXPECT_EQ(g522.linear, (std::vector<std::int64_t>{2, 2}));
  EXPECT_EQ(g522.to_string(), "{−2², 0⁴, 2²}");

  EXPECT_EQ(sc::symbolic_spectrum({F::G6, {3}}).to_string(), "{−2², 0², 1, 3}");
  EXPECT_EQ(sc::symbolic_spectrum({F::G10, {}}).to_string(), "{−2³, 0⁴, 3±√2}");
  EXPECT_EQ(sc::symbolic_spectrum({F::G7, {}}).to_string(), "{−2⁷, 0⁶, 7±2√7}");
  EXPECT_EQ(sc::symbolic_spectrum({F::G0, {3, 2}}).to_string(), "{0³, ±√6}");
  EXPECT_EQ(sc::symbolic_spectrum({F::G9, {0}}).to_string(), "{−2³, 0³, 3±√3}");
}

TEST(Families, ExactSpectrumIdentity) {
  int checked = 0;
  for (const auto& f : sc::catalog_instances_up_to(14)) {
    const auto s = sc::symbolic_spectrum(f);
    ASSERT_EQ(s.total_multiplicity(), sc::vertex_count(f)) << f.to_string();
    ASSERT_EQ(sc::char_poly(sc::construct(f)), s.expand()) << f.to_string();
    ++checked;
  }
  EXPECT_GE(checked, 60);
}

TEST(Families, SymbolicFromShapeRoundTrip) {
  for (const auto& f : sc::catalog_instances_up_to(12)) {
    const auto sym = sc::symbolic_from_shape(sc::spectrum_shape(sc::char_poly(sc::construct(f))));
    ASSERT_TRUE(sym.has_value()) << f.to_string();
    EXPECT_EQ(sym->expand(), sc::symbolic_spectrum(f).expand());
    EXPECT_EQ(sym->to_string(), sc::symbolic_spectrum(f).to_string()) << f.to_string();
  }
}

TEST(Families, CatalogExamples) {
  const auto n5 = sc::catalog_instances(5);
  for (const auto& f : {sc::FamilyInstance{F::G0, {4, 1}}, sc::FamilyInstance{F::G0, {3, 2}},
                        sc::FamilyInstance{F::G1, {}}, sc::FamilyInstance{F::G2, {3, 1}}})
    EXPECT_TRUE(contains(n5, f)) << f.to_string();

  const auto n9 = sc::catalog_instances(9);
  EXPECT_TRUE(contains(n9, {F::G10, {}}));
  EXPECT_TRUE(contains(n9, {F::G11, {}}));
  EXPECT_TRUE(contains(n9, {F::G8, {2, 2}}));
  EXPECT_TRUE(contains(n9, {F::G0, {8, 1}}));
  EXPECT_FALSE(contains(n9, {F::G12, {}}));

  EXPECT_EQ(sc::catalog_instances(2), (std::vector<sc::FamilyInstance>{{F::G0, {1, 1}}, {F::CP, {1}}}));
}

TEST(Families, CatalogIsExhaustiveOverParameters) {
  // every valid instance with at most 14 vertices, found by brute parameter search
  std::set<sc::FamilyInstance> brute;
  for (F id : sc::kAllFamilies) {
    const int arity = sc::family_arity(id);
    for (int a = 0; a <= 14; ++a)
      for (int b = 0; b <= (arity == 2 ? 14 : 0); ++b) {
        sc::FamilyInstance f{id, {}};
        if (arity >= 1) f.params.push_back(a);
        if (arity == 2) f.params.push_back(b);
        if (arity == 0 && a > 0) continue;
        try {
          if (sc::vertex_count(f) <= 14) brute.insert(f);
        } catch (const sc::FamilyError&) {
        }
      }
  }
  const auto listed = sc::catalog_instances_up_to(14);
  EXPECT_EQ(std::set<sc::FamilyInstance>(listed.begin(), listed.end()), brute);
}

TEST(Families, RecognizeExamples) {
  EXPECT_EQ(sc::recognize(sc::cycle_graph(4)), (std::vector<sc::FamilyInstance>{{F::G0, {2, 2}}, {F::CP, {2}}}));
  EXPECT_EQ(sc::recognize(sc::construct({F::G11, {}})), (std::vector<sc::FamilyInstance>{{F::G11, {}}}));
  EXPECT_TRUE(sc::recognize(sc::cycle_graph(5)).empty());
  EXPECT_EQ(sc::recognize(sc::construct({F::CP, {3}})),
            (std::vector<sc::FamilyInstance>{{F::G2, {3, 2}}, {F::CP, {3}}}));
}

TEST(Families, RecognizeAfterRelabeling) {
  std::mt19937_64 rng(47);
  for (const auto& f : sc::catalog_instances_up_to(14)) {
    const sc::Graph g = sc::construct(f);
    const auto labels = sc::recognize(g.relabeled(sc::testing::random_permutation(rng, g.order())));
    EXPECT_TRUE(contains(labels, f)) << f.to_string();
  }
}

// Distinct labels name the same graph only for CP(k) = G2(k,2) and
// CP(2) = G0(2,2).
TEST(Families, OverlapsAreTheKnownAliases) {
  for (int n = 1; n <= 14; ++n) {
    const auto inst = sc::catalog_instances(n);
    for (std::size_t i = 0; i < inst.size(); ++i)
      for (std::size_t j = i + 1; j < inst.size(); ++j) {
        if (!sc::isomorphic(sc::construct(inst[i]), sc::construct(inst[j]))) continue;
        const auto& a = inst[i];
        const auto& b = inst[j];
        const bool cp_g2 = a.id == F::G2 && b.id == F::CP && a.params[1] == 2 && a.params[0] == b.params[0];
        const bool cp_g0 = a.id == F::G0 && b.id == F::CP && a.params == std::vector<int>{2, 2};
        EXPECT_TRUE(cp_g2 || cp_g0) << a.to_string() << " = " << b.to_string();
      }
  }
}

TEST(Families, ParseNames) {
  for (F id : sc::kAllFamilies) EXPECT_EQ(sc::parse_family_name(sc::family_name(id)), id);
  EXPECT_FALSE(sc::parse_family_name("G13").has_value());
  EXPECT_EQ((sc::FamilyInstance{F::G8, {2, 2}}).to_string(), "G8(2,2)");
}
