#include <gtest/gtest.h>

#include "spectral_class/json_io.hpp"

namespace sc = spectral_class;
using F = sc::FamilyId;

TEST(JsonIo, RoundsToTwelveDigits) {
  EXPECT_EQ(sc::round_significant(7 + 2 * std::sqrt(7.0)), 12.2915026221);
  EXPECT_EQ(sc::round_significant(-1e-17), -1e-17);
  EXPECT_EQ(sc::round_significant(-0.0), 0.0);
}

TEST(JsonIo, SpectrumDocument) {
  const auto j = sc::spectrum_json(sc::construct({F::G10, {}}));
  EXPECT_EQ(j["order"], 9);
  EXPECT_EQ(j["symbolic"], "{−2³, 0⁴, 3±√2}");
  EXPECT_EQ(j["shape"]["residual"], "x^2 - 6x + 7");
  EXPECT_EQ(j["eigenvalues"][0], 4.41421356237);
  EXPECT_EQ(j["exact_roots"], j["eigenvalues"]);
  EXPECT_TRUE(sc::spectrum_json(sc::cycle_graph(5))["symbolic"].is_null());
}

TEST(JsonIo, ClassificationDocument) {
  const auto j = sc::to_json(sc::membership(sc::complete_graph(3)));
  EXPECT_EQ(j["in_h"], false);
  EXPECT_EQ(j["residual_degree"], 3);
  EXPECT_EQ(j["shape"]["residual_roots"], (sc::Json{2.0, -1.0, -1.0}));
  EXPECT_FALSE(j.contains("forbidden_hits"));
  const auto scanned = sc::to_json(sc::membership(sc::cycle_graph(5), {true}));
  EXPECT_EQ(scanned["forbidden_hits"][0]["pattern"], "c");
}

TEST(JsonIo, VerdictDocument) {
  const auto j = sc::to_json(sc::ds_verdict(sc::construct({F::G8, {2, 2}})));
  EXPECT_EQ(j["is_ds"], false);
  EXPECT_EQ(j["reason"], "theorem6-class");
  EXPECT_EQ(j["mates"].size(), 2U);
}

TEST(JsonIo, SummaryKeys) {
  const auto j = sc::to_json(sc::verify_classification(3));
  EXPECT_EQ(j["total_failures"], 0);
  const auto& o = j["orders"][2];
  for (const char* key : {"n", "scanned", "in_h", "in_h_prime", "census_mismatches", "family_match_failures",
                          "catalog_missing", "cospectral_pairs", "predicted_pairs", "cospectral_mismatches",
                          "failures", "failure_details"})
    EXPECT_TRUE(o.contains(key)) << key;
}

TEST(JsonIo, TextCarriesTheSameFields) {
  const auto j = sc::to_json(sc::membership(sc::construct({F::CP, {3}})));
  const std::string text = sc::to_text(j);
  for (const auto& [key, value] : j.items()) EXPECT_NE(text.find(key + ":"), std::string::npos) << key;
  EXPECT_NE(text.find("family_matches: [G2(3,2), CP(3)]"), std::string::npos) << text;
  EXPECT_NE(text.find("  alpha: 2"), std::string::npos);
}
