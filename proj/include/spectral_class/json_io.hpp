#pragma once

// JSON views of the library's results, plus a plain-text rendering of the
// same documents so both output modes carry identical facts.
//
// Big integers are serialized as decimal strings. Floating-point values are
// rounded to 12 significant digits.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "spectral_class/classifier.hpp"
#include "spectral_class/cospectral.hpp"
#include "spectral_class/exact_linalg.hpp"
#include "spectral_class/families.hpp"
#include "spectral_class/graph6.hpp"
#include "spectral_class/harness.hpp"
#include "spectral_class/numeric.hpp"

namespace spectral_class {

using Json = nlohmann::ordered_json;

inline constexpr int kDisplayDigits = 12;

inline double round_significant(double v, int digits = kDisplayDigits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // no negative zero
}

/// Magnitudes below this print as 0 (solver noise around zero eigenvalues).
inline constexpr double kDisplayZero = 1e-10;

inline Json rounded(const std::vector<double>& values) {
  Json a = Json::array();
  for (double v : values) a.push_back(std::abs(v) < kDisplayZero ? 0.0 : round_significant(v));
  return a;
}

inline Json coeffs_json(const Polynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.str());
  return a;
}

inline Json to_json(const SpectrumShape& s) {
  return {{"mult_minus2", s.mult_minus2},
          {"mult_zero", s.mult_zero},
          {"residual", s.residual.to_string()},
          {"residual_degree", s.residual_degree()},
          {"residual_roots", rounded(real_roots(s.residual))}};
}

inline Json to_json(const SymbolicSpectrum& s) {
  return {{"display", s.to_string()}, {"values", rounded(s.numeric())}};
}

/// Exact char poly, its shape, the symbolic spectrum when at most two
/// eigenvalues lie outside {-2, 0}, and the numeric eigenvalues.
inline Json spectrum_json(const Graph& g) {
  const CharPoly p = char_poly(g);
  const SpectrumShape shape = spectrum_shape(p);
  Json j;
  j["graph6"] = to_graph6(g);
  j["order"] = g.order();
  j["char_poly"] = p.to_string();
  j["char_poly_coeffs"] = coeffs_json(p);
  j["shape"] = to_json(shape);
  const auto sym = symbolic_from_shape(shape);
  j["symbolic"] = sym ? Json(sym->to_string()) : Json(nullptr);
  j["exact_roots"] = rounded(real_roots(p));
  j["eigenvalues"] = rounded(eigenvalues(g).values);
  return j;
}

inline Json to_json(const FamilyInstance& f) { return f.to_string(); }

inline Json to_json(const ForbiddenHit& h) {
  const char id[2] = {h.pattern, '\0'};
  return {{"pattern", id}, {"embedding", h.embedding}};
}

inline Json to_json(const ClassificationReport& r) {
  Json j;
  j["order"] = r.order;
  j["in_h"] = r.in_h;
  j["in_h_prime"] = r.in_h_prime;
  j["in_h2_prime"] = r.in_h2_prime;
  j["connected"] = r.connected;
  j["isolated_count"] = r.isolated_count;
  j["e_rank"] = r.e_rank;
  j["n_pos"] = r.n_pos;
  j["residual_degree"] = r.residual_degree;
  j["char_poly"] = r.char_poly.to_string();
  j["shape"] = to_json(r.shape);
  if (r.coclique) {
    j["coclique"] = {{"alpha", r.coclique->alpha}, {"witness", r.coclique->witness}};
  } else {
    j["coclique"] = nullptr;
  }
  if (r.family_matches) {
    Json m = Json::array();
    for (const auto& f : *r.family_matches) m.push_back(to_json(f));
    j["family_matches"] = m;
  } else {
    j["family_matches"] = nullptr;
  }
  if (r.forbidden_hits) {
    Json h = Json::array();
    for (const auto& hit : *r.forbidden_hits) h.push_back(to_json(hit));
    j["forbidden_hits"] = h;
  }
  return j;
}

inline Json to_json(const CospectralMate& m) {
  return {{"graph6", to_graph6(m.graph)}, {"description", m.description()}};
}

inline Json to_json(const DsVerdict& v) {
  Json mates = Json::array();
  for (const auto& m : v.mates) mates.push_back(to_json(m));
  return {{"is_ds", v.is_ds}, {"reason", std::string(ds_reason_name(v.reason))}, {"mates", mates}};
}

inline Json to_json(const OrderSummary& s) {
  return {{"n", s.n},
          {"scanned", s.scanned},
          {"in_h", s.in_h},
          {"in_h_prime", s.in_h_prime},
          {"census_mismatches", s.census_mismatches},
          {"family_match_failures", s.family_match_failures},
          {"catalog_missing", s.catalog_missing},
          {"cospectral_pairs", s.cospectral_pairs},
          {"predicted_pairs", s.predicted_pairs},
          {"cospectral_mismatches", s.cospectral_mismatches},
          {"failures", s.failures()},
          {"failure_details", s.failure_details}};
}

inline Json to_json(const VerificationSummary& v) {
  Json orders = Json::array();
  for (const auto& o : v.orders) orders.push_back(to_json(o));
  return {{"exhaustive", v.exhaustive}, {"total_failures", v.total_failures()}, {"orders", orders}};
}

// ---------------------------------------------------------------------------
// Text rendering

namespace detail {

inline std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  if (j.is_number_float()) {
    std::ostringstream out;
    out.precision(kDisplayDigits);
    out << j.get<double>();
    return out.str();
  }
  return j.dump();
}

inline bool is_flat(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

inline void render_text(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !is_flat(value))) {
        out << pad << key << ":\n";
        render_text(value, out, indent + 2);
      } else {
        out << pad << key << ": ";
        render_text(value, out, 0);
      }
    }
  } else if (is_flat(j)) {
    std::string line;
    for (const auto& e : j) line += (line.empty() ? "" : ", ") + scalar_text(e);
    out << pad << "[" << line << "]\n";
  } else if (j.is_array()) {
    for (const auto& e : j) {
      out << pad << "-\n";
      render_text(e, out, indent + 2);
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

}  // namespace detail

/// One "key: value" line per scalar field, nested objects indented.
inline std::string to_text(const Json& j) {
  std::ostringstream out;
  detail::render_text(j, out, 0);
  return out.str();
}

}  // namespace spectral_class
