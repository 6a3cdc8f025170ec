#pragma once

// Dense univariate polynomials with arbitrary-precision integer coefficients.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace spectral_class {

using BigInt = boost::multiprecision::cpp_int;

class Polynomial {
 public:
  Polynomial() = default;

  /// Coefficients from the constant term upwards.
  explicit Polynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  Polynomial(std::initializer_list<long long> coeffs) {
    for (long long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static Polynomial constant(const BigInt& v) { return Polynomial(std::vector<BigInt>{v}); }

  /// x^k
  static Polynomial monomial(int k) {
    std::vector<BigInt> c(static_cast<std::size_t>(k) + 1);
    c[k] = 1;
    return Polynomial(std::move(c));
  }

  /// x - r
  static Polynomial linear(const BigInt& r) { return Polynomial(std::vector<BigInt>{-r, 1}); }

  /// x^2 - b x + c
  static Polynomial quadratic(const BigInt& b, const BigInt& c) {
    return Polynomial(std::vector<BigInt>{c, -b, 1});
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }

  BigInt coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : BigInt(0);
  }
  const BigInt& leading() const { return c_.back(); }

  BigInt operator()(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a) {
    std::vector<BigInt> c = a.c_;
    for (auto& v : c) v = -v;
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const BigInt& s, const Polynomial& a) {
    std::vector<BigInt> c = a.c_;
    for (auto& v : c) v *= s;
    return Polynomial(std::move(c));
  }

  Polynomial pow(int e) const {
    Polynomial r = constant(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigInt> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<long long>(i);
    return Polynomial(std::move(c));
  }

  /// p(x + a)
  Polynomial taylor_shift(const BigInt& a) const {
    std::vector<BigInt> c = c_;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = n - 1; j > i; --j) c[j - 1] += a * c[j];
    return Polynomial(std::move(c));
  }

  /// p(-x)
  Polynomial reflect() const {
    std::vector<BigInt> c = c_;
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return Polynomial(std::move(c));
  }

  /// Multiplicity of 0 as a root (number of vanishing low coefficients).
  int zero_multiplicity() const {
    int k = 0;
    while (k < static_cast<int>(c_.size()) && c_[k] == 0) ++k;
    return k;
  }

  /// Exact division by x^k; throws if a dropped coefficient is nonzero.
  Polynomial divide_by_x_power(int k) const {
    if (k > zero_multiplicity()) throw std::domain_error("division by x^k is not exact");
    return Polynomial(std::vector<BigInt>(c_.begin() + k, c_.end()));
  }

  /// Synthetic division by (x - r). Returns quotient and remainder p(r).
  std::pair<Polynomial, BigInt> divide_by_linear(const BigInt& r) const {
    if (c_.empty()) return {{}, 0};
    std::vector<BigInt> q(c_.size() - 1);
    BigInt acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = acc * r + c_[i];
      if (i > 0) q[i - 1] = acc;
    }
    return {Polynomial(std::move(q)), acc};
  }

  /// Number of sign changes in the coefficient sequence, zeros skipped.
  int sign_variations() const {
    int changes = 0;
    int last = 0;
    for (const auto& v : c_) {
      const int s = v.sign();
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

  BigInt content() const {
    BigInt g = 0;
    for (const auto& v : c_) g = boost::multiprecision::gcd(g, v);
    return g;
  }

  /// Divides out the content and makes the leading coefficient positive.
  Polynomial primitive_part() const {
    if (is_zero()) return {};
    BigInt g = content();
    if (leading() < 0) g = -g;
    std::vector<BigInt> c = c_;
    for (auto& v : c) v /= g;
    return Polynomial(std::move(c));
  }

  /// lc(d)^(deg p - deg d + 1) * p mod d
  Polynomial pseudo_remainder(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("pseudo-remainder by zero polynomial");
    if (degree() < d.degree()) return *this;
    std::vector<BigInt> r = c_;
    const int dd = d.degree();
    const BigInt& lc = d.leading();
    for (int k = degree(); k >= dd; --k) {
      const BigInt top = r[k];
      for (auto& v : r) v *= lc;
      for (int i = 0; i <= dd; ++i) r[k - dd + i] -= top * d.c_[i];
    }
    return Polynomial(std::move(r));
  }

  /// Exact quotient p / d over the integers; throws if d does not divide p.
  Polynomial exact_divide(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return {};
    if (degree() < d.degree()) throw std::domain_error("polynomial division is not exact");
    std::vector<BigInt> r = c_;
    std::vector<BigInt> q(static_cast<std::size_t>(degree() - d.degree()) + 1);
    const int dd = d.degree();
    for (int k = degree(); k >= dd; --k) {
      BigInt rem;
      BigInt t;
      boost::multiprecision::divide_qr(r[k], d.leading(), t, rem);
      if (rem != 0) throw std::domain_error("polynomial division is not exact");
      q[k - dd] = t;
      for (int i = 0; i <= dd; ++i) r[k - dd + i] -= t * d.c_[i];
    }
    for (const auto& v : r)
      if (v != 0) throw std::domain_error("polynomial division is not exact");
    return Polynomial(std::move(q));
  }

  bool divides(const Polynomial& p) const {
    try {
      (void)p.exact_divide(*this);
      return true;
    } catch (const std::domain_error&) {
      return false;
    }
  }

  /// Human-readable form, highest degree first, e.g. "x^4 - 9x^2".
  std::string to_string(char var = 'x') const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const BigInt& v = c_[i];
      if (v == 0) continue;
      const bool neg = v < 0;
      const BigInt mag = neg ? BigInt(-v) : v;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (mag != 1 || i == 0) out += mag.str();
      if (i >= 1) out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

/// Greatest common divisor over Q, returned primitive with positive leading
/// coefficient. gcd(0, 0) = 0.
inline Polynomial gcd(Polynomial a, Polynomial b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Polynomial r = a.pseudo_remainder(b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a.primitive_part();
}

/// Yun's square-free decomposition of a nonconstant polynomial:
/// result[i] is the product of the irreducible factors of multiplicity i+1
/// (primitive, positive leading coefficient; constants mean "none").
inline std::vector<Polynomial> square_free_decomposition(const Polynomial& f) {
  std::vector<Polynomial> out;
  if (f.degree() < 1) return out;
  const Polynomial p = f.primitive_part();
  const Polynomial dp = p.derivative();
  const Polynomial a0 = gcd(p, dp);
  Polynomial b = p.exact_divide(a0);
  Polynomial c = dp.exact_divide(a0);
  Polynomial d = c - b.derivative();
  while (b.degree() >= 1) {
    const Polynomial a = gcd(b, d);
    out.push_back(a);
    b = b.exact_divide(a);
    c = d.exact_divide(a);
    d = c - b.derivative();
  }
  return out;
}

}  // namespace spectral_class
