#pragma once

// Exact integer linear algebra on symmetric graph matrices.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spectral_class/graph.hpp"
#include "spectral_class/polynomial.hpp"

namespace spectral_class {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, T(0)) {}

  int order() const { return n_; }
  T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  bool is_symmetric() const {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    Matrix z(x.n_);
    for (int i = 0; i < x.n_; ++i)
      for (int k = 0; k < x.n_; ++k) {
        if (x(i, k) == 0) continue;
        for (int j = 0; j < x.n_; ++j) z(i, j) += x(i, k) * y(k, j);
      }
    return z;
  }

 private:
  int n_ = 0;
  std::vector<T> a_;
};

using IntMatrix = Matrix<BigInt>;
using CharPoly = Polynomial;

inline IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix a(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j : members(g.row(i))) a(i, j) = 1;
  return a;
}

/// E = A(A + 2I); entry (i,j) is the common-neighbour count plus 2A_ij.
template <class T = BigInt>
Matrix<T> e_matrix(const Graph& g) {
  Matrix<T> e(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j)
      e(i, j) = T(std::popcount(g.row(i) & g.row(j)) + (g.adjacent(i, j) ? 2 : 0));
  return e;
}

/// det(xI - m) by the Faddeev-LeVerrier recurrence
///   M_k = m M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(m M_k) / k,
/// in which every division is exact.
inline CharPoly char_poly(const IntMatrix& m) {
  const int n = m.order();
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  c[n] = 1;
  IntMatrix mk(n);  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    IntMatrix next = m * mk;
    for (int i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    BigInt tr = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) tr += m(i, j) * mk(j, i);
    BigInt q, r;
    boost::multiprecision::divide_qr(tr, BigInt(k), q, r);
    if (r != 0)
      throw std::logic_error("Faddeev-LeVerrier: inexact division at step " + std::to_string(k));
    c[n - k] = -q;
  }
  return Polynomial(std::move(c));
}

inline CharPoly char_poly(const Graph& g) { return char_poly(adjacency_matrix(g)); }

namespace detail {

// Bareiss elimination with full pivoting (first nonzero in row-major order).
// Stops once `stop_at` pivots are found when stop_at >= 0.
inline int bareiss_rank_big(IntMatrix a, int stop_at) {
  const int n = a.order();
  BigInt prev = 1;
  int rank = 0;
  for (int k = 0; k < n; ++k) {
    int pr = -1, pc = -1;
    for (int i = k; i < n && pr < 0; ++i)
      for (int j = k; j < n; ++j)
        if (a(i, j) != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr < 0) break;
    if (pr != k)
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(pr, j));
    if (pc != k)
      for (int i = 0; i < n; ++i) std::swap(a(i, k), a(i, pc));
    ++rank;
    if (rank == stop_at) break;
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return rank;
}

// Same elimination on machine integers; nullopt if an entry leaves int64.
inline std::optional<int> bareiss_rank_i64(Matrix<std::int64_t> a, int stop_at) {
  const int n = a.order();
  std::int64_t prev = 1;
  int rank = 0;
  for (int k = 0; k < n; ++k) {
    int pr = -1, pc = -1;
    for (int i = k; i < n && pr < 0; ++i)
      for (int j = k; j < n; ++j)
        if (a(i, j) != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr < 0) break;
    if (pr != k)
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(pr, j));
    if (pc != k)
      for (int i = 0; i < n; ++i) std::swap(a(i, k), a(i, pc));
    ++rank;
    if (rank == stop_at) break;
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        const __int128 v = (static_cast<__int128>(a(i, j)) * a(k, k) -
                            static_cast<__int128>(a(i, k)) * a(k, j)) /
                           prev;
        if (v > INT64_MAX || v < INT64_MIN) return std::nullopt;
        a(i, j) = static_cast<std::int64_t>(v);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return rank;
}

}  // namespace detail

/// Exact rank over the rationals.
inline int rank(const IntMatrix& m) { return detail::bareiss_rank_big(m, -1); }

/// Exact rank of E = A(A + 2I), capped at `cap` when cap >= 0 (the count
/// stops once cap pivots are found).
inline int e_rank(const Graph& g, int cap = -1) {
  if (auto r = detail::bareiss_rank_i64(e_matrix<std::int64_t>(g), cap)) return *r;
  return detail::bareiss_rank_big(e_matrix<BigInt>(g), cap);
}

/// rank(A^2 + 2A) <= 2: at most two eigenvalues outside {-2, 0}.
inline bool in_h_by_rank(const Graph& g) { return e_rank(g, 3) <= 2; }

struct Inertia {
  int positive = 0;
  int zero = 0;
  int negative = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Eigenvalue sign counts from a real-rooted characteristic polynomial.
/// Descartes' rule of signs is exact when every root is real.
inline Inertia inertia(const CharPoly& p) {
  Inertia in;
  in.zero = p.zero_multiplicity();
  const Polynomial q = p.divide_by_x_power(in.zero);
  in.positive = q.sign_variations();
  in.negative = p.degree() - in.zero - in.positive;
  return in;
}

/// Number of roots strictly below t (counted with multiplicity) of a
/// real-rooted polynomial.
inline int roots_below(const CharPoly& p, const BigInt& t) {
  const Polynomial shifted = p.taylor_shift(t);  // roots moved by -t
  const int at = shifted.zero_multiplicity();
  return shifted.divide_by_x_power(at).reflect().sign_variations();
}

/// Number of roots strictly above t (with multiplicity) of a real-rooted
/// polynomial.
inline int roots_above(const CharPoly& p, const BigInt& t) {
  const Polynomial shifted = p.taylor_shift(t);
  const int at = shifted.zero_multiplicity();
  return shifted.divide_by_x_power(at).sign_variations();
}

struct SpectrumShape {
  int mult_minus2 = 0;
  int mult_zero = 0;
  Polynomial residual;  // no roots at -2 or 0

  int residual_degree() const { return residual.degree(); }

  Polynomial reconstruct() const {
    return Polynomial::monomial(mult_zero) * Polynomial{2, 1}.pow(mult_minus2) * residual;
  }
};

/// Splits p = x^z (x+2)^t q with q(0) != 0 and q(-2) != 0.
inline SpectrumShape spectrum_shape(const CharPoly& p) {
  SpectrumShape s;
  s.mult_zero = p.zero_multiplicity();
  Polynomial q = p.divide_by_x_power(s.mult_zero);
  while (q.degree() >= 1) {
    auto [quot, rem] = q.divide_by_linear(-2);
    if (rem != 0) break;
    q = std::move(quot);
    ++s.mult_minus2;
  }
  s.residual = std::move(q);
  return s;
}

// ---------------------------------------------------------------------------
// Real roots of real-rooted integer polynomials, located exactly with Sturm
// sequences and refined by bisection on dyadic rationals.

namespace detail {

// sign of p(num / 2^e)
inline int dyadic_sign(const Polynomial& p, const BigInt& num, int e) {
  if (p.is_zero()) return 0;
  const int d = p.degree();
  const BigInt q = BigInt(1) << e;
  BigInt acc = p.leading();
  BigInt qpow = 1;
  for (int i = d - 1; i >= 0; --i) {
    qpow *= q;
    acc = acc * num + p.coeff(i) * qpow;
  }
  return acc.sign();
}

inline std::vector<Polynomial> sturm_sequence(const Polynomial& f) {
  std::vector<Polynomial> seq{f, f.derivative()};
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    const Polynomial& a = seq[seq.size() - 2];
    const Polynomial& b = seq.back();
    Polynomial r = a.pseudo_remainder(b);
    // pseudo_remainder scales by lc(b)^(da-db+1); undo its sign
    const int e = a.degree() - b.degree() + 1;
    const bool flip = b.leading() < 0 && (e % 2 == 1);
    if (r.is_zero()) break;
    const BigInt g = r.content();
    std::vector<BigInt> c = r.coeffs();
    for (auto& v : c) v /= g;
    Polynomial next(std::move(c));
    seq.push_back(flip ? next : -next);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

inline int sturm_variations(const std::vector<Polynomial>& seq, const BigInt& num, int e) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    const int s = dyadic_sign(p, num, e);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

inline long double dyadic_to_ld(const BigInt& num, int e) {
  return static_cast<long double>(num) / std::ldexp(1.0L, e);
}

// Roots of a square-free real-rooted polynomial, ascending.
inline std::vector<double> simple_real_roots(const Polynomial& f, int bits) {
  std::vector<double> out;
  if (f.degree() < 1) return out;
  const auto seq = sturm_sequence(f);

  BigInt bound = 0;  // Cauchy bound: 1 + max |c_i / c_d|
  for (int i = 0; i < f.degree(); ++i) {
    BigInt v = abs(f.coeff(i));
    BigInt q = v / abs(f.leading()) + 1;
    if (q > bound) bound = q;
  }
  bound += 1;

  struct Interval {
    BigInt lo, hi;  // (lo, hi] in units of 2^-e
    int e;
  };
  std::vector<Interval> stack{{-bound, bound, 0}};
  std::vector<Interval> isolated;
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    const int count = sturm_variations(seq, iv.lo, iv.e) - sturm_variations(seq, iv.hi, iv.e);
    if (count == 0) continue;
    if (count == 1) {
      isolated.push_back(iv);
      continue;
    }
    const BigInt lo = iv.lo * 2, hi = iv.hi * 2, mid = iv.lo + iv.hi;
    stack.push_back({lo, mid, iv.e + 1});
    stack.push_back({mid, hi, iv.e + 1});
  }

  for (Interval iv : isolated) {
    if (dyadic_sign(f, iv.hi, iv.e) == 0) {
      out.push_back(static_cast<double>(dyadic_to_ld(iv.hi, iv.e)));
      continue;
    }
    // move lo off a root belonging to the neighbouring interval
    while (dyadic_sign(f, iv.lo, iv.e) == 0) {
      iv.lo *= 2;
      iv.hi *= 2;
      ++iv.e;
      const BigInt mid = (iv.lo + iv.hi) / 2;
      if (sturm_variations(seq, iv.lo, iv.e) - sturm_variations(seq, mid, iv.e) == 1)
        iv.hi = mid;
      else
        iv.lo = mid;
    }
    const int slo = dyadic_sign(f, iv.lo, iv.e);
    bool exact = false;
    while (iv.e < bits) {
      iv.lo *= 2;
      iv.hi *= 2;
      ++iv.e;
      const BigInt mid = (iv.lo + iv.hi) / 2;
      const int s = dyadic_sign(f, mid, iv.e);
      if (s == 0) {
        out.push_back(static_cast<double>(dyadic_to_ld(mid, iv.e)));
        exact = true;
        break;
      }
      if (s == slo)
        iv.lo = mid;
      else
        iv.hi = mid;
    }
    if (!exact)
      out.push_back(static_cast<double>((dyadic_to_ld(iv.lo, iv.e) + dyadic_to_ld(iv.hi, iv.e)) / 2));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// All roots of a real-rooted polynomial with multiplicity, descending,
/// accurate to about 2^-48.
inline std::vector<double> real_roots(const CharPoly& p) {
  const SpectrumShape s = spectrum_shape(p);
  std::vector<double> roots(static_cast<std::size_t>(s.mult_zero), 0.0);
  roots.insert(roots.end(), static_cast<std::size_t>(s.mult_minus2), -2.0);
  const auto factors = square_free_decomposition(s.residual);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (double r : detail::simple_real_roots(factors[i], 48))
      roots.insert(roots.end(), i + 1, r);
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

}  // namespace spectral_class
