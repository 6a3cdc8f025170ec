#pragma once

// Floating-point spectra: cyclic Jacobi rotations for small dense symmetric
// matrices, and the interlacing test for principal submatrices.

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spectral_class/exact_linalg.hpp"
#include "spectral_class/graph.hpp"

namespace spectral_class {

using RealMatrix = Matrix<double>;

inline constexpr double kDefaultSpectralTol = 1e-9;

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Eigenvalues in descending order.
struct Spectrum {
  std::vector<double> values;

  int order() const { return static_cast<int>(values.size()); }
  double operator[](int i) const { return values[i]; }
};

inline RealMatrix real_adjacency(const Graph& g) {
  RealMatrix a(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j : members(g.row(i))) a(i, j) = 1.0;
  return a;
}

inline Spectrum eigenvalues(RealMatrix a, int max_sweeps = 100) {
  const int n = a.order();
  if (!a.is_symmetric()) throw std::invalid_argument("eigenvalues: matrix is not symmetric");

  double frob = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) frob += a(i, j) * a(i, j);
  const double threshold = 1e-12 * (1.0 + std::sqrt(frob));

  auto off_norm = [&] {
    double s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  double off = off_norm();
  int sweep = 0;
  while (off >= threshold) {
    if (sweep++ == max_sweeps)
      throw ConvergenceError("Jacobi did not converge after " + std::to_string(max_sweeps) +
                             " sweeps (off-diagonal norm " + std::to_string(off) + ")");
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
      }
    }
    off = off_norm();
  }

  Spectrum sp;
  sp.values.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) sp.values[i] = a(i, i);
  std::sort(sp.values.begin(), sp.values.end(), std::greater<>());
  return sp;
}

inline Spectrum eigenvalues(const Graph& g) { return eigenvalues(real_adjacency(g)); }

/// lambda_i(A) + tol >= lambda_i(B) >= lambda_{n-m+i}(A) - tol for i = 1..m.
inline bool interlacing_holds(const Spectrum& a, const Spectrum& b,
                              double tol = kDefaultSpectralTol) {
  const int n = a.order(), m = b.order();
  if (m > n)
    throw std::invalid_argument("interlacing: submatrix order " + std::to_string(m) +
                                " exceeds matrix order " + std::to_string(n));
  for (int i = 0; i < m; ++i) {
    if (a[i] + tol < b[i]) return false;
    if (b[i] < a[n - m + i] - tol) return false;
  }
  return true;
}

}  // namespace spectral_class
