// Self-contained dense symmetric eigensolver: Householder reduction to
// tridiagonal form followed by implicit-shift QL iteration, with optional
// eigenvector accumulation, plus an independent bisection oracle that counts
// eigenvalues through LDL^T inertia for cross-checking small spectra.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "selfsim/base.hpp"
#include "selfsim/matrix.hpp"

namespace selfsim {

struct SymmetricEigenResult {
  std::vector<double> values;  // ascending
  DenseMatrix vectors;         // column j pairs with values[j]; empty if not requested
  bool converged = true;
  int max_sweeps = 0;  // largest per-eigenvalue sweep count used
};

namespace detail {

// Householder reduction of the symmetric matrix held in z to tridiagonal
// form (diagonal d, subdiagonal e with e[0] unused). When accumulate is set,
// z is overwritten with the orthogonal transformation; otherwise only the
// rows needed by the reduction are touched.
inline void householder_tridiagonalize(DenseMatrix& z, std::vector<double>& d,
                                       std::vector<double>& e,
                                       bool accumulate) {
  const int n = z.rows;
  d.assign(static_cast<std::size_t>(n), 0.0);
  e.assign(static_cast<std::size_t>(n), 0.0);

  for (int i = n - 1; i >= 1; --i) {
    const int l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (int k = 0; k <= l; ++k) scale += std::fabs(z.at(i, k));
      if (scale == 0.0) {
        e[static_cast<std::size_t>(i)] = z.at(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          z.at(i, k) /= scale;
          h += z.at(i, k) * z.at(i, k);
        }
        double f = z.at(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[static_cast<std::size_t>(i)] = scale * g;
        h -= f * g;
        z.at(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          if (accumulate) z.at(j, i) = z.at(i, j) / h;
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += z.at(j, k) * z.at(i, k);
          for (int k = j + 1; k <= l; ++k) g += z.at(k, j) * z.at(i, k);
          e[static_cast<std::size_t>(j)] = g / h;
          f += e[static_cast<std::size_t>(j)] * z.at(i, j);
        }
        double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = z.at(i, j);
          g = e[static_cast<std::size_t>(j)] - hh * f;
          e[static_cast<std::size_t>(j)] = g;
          for (int k = 0; k <= j; ++k)
            z.at(j, k) -= f * e[static_cast<std::size_t>(k)] + g * z.at(i, k);
        }
      }
    } else {
      e[static_cast<std::size_t>(i)] = z.at(i, l);
    }
    d[static_cast<std::size_t>(i)] = h;
  }

  if (accumulate) d[0] = 0.0;
  e[0] = 0.0;
  for (int i = 0; i < n; ++i) {
    if (accumulate) {
      if (d[static_cast<std::size_t>(i)] != 0.0) {
        for (int j = 0; j < i; ++j) {
          double g = 0.0;
          for (int k = 0; k < i; ++k) g += z.at(i, k) * z.at(k, j);
          for (int k = 0; k < i; ++k) z.at(k, j) -= g * z.at(k, i);
        }
      }
      d[static_cast<std::size_t>(i)] = z.at(i, i);
      z.at(i, i) = 1.0;
      for (int j = 0; j < i; ++j) {
        z.at(j, i) = 0.0;
        z.at(i, j) = 0.0;
      }
    } else {
      d[static_cast<std::size_t>(i)] = z.at(i, i);
    }
  }
}

// Implicit-shift QL iteration on the tridiagonal pair (d, e). Rotations are
// applied to the columns of z when accumulate is set. Returns false when an
// eigenvalue fails to settle within sweep_cap sweeps.
inline bool ql_implicit_shift(std::vector<double>& d, std::vector<double>& e,
                              DenseMatrix& z, bool accumulate, int sweep_cap,
                              int& max_sweeps) {
  const int n = static_cast<int>(d.size());
  for (int i = 1; i < n; ++i) e[static_cast<std::size_t>(i - 1)] = e[static_cast<std::size_t>(i)];
  e[static_cast<std::size_t>(n - 1)] = 0.0;
  bool converged = true;

  for (int l = 0; l < n; ++l) {
    int iterations = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::fabs(d[static_cast<std::size_t>(m)]) +
                    std::fabs(d[static_cast<std::size_t>(m + 1)]);
        if (std::fabs(e[static_cast<std::size_t>(m)]) <=
            std::numeric_limits<double>::epsilon() * dd)
          break;
      }
      if (m != l) {
        if (iterations++ == sweep_cap) {
          converged = false;
          break;
        }
        double g = (d[static_cast<std::size_t>(l + 1)] -
                    d[static_cast<std::size_t>(l)]) /
                   (2.0 * e[static_cast<std::size_t>(l)]);
        double r = std::hypot(g, 1.0);
        g = d[static_cast<std::size_t>(m)] - d[static_cast<std::size_t>(l)] +
            e[static_cast<std::size_t>(l)] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[static_cast<std::size_t>(i)];
          double b = c * e[static_cast<std::size_t>(i)];
          r = std::hypot(f, g);
          e[static_cast<std::size_t>(i + 1)] = r;
          if (r == 0.0) {
            d[static_cast<std::size_t>(i + 1)] -= p;
            e[static_cast<std::size_t>(m)] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[static_cast<std::size_t>(i + 1)] - p;
          r = (d[static_cast<std::size_t>(i)] - g) * s + 2.0 * c * b;
          p = s * r;
          d[static_cast<std::size_t>(i + 1)] = g + p;
          g = c * r - b;
          if (accumulate) {
            double* zi = &z.data[0];
            for (int k = 0; k < z.rows; ++k) {
              double* row = zi + static_cast<std::size_t>(k) * z.cols;
              f = row[i + 1];
              row[i + 1] = s * row[i] + c * f;
              row[i] = c * row[i] - s * f;
            }
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[static_cast<std::size_t>(l)] -= p;
        e[static_cast<std::size_t>(l)] = g;
        e[static_cast<std::size_t>(m)] = 0.0;
      }
    } while (m != l);
    max_sweeps = std::max(max_sweeps, iterations);
    if (!converged) break;
  }
  return converged;
}

}  // namespace detail

// Full symmetric eigendecomposition. Eigenvalues ascend; eigenvector j is
// column j of the returned matrix. The sweep cap bounds the QL iterations
// spent on any single eigenvalue.
inline SymmetricEigenResult eigen_symmetric(const DenseMatrix& a,
                                            bool want_vectors,
                                            int sweep_cap = 50) {
  if (a.rows != a.cols) throw usage_error("eigendecomposition needs a square matrix");
  const int n = a.rows;
  SymmetricEigenResult result;
  if (n == 0) return result;

  DenseMatrix z = a;
  std::vector<double> d;
  std::vector<double> e;
  detail::householder_tridiagonalize(z, d, e, want_vectors);
  result.converged =
      detail::ql_implicit_shift(d, e, z, want_vectors, sweep_cap,
                                result.max_sweeps);

  // Ascending sort, carrying eigenvector columns along.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return d[static_cast<std::size_t>(x)] < d[static_cast<std::size_t>(y)];
  });
  result.values.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    result.values[static_cast<std::size_t>(j)] =
        d[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])];
  if (want_vectors) {
    result.vectors = DenseMatrix(n, n);
    for (int j = 0; j < n; ++j) {
      int src = order[static_cast<std::size_t>(j)];
      for (int i = 0; i < n; ++i) result.vectors.at(i, j) = z.at(i, src);
    }
  }
  return result;
}

// --- Independent oracle: charpoly sign-count bisection ----------------------

namespace detail {

// Sturm count for det(A - xI): the leading principal minors of the
// tridiagonal form obey the three-term recurrence, and the number of sign
// agreements/negatives among the pivot ratios p_j = det_j / det_{j-1} equals
// the number of eigenvalues below x. Tiny pivots are floored (Wilkinson's
// rule), keeping the count stable right on top of an eigenvalue.
inline int sturm_count_below(const std::vector<double>& d,
                             const std::vector<double>& e, double x,
                             double pivot_floor) {
  int count = 0;
  double p = 1.0;
  for (std::size_t j = 0; j < d.size(); ++j) {
    double value = d[j] - x;
    if (j > 0) value -= e[j] * e[j] / p;
    if (std::fabs(value) < pivot_floor) value = -pivot_floor;
    if (value < 0.0) ++count;
    p = value;
  }
  return count;
}

// Bisection over the Sturm count for every eigenvalue of the tridiagonal.
inline std::vector<double> tridiagonal_bisection(const std::vector<double>& d,
                                                 const std::vector<double>& e,
                                                 double tol) {
  const int n = static_cast<int>(d.size());
  double lo = 0.0;
  double hi = 0.0;
  double norm = 1.0;
  for (int j = 0; j < n; ++j) {
    double couple = std::fabs(e[static_cast<std::size_t>(j)]) +
                    (j + 1 < n ? std::fabs(e[static_cast<std::size_t>(j + 1)])
                               : 0.0);
    lo = std::min(lo, d[static_cast<std::size_t>(j)] - couple);
    hi = std::max(hi, d[static_cast<std::size_t>(j)] + couple);
    norm = std::max(norm, std::fabs(d[static_cast<std::size_t>(j)]) + couple);
  }
  lo -= 1.0;
  hi += 1.0;
  const double pivot_floor =
      std::numeric_limits<double>::epsilon() * norm * n;

  std::vector<double> values;
  for (int k = 1; k <= n; ++k) {
    double left = lo;
    double right = hi;
    // Invariant: count(left) < k <= count(right).
    while (right - left > tol) {
      double mid = 0.5 * (left + right);
      if (sturm_count_below(d, e, mid, pivot_floor) >= k)
        right = mid;
      else
        left = mid;
    }
    values.push_back(0.5 * (left + right));
  }
  return values;
}

}  // namespace detail

// Number of eigenvalues of the symmetric matrix strictly below x, by sign
// counting on the characteristic polynomial's leading principal minors.
inline int eigenvalues_below(const DenseMatrix& a, double x) {
  DenseMatrix z = a;
  std::vector<double> d;
  std::vector<double> e;
  detail::householder_tridiagonalize(z, d, e, /*accumulate=*/false);
  double norm = 1.0;
  for (std::size_t j = 0; j < d.size(); ++j)
    norm = std::max(norm, std::fabs(d[j]) + 2.0 * std::fabs(e[j]));
  return detail::sturm_count_below(
      d, e, x, std::numeric_limits<double>::epsilon() * norm * a.rows);
}

// All eigenvalues of a (small) symmetric matrix by bisection on the sign
// count, independent of the QL iteration path.
inline std::vector<double> bisection_eigenvalues(const DenseMatrix& a,
                                                 double tol = 1e-10) {
  if (a.rows == 0) return {};
  DenseMatrix z = a;
  std::vector<double> d;
  std::vector<double> e;
  detail::householder_tridiagonalize(z, d, e, /*accumulate=*/false);
  return detail::tridiagonal_bisection(d, e, tol);
}

}  // namespace selfsim
