// Dense real matrices sized for full-spectrum work on level operators
// (row-major storage, up to a few thousand rows), with the small amount of
// direct linear algebra the analyses need: products, norms, and LU
// factorization for determinants and solves.
#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "selfsim/base.hpp"

namespace selfsim {

struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;  // row-major

  DenseMatrix() = default;
  DenseMatrix(int r, int c)
      : rows(r), cols(c),
        data(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0.0) {}

  double& at(int i, int j) {
    return data[static_cast<std::size_t>(i) * cols + j];
  }
  double at(int i, int j) const {
    return data[static_cast<std::size_t>(i) * cols + j];
  }

  static DenseMatrix identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }

  friend bool operator==(const DenseMatrix& x, const DenseMatrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.data == y.data;
  }
};

inline DenseMatrix matrix_multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols != b.rows) throw usage_error("matrix product shape mismatch");
  DenseMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      double aik = a.at(i, k);
      if (aik == 0.0) continue;
      const double* brow = &b.data[static_cast<std::size_t>(k) * b.cols];
      double* crow = &c.data[static_cast<std::size_t>(i) * c.cols];
      for (int j = 0; j < b.cols; ++j) crow[j] += aik * brow[j];
    }
  return c;
}

inline std::vector<double> matrix_apply(const DenseMatrix& a,
                                        const std::vector<double>& x) {
  if (a.cols != static_cast<int>(x.size()))
    throw usage_error("matrix-vector shape mismatch");
  std::vector<double> y(static_cast<std::size_t>(a.rows), 0.0);
  for (int i = 0; i < a.rows; ++i) {
    const double* row = &a.data[static_cast<std::size_t>(i) * a.cols];
    double sum = 0.0;
    for (int j = 0; j < a.cols; ++j) sum += row[j] * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = sum;
  }
  return y;
}

inline double frobenius_norm(const DenseMatrix& a) {
  double sum = 0.0;
  for (double v : a.data) sum += v * v;
  return std::sqrt(sum);
}

inline double max_abs_entry(const DenseMatrix& a) {
  double best = 0.0;
  for (double v : a.data) best = std::max(best, std::fabs(v));
  return best;
}

inline double symmetry_defect(const DenseMatrix& a) {
  double worst = 0.0;
  for (int i = 0; i < a.rows; ++i)
    for (int j = i + 1; j < a.cols; ++j)
      worst = std::max(worst, std::fabs(a.at(i, j) - a.at(j, i)));
  return worst;
}

inline double matrix_trace(const DenseMatrix& a) {
  double sum = 0.0;
  for (int i = 0; i < std::min(a.rows, a.cols); ++i) sum += a.at(i, i);
  return sum;
}

// LU factorization with partial pivoting, PA = LU stored compactly.
struct LuFactors {
  DenseMatrix lu;
  std::vector<int> pivot;  // row permutation, pivot[i] = original row index
  int sign = 1;
  bool singular = false;
};

inline LuFactors lu_factor(DenseMatrix a) {
  if (a.rows != a.cols) throw usage_error("LU needs a square matrix");
  const int n = a.rows;
  LuFactors f;
  f.pivot.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) f.pivot[static_cast<std::size_t>(i)] = i;

  for (int k = 0; k < n; ++k) {
    int best = k;
    double best_abs = std::fabs(a.at(k, k));
    for (int i = k + 1; i < n; ++i) {
      double candidate = std::fabs(a.at(i, k));
      if (candidate > best_abs) {
        best = i;
        best_abs = candidate;
      }
    }
    if (best_abs == 0.0) {
      f.singular = true;
      continue;
    }
    if (best != k) {
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(best, j));
      std::swap(f.pivot[static_cast<std::size_t>(k)],
                f.pivot[static_cast<std::size_t>(best)]);
      f.sign = -f.sign;
    }
    double pivot_value = a.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      double factor = a.at(i, k) / pivot_value;
      a.at(i, k) = factor;
      if (factor == 0.0) continue;
      for (int j = k + 1; j < n; ++j) a.at(i, j) -= factor * a.at(k, j);
    }
  }
  f.lu = std::move(a);
  return f;
}

inline double lu_determinant(const LuFactors& f) {
  if (f.singular) return 0.0;
  double det = f.sign;
  for (int i = 0; i < f.lu.rows; ++i) det *= f.lu.at(i, i);
  return det;
}

inline double matrix_determinant(const DenseMatrix& a) {
  return lu_determinant(lu_factor(a));
}

// Solves A x = b given the factorization of A.
inline std::vector<double> lu_solve(const LuFactors& f,
                                    const std::vector<double>& b) {
  if (f.singular) throw usage_error("LU solve on a singular matrix");
  const int n = f.lu.rows;
  if (static_cast<int>(b.size()) != n)
    throw usage_error("LU solve shape mismatch");
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    x[static_cast<std::size_t>(i)] =
        b[static_cast<std::size_t>(f.pivot[static_cast<std::size_t>(i)])];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      x[static_cast<std::size_t>(i)] -=
          f.lu.at(i, j) * x[static_cast<std::size_t>(j)];
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j)
      x[static_cast<std::size_t>(i)] -=
          f.lu.at(i, j) * x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(i)] /= f.lu.at(i, i);
  }
  return x;
}

// Solves A X = B column by column.
inline DenseMatrix lu_solve_matrix(const LuFactors& f, const DenseMatrix& b) {
  DenseMatrix x(b.rows, b.cols);
  std::vector<double> column(static_cast<std::size_t>(b.rows));
  for (int j = 0; j < b.cols; ++j) {
    for (int i = 0; i < b.rows; ++i)
      column[static_cast<std::size_t>(i)] = b.at(i, j);
    std::vector<double> solved = lu_solve(f, column);
    for (int i = 0; i < b.rows; ++i)
      x.at(i, j) = solved[static_cast<std::size_t>(i)];
  }
  return x;
}

}  // namespace selfsim
