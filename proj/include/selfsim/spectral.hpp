// Spectra of level operators: full dense decompositions with residual
// tracking, level-to-level spectral convergence, the Kesten-style lower
// bound report, first-letter Schur block probes, and histogram/CSV
// serialization of the results.
#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "selfsim/action.hpp"
#include "selfsim/base.hpp"
#include "selfsim/eigen.hpp"
#include "selfsim/matrix.hpp"
#include "selfsim/operators.hpp"
#include "selfsim/report.hpp"

namespace selfsim {

enum class EigenSelection { values_only, all, smallest, largest };

struct SpectrumResult {
  int level = 0;
  OperatorKind kind = OperatorKind::markov;
  std::vector<double> eigenvalues;  // full spectrum, ascending
  std::vector<int> vector_indices;  // eigenvalue index per stored column
  DenseMatrix vectors;              // rows = vertices, one column per index
  std::vector<double> residuals;    // ||Av - lambda v||_2 per stored column
  double operator_norm = 0.0;       // max |eigenvalue| (2-norm, symmetric)
  bool converged = true;
  int max_sweeps = 0;
};

inline SpectrumResult eigen_decompose(const LevelOperator& op,
                                      EigenSelection selection, int k = 0,
                                      int sweep_cap = 50) {
  const int n = op.matrix.rows;
  if ((selection == EigenSelection::smallest ||
       selection == EigenSelection::largest) &&
      (k < 1 || k > n))
    throw usage_error("eigenvector selection count out of range");

  const bool want_vectors = selection != EigenSelection::values_only;
  SymmetricEigenResult eig =
      eigen_symmetric(op.matrix, want_vectors, sweep_cap);

  SpectrumResult result;
  result.level = op.level;
  result.kind = op.kind;
  result.eigenvalues = eig.values;
  result.converged = eig.converged;
  result.max_sweeps = eig.max_sweeps;
  if (!eig.values.empty())
    result.operator_norm = std::max(std::fabs(eig.values.front()),
                                    std::fabs(eig.values.back()));

  if (want_vectors) {
    int first = 0;
    int count = n;
    if (selection == EigenSelection::smallest) {
      count = k;
    } else if (selection == EigenSelection::largest) {
      first = n - k;
      count = k;
    }
    result.vectors = DenseMatrix(n, count);
    result.vector_indices.resize(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) {
      result.vector_indices[static_cast<std::size_t>(j)] = first + j;
      for (int i = 0; i < n; ++i)
        result.vectors.at(i, j) = eig.vectors.at(i, first + j);
    }

    // Residuals ||Av - lambda v||_2 column by column.
    result.residuals.resize(static_cast<std::size_t>(count), 0.0);
    std::vector<double> column(static_cast<std::size_t>(n));
    for (int j = 0; j < count; ++j) {
      for (int i = 0; i < n; ++i)
        column[static_cast<std::size_t>(i)] = result.vectors.at(i, j);
      std::vector<double> image = matrix_apply(op.matrix, column);
      double lambda =
          result.eigenvalues[static_cast<std::size_t>(first + j)];
      double sum = 0.0;
      for (int i = 0; i < n; ++i) {
        double r = image[static_cast<std::size_t>(i)] -
                   lambda * column[static_cast<std::size_t>(i)];
        sum += r * r;
      }
      result.residuals[static_cast<std::size_t>(j)] = std::sqrt(sum);
    }
  }
  return result;
}

inline double worst_residual(const SpectrumResult& result) {
  double worst = 0.0;
  for (double r : result.residuals) worst = std::max(worst, r);
  return worst;
}

// Largest pairwise deviation from orthonormality among stored vectors.
inline double orthonormality_defect(const SpectrumResult& result) {
  const int n = result.vectors.rows;
  const int k = result.vectors.cols;
  double worst = 0.0;
  for (int p = 0; p < k; ++p)
    for (int r = p; r < k; ++r) {
      double dot = 0.0;
      for (int i = 0; i < n; ++i)
        dot += result.vectors.at(i, p) * result.vectors.at(i, r);
      worst = std::max(worst, std::fabs(dot - (p == r ? 1.0 : 0.0)));
    }
  return worst;
}

// --- Spectral convergence across the level tower ---------------------------

struct ConvergenceReport {
  OperatorKind kind = OperatorKind::markov;
  int n_min = 0;
  int n_max = 0;
  bool asserted = false;  // multigraph kinds assert containment
  bool holds = true;
  double tolerance = 1e-6;
  struct LevelGap {
    int level = 0;           // compares spec at this level against level+1
    double delta = 0.0;      // one-sided Hausdorff gap
    int violations = 0;      // eigenvalues farther than the tolerance
  };
  std::vector<LevelGap> gaps;
};

inline bool operator_kind_multigraph(OperatorKind kind) {
  return kind == OperatorKind::markov || kind == OperatorKind::laplacian ||
         kind == OperatorKind::hecke;
}

inline ConvergenceReport spectral_convergence(
    const WordEngine& engine, OperatorKind kind, int n_min, int n_max,
    double tolerance = 1e-6, const std::vector<double>& weights = {},
    long long vertex_cap = 16384) {
  if (n_min < 1 || n_max < n_min)
    throw usage_error("convergence needs 1 <= n_min <= n_max");

  ConvergenceReport report;
  report.kind = kind;
  report.n_min = n_min;
  report.n_max = n_max;
  report.asserted = operator_kind_multigraph(kind);
  report.tolerance = tolerance;

  std::vector<double> current =
      eigen_decompose(build_operator(engine, n_min, kind, weights, vertex_cap),
                      EigenSelection::values_only)
          .eigenvalues;
  for (int level = n_min; level < n_max; ++level) {
    std::vector<double> next =
        eigen_decompose(
            build_operator(engine, level + 1, kind, weights, vertex_cap),
            EigenSelection::values_only)
            .eigenvalues;
    ConvergenceReport::LevelGap gap;
    gap.level = level;
    for (double value : current) {
      // next is ascending: nearest value by binary search.
      auto it = std::lower_bound(next.begin(), next.end(), value);
      double nearest = std::numeric_limits<double>::infinity();
      if (it != next.end()) nearest = std::fabs(*it - value);
      if (it != next.begin())
        nearest = std::min(nearest, std::fabs(*(it - 1) - value));
      gap.delta = std::max(gap.delta, nearest);
      if (nearest > tolerance) ++gap.violations;
    }
    if (report.asserted && gap.violations > 0) report.holds = false;
    report.gaps.push_back(gap);
    current = std::move(next);
  }
  return report;
}

inline PropertyReport convergence_property_report(
    const ConvergenceReport& report) {
  PropertyReport out;
  out.property = "spectral-convergence";
  out.parameters["kind"] = operator_kind_name(report.kind);
  out.parameters["n_min"] = std::to_string(report.n_min);
  out.parameters["n_max"] = std::to_string(report.n_max);
  out.parameters["asserted"] = report.asserted ? "true" : "false";
  out.parameters["tolerance"] = format_double(report.tolerance);
  for (const ConvergenceReport::LevelGap& gap : report.gaps) {
    ReportItem item("level " + std::to_string(gap.level) + " -> " +
                    std::to_string(gap.level + 1));
    item.set("delta", format_double(gap.delta));
    item.set("violations", std::to_string(gap.violations));
    if (report.asserted && gap.violations > 0)
      out.counterexamples.push_back(item);
    else
      out.witnesses.push_back(item);
  }
  out.verdict = report.holds ? Verdict::holds : Verdict::fails;
  return out;
}

// --- Kesten-style lower bound ----------------------------------------------

struct KestenReport {
  double bound = 0.0;  // 2 sqrt(|S_sym| - 1) / |S_sym|
  struct Row {
    int level = 0;
    double second_largest = 0.0;  // second-largest Markov eigenvalue
    double norm_candidate = 0.0;  // norm on the orthocomplement of constants
    bool second_ge_bound = false;
    bool norm_ge_bound = false;
  };
  std::vector<Row> rows;
};

// Classifies a full ascending Markov spectrum against the bound.
inline KestenReport::Row kesten_row_for_spectrum(
    const std::vector<double>& eigenvalues, double bound, int level) {
  KestenReport::Row row;
  row.level = level;
  const std::size_t n = eigenvalues.size();
  if (n >= 2) {
    row.second_largest = eigenvalues[n - 2];
    row.norm_candidate =
        std::max(std::fabs(eigenvalues[n - 2]), std::fabs(eigenvalues[0]));
  }
  row.second_ge_bound = row.second_largest >= bound - 1e-12;
  row.norm_ge_bound = row.norm_candidate >= bound - 1e-12;
  return row;
}

inline KestenReport kesten_bound_check(const WordEngine& engine, int n_max,
                                       long long vertex_cap = 16384) {
  KestenReport report;
  const double degree = 2.0 * engine.generator_count();
  report.bound = 2.0 * std::sqrt(degree - 1.0) / degree;
  for (int level = 1; level <= n_max; ++level) {
    std::vector<double> eigenvalues =
        eigen_decompose(
            build_operator(engine, level, OperatorKind::markov, {}, vertex_cap),
            EigenSelection::values_only)
            .eigenvalues;
    report.rows.push_back(
        kesten_row_for_spectrum(eigenvalues, report.bound, level));
  }
  return report;
}

inline PropertyReport kesten_property_report(const KestenReport& report) {
  PropertyReport out;
  out.property = "kesten-lower-bound";
  out.parameters["bound"] = format_double(report.bound);
  for (const KestenReport::Row& row : report.rows) {
    ReportItem item("level " + std::to_string(row.level));
    item.set("second_largest", format_double(row.second_largest));
    item.set("norm_candidate", format_double(row.norm_candidate));
    item.set("second_ge_bound", row.second_ge_bound ? "yes" : "no");
    item.set("norm_ge_bound", row.norm_ge_bound ? "yes" : "no");
    out.witnesses.push_back(item);
  }
  // The finite-level inequality is asymptotic; the report never fails, it
  // only records how each level compares against the bound.
  out.verdict = Verdict::holds;
  return out;
}

// --- First-letter Schur block probe ----------------------------------------

struct SchurProbe {
  int level = 0;
  double gamma = 0.0;
  int half = 0;  // block size 2^(level-1)
  double cond_threshold = 1e12;
  double tolerance = 1e-6;

  bool block00_invertible = false;
  bool block11_invertible = false;
  double cond00 = 0.0;
  double cond11 = 0.0;

  double det_full = 0.0;
  double det00 = 0.0;
  double det_complement_of00 = 0.0;  // det(B11 - B10 B00^-1 B01)
  double det11 = 0.0;
  double det_complement_of11 = 0.0;  // det(B00 - B01 B11^-1 B10)
  double rel_error00 = 0.0;          // |det_full - det00*detS| / scale
  double rel_error11 = 0.0;
  bool factorization_verified = false;

  std::vector<double> singular_gammas;  // spectra of M00 and M11, sorted

  DenseMatrix block00, block01, block10, block11;
};

namespace detail {

inline DenseMatrix submatrix(const DenseMatrix& a, int row0, int col0,
                             int rows, int cols) {
  DenseMatrix s(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) s.at(i, j) = a.at(row0 + i, col0 + j);
  return s;
}

}  // namespace detail

inline SchurProbe schur_block_probe(const WordEngine& engine, int level,
                                    double gamma,
                                    double cond_threshold = 1e12,
                                    double tolerance = 1e-6,
                                    long long vertex_cap = 16384) {
  if (level < 2) throw usage_error("schur probe needs level >= 2");
  LevelOperator op =
      build_operator(engine, level, OperatorKind::markov, {}, vertex_cap);
  const int n = op.matrix.rows;
  const int half = n / 2;

  SchurProbe probe;
  probe.level = level;
  probe.gamma = gamma;
  probe.half = half;
  probe.cond_threshold = cond_threshold;
  probe.tolerance = tolerance;

  // Vertices whose first letter is 0 occupy indices [0, half); first letter
  // is most significant, so the partition is contiguous.
  DenseMatrix shifted = op.matrix;
  for (int i = 0; i < n; ++i) shifted.at(i, i) -= gamma;
  probe.block00 = detail::submatrix(shifted, 0, 0, half, half);
  probe.block01 = detail::submatrix(shifted, 0, half, half, half);
  probe.block10 = detail::submatrix(shifted, half, 0, half, half);
  probe.block11 = detail::submatrix(shifted, half, half, half, half);

  // The diagonal blocks are symmetric, so singular values are |eigenvalues|.
  auto block_condition = [&](const DenseMatrix& block, double& cond) {
    std::vector<double> eig =
        eigen_symmetric(block, /*want_vectors=*/false).values;
    double largest = 0.0;
    double smallest = std::numeric_limits<double>::infinity();
    for (double v : eig) {
      largest = std::max(largest, std::fabs(v));
      smallest = std::min(smallest, std::fabs(v));
    }
    if (smallest == 0.0) {
      cond = std::numeric_limits<double>::infinity();
      return false;
    }
    cond = largest / smallest;
    return cond < cond_threshold;
  };
  probe.block00_invertible = block_condition(probe.block00, probe.cond00);
  probe.block11_invertible = block_condition(probe.block11, probe.cond11);

  probe.det_full = matrix_determinant(shifted);
  probe.det00 = matrix_determinant(probe.block00);
  probe.det11 = matrix_determinant(probe.block11);

  bool verified00 = false;
  bool verified11 = false;
  if (probe.block00_invertible) {
    LuFactors lu = lu_factor(probe.block00);
    DenseMatrix inverse_applied = lu_solve_matrix(lu, probe.block01);
    DenseMatrix complement = probe.block11;
    DenseMatrix product = matrix_multiply(probe.block10, inverse_applied);
    for (int i = 0; i < half; ++i)
      for (int j = 0; j < half; ++j)
        complement.at(i, j) -= product.at(i, j);
    probe.det_complement_of00 = matrix_determinant(complement);
    double predicted = probe.det00 * probe.det_complement_of00;
    double scale = std::max({std::fabs(probe.det_full), std::fabs(predicted),
                             1e-300});
    probe.rel_error00 = std::fabs(probe.det_full - predicted) / scale;
    verified00 = probe.rel_error00 <= tolerance;
  }
  if (probe.block11_invertible) {
    LuFactors lu = lu_factor(probe.block11);
    DenseMatrix inverse_applied = lu_solve_matrix(lu, probe.block10);
    DenseMatrix complement = probe.block00;
    DenseMatrix product = matrix_multiply(probe.block01, inverse_applied);
    for (int i = 0; i < half; ++i)
      for (int j = 0; j < half; ++j)
        complement.at(i, j) -= product.at(i, j);
    probe.det_complement_of11 = matrix_determinant(complement);
    double predicted = probe.det11 * probe.det_complement_of11;
    double scale = std::max({std::fabs(probe.det_full), std::fabs(predicted),
                             1e-300});
    probe.rel_error11 = std::fabs(probe.det_full - predicted) / scale;
    verified11 = probe.rel_error11 <= tolerance;
  }
  probe.factorization_verified =
      (!probe.block00_invertible || verified00) &&
      (!probe.block11_invertible || verified11) &&
      (probe.block00_invertible || probe.block11_invertible);

  // Gammas that make a diagonal block singular: the blocks of M - gamma I
  // are M00 - gamma I and M11 - gamma I, so exactly the block spectra.
  DenseMatrix m00 = detail::submatrix(op.matrix, 0, 0, half, half);
  DenseMatrix m11 = detail::submatrix(op.matrix, half, half, half, half);
  std::vector<double> singular = eigen_symmetric(m00, false).values;
  std::vector<double> other = eigen_symmetric(m11, false).values;
  singular.insert(singular.end(), other.begin(), other.end());
  std::sort(singular.begin(), singular.end());
  probe.singular_gammas = std::move(singular);
  return probe;
}

inline PropertyReport schur_property_report(const SchurProbe& probe) {
  PropertyReport out;
  out.property = "schur-block-probe";
  out.parameters["level"] = std::to_string(probe.level);
  out.parameters["gamma"] = format_double(probe.gamma);
  out.parameters["block_size"] = std::to_string(probe.half);
  out.parameters["cond00"] = format_double(probe.cond00);
  out.parameters["cond11"] = format_double(probe.cond11);
  out.parameters["block00_invertible"] =
      probe.block00_invertible ? "yes" : "no";
  out.parameters["block11_invertible"] =
      probe.block11_invertible ? "yes" : "no";
  out.parameters["det_full"] = format_double(probe.det_full);
  if (probe.block00_invertible) {
    out.parameters["det00_times_complement"] =
        format_double(probe.det00 * probe.det_complement_of00);
    out.parameters["rel_error00"] = format_double(probe.rel_error00);
  }
  if (probe.block11_invertible) {
    out.parameters["det11_times_complement"] =
        format_double(probe.det11 * probe.det_complement_of11);
    out.parameters["rel_error11"] = format_double(probe.rel_error11);
  }
  for (double gamma : probe.singular_gammas) {
    ReportItem item("singular gamma " + format_double(gamma));
    out.witnesses.push_back(item);
  }
  out.verdict =
      probe.factorization_verified ? Verdict::holds : Verdict::fails;
  return out;
}

// --- Histogram and CSV artifacts -------------------------------------------

struct HistogramBin {
  double lo = 0.0;
  double hi = 0.0;
  long long count = 0;
};

inline std::vector<HistogramBin> spectrum_histogram(
    const std::vector<double>& eigenvalues, int bins) {
  if (bins < 1) throw usage_error("histogram needs at least one bin");
  if (eigenvalues.empty()) return {};
  double lo = eigenvalues.front();
  double hi = eigenvalues.back();
  for (double v : eigenvalues) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  std::vector<HistogramBin> histogram(static_cast<std::size_t>(bins));
  double width = (hi - lo) / bins;
  for (int b = 0; b < bins; ++b) {
    histogram[static_cast<std::size_t>(b)].lo = lo + b * width;
    histogram[static_cast<std::size_t>(b)].hi = lo + (b + 1) * width;
  }
  histogram.back().hi = hi;
  for (double v : eigenvalues) {
    int index = 0;
    if (width > 0.0)
      index = std::min(bins - 1, static_cast<int>((v - lo) / width));
    ++histogram[static_cast<std::size_t>(index)].count;
  }
  return histogram;
}

inline std::string spectrum_csv(const SpectrumResult& result) {
  std::ostringstream out;
  out << "index,eigenvalue,residual\n";
  // Residuals exist only for eigenvalues whose vectors were requested.
  std::vector<std::string> residual_by_index(result.eigenvalues.size());
  for (std::size_t j = 0; j < result.vector_indices.size(); ++j)
    residual_by_index[static_cast<std::size_t>(
        result.vector_indices[j])] = format_double(result.residuals[j]);
  for (std::size_t i = 0; i < result.eigenvalues.size(); ++i)
    out << i << "," << format_double(result.eigenvalues[i]) << ","
        << residual_by_index[i] << "\n";
  return out.str();
}

inline std::string eigenvector_csv(const SpectrumResult& result) {
  std::ostringstream out;
  for (std::size_t j = 0; j < result.vector_indices.size(); ++j) {
    if (j) out << ",";
    out << "vector_" << result.vector_indices[j];
  }
  out << "\n";
  for (int i = 0; i < result.vectors.rows; ++i) {
    for (int j = 0; j < result.vectors.cols; ++j) {
      if (j) out << ",";
      out << format_double(result.vectors.at(i, j));
    }
    out << "\n";
  }
  return out.str();
}

inline std::string histogram_csv(const std::vector<HistogramBin>& bins) {
  std::ostringstream out;
  out << "bin_lo,bin_hi,count\n";
  for (const HistogramBin& bin : bins)
    out << format_double(bin.lo) << "," << format_double(bin.hi) << ","
        << bin.count << "\n";
  return out.str();
}

}  // namespace selfsim
