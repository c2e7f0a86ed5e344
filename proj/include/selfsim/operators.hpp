// Level-n operators of a self-similar action on the 2^n tree levels: the
// symmetric Markov averaging operator over S and its inverses, the constant-
// degree Laplacian, the symmetrized weighted (Hecke-type) operator, and the
// 0/1 adjacency and true-degree Laplacian of the loopless orbit graph.
#pragma once

#include <string>
#include <vector>

#include "selfsim/action.hpp"
#include "selfsim/base.hpp"
#include "selfsim/matrix.hpp"
#include "selfsim/schreier.hpp"

namespace selfsim {

enum class OperatorKind {
  markov,
  laplacian,
  hecke,
  adjacency_simplicial,
  laplacian_simplicial,
};

inline const char* operator_kind_name(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::markov: return "markov";
    case OperatorKind::laplacian: return "laplacian";
    case OperatorKind::hecke: return "hecke";
    case OperatorKind::adjacency_simplicial: return "adjacency-simplicial";
    case OperatorKind::laplacian_simplicial: return "laplacian-simplicial";
  }
  return "unknown";
}

inline OperatorKind operator_kind_from_name(const std::string& name) {
  if (name == "markov") return OperatorKind::markov;
  if (name == "laplacian") return OperatorKind::laplacian;
  if (name == "hecke") return OperatorKind::hecke;
  if (name == "adjacency-simplicial") return OperatorKind::adjacency_simplicial;
  if (name == "laplacian-simplicial") return OperatorKind::laplacian_simplicial;
  throw usage_error("unknown operator kind '" + name + "'");
}

struct LevelOperator {
  int level = 0;
  OperatorKind kind = OperatorKind::markov;
  DenseMatrix matrix;
  std::vector<double> weights;  // hecke only, one per generator
};

// Adds weight * (P_s + P_s^T) where P_s is the permutation matrix of one
// generator at the level; the transpose contributes the inverse's action.
inline void accumulate_symmetrized_action(DenseMatrix& matrix,
                                          const std::vector<long long>& table,
                                          double weight) {
  for (long long v = 0; v < static_cast<long long>(table.size()); ++v) {
    long long t = table[static_cast<std::size_t>(v)];
    // (P_s)_{t,v} = 1: column v is sent to row t.
    matrix.at(static_cast<int>(t), static_cast<int>(v)) += weight;
    matrix.at(static_cast<int>(v), static_cast<int>(t)) += weight;
  }
}

inline LevelOperator build_operator(const WordEngine& engine, int level,
                                    OperatorKind kind,
                                    const std::vector<double>& weights = {},
                                    long long vertex_cap = 16384) {
  if (level < 1) throw usage_error("operator level must be >= 1");
  const int q = engine.alphabet_size();
  const long long count = vertex_count(q, level);
  if (count > vertex_cap)
    throw cap_exceeded("operator at level " + std::to_string(level) + " has " +
                       std::to_string(count) +
                       " vertices, above the cap of " +
                       std::to_string(vertex_cap));
  const int n = static_cast<int>(count);
  const int generators = engine.generator_count();

  LevelOperator op;
  op.level = level;
  op.kind = kind;

  switch (kind) {
    case OperatorKind::markov: {
      if (!weights.empty()) throw usage_error("markov takes no weights");
      op.matrix = DenseMatrix(n, n);
      const double weight = 1.0 / (2.0 * generators);
      for (int g = 0; g < generators; ++g)
        accumulate_symmetrized_action(op.matrix,
                                      level_action_table(engine, g, level),
                                      weight);
      return op;
    }
    case OperatorKind::laplacian: {
      if (!weights.empty()) throw usage_error("laplacian takes no weights");
      op.matrix = DenseMatrix(n, n);
      for (int i = 0; i < n; ++i) op.matrix.at(i, i) = 2.0 * generators;
      for (int g = 0; g < generators; ++g)
        accumulate_symmetrized_action(op.matrix,
                                      level_action_table(engine, g, level),
                                      -1.0);
      return op;
    }
    case OperatorKind::hecke: {
      if (static_cast<int>(weights.size()) != generators)
        throw usage_error("hecke needs one weight per generator (" +
                          std::to_string(generators) + ")");
      op.weights = weights;
      op.matrix = DenseMatrix(n, n);
      for (int g = 0; g < generators; ++g)
        accumulate_symmetrized_action(op.matrix,
                                      level_action_table(engine, g, level),
                                      weights[static_cast<std::size_t>(g)]);
      return op;
    }
    case OperatorKind::adjacency_simplicial:
    case OperatorKind::laplacian_simplicial: {
      if (!weights.empty())
        throw usage_error("simplicial operators take no weights");
      SchreierGraph graph =
          build_schreier(engine, level, GraphMode::simplicial, vertex_cap);
      op.matrix = DenseMatrix(n, n);
      for (const GraphEdge& edge : graph.edges) {
        op.matrix.at(static_cast<int>(edge.source),
                     static_cast<int>(edge.target)) = 1.0;
        op.matrix.at(static_cast<int>(edge.target),
                     static_cast<int>(edge.source)) = 1.0;
      }
      if (kind == OperatorKind::laplacian_simplicial) {
        for (int i = 0; i < n; ++i) {
          double degree = 0.0;
          for (int j = 0; j < n; ++j) degree += op.matrix.at(i, j);
          for (int j = 0; j < n; ++j) op.matrix.at(i, j) = -op.matrix.at(i, j);
          op.matrix.at(i, i) = degree;
        }
      }
      return op;
    }
  }
  throw usage_error("unknown operator kind");
}

}  // namespace selfsim
