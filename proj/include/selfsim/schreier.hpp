// Level-n Schreier graphs of a self-similar action: construction in labeled
// multigraph or simplicial mode, the covering tower between consecutive
// levels, rooted-ball comparison, and deterministic DOT/CSV export with a
// matching CSV importer.
#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "selfsim/action.hpp"
#include "selfsim/base.hpp"
#include "selfsim/report.hpp"
#include "selfsim/word.hpp"

namespace selfsim {

enum class GraphMode { multigraph, simplicial };

inline const char* graph_mode_name(GraphMode mode) {
  return mode == GraphMode::multigraph ? "multigraph" : "simplicial";
}

// One edge row. Multigraph rows are directed arcs source -> target carrying a
// single generator label (loops included); simplicial rows are undirected
// edges stored once with source <= target and the sorted list of generators
// witnessing the adjacency (loops and duplicates dropped).
struct GraphEdge {
  long long source = 0;
  long long target = 0;
  std::vector<std::string> labels;

  friend bool operator==(const GraphEdge& x, const GraphEdge& y) {
    return x.source == y.source && x.target == y.target && x.labels == y.labels;
  }
  friend bool operator<(const GraphEdge& x, const GraphEdge& y) {
    if (x.source != y.source) return x.source < y.source;
    if (x.target != y.target) return x.target < y.target;
    return x.labels < y.labels;
  }
};

// A level-n orbit graph. Vertices are the q^level words over the alphabet in
// lexicographic order (first letter most significant), identified by index.
struct SchreierGraph {
  int level = 0;
  int alphabet = 2;
  GraphMode mode = GraphMode::multigraph;
  std::vector<std::string> generator_names;
  long long vertices = 0;
  std::vector<GraphEdge> edges;  // sorted by (source, target, labels)

  std::string vertex_name(long long index) const {
    return vertex_to_string(vertex_from_index(alphabet, level, index),
                            alphabet);
  }

  friend bool operator==(const SchreierGraph& x, const SchreierGraph& y) {
    return x.level == y.level && x.alphabet == y.alphabet && x.mode == y.mode &&
           x.generator_names == y.generator_names && x.vertices == y.vertices &&
           x.edges == y.edges;
  }
};

// Permutation table of one generator at a level: entry v is the index of the
// image of vertex v.
inline std::vector<long long> level_action_table(const WordEngine& engine,
                                                 int generator, int level) {
  const int q = engine.alphabet_size();
  const long long count = vertex_count(q, level);
  GroupWord gen = word_generator(generator, false);
  std::vector<long long> table(static_cast<std::size_t>(count));
  for (long long v = 0; v < count; ++v) {
    Vertex image = engine.apply(gen, vertex_from_index(q, level, v));
    table[static_cast<std::size_t>(v)] = vertex_to_index(image, q);
  }
  return table;
}

inline SchreierGraph build_schreier(const WordEngine& engine, int level,
                                    GraphMode mode,
                                    long long vertex_cap = 16384) {
  if (level < 1) throw usage_error("schreier graph level must be >= 1");
  const int q = engine.alphabet_size();
  const long long count = vertex_count(q, level);
  if (count > vertex_cap)
    throw cap_exceeded("schreier graph at level " + std::to_string(level) +
                       " has " + std::to_string(count) +
                       " vertices, above the cap of " +
                       std::to_string(vertex_cap));

  SchreierGraph graph;
  graph.level = level;
  graph.alphabet = q;
  graph.mode = mode;
  for (int g = 0; g < engine.generator_count(); ++g)
    graph.generator_names.push_back(engine.machine().state(g).name);
  graph.vertices = count;

  if (mode == GraphMode::multigraph) {
    for (int g = 0; g < engine.generator_count(); ++g) {
      const std::vector<long long> table = level_action_table(engine, g, level);
      for (long long v = 0; v < count; ++v) {
        GraphEdge edge;
        edge.source = v;
        edge.target = table[static_cast<std::size_t>(v)];
        edge.labels = {graph.generator_names[g]};
        graph.edges.push_back(std::move(edge));
      }
    }
    std::sort(graph.edges.begin(), graph.edges.end());
    return graph;
  }

  // Simplicial mode: undirected adjacency with generator witness sets.
  std::map<std::pair<long long, long long>, std::set<std::string>> adjacency;
  for (int g = 0; g < engine.generator_count(); ++g) {
    const std::vector<long long> table = level_action_table(engine, g, level);
    for (long long v = 0; v < count; ++v) {
      long long t = table[static_cast<std::size_t>(v)];
      if (t == v) continue;
      adjacency[{std::min(v, t), std::max(v, t)}].insert(
          graph.generator_names[g]);
    }
  }
  for (const auto& [pair, labels] : adjacency) {
    GraphEdge edge;
    edge.source = pair.first;
    edge.target = pair.second;
    edge.labels.assign(labels.begin(), labels.end());
    graph.edges.push_back(std::move(edge));
  }
  return graph;
}

// Undirected adjacency lists (simplicial graphs), edge index per entry.
inline std::vector<std::vector<std::pair<long long, std::size_t>>>
adjacency_lists(const SchreierGraph& graph) {
  std::vector<std::vector<std::pair<long long, std::size_t>>> adjacency(
      static_cast<std::size_t>(graph.vertices));
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    const GraphEdge& edge = graph.edges[i];
    adjacency[static_cast<std::size_t>(edge.source)].emplace_back(edge.target,
                                                                  i);
    if (edge.target != edge.source)
      adjacency[static_cast<std::size_t>(edge.target)].emplace_back(
          edge.source, i);
  }
  return adjacency;
}

inline bool graph_connected(const SchreierGraph& graph) {
  if (graph.vertices <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(graph.vertices), 0);
  const auto adjacency = adjacency_lists(graph);
  std::queue<long long> frontier;
  frontier.push(0);
  seen[0] = 1;
  long long reached = 1;
  while (!frontier.empty()) {
    long long v = frontier.front();
    frontier.pop();
    for (const auto& [next, edge] : adjacency[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(next)]) {
        seen[static_cast<std::size_t>(next)] = 1;
        ++reached;
        frontier.push(next);
      }
  }
  return reached == graph.vertices;
}

// Connectivity of the orbit graphs for levels 1..max_level.
inline PropertyReport check_schreier_connectivity(const WordEngine& engine,
                                                  int max_level) {
  PropertyReport report;
  report.property = "schreier-connectivity";
  report.parameters["max_level"] = std::to_string(max_level);
  for (int level = 1; level <= max_level; ++level) {
    SchreierGraph graph =
        build_schreier(engine, level, GraphMode::simplicial);
    ReportItem item("level " + std::to_string(level));
    item.set("vertices", std::to_string(graph.vertices));
    item.set("edges", std::to_string(graph.edges.size()));
    if (graph_connected(graph)) {
      report.witnesses.push_back(item);
    } else {
      report.counterexamples.push_back(item);
      report.verdict = Verdict::fails;
      return report;
    }
  }
  report.verdict = Verdict::holds;
  return report;
}

// Covering consistency between two consecutive multigraph levels: dropping
// the final letter must commute with every generator arc.
struct CoveringCheck {
  int level = 0;  // base level; the check compares level+1 against it
  bool holds = true;
  long long checked = 0;
  struct Mismatch {
    std::string generator;
    long long vertex = 0;      // level-(n+1) vertex index
    long long truncated_image = 0;
    long long expected_image = 0;
  };
  std::vector<Mismatch> mismatches;
};

inline CoveringCheck verify_covering(const SchreierGraph& upper,
                                     const SchreierGraph& lower) {
  if (upper.mode != GraphMode::multigraph ||
      lower.mode != GraphMode::multigraph)
    throw usage_error("covering checks need multigraph mode");
  if (upper.level != lower.level + 1)
    throw usage_error("covering checks compare consecutive levels");

  CoveringCheck check;
  check.level = lower.level;
  const long long q = upper.alphabet;

  // Arc target lookup per (label, source) for the lower graph.
  std::map<std::pair<std::string, long long>, long long> lower_target;
  for (const GraphEdge& edge : lower.edges)
    lower_target[{edge.labels.front(), edge.source}] = edge.target;

  for (const GraphEdge& edge : upper.edges) {
    ++check.checked;
    // The final letter is least significant, so truncation is division.
    long long truncated_source = edge.source / q;
    long long truncated_target = edge.target / q;
    long long expected = lower_target.at({edge.labels.front(),
                                          truncated_source});
    if (truncated_target != expected) {
      check.holds = false;
      check.mismatches.push_back({edge.labels.front(), edge.source,
                                  truncated_target, expected});
    }
  }
  return check;
}

inline CoveringCheck verify_covering(const WordEngine& engine, int level,
                                     long long vertex_cap = 16384) {
  SchreierGraph lower =
      build_schreier(engine, level, GraphMode::multigraph, vertex_cap);
  SchreierGraph upper =
      build_schreier(engine, level + 1, GraphMode::multigraph, vertex_cap);
  return verify_covering(upper, lower);
}

namespace detail {

// Distances from the base up to radius, -1 when farther.
inline std::vector<int> ball_distances(
    const std::vector<std::vector<std::pair<long long, std::size_t>>>&
        adjacency,
    long long base, int radius) {
  std::vector<int> distance(adjacency.size(), -1);
  distance[static_cast<std::size_t>(base)] = 0;
  std::queue<long long> frontier;
  frontier.push(base);
  while (!frontier.empty()) {
    long long v = frontier.front();
    frontier.pop();
    int d = distance[static_cast<std::size_t>(v)];
    if (d == radius) continue;
    for (const auto& [next, edge] : adjacency[static_cast<std::size_t>(v)])
      if (distance[static_cast<std::size_t>(next)] < 0) {
        distance[static_cast<std::size_t>(next)] = d + 1;
        frontier.push(next);
      }
  }
  return distance;
}

// The induced labeled ball: local vertex ids ordered by (distance, index),
// local adjacency with label lists, and per-vertex invariants for pruning.
struct LabeledBall {
  std::vector<long long> vertex_of;             // local id -> graph vertex
  std::vector<int> distance;                    // local id -> distance
  std::vector<std::map<int, std::vector<std::string>>> adjacent;
  std::vector<std::string> signature;           // distance + sorted labels
};

inline LabeledBall extract_ball(const SchreierGraph& graph, long long base,
                                int radius) {
  const auto adjacency = adjacency_lists(graph);
  const std::vector<int> distance = ball_distances(adjacency, base, radius);

  LabeledBall ball;
  std::map<long long, int> local;
  for (long long v = 0; v < graph.vertices; ++v)
    if (distance[static_cast<std::size_t>(v)] >= 0) {
      local[v] = static_cast<int>(ball.vertex_of.size());
      ball.vertex_of.push_back(v);
      ball.distance.push_back(distance[static_cast<std::size_t>(v)]);
    }
  std::stable_sort(ball.vertex_of.begin(), ball.vertex_of.end(),
                   [&](long long x, long long y) {
                     int dx = distance[static_cast<std::size_t>(x)];
                     int dy = distance[static_cast<std::size_t>(y)];
                     if (dx != dy) return dx < dy;
                     return x < y;
                   });
  local.clear();
  for (std::size_t i = 0; i < ball.vertex_of.size(); ++i) {
    local[ball.vertex_of[i]] = static_cast<int>(i);
    ball.distance[i] =
        distance[static_cast<std::size_t>(ball.vertex_of[i])];
  }

  ball.adjacent.resize(ball.vertex_of.size());
  for (const GraphEdge& edge : graph.edges) {
    auto s = local.find(edge.source);
    auto t = local.find(edge.target);
    if (s == local.end() || t == local.end()) continue;
    ball.adjacent[static_cast<std::size_t>(s->second)][t->second] =
        edge.labels;
    ball.adjacent[static_cast<std::size_t>(t->second)][s->second] =
        edge.labels;
  }

  for (std::size_t i = 0; i < ball.vertex_of.size(); ++i) {
    std::vector<std::string> incident;
    for (const auto& [other, labels] : ball.adjacent[i])
      for (const std::string& label : labels) incident.push_back(label);
    std::sort(incident.begin(), incident.end());
    std::string sig = std::to_string(ball.distance[i]) + ":";
    for (const std::string& label : incident) sig += label + ",";
    ball.signature.push_back(std::move(sig));
  }
  return ball;
}

// Exact root- and label-preserving isomorphism between two induced balls by
// backtracking in BFS order with signature pruning.
inline bool balls_isomorphic(const LabeledBall& a, const LabeledBall& b) {
  const std::size_t n = a.vertex_of.size();
  if (b.vertex_of.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    // Per-distance counts must agree (both lists are distance-sorted).
    if (a.distance[i] != b.distance[i]) return false;
  }

  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);

  // Map in BFS order; position 0 is the root on both sides.
  std::vector<std::size_t> stack_choice(n, 0);
  std::size_t position = 0;
  while (true) {
    if (position == n) return true;
    bool advanced = false;
    for (std::size_t candidate = stack_choice[position]; candidate < n;
         ++candidate) {
      if (used[candidate]) continue;
      if (position == 0 && candidate != 0) break;  // root maps to root
      if (a.signature[position] != b.signature[candidate]) continue;
      // Adjacency (and labels) to all earlier mapped vertices must agree.
      bool consistent = true;
      for (std::size_t earlier = 0; earlier < position && consistent;
           ++earlier) {
        auto in_a = a.adjacent[position].find(static_cast<int>(earlier));
        auto in_b = b.adjacent[candidate].find(image[earlier]);
        bool has_a = in_a != a.adjacent[position].end();
        bool has_b = in_b != b.adjacent[candidate].end();
        if (has_a != has_b)
          consistent = false;
        else if (has_a && in_a->second != in_b->second)
          consistent = false;
      }
      if (!consistent) continue;
      image[position] = static_cast<int>(candidate);
      used[candidate] = 1;
      stack_choice[position] = candidate + 1;
      ++position;
      if (position < n) stack_choice[position] = 0;
      advanced = true;
      break;
    }
    if (advanced) continue;
    if (position == 0) return false;
    --position;
    used[static_cast<std::size_t>(image[position])] = 0;
    image[position] = -1;
  }
}

}  // namespace detail

// Largest r <= r_max such that the labeled rooted r-balls around the two
// bases are isomorphic as labeled rooted graphs.
inline int ball_isometry_radius(const SchreierGraph& graph_a, long long base_a,
                                const SchreierGraph& graph_b, long long base_b,
                                int r_max) {
  if (graph_a.mode != GraphMode::simplicial ||
      graph_b.mode != GraphMode::simplicial)
    throw usage_error("ball comparison needs simplicial graphs");
  if (base_a < 0 || base_a >= graph_a.vertices || base_b < 0 ||
      base_b >= graph_b.vertices)
    throw usage_error("ball comparison base vertex out of range");

  int best = 0;
  for (int r = 1; r <= r_max; ++r) {
    detail::LabeledBall ball_a = detail::extract_ball(graph_a, base_a, r);
    detail::LabeledBall ball_b = detail::extract_ball(graph_b, base_b, r);
    if (!detail::balls_isomorphic(ball_a, ball_b)) break;
    best = r;
  }
  return best;
}

// --- Export / import -------------------------------------------------------

inline std::string join_labels(const std::vector<std::string>& labels) {
  std::string joined;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) joined += "+";
    joined += labels[i];
  }
  return joined;
}

inline std::vector<std::string> split_labels(const std::string& joined) {
  std::vector<std::string> labels;
  std::string current;
  for (char ch : joined) {
    if (ch == '+') {
      labels.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  labels.push_back(current);
  return labels;
}

inline std::string export_graph_dot(const SchreierGraph& graph) {
  std::ostringstream out;
  const bool directed = graph.mode == GraphMode::multigraph;
  out << (directed ? "digraph" : "graph") << " schreier_level_"
      << graph.level << "_" << graph_mode_name(graph.mode) << " {\n";
  for (long long v = 0; v < graph.vertices; ++v)
    out << "  \"" << graph.vertex_name(v) << "\";\n";
  for (const GraphEdge& edge : graph.edges)
    out << "  \"" << graph.vertex_name(edge.source) << "\" "
        << (directed ? "->" : "--") << " \"" << graph.vertex_name(edge.target)
        << "\" [label=\"" << join_labels(edge.labels) << "\"];\n";
  out << "}\n";
  return out.str();
}

// CSV edge list. The leading comment row carries the graph parameters so the
// importer can reconstruct the exact object (isolated vertices included).
inline std::string export_graph_csv(const SchreierGraph& graph) {
  std::ostringstream out;
  out << "# schreier level=" << graph.level << " alphabet=" << graph.alphabet
      << " mode=" << graph_mode_name(graph.mode) << " generators=";
  for (std::size_t i = 0; i < graph.generator_names.size(); ++i) {
    if (i) out << "+";
    out << graph.generator_names[i];
  }
  out << "\n";
  out << "source,target,label\n";
  for (const GraphEdge& edge : graph.edges)
    out << graph.vertex_name(edge.source) << "," << graph.vertex_name(edge.target)
        << "," << join_labels(edge.labels) << "\n";
  return out.str();
}

inline std::string export_graph(const SchreierGraph& graph,
                                const std::string& format) {
  if (format == "dot") return export_graph_dot(graph);
  if (format == "csv") return export_graph_csv(graph);
  throw usage_error("unsupported graph format '" + format +
                    "' (expected dot or csv)");
}

inline SchreierGraph import_graph_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("# schreier ", 0) != 0)
    throw parse_error("graph csv must start with a '# schreier' comment row");

  SchreierGraph graph;
  std::istringstream header(line.substr(11));
  std::string field;
  while (header >> field) {
    auto eq = field.find('=');
    if (eq == std::string::npos)
      throw parse_error("malformed graph header field '" + field + "'");
    std::string key = field.substr(0, eq);
    std::string value = field.substr(eq + 1);
    if (key == "level")
      graph.level = std::stoi(value);
    else if (key == "alphabet")
      graph.alphabet = std::stoi(value);
    else if (key == "mode" && value == "multigraph")
      graph.mode = GraphMode::multigraph;
    else if (key == "mode" && value == "simplicial")
      graph.mode = GraphMode::simplicial;
    else if (key == "mode")
      throw parse_error("unknown graph mode '" + value + "'");
    else if (key == "generators")
      graph.generator_names = split_labels(value);
    else
      throw parse_error("unknown graph header key '" + key + "'");
  }
  if (graph.level < 1 || graph.alphabet < 2)
    throw parse_error("graph header is missing level or alphabet");
  graph.vertices = vertex_count(graph.alphabet, graph.level);

  if (!std::getline(in, line) || line != "source,target,label")
    throw parse_error("graph csv is missing the source,target,label header");

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto first = line.find(',');
    auto second = line.find(',', first + 1);
    if (first == std::string::npos || second == std::string::npos)
      throw parse_error("malformed graph csv row '" + line + "'");
    GraphEdge edge;
    edge.source = vertex_to_index(
        vertex_from_string(line.substr(0, first), graph.alphabet),
        graph.alphabet);
    edge.target = vertex_to_index(
        vertex_from_string(line.substr(first + 1, second - first - 1),
                           graph.alphabet),
        graph.alphabet);
    edge.labels = split_labels(line.substr(second + 1));
    graph.edges.push_back(std::move(edge));
  }
  return graph;
}

}  // namespace selfsim
