// Level-n action graphs: construction in both modes, covering maps between
// consecutive levels, connectivity, local ball comparison, and the DOT/CSV
// export surface with its round-trip importer.
#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "selfsim/schreier.hpp"

using namespace selfsim;
using testing_helpers::pi;

namespace {

// One state acting as the identity on the binary alphabet.
const WordEngine& identity_engine() {
  static WordEngine engine(
      parse_automaton("alphabet: 2\nstate t: 0 -> 0 / e ; 1 -> 1 / e\n"));
  return engine;
}

std::string edge_line(const SchreierGraph& graph, const GraphEdge& edge) {
  return graph.vertex_name(edge.source) + ">" + graph.vertex_name(edge.target) +
         "[" + join_labels(edge.labels) + "]";
}

std::vector<std::string> edge_lines(const SchreierGraph& graph) {
  std::vector<std::string> lines;
  for (const GraphEdge& edge : graph.edges) lines.push_back(edge_line(graph, edge));
  return lines;
}

}  // namespace

TEST_CASE("level action tables implement the wreath recursion") {
  // Generators indexed a=0, b=1, c=2, d=3 as declared by the preset.
  // Level 1: a swaps the two letters, b/c/d fix them.
  CHECK(level_action_table(pi(), 0, 1) == std::vector<long long>{1, 0});
  CHECK(level_action_table(pi(), 1, 1) == std::vector<long long>{0, 1});
  CHECK(level_action_table(pi(), 2, 1) == std::vector<long long>{0, 1});
  CHECK(level_action_table(pi(), 3, 1) == std::vector<long long>{0, 1});

  // Level 2, first letter most significant: 00=0, 01=1, 10=2, 11=3.
  CHECK(level_action_table(pi(), 0, 2) == std::vector<long long>{2, 3, 0, 1});
  CHECK(level_action_table(pi(), 1, 2) == std::vector<long long>{1, 0, 2, 3});
  CHECK(level_action_table(pi(), 2, 2) == std::vector<long long>{1, 0, 3, 2});
  CHECK(level_action_table(pi(), 3, 2) == std::vector<long long>{0, 1, 2, 3});
}

TEST_CASE("level-1 multigraph has one arc per generator and vertex") {
  SchreierGraph graph = build_schreier(pi(), 1, GraphMode::multigraph);
  CHECK(graph.level == 1);
  CHECK(graph.alphabet == 2);
  CHECK(graph.mode == GraphMode::multigraph);
  CHECK(graph.vertices == 2);
  CHECK(graph.generator_names ==
        std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(edge_lines(graph) ==
        std::vector<std::string>{"0>0[b]", "0>0[c]", "0>0[d]", "0>1[a]",
                                 "1>0[a]", "1>1[b]", "1>1[c]", "1>1[d]"});
}

TEST_CASE("level-2 simplicial graph merges parallel arcs and drops loops") {
  SchreierGraph graph = build_schreier(pi(), 2, GraphMode::simplicial);
  CHECK(graph.vertices == 4);
  // b and c agree on vertex 00, so the edge carries both labels; every d arc
  // is a loop at this level and disappears.
  CHECK(edge_lines(graph) ==
        std::vector<std::string>{"00>01[b+c]", "00>10[a]", "01>11[a]",
                                 "10>11[c]"});
}

TEST_CASE("vertex names are level-length words, first letter most significant") {
  SchreierGraph graph = build_schreier(pi(), 3, GraphMode::multigraph);
  CHECK(graph.vertex_name(0) == "000");
  CHECK(graph.vertex_name(1) == "001");
  CHECK(graph.vertex_name(4) == "100");
  CHECK(graph.vertex_name(7) == "111");
}

TEST_CASE("identity automaton yields loop multigraphs and empty simplicial graphs") {
  SchreierGraph multi = build_schreier(identity_engine(), 3, GraphMode::multigraph);
  CHECK(multi.vertices == 8);
  CHECK(multi.edges.size() == 8);
  for (const GraphEdge& edge : multi.edges) {
    CHECK(edge.source == edge.target);
    CHECK(edge.labels == std::vector<std::string>{"t"});
  }
  SchreierGraph simp = build_schreier(identity_engine(), 3, GraphMode::simplicial);
  CHECK(simp.vertices == 8);
  CHECK(simp.edges.empty());
}

TEST_CASE("graph construction rejects bad levels and enforces the vertex cap") {
  CHECK_THROWS_AS(build_schreier(pi(), 0, GraphMode::multigraph), usage_error);
  CHECK_THROWS_AS(build_schreier(pi(), -3, GraphMode::simplicial), usage_error);
  CHECK_THROWS_AS(build_schreier(pi(), 15, GraphMode::multigraph, 16384),
                  cap_exceeded);
  CHECK_NOTHROW(build_schreier(pi(), 14, GraphMode::multigraph, 16384));
}

TEST_CASE("simplicial graphs stay connected through level 12") {
  PropertyReport report = check_schreier_connectivity(pi(), 12);
  CHECK(report.property == "schreier-connectivity");
  CHECK(report.verdict == Verdict::holds);
  CHECK(report.parameters.at("max_level") == "12");
  CHECK(report.counterexamples.empty());
}

TEST_CASE("truncating the final letter is a covering of the previous level") {
  for (int level = 1; level <= 11; ++level) {
    CoveringCheck check = verify_covering(pi(), level);
    CHECK(check.holds);
    CHECK(check.level == level);
    // One projected arc per generator and upper vertex (level + 1).
    CHECK(check.checked == 4LL * (1LL << (level + 1)));
    CHECK(check.mismatches.empty());
  }
}

TEST_CASE("covering verification localizes a tampered arc") {
  SchreierGraph upper = build_schreier(pi(), 2, GraphMode::multigraph);
  SchreierGraph lower = build_schreier(pi(), 1, GraphMode::multigraph);
  CHECK(verify_covering(upper, lower).holds);

  bool tampered = false;
  for (GraphEdge& edge : upper.edges) {
    if (edge.labels == std::vector<std::string>{"a"} && edge.source == 0) {
      edge.target = edge.source;  // break a(00) = 10 into a loop
      tampered = true;
      break;
    }
  }
  REQUIRE(tampered);

  CoveringCheck check = verify_covering(upper, lower);
  CHECK_FALSE(check.holds);
  REQUIRE(check.mismatches.size() == 1);
  CHECK(check.mismatches[0].generator == "a");
  CHECK(check.mismatches[0].vertex == 0);
  CHECK(check.mismatches[0].truncated_image == 0);
  CHECK(check.mismatches[0].expected_image == 1);
}

TEST_CASE("covering checks reject simplicial graphs and level gaps") {
  SchreierGraph s2 = build_schreier(pi(), 2, GraphMode::simplicial);
  SchreierGraph m1 = build_schreier(pi(), 1, GraphMode::multigraph);
  SchreierGraph m3 = build_schreier(pi(), 3, GraphMode::multigraph);
  CHECK_THROWS_AS(verify_covering(s2, m1), usage_error);
  CHECK_THROWS_AS(verify_covering(m3, m1), usage_error);
}

TEST_CASE("rooted balls around the leftmost ray agree up to radius 2 across levels") {
  SchreierGraph g5 = build_schreier(pi(), 5, GraphMode::simplicial);
  SchreierGraph g6 = build_schreier(pi(), 6, GraphMode::simplicial);
  // Vertex 0 is 00000 resp. 000000.
  CHECK(ball_isometry_radius(g5, 0, g6, 0, 1) == 1);
  for (int r_max : {2, 3, 4, 5, 6, 8, 12})
    CHECK(ball_isometry_radius(g5, 0, g6, 0, r_max) == 2);
  CHECK(ball_isometry_radius(g6, 0, g5, 0, 12) == 2);
}

TEST_CASE("a ball compared with itself matches out to the requested radius") {
  SchreierGraph g5 = build_schreier(pi(), 5, GraphMode::simplicial);
  CHECK(ball_isometry_radius(g5, 0, g5, 0, 7) == 7);
  CHECK(ball_isometry_radius(g5, 3, g5, 3, 4) == 4);
}

TEST_CASE("degree mismatch at radius 1 stops the ball comparison at 0") {
  SchreierGraph lively = build_schreier(pi(), 1, GraphMode::simplicial);
  SchreierGraph inert = build_schreier(identity_engine(), 1, GraphMode::simplicial);
  CHECK(ball_isometry_radius(lively, 0, inert, 0, 3) == 0);
}

TEST_CASE("ball comparison rejects multigraphs and bad base vertices") {
  SchreierGraph multi = build_schreier(pi(), 2, GraphMode::multigraph);
  SchreierGraph simp = build_schreier(pi(), 2, GraphMode::simplicial);
  CHECK_THROWS_AS(ball_isometry_radius(multi, 0, multi, 0, 2), usage_error);
  CHECK_THROWS_AS(ball_isometry_radius(simp, 4, simp, 0, 2), usage_error);
  CHECK_THROWS_AS(ball_isometry_radius(simp, 0, simp, -1, 2), usage_error);
}

TEST_CASE("dot export writes arcs for multigraphs and plain edges otherwise") {
  SchreierGraph m1 = build_schreier(pi(), 1, GraphMode::multigraph);
  CHECK(export_graph_dot(m1) ==
        "digraph schreier_level_1_multigraph {\n"
        "  \"0\";\n"
        "  \"1\";\n"
        "  \"0\" -> \"0\" [label=\"b\"];\n"
        "  \"0\" -> \"0\" [label=\"c\"];\n"
        "  \"0\" -> \"0\" [label=\"d\"];\n"
        "  \"0\" -> \"1\" [label=\"a\"];\n"
        "  \"1\" -> \"0\" [label=\"a\"];\n"
        "  \"1\" -> \"1\" [label=\"b\"];\n"
        "  \"1\" -> \"1\" [label=\"c\"];\n"
        "  \"1\" -> \"1\" [label=\"d\"];\n"
        "}\n");
  SchreierGraph empty = build_schreier(identity_engine(), 1, GraphMode::simplicial);
  CHECK(export_graph_dot(empty) ==
        "graph schreier_level_1_simplicial {\n"
        "  \"0\";\n"
        "  \"1\";\n"
        "}\n");
}

TEST_CASE("csv export carries a header row describing the graph") {
  SchreierGraph m1 = build_schreier(pi(), 1, GraphMode::multigraph);
  CHECK(export_graph_csv(m1) ==
        "# schreier level=1 alphabet=2 mode=multigraph generators=a+b+c+d\n"
        "source,target,label\n"
        "0,0,b\n0,0,c\n0,0,d\n0,1,a\n1,0,a\n1,1,b\n1,1,c\n1,1,d\n");
  SchreierGraph s2 = build_schreier(pi(), 2, GraphMode::simplicial);
  CHECK(export_graph_csv(s2) ==
        "# schreier level=2 alphabet=2 mode=simplicial generators=a+b+c+d\n"
        "source,target,label\n"
        "00,01,b+c\n00,10,a\n01,11,a\n10,11,c\n");
}

TEST_CASE("export_graph dispatches on format and rejects unknown names") {
  SchreierGraph m1 = build_schreier(pi(), 1, GraphMode::multigraph);
  CHECK(export_graph(m1, "dot") == export_graph_dot(m1));
  CHECK(export_graph(m1, "csv") == export_graph_csv(m1));
  CHECK_THROWS_AS(export_graph(m1, "svg"), usage_error);
}

TEST_CASE("csv round-trip reproduces the graph exactly in both modes") {
  for (int level : {1, 2, 4}) {
    SchreierGraph multi = build_schreier(pi(), level, GraphMode::multigraph);
    CHECK(import_graph_csv(export_graph_csv(multi)) == multi);
    SchreierGraph simp = build_schreier(pi(), level, GraphMode::simplicial);
    CHECK(import_graph_csv(export_graph_csv(simp)) == simp);
  }
  // Isolated vertices survive because the header pins level and alphabet.
  SchreierGraph empty = build_schreier(identity_engine(), 3, GraphMode::simplicial);
  SchreierGraph back = import_graph_csv(export_graph_csv(empty));
  CHECK(back == empty);
  CHECK(back.vertices == 8);
}

TEST_CASE("csv import rejects malformed input") {
  CHECK_THROWS_AS(import_graph_csv("source,target,label\n0,1,a\n"), parse_error);
  CHECK_THROWS_AS(import_graph_csv("# schreier level=1 alphabet=2"
                                   " mode=weird generators=a\n"
                                   "source,target,label\n"),
                  parse_error);
  CHECK_THROWS_AS(import_graph_csv("# schreier level=1 alphabet=2"
                                   " mode=multigraph generators=a\n"
                                   "source,target,label\n0,1\n"),
                  parse_error);
}

TEST_CASE("multi-generator labels split back into their parts") {
  CHECK(join_labels({"b", "c"}) == "b+c");
  CHECK(split_labels("b+c") == std::vector<std::string>{"b", "c"});
  CHECK(split_labels("a") == std::vector<std::string>{"a"});
}

TEST_CASE("adjacency lists agree with the edge set") {
  SchreierGraph graph = build_schreier(pi(), 3, GraphMode::simplicial);
  auto adjacency = adjacency_lists(graph);
  REQUIRE(adjacency.size() == 8);
  std::size_t endpoint_count = 0;
  for (const auto& row : adjacency) endpoint_count += row.size();
  CHECK(endpoint_count == 2 * graph.edges.size());
  for (std::size_t v = 0; v < adjacency.size(); ++v)
    for (const auto& [neighbor, edge_index] : adjacency[v]) {
      REQUIRE(edge_index < graph.edges.size());
      const GraphEdge& edge = graph.edges[edge_index];
      bool endpoint = (edge.source == static_cast<long long>(v) &&
                       edge.target == neighbor) ||
                      (edge.target == static_cast<long long>(v) &&
                       edge.source == neighbor);
      CHECK(endpoint);
    }
  CHECK(graph_connected(graph));
}
