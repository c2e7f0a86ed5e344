// Command-line surface: exit codes, output formats, artifact determinism,
// and agreement between the CLI artifacts and the library calls they wrap.
// Each test runs the real binary in a subprocess.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "selfsim/schreier.hpp"

using namespace selfsim;
using testing_helpers::pi;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout (stderr merged when requested)
};

CliResult run_cli(const std::string& args, bool merge_stderr = false) {
  std::string command = std::string(SELFSIM_CLI_PATH) + " " + args;
  command += merge_stderr ? " 2>&1" : " 2>/dev/null";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.output.append(buffer, got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

// Drops the "# selfsim <command> | generated <timestamp>" header line, the
// only part of the output allowed to vary between identical runs.
std::string without_header(const std::string& output) {
  std::size_t newline = output.find('\n');
  REQUIRE(newline != std::string::npos);
  REQUIRE(output.rfind("# selfsim ", 0) == 0);
  return output.substr(newline + 1);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli: nucleus summary reports 67 elements at contraction depth 7") {
  CliResult result = run_cli("nucleus --automaton paper-Pi");
  CHECK(result.exit_code == 0);
  CHECK(contains(result.output, "nucleus elements: 67"));
  CHECK(contains(result.output, "contraction depth: 7"));
  CHECK(contains(result.output, "pair contraction depth: 10"));
}

TEST_CASE("cli: nucleus json artifact carries the full element list") {
  CliResult result = run_cli("nucleus --format json");
  CHECK(result.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(without_header(result.output));
  CHECK(doc["element_count"] == 67);
  CHECK(doc["contraction_depth"] == 7);
  CHECK(doc["pair_contraction_depth"] == 10);
  CHECK(doc["elements"].size() == 67);
  CHECK(doc["elements"][0] == "e");
}

TEST_CASE("cli: word is-trivial exits 0 on a relator and 1 on a generator") {
  CliResult relator = run_cli("word is-trivial --expr '[d,d^a]'");
  CHECK(relator.exit_code == 0);
  CHECK(contains(relator.output, "trivial: true"));
  CliResult generator = run_cli("word is-trivial --expr 'a'");
  CHECK(generator.exit_code == 1);
  CHECK(contains(generator.output, "trivial: false"));
}

TEST_CASE("cli: word equal compares conjugate expressions") {
  CHECK(run_cli("word equal --lhs 'd^a' --rhs 'a^-1 d a'").exit_code == 0);
  CHECK(run_cli("word equal --lhs 'a b' --rhs 'b a'").exit_code == 1);
}

TEST_CASE("cli: word apply and section evaluate the tree action") {
  CliResult apply = run_cli("word apply --expr 'a' --vertex 000");
  CHECK(apply.exit_code == 0);
  CHECK(contains(apply.output, "image: 100"));
  CliResult section = run_cli("word section --expr 'b' --vertex 0");
  CHECK(section.exit_code == 0);
  CHECK(contains(section.output, "section: a"));
}

TEST_CASE("cli: level-1 laplacian spectrum csv holds 0 and 4") {
  CliResult result = run_cli("spectrum --level 1 --kind laplacian");
  CHECK(result.exit_code == 0);
  std::istringstream lines(without_header(result.output));
  std::string line;
  std::getline(lines, line);
  CHECK(line == "index,eigenvalue,residual");
  std::vector<double> eigenvalues;
  while (std::getline(lines, line)) {
    std::size_t first = line.find(',');
    std::size_t second = line.find(',', first + 1);
    eigenvalues.push_back(std::stod(line.substr(first + 1, second - first - 1)));
  }
  REQUIRE(eigenvalues.size() == 2);
  CHECK(std::fabs(eigenvalues[0] - 0.0) <= 1e-12);
  CHECK(std::fabs(eigenvalues[1] - 4.0) <= 1e-12);
}

TEST_CASE("cli: schreier csv artifact equals the library export") {
  CliResult result = run_cli("schreier --level 2 --mode simplicial --format csv");
  CHECK(result.exit_code == 0);
  SchreierGraph graph = build_schreier(pi(), 2, GraphMode::simplicial);
  CHECK(without_header(result.output) == export_graph_csv(graph));
}

TEST_CASE("cli: dot export is the default schreier format") {
  CliResult result = run_cli("schreier --level 1");
  CHECK(result.exit_code == 0);
  CHECK(contains(result.output, "digraph schreier_level_1_multigraph {"));
  CHECK(contains(result.output, "\"0\" -> \"1\" [label=\"a\"];"));
}

TEST_CASE("cli: identical runs differ only in the timestamp header") {
  CliResult first = run_cli("nucleus");
  CliResult second = run_cli("nucleus");
  CHECK(without_header(first.output) == without_header(second.output));
}

TEST_CASE("cli: --out writes the artifact bytes exactly") {
  std::string path = "/tmp/selfsim_cli_test_graph.csv";
  std::remove(path.c_str());
  CliResult piped = run_cli("schreier --level 3 --format csv");
  CliResult filed = run_cli("schreier --level 3 --format csv --out " + path);
  CHECK(filed.exit_code == 0);
  CHECK(contains(filed.output, "wrote " + path));
  CHECK(read_file(path) == without_header(piped.output));
  std::remove(path.c_str());
}

TEST_CASE("cli: exit codes distinguish usage, property, and cap failures") {
  CHECK(run_cli("check fractal").exit_code == 0);
  CHECK(run_cli("bogus-command").exit_code == 2);
  CHECK(run_cli("nucleus --format dot").exit_code == 2);
  CHECK(run_cli("word is-trivial").exit_code == 2);          // missing --expr
  CHECK(run_cli("word is-trivial --expr '[['").exit_code == 2);  // bad syntax
  CHECK(run_cli("schreier --level 20").exit_code == 3);      // vertex cap
  CHECK(run_cli("schreier --level 20 --cap 3000000").exit_code == 0);
  CHECK(run_cli("nucleus --automaton /nonexistent/file").exit_code == 2);
}

TEST_CASE("cli: check subcommand reports verdicts for every property") {
  for (const char* property :
       {"contracting", "fractal", "open-set", "activity", "weak-branch",
        "level-transitive"}) {
    CliResult result = run_cli(std::string("check ") + property);
    CHECK(result.exit_code == 0);
    CHECK(contains(result.output, "verdict: holds"));
  }
  CHECK(run_cli("check nonsense").exit_code == 2);
}

TEST_CASE("cli: adding-machine and grigorchuk presets work end to end") {
  CliResult adding = run_cli("check activity --automaton adding-machine");
  CHECK(adding.exit_code == 0);
  CHECK(contains(adding.output, "class = bounded"));
  CliResult grig = run_cli("nucleus --automaton grigorchuk");
  CHECK(grig.exit_code == 0);
  CHECK(contains(grig.output, "nucleus elements: 5"));
}

TEST_CASE("cli: relations finds nothing short and the known length-8 relator") {
  CliResult short_scan = run_cli("relations --max-length 3");
  CHECK(short_scan.exit_code == 0);
  CHECK(contains(short_scan.output, "relators found: 0"));
  CHECK(contains(short_scan.output, "words scanned: 456"));
}

TEST_CASE("cli: stabilizer and rigid answer membership with exit codes") {
  CHECK(run_cli("stabilizer --level 3 --expr 'a^2'").exit_code == 0);
  CHECK(run_cli("stabilizer --level 4 --expr 'a^2'").exit_code == 1);
  CHECK(run_cli("rigid --vertex 0111 --expr '[a,c^-2]'").exit_code == 0);
  CHECK(run_cli("rigid --vertex 0110 --expr '[a,c^-2]'").exit_code == 1);
  CHECK(run_cli("rigid --expr 'a'").exit_code == 2);  // missing --vertex
}

TEST_CASE("cli: portrait renders levels and the published table fails faithfully") {
  CliResult portrait = run_cli("portrait --expr 'd^2' --depth 2");
  CHECK(portrait.exit_code == 0);
  CHECK(contains(portrait.output, "10: a^2"));
  CHECK(contains(portrait.output, "11: c^2"));
  // The published level-by-level table has rows the automaton contradicts;
  // the fixture reports them and the command signals the failure.
  CliResult table = run_cli("portrait");
  CHECK(table.exit_code == 1);
  CHECK(contains(table.output, "verdict: fails"));
}

TEST_CASE("cli: kesten prints the bound with 17 significant digits") {
  CliResult result = run_cli("kesten --max-level 3");
  CHECK(result.exit_code == 0);
  CHECK(contains(result.output, "0.66143782776614768"));
  CHECK(contains(result.output, "0.83003519835202855"));
}

TEST_CASE("cli: schur-probe verifies factorization away from block spectra") {
  CliResult good = run_cli("schur-probe --level 2 --gamma 0");
  CHECK(good.exit_code == 0);
  CHECK(contains(good.output, "factorization verified: yes"));
  CliResult singular = run_cli("schur-probe --level 2 --gamma 0.75");
  CHECK(singular.exit_code == 0);
  CHECK(contains(singular.output, "block00 invertible: no"));
  CHECK(contains(singular.output, "block11 invertible: no"));
}

TEST_CASE("cli: convergence asserts multigraph containment") {
  CHECK(run_cli("convergence --kind markov --from 1 --to 4").exit_code == 0);
  CHECK(run_cli("convergence --kind adjacency-simplicial --from 1 --to 3")
            .exit_code == 0);  // report-only kind never fails
}

TEST_CASE("cli: verify-paper reports the two published-table defects and exits 1") {
  CliResult result = run_cli("verify-paper --format json");
  CHECK(result.exit_code == 1);
  nlohmann::json doc = nlohmann::json::parse(without_header(result.output));
  CHECK(doc["total"] == 21);
  CHECK(doc["failed"] == 2);
  std::vector<std::string> failing;
  for (const nlohmann::json& fixture : doc["fixtures"])
    if (fixture["verdict"] != "holds")
      failing.push_back(fixture["property"].get<std::string>());
  REQUIRE(failing.size() == 2);
  CHECK(failing[0] == "portrait-table");
  CHECK(failing[1] == "relator-list");
}

TEST_CASE("cli: verify-paper rejects other automata") {
  CHECK(run_cli("verify-paper --automaton adding-machine").exit_code == 2);
}

TEST_CASE("cli: spectrum honors hecke weights and histogram output") {
  CliResult hecke = run_cli(
      "spectrum --level 2 --kind hecke --weights 0.125,0.125,0.125,0.125");
  CliResult markov = run_cli("spectrum --level 2 --kind markov");
  CHECK(hecke.exit_code == 0);
  CHECK(without_header(hecke.output) == without_header(markov.output));
  CHECK(run_cli("spectrum --level 2 --kind hecke --weights 0.5").exit_code == 2);

  CliResult histogram = run_cli("spectrum --level 1 --kind laplacian --histogram 2");
  CHECK(histogram.exit_code == 0);
  CHECK(contains(histogram.output, "bin_lo,bin_hi,count"));

  std::string vec_path = "/tmp/selfsim_cli_test_vectors.csv";
  std::remove(vec_path.c_str());
  CliResult vectors = run_cli(
      "spectrum --level 1 --kind markov --vectors largest:1 --vectors-out " +
      vec_path);
  CHECK(vectors.exit_code == 0);
  CHECK(read_file(vec_path).rfind("vector_1\n", 0) == 0);
  std::remove(vec_path.c_str());
  CHECK(run_cli("spectrum --level 1 --kind markov --vectors-out /tmp/x.csv")
            .exit_code == 2);  // vectors-out without requested vectors
}

TEST_CASE("cli: environment thread default is accepted and overridden") {
  FILE* pipe = popen("SELFSIM_THREADS=3 " SELFSIM_CLI_PATH
                     " word is-trivial --expr 'e' 2>/dev/null",
                     "r");
  REQUIRE(pipe != nullptr);
  char buffer[256];
  while (fread(buffer, 1, sizeof buffer, pipe) > 0) {
  }
  CHECK(WEXITSTATUS(pclose(pipe)) == 0);
  CliResult flag = run_cli("word is-trivial --expr 'e' --threads 2");
  CHECK(flag.exit_code == 0);
}
