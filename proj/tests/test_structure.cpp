#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "selfsim/analysis.hpp"
#include "selfsim/fixtures.hpp"
#include "selfsim/nucleus.hpp"
#include "selfsim/relations.hpp"
#include "selfsim/report.hpp"

using namespace selfsim;
using testing_helpers::S;
using testing_helpers::V;
using testing_helpers::W;
using testing_helpers::engine_for;
using testing_helpers::pi;

namespace {

const Nucleus& pi_nucleus() {
  static const Nucleus n = compute_nucleus(pi());
  return n;
}

// Finds a counterexample (or witness) item by its label; fails the test if
// absent.
const ReportItem& item_named(const std::vector<ReportItem>& items,
                             const std::string& label) {
  for (const ReportItem& item : items)
    if (item.label == label) return item;
  FAIL("missing item '" << label << "'");
  static ReportItem dummy("");
  return dummy;
}

bool has_item(const std::vector<ReportItem>& items, const std::string& label) {
  return std::any_of(items.begin(), items.end(),
                     [&](const ReportItem& it) { return it.label == label; });
}

}  // namespace

TEST_CASE("nucleus has 67 elements and matches the recorded list") {
  const Nucleus& n = pi_nucleus();
  CHECK(n.elements.size() == 67);
  CHECK(n.contraction_depth == 10);  // smallest k with N^2 sections inside N

  PropertyReport report = fixture_nucleus_list(pi(), n);
  CHECK(report.verdict == Verdict::holds);
  CHECK(report.parameters.at("computed_elements") == "67");
  CHECK(report.parameters.at("recorded_elements") == "67");

  // Spot checks: identity, the generators, and a depth-two element.
  ElementIndex index(pi());
  std::set<int> ids;
  for (const GroupWord& w : n.elements) ids.insert(index.id_of(w));
  CHECK(ids.size() == 67);
  CHECK(ids.count(index.id_of(W("e"))) == 1);
  for (const char* gen : {"a", "b", "c", "d", "a^-1", "b^-1", "c^-1", "d^-1"})
    CHECK(ids.count(index.id_of(W(gen))) == 1);
  CHECK(ids.count(index.id_of(W("c^-1a^-1bd"))) == 1);
  CHECK(ids.count(index.id_of(W("ab"))) == 0);  // contracts away to e
}

TEST_CASE("generator-by-nucleus products contract at depth 7") {
  ContractionCheck check = verify_contraction(pi(), pi_nucleus(), 7);
  CHECK(check.holds);
  CHECK(check.depth == 7);
  // 536 products (8 signed generators x 67 elements) x 128 vertices.
  CHECK(check.checked == 68608);
  CHECK(check.failures.empty());
}

TEST_CASE("every non-trivial nucleus element is needed") {
  const std::vector<MinimalityWitness> witnesses =
      nucleus_minimality_witnesses(pi(), pi_nucleus());
  // One witness per element other than the identity.
  CHECK(witnesses.size() == pi_nucleus().elements.size() - 1);
  for (const MinimalityWitness& w : witnesses) {
    CAPTURE(S(w.element));
    CHECK(w.found);
  }
}

TEST_CASE("all 404 recorded section-profile rows are reproduced exactly") {
  PropertyReport report = fixture_section_profile(pi(), pi_nucleus());
  CHECK(report.verdict == Verdict::holds);
  CHECK(report.parameters.at("rows") == "404");
  CHECK(report.parameters.at("rows_exact") == "404");
  CHECK(report.parameters.at("rows_mismatch") == "0");
  CHECK(report.parameters.at("rows_subset_only") == "0");
  CHECK(report.parameters.at("rows_outside_nucleus") == "0");
}

TEST_CASE("portrait table: 19 rows reproduce, 11 recorded rows do not") {
  PropertyReport report = verify_portrait_table(pi());
  CHECK(report.verdict == Verdict::fails);
  CHECK(report.witnesses.size() == 19);
  REQUIRE(report.counterexamples.size() == 11);

  // The failing rows, with the first mismatching vertex and both readings.
  struct Expected {
    const char* label;
    const char* level;
    const char* vertex;
    const char* printed;
    const char* computed;
  };
  const Expected expected[] = {
      {"[c,b^-1]", "3", "100", "e", "b"},
      {"[b^-1,d]", "3", "110", "[d^-1,a]", "e"},
      {"[b^-1,d^-1]", "3", "110", "[d^-1,a^-1]", "e"},
      {"(c^2)^b", "4", "1001", "c", "b^-1 c b"},
      {"b^2", "4", "1000", "c^2", "e"},
      {"(c^2)^(a^-1)", "4", "1000", "c^2", "e"},
      {"(b^2)^(a^-1)", "4", "0000", "c^2", "e"},
      {"d^2", "5", "11000", "c^2", "e"},
      {"a^4", "6", "011000", "c^2", "e"},
      {"[c^2,a^-1]", "5", "01110", "[a,d^-1]", "e"},
      {"[c^-2,a^-1]", "5", "01110", "[a^-1,d^-1]", "e"},
  };
  for (const Expected& row : expected) {
    CAPTURE(row.label);
    const ReportItem& item = item_named(report.counterexamples, row.label);
    CHECK(item.fields.at("level") == row.level);
    CHECK(item.fields.at("vertex") == row.vertex);
    CHECK(item.fields.at("printed") == row.printed);
    CHECK(item.fields.at("computed") == row.computed);
  }

  // The (c^2)^b row is internally consistent under the reversed conjugation
  // reading x^y = y x y^-1; no other failing row matches any reading.
  const ReportItem& conj = item_named(report.counterexamples, "(c^2)^b");
  CHECK(conj.fields.at("matches_reading") == "conjugation-reversed");
  for (const ReportItem& item : report.counterexamples) {
    if (item.label == "(c^2)^b") continue;
    CHECK(item.fields.count("matches_reading") == 0);
  }

  // Rows that do reproduce, including both commutator blocks and the
  // level-4 squares table's consistent half.
  for (const char* label : {"b^-1c^2b", "(c^4)^b", "(b^2)^c", "[ac,c^2]",
                            "[a^2,da]", "[b,d]", "[b,d^-1]", "b^2", "c^2"})
    CHECK(has_item(report.witnesses, label));
}

TEST_CASE("level stabilizer generator lists hold (62 entries)") {
  PropertyReport report = fixture_stabilizer_lists(pi());
  CHECK(report.verdict == Verdict::holds);
  CHECK(report.parameters.at("generators_checked") == "62");
}

TEST_CASE("stabilizer power laws for squares of generators, n = 1..3") {
  PropertyReport report = fixture_stabilizer_power_laws(pi());
  CHECK(report.verdict == Verdict::holds);
  REQUIRE(report.witnesses.size() == 12);
  struct Law {
    const char* label;
    const char* in_level;
    const char* out_level;
  };
  const Law laws[] = {
      {"a^2", "3", "4"},  {"a^4", "6", "7"},   {"a^8", "9", "10"},
      {"b^2", "4", "5"},  {"b^4", "7", "8"},   {"b^8", "10", "11"},
      {"c^2", "4", "5"},  {"c^4", "7", "8"},   {"c^8", "10", "11"},
      {"d^2", "5", "6"},  {"d^4", "8", "9"},   {"d^8", "11", "12"},
  };
  for (const Law& law : laws) {
    CAPTURE(law.label);
    const ReportItem& item = item_named(report.witnesses, law.label);
    CHECK(item.fields.at("in_level") == law.in_level);
    CHECK(item.fields.at("out_level") == law.out_level);
  }
}

TEST_CASE("direct stabilizer membership checks") {
  const WordEngine& e = pi();
  CHECK(stabilizer_member(e, W("a^2"), 3));
  CHECK_FALSE(stabilizer_member(e, W("a^2"), 4));
  CHECK(stabilizer_member(e, W("d^2"), 5));
  CHECK_FALSE(stabilizer_member(e, W("d^2"), 6));
  CHECK_FALSE(stabilizer_member(e, W("a"), 1));
  CHECK(stabilizer_member(e, W("e"), 12));
}

TEST_CASE("rigid stabilizer generator lists hold (77 entries)") {
  PropertyReport report = fixture_rigid_lists(pi());
  CHECK(report.verdict == Verdict::holds);
  CHECK(report.parameters.at("generators_checked") == "77");
}

TEST_CASE("direct rigid stabilizer membership checks") {
  const WordEngine& e = pi();
  // [a,c^-2] is supported on the subtree below 0111.
  CHECK(rigid_stabilizer_member(e, W("[a,c^-2]"), V("0111")));
  CHECK_FALSE(rigid_stabilizer_member(e, W("[a,c^-2]"), V("0110")));
  CHECK_FALSE(rigid_stabilizer_member(e, W("a"), V("0")));
}

TEST_CASE("recorded trivial-restriction witnesses hold (17 entries)") {
  PropertyReport report = fixture_trivial_restrictions(pi());
  CHECK(report.verdict == Verdict::holds);
  CHECK(report.parameters.at("witnesses_checked") == "17");
}

TEST_CASE("first-level section witnesses hold (8 entries)") {
  PropertyReport report = fixture_first_level_sections(pi());
  CHECK(report.verdict == Verdict::holds);
  CHECK(report.witnesses.size() == 8);
  CHECK(has_item(report.witnesses, "a = (c)|_0"));
  CHECK(has_item(report.witnesses, "d = (a^2)|_1"));
}

TEST_CASE("relator list: 46 of 47 recorded relators are trivial") {
  PropertyReport report = fixture_relators(pi());
  CHECK(report.verdict == Verdict::fails);
  CHECK(report.parameters.at("relators_checked") == "47");
  CHECK(report.parameters.at("longest_reduced_length") == "12");
  REQUIRE(report.counterexamples.size() == 1);
  CHECK(report.counterexamples[0].label == "[d^(a^-1),bd^-1c]");
}

TEST_CASE("the one failing relator is genuinely non-trivial") {
  const WordEngine& e = pi();
  // [a d a^-1, b d^-1 c] acts trivially at the root but its sections are
  // ([b,a^2], e), and [b,a^2] moves 00100.
  GroupWord w = W("[d^(a^-1),bd^-1c]");
  CHECK_FALSE(e.is_trivial(w));
  CHECK(e.root_trivial(w));
  CHECK(e.words_equal(e.section_at(w, 0), W("[b,a^2]")));
  CHECK(e.is_trivial(e.section_at(w, 1)));
  CHECK_FALSE(e.is_trivial(W("[b,a^2]")));
  // The sign twin with c^-1 is a relator.
  CHECK(e.is_trivial(W("[d^(a^-1),bd^-1c^-1]")));
}

TEST_CASE("weak-branch witness chain holds for k = 1..3") {
  PropertyReport report = fixture_weak_branch(pi());
  CHECK(report.verdict == Verdict::holds);
  REQUIRE(report.witnesses.size() == 3);
  const ReportItem& deepest = item_named(report.witnesses, "[a,c^-8]");
  CHECK(deepest.fields.at("rigid_vertex") == "011101110111");
  CHECK(deepest.fields.at("section_at_0111") == "[a,c^-4]");
  CHECK(has_item(report.witnesses, "[a,c^-2]"));
  CHECK(has_item(report.witnesses, "[a,c^-4]"));
}

TEST_CASE("the action is fractal with witnesses of length at most 3") {
  PropertyReport report = check_fractal(pi(), 3);
  CHECK(report.verdict == Verdict::holds);
  REQUIRE(report.witnesses.size() == 16);  // 8 signed generators x 2 letters

  auto witness_for = [&](const std::string& gen, const std::string& letter) {
    for (const ReportItem& item : report.witnesses)
      if (item.label == gen && item.fields.at("letter") == letter)
        return item.fields.at("witness");
    FAIL("no witness for " << gen << "|" << letter);
    return std::string();
  };
  // Length-1 witnesses: sections of the generators themselves.
  CHECK(witness_for("a", "0") == "b");
  CHECK(witness_for("c", "1") == "b");
  CHECK(witness_for("b", "1") == "d");
  // Length-2: d = (1,b) so a^2 = (d,d) reaches d on both letters.
  CHECK(witness_for("d", "0") == "a^2");
  CHECK(witness_for("d", "1") == "a^2");
  // Length-3: conjugation swaps the coordinates.
  CHECK(witness_for("c", "0") == "a b a^-1");
  CHECK(witness_for("b", "0") == "a d a^-1");
  CHECK(witness_for("b^-1", "0") == "a d^-1 a^-1");
}

TEST_CASE("every nucleus element has a trivial section at depth <= 4") {
  PropertyReport report =
      check_open_set_condition(pi(), pi_nucleus().elements, 4);
  CHECK(report.verdict == Verdict::holds);
  CHECK(report.witnesses.size() == 67);

  const ReportItem& root = item_named(report.witnesses, "e");
  CHECK(root.fields.at("vertex") == "(root)");
  CHECK(item_named(report.witnesses, "a").fields.at("vertex") == "1");
  CHECK(item_named(report.witnesses, "d").fields.at("vertex") == "0");
  CHECK(item_named(report.witnesses, "b").fields.at("vertex") == "01");
  CHECK(item_named(report.witnesses, "c").fields.at("vertex") == "01");
  // The longest-lived element needs depth 3.
  CHECK(item_named(report.witnesses, "b^-1 c^-1").fields.at("vertex") ==
        "000");

  // Named sections that the reports build on, checked directly.
  const WordEngine& e = pi();
  CHECK(e.is_trivial(e.section(W("a"), V("1"))));
  CHECK(e.is_trivial(e.section(W("d"), V("0"))));
  CHECK(e.is_trivial(e.section(W("b"), V("01"))));
  CHECK(e.is_trivial(e.section(W("c"), V("11"))));
  CHECK(e.is_trivial(e.section(W("c^-1a^-1bd"), V("000"))));
}

TEST_CASE("activity growth is exponential with the two recorded cycles") {
  ActivityClass result = activity_class(pi());
  CHECK(result.kind == ActivityClass::Kind::exponential);
  REQUIRE(result.witness_cycles.size() == 2);
  CHECK(result.witness_cycles[0] == "b->a->d->b");
  CHECK(result.witness_cycles[1] == "b->c->a->d->b");
  CHECK(activity_to_string(result) == "exponential");

  PropertyReport report = fixture_activity(pi());
  CHECK(report.verdict == Verdict::holds);
}

TEST_CASE("the action is transitive on levels 1..10") {
  PropertyReport report = check_level_transitive(pi(), 10);
  CHECK(report.verdict == Verdict::holds);
  REQUIRE(report.witnesses.size() == 10);
  CHECK(report.witnesses[0].fields.at("orbit_size") == "2");
  CHECK(report.witnesses[9].fields.at("orbit_size") == "1024");
}

TEST_CASE("no relation among the generators has length <= 3") {
  RelatorSet result = enumerate_relations(pi(), 3);
  CHECK(result.relators.empty());
  CHECK(result.words_scanned == 456);
}

TEST_CASE("length-8 search finds exactly the commutator [d,d^a]") {
  RelatorSet result = enumerate_relations(pi(), 8);
  CHECK(result.words_scanned == 7686400);
  REQUIRE(result.relators.size() == 1);
  const GroupWord& r = result.relators[0];
  CHECK(r.letters.size() == 8);
  CHECK(S(r) == "d^-1 a^-1 d^-1 a d a^-1 d a");
  CHECK(pi().words_equal(r, W("[d,d^a]")));

  // Raw mode keeps all 16 freely reduced spellings (8 rotations, 2 signs).
  RelatorSet raw = enumerate_relations(pi(), 8, 8, /*raw=*/true);
  CHECK(raw.relators.size() == 16);
  for (const GroupWord& w : raw.relators) CHECK(pi().is_trivial(w));
}

TEST_CASE("full fixture suite: 13 of 15 reports hold") {
  FixtureSuite suite = run_all_fixtures(pi());
  REQUIRE(suite.reports.size() == 15);
  int holds = 0;
  std::vector<std::string> failing;
  for (const PropertyReport& report : suite.reports) {
    if (report.verdict == Verdict::holds)
      ++holds;
    else
      failing.push_back(report.property);
  }
  CHECK(holds == 13);
  REQUIRE(failing.size() == 2);
  CHECK(failing[0] == "portrait-table");
  CHECK(failing[1] == "relator-list");
}

TEST_CASE("adding machine: nucleus {1, a, a^-1}, bounded activity") {
  const WordEngine& e = engine_for("adding-machine");
  Nucleus n = compute_nucleus(e);
  CHECK(n.elements.size() == 3);
  CHECK(n.contraction_depth == 1);

  ActivityClass result = activity_class(e);
  CHECK(result.kind == ActivityClass::Kind::bounded);

  PropertyReport fractal = check_fractal(e, 2);
  CHECK(fractal.verdict == Verdict::holds);
  PropertyReport osc = check_open_set_condition(e, n.elements, 2);
  CHECK(osc.verdict == Verdict::holds);
  PropertyReport transitive = check_level_transitive(e, 8);
  CHECK(transitive.verdict == Verdict::holds);
}

TEST_CASE("four-state torsion machine: nucleus of size 5, bounded activity") {
  const WordEngine& e = engine_for("grigorchuk");
  Nucleus n = compute_nucleus(e);
  CHECK(n.elements.size() == 5);  // 1, a, b, c, d (all involutions)
  ActivityClass result = activity_class(e);
  CHECK(result.kind == ActivityClass::Kind::bounded);
  CHECK(check_level_transitive(e, 6).verdict == Verdict::holds);
}
