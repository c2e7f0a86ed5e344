// Replays of the recorded reference tables (reference_data.hpp) against a
// live engine.  Each table becomes one PropertyReport; run_all_fixtures
// produces the full suite in a fixed order.  All of these apply to the main
// preset automaton the tables were recorded for.
#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "selfsim/action.hpp"
#include "selfsim/analysis.hpp"
#include "selfsim/base.hpp"
#include "selfsim/nucleus.hpp"
#include "selfsim/reference_data.hpp"
#include "selfsim/relations.hpp"
#include "selfsim/report.hpp"
#include "selfsim/word.hpp"
#include "selfsim/wordexpr.hpp"

namespace selfsim {

// Computed nucleus versus the recorded element list (core words, their
// inverses, and the identity), compared as group elements.
inline PropertyReport fixture_nucleus_list(const WordEngine& engine,
                                           const Nucleus& nucleus) {
  PropertyReport report;
  report.property = "nucleus-list";
  const MealyAutomaton& m = engine.machine();
  report.parameters["computed_elements"] = std::to_string(nucleus.elements.size());
  report.parameters["contraction_depth"] = std::to_string(nucleus.contraction_depth);
  report.parameters["expected_elements"] = std::to_string(refdata::kExpectedNucleusSize);

  ElementIndex index(engine);
  std::set<int> computed;
  for (const GroupWord& w : nucleus.elements) computed.insert(index.id_of(w));
  std::set<int> recorded;
  recorded.insert(index.id_of(word_identity()));
  for (const char* name : refdata::nucleus_core_words()) {
    const GroupWord w = parse_word_expression(m, name);
    recorded.insert(index.id_of(w));
    recorded.insert(index.id_of(word_inverse(w)));
  }
  report.parameters["recorded_elements"] = std::to_string(recorded.size());

  for (int id : recorded)
    if (!computed.count(id)) {
      ReportItem item("recorded element missing from the computed nucleus");
      item.set("element", word_to_string(m, index.rep(id)));
      report.counterexamples.push_back(std::move(item));
    }
  for (int id : computed)
    if (!recorded.count(id)) {
      ReportItem item("computed element absent from the recorded list");
      item.set("element", word_to_string(m, index.rep(id)));
      report.counterexamples.push_back(std::move(item));
    }
  if (static_cast<int>(nucleus.elements.size()) != refdata::kExpectedNucleusSize) {
    ReportItem item("computed nucleus size differs from the recorded count");
    report.counterexamples.push_back(std::move(item));
  }
  report.verdict = report.counterexamples.empty() ? Verdict::holds : Verdict::fails;
  return report;
}

// The contraction inclusion at the recorded depth: every product of a
// generator letter with a nucleus element has all its depth-7 sections
// inside the nucleus.
inline PropertyReport fixture_contraction(const WordEngine& engine,
                                          const Nucleus& nucleus) {
  PropertyReport report;
  report.property = "contraction-inclusion";
  const int depth = refdata::kSectionTableDepth;
  report.parameters["depth"] = std::to_string(depth);
  report.parameters["smallest_pair_depth"] = std::to_string(nucleus.contraction_depth);

  const ContractionCheck check = verify_contraction(engine, nucleus, depth);
  report.parameters["checked_sections"] = std::to_string(check.checked);
  for (const auto& [word, vertex] : check.failures) {
    ReportItem item("section escapes the nucleus");
    item.set("product", word_to_string(engine.machine(), word));
    item.set("vertex", vertex_to_string(vertex, engine.alphabet_size()));
    report.counterexamples.push_back(std::move(item));
  }
  report.verdict = check.holds ? Verdict::holds : Verdict::fails;
  return report;
}

// The recorded per-product section table: for each product s*x the set of
// its depth-exactly-7 sections must reproduce the printed member set, as
// group elements.  The report also counts how many rows stay inside the
// nucleus, and distinguishes strict subsets from genuine mismatches.
inline PropertyReport fixture_section_profile(const WordEngine& engine,
                                              const Nucleus& nucleus) {
  PropertyReport report;
  report.property = "section-profile-table";
  const MealyAutomaton& m = engine.machine();
  const int depth = refdata::kSectionTableDepth;
  const auto& rows = refdata::section_profile_rows();
  report.parameters["rows"] = std::to_string(rows.size());
  report.parameters["depth"] = std::to_string(depth);

  ElementIndex index(engine);
  std::set<int> nucleus_ids;
  for (const GroupWord& w : nucleus.elements) nucleus_ids.insert(index.id_of(w));

  long long exact = 0, subset_only = 0, mismatch = 0, rows_outside_nucleus = 0;
  for (const auto& row : rows) {
    const GroupWord product = word_multiply(parse_word_expression(m, row.left),
                                            parse_word_expression(m, row.right));
    std::set<int> computed;
    bool inside_nucleus = true;
    for (const GroupWord& s : engine.sections_at_depth(product, depth)) {
      const int id = index.id_of(s);
      computed.insert(id);
      if (!nucleus_ids.count(id)) inside_nucleus = false;
    }
    std::set<int> printed;
    for (const char* name : row.members)
      printed.insert(index.id_of(parse_word_expression(m, name)));
    if (!inside_nucleus) ++rows_outside_nucleus;

    if (computed == printed) {
      ++exact;
      continue;
    }
    ReportItem item(std::string(row.left) + " * " + row.right);
    if (std::includes(printed.begin(), printed.end(), computed.begin(),
                      computed.end())) {
      ++subset_only;
      item.set("status", "computed section set is a strict subset of the printed set");
      for (int id : printed)
        if (!computed.count(id)) {
          item.set("printed_only", word_to_string(m, index.rep(id)));
          break;
        }
    } else {
      ++mismatch;
      item.set("status", "a computed section is missing from the printed set");
      for (int id : computed)
        if (!printed.count(id)) {
          item.set("computed_only", word_to_string(m, index.rep(id)));
          break;
        }
    }
    report.counterexamples.push_back(std::move(item));
  }
  report.parameters["rows_exact"] = std::to_string(exact);
  report.parameters["rows_subset_only"] = std::to_string(subset_only);
  report.parameters["rows_mismatch"] = std::to_string(mismatch);
  report.parameters["rows_outside_nucleus"] = std::to_string(rows_outside_nucleus);
  report.verdict =
      (mismatch == 0 && subset_only == 0) ? Verdict::holds : Verdict::fails;
  return report;
}

// Every recorded stabilizer generator passes its level membership test.
inline PropertyReport fixture_stabilizer_lists(const WordEngine& engine) {
  PropertyReport report;
  report.property = "stabilizer-generator-lists";
  const MealyAutomaton& m = engine.machine();
  long long checked = 0;
  for (const auto& fixture : refdata::stabilizer_fixtures()) {
    for (const char* expr : fixture.generators) {
      ++checked;
      const GroupWord w = parse_word_expression(m, expr);
      if (!stabilizer_member(engine, w, fixture.level)) {
        ReportItem item(expr);
        item.set("level", std::to_string(fixture.level));
        report.counterexamples.push_back(std::move(item));
      }
    }
  }
  report.parameters["generators_checked"] = std::to_string(checked);
  report.verdict = report.counterexamples.empty() ? Verdict::holds : Verdict::fails;
  return report;
}

// generator^(2^n) lies in the recorded stabilizer level and not one deeper,
// for n = 1..3.
inline PropertyReport fixture_stabilizer_power_laws(const WordEngine& engine) {
  PropertyReport report;
  report.property = "stabilizer-power-laws";
  const MealyAutomaton& m = engine.machine();
  for (const auto& law : refdata::stabilizer_power_laws()) {
    const GroupWord base = parse_word_expression(m, law.generator);
    for (int n = 1; n <= 3; ++n) {
      const GroupWord w = word_power(base, 1LL << n);
      const int in_level = 3 * n + law.in_offset;
      const int out_level = 3 * n + law.out_offset;
      const std::string name =
          std::string(law.generator) + "^" + std::to_string(1LL << n);
      if (!stabilizer_member(engine, w, in_level)) {
        ReportItem item(name + " is not in the level-" + std::to_string(in_level) +
                        " stabilizer");
        report.counterexamples.push_back(std::move(item));
        continue;
      }
      if (stabilizer_member(engine, w, out_level)) {
        ReportItem item(name + " unexpectedly stabilizes level " +
                        std::to_string(out_level));
        report.counterexamples.push_back(std::move(item));
        continue;
      }
      ReportItem item(name);
      item.set("in_level", std::to_string(in_level));
      item.set("out_level", std::to_string(out_level));
      report.witnesses.push_back(std::move(item));
    }
  }
  report.verdict = report.counterexamples.empty() ? Verdict::holds : Verdict::fails;
  return report;
}

// Every recorded rigid-stabilizer generator passes its membership test.
inline PropertyReport fixture_rigid_lists(const WordEngine& engine) {
  PropertyReport report;
  report.property = "rigid-stabilizer-generator-lists";
  const MealyAutomaton& m = engine.machine();
  const int q = engine.alphabet_size();
  long long checked = 0;
  for (const auto& fixture : refdata::rigid_fixtures()) {
    const Vertex v = vertex_from_string(fixture.vertex, q);
    for (const char* expr : fixture.generators) {
      ++checked;
      const GroupWord w = parse_word_expression(m, expr);
      if (!rigid_stabilizer_member(engine, w, v)) {
        ReportItem item(expr);
        item.set("vertex", fixture.vertex);
        report.counterexamples.push_back(std::move(item));
      }
    }
  }
  report.parameters["generators_checked"] = std::to_string(checked);
  report.verdict = report.counterexamples.empty() ? Verdict::holds : Verdict::fails;
  return report;
}

// Every recorded trivial-restriction witness has a trivial section at its
// vertex.
inline PropertyReport fixture_trivial_restrictions(const WordEngine& engine) {
  PropertyReport report;
  report.property = "trivial-restriction-witnesses";
  const MealyAutomaton& m = engine.machine();
  const int q = engine.alphabet_size();
  for (const auto& row : refdata::trivial_restriction_witnesses()) {
    const GroupWord w = parse_word_expression(m, row.word);
    const Vertex v = vertex_from_string(row.vertex, q);
    if (!engine.is_trivial(engine.section(w, v))) {
      ReportItem item(row.word);
      item.set("vertex", row.vertex);
      report.counterexamples.push_back(std::move(item));
    }
  }
  report.parameters["witnesses_checked"] =
      std::to_string(refdata::trivial_restriction_witnesses().size());
  report.verdict = report.counterexamples.empty() ? Verdict::holds : Verdict::fails;
  return report;
}

// Every generator reappears as the recorded first-level section of the
// recorded first-level-stabilizer element.
inline PropertyReport fixture_first_level_sections(const WordEngine& engine) {
  PropertyReport report;
  report.property = "first-level-section-witnesses";
  const MealyAutomaton& m = engine.machine();
  for (const auto& row : refdata::first_level_section_witnesses()) {
    const GroupWord target = parse_word_expression(m, row.generator);
    const GroupWord source = parse_word_expression(m, row.witness);
    const int letter = std::stoi(row.letter);
    ReportItem item(std::string(row.generator) + " = (" + row.witness + ")|_" +
                    row.letter);
    if (!engine.root_trivial(source)) {
      item.set("status", "witness does not stabilize the first level");
      report.counterexamples.push_back(std::move(item));
      continue;
    }
    if (!engine.words_equal(engine.section_at(source, letter), target)) {
      item.set("status", "section differs from the recorded generator");
      report.counterexamples.push_back(std::move(item));
      continue;
    }
    report.witnesses.push_back(std::move(item));
  }
  report.verdict = report.counterexamples.empty() ? Verdict::holds : Verdict::fails;
  return report;
}

// Every recorded relator is trivial, along with all cyclic rotations of its
// cyclic reduction and its inverse.
inline PropertyReport fixture_relators(const WordEngine& engine) {
  PropertyReport report;
  report.property = "relator-list";
  const MealyAutomaton& m = engine.machine();
  std::size_t longest = 0;
  for (const char* expr : refdata::relator_expressions()) {
    const GroupWord w = parse_word_expression(m, expr);
    longest = std::max(longest, w.letters.size());
    if (!engine.is_trivial(w)) {
      ReportItem item(expr);
      item.set("status", "not trivial");
      report.counterexamples.push_back(std::move(item));
      continue;
    }
    if (!engine.is_trivial(word_inverse(w))) {
      ReportItem item(expr);
      item.set("status", "inverse not trivial");
      report.counterexamples.push_back(std::move(item));
      continue;
    }
    GroupWord core = w;
    while (core.letters.size() >= 2 &&
           core.letters.front() == static_cast<WordLetter>(-core.letters.back())) {
      core.letters.erase(core.letters.begin());
      core.letters.pop_back();
    }
    bool rotations_ok = true;
    for (std::size_t i = 0; i < core.letters.size() && rotations_ok; ++i) {
      const GroupWord rot = detail::word_rotation(core, i);
      if (!engine.is_trivial(rot)) {
        ReportItem item(expr);
        item.set("status", "cyclic rotation not trivial");
        item.set("rotation", word_to_string(m, rot));
        report.counterexamples.push_back(std::move(item));
        rotations_ok = false;
      }
    }
  }
  report.parameters["relators_checked"] =
      std::to_string(refdata::relator_expressions().size());
  report.parameters["longest_reduced_length"] = std::to_string(longest);
  report.verdict = report.counterexamples.empty() ? Verdict::holds : Verdict::fails;
  return report;
}

// The weak-branch witness chain for k = 1..3.
inline PropertyReport fixture_weak_branch(const WordEngine& engine) {
  PropertyReport report;
  report.property = "weak-branch-witnesses";
  report.parameters["max_k"] = "3";
  std::set<std::string> seen;
  for (int k = 1; k <= 3; ++k) {
    const PropertyReport sub = verify_weak_branch_witness(engine, k);
    if (sub.verdict != Verdict::holds) {
      report.counterexamples.insert(report.counterexamples.end(),
                                    sub.counterexamples.begin(),
                                    sub.counterexamples.end());
      report.verdict = Verdict::fails;
      return report;
    }
    for (const ReportItem& item : sub.witnesses)
      if (seen.insert(item.label).second) report.witnesses.push_back(item);
  }
  report.verdict = Verdict::holds;
  return report;
}

// Activity classification versus the recorded class and witness cycles.
inline PropertyReport fixture_activity(const WordEngine& engine) {
  PropertyReport report;
  report.property = "activity-classification";
  const ActivityClass result = activity_class(engine);
  report.parameters["classification"] = activity_to_string(result);
  report.parameters["expected"] = refdata::kExpectedActivity;
  for (const std::string& cycle : result.witness_cycles)
    report.witnesses.push_back(ReportItem(cycle));

  bool ok = activity_to_string(result) == refdata::kExpectedActivity;
  for (const char* expected : refdata::expected_activity_cycles()) {
    if (std::find(result.witness_cycles.begin(), result.witness_cycles.end(),
                  expected) == result.witness_cycles.end()) {
      ok = false;
      ReportItem item("expected witness cycle not found");
      item.set("cycle", expected);
      report.counterexamples.push_back(std::move(item));
    }
  }
  report.verdict = ok ? Verdict::holds : Verdict::fails;
  return report;
}

// The full recorded-fixture suite, in a fixed order.  The nucleus is
// computed once and shared by the checks that need it.
struct FixtureSuite {
  Nucleus nucleus;
  std::vector<PropertyReport> reports;
};

inline FixtureSuite run_all_fixtures(const WordEngine& engine) {
  FixtureSuite suite;
  suite.nucleus = compute_nucleus(engine);
  suite.reports.push_back(fixture_nucleus_list(engine, suite.nucleus));
  suite.reports.push_back(fixture_contraction(engine, suite.nucleus));
  suite.reports.push_back(fixture_section_profile(engine, suite.nucleus));
  suite.reports.push_back(verify_portrait_table(engine));
  suite.reports.push_back(fixture_stabilizer_lists(engine));
  suite.reports.push_back(fixture_stabilizer_power_laws(engine));
  suite.reports.push_back(fixture_rigid_lists(engine));
  suite.reports.push_back(fixture_trivial_restrictions(engine));
  suite.reports.push_back(fixture_first_level_sections(engine));
  suite.reports.push_back(fixture_relators(engine));
  suite.reports.push_back(fixture_weak_branch(engine));
  suite.reports.push_back(check_fractal(engine, 3));
  suite.reports.push_back(check_open_set_condition(engine, suite.nucleus.elements, 4));
  suite.reports.push_back(fixture_activity(engine));
  suite.reports.push_back(check_level_transitive(engine, 10));
  return suite;
}

}  // namespace selfsim
