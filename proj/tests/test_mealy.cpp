#include <doctest.h>

#include "selfsim/mealy.hpp"

using namespace selfsim;

TEST_CASE("automaton text format round-trips") {
  MealyAutomaton m = preset_automaton("paper-Pi");
  CHECK(m.alphabet_size() == 2);
  CHECK(m.state_count() == 4);
  CHECK(m.state(0).name == "a");
  CHECK(m.state(3).name == "d");

  MealyAutomaton again = parse_automaton(m.to_text());
  CHECK(again.to_text() == m.to_text());
}

TEST_CASE("wreath recursion of the five-state machine") {
  MealyAutomaton m = preset_automaton("paper-Pi");
  // a = s(d, 1): swaps the alphabet, sections d and identity.
  const MealyState& a = m.state(0);
  CHECK(a.output == std::vector<int>{1, 0});
  CHECK(a.next[0] == 3);   // d
  CHECK(a.next[1] == -1);  // e
  // b = (a, c)
  const MealyState& b = m.state(1);
  CHECK(b.output == std::vector<int>{0, 1});
  CHECK(b.next[0] == 0);
  CHECK(b.next[1] == 2);
  // c = (a, a)
  const MealyState& c = m.state(2);
  CHECK(c.next[0] == 0);
  CHECK(c.next[1] == 0);
  // d = (1, b)
  const MealyState& d = m.state(3);
  CHECK(d.next[0] == -1);
  CHECK(d.next[1] == 1);
}

TEST_CASE("comments, forward references and whitespace are accepted") {
  MealyAutomaton m = parse_automaton(
      "# a two-state machine\n"
      "alphabet: 2\n"
      "state u:  0 -> 1 / v ; 1 -> 0 / u   # swap\n"
      "state v:  0 -> 0 / e ; 1 -> 1 / u\n");
  CHECK(m.state_count() == 2);
  CHECK(m.state(0).next[0] == 1);
}

TEST_CASE("parser rejects malformed machines") {
  CHECK_THROWS_AS(parse_automaton("state a: 0 -> 1 / e ; 1 -> 0 / e\n"), parse_error);  // no alphabet
  CHECK_THROWS_AS(parse_automaton("alphabet: 2\n"), parse_error);                       // no states
  CHECK_THROWS_AS(parse_automaton("alphabet: 2\nstate a: 0 -> 1 / e\n"), parse_error);  // missing letter
  CHECK_THROWS_AS(parse_automaton("alphabet: 2\nstate a: 0 -> 1 / e ; 1 -> 1 / e\n"),
                  parse_error);  // not invertible
  CHECK_THROWS_AS(parse_automaton("alphabet: 2\nstate a: 0 -> 1 / zz ; 1 -> 0 / e\n"),
                  parse_error);  // dangling reference
  CHECK_THROWS_AS(parse_automaton("alphabet: 2\nstate e: 0 -> 0 / e ; 1 -> 1 / e\n"),
                  parse_error);  // reserved name
  CHECK_THROWS_AS(parse_automaton("alphabet: 2\nstate a: 0 -> 2 / e ; 1 -> 0 / e\n"),
                  parse_error);  // letter out of range
  CHECK_THROWS_AS(parse_automaton("alphabet: 2\nstate a: 0 -> 1 / e ; 1 -> 0 / e ; 0 -> 1 / e\n"),
                  parse_error);  // duplicate clause
}

TEST_CASE("inverse automaton swaps input and output") {
  MealyAutomaton m = preset_automaton("paper-Pi");
  MealyAutomaton inv = m.inverse();
  // a' = s(1, d'): reading 0 (the old output of 1) outputs 1, section of a
  // at input 1 is the identity.
  const MealyState& ai = inv.state(0);
  CHECK(ai.name == "a'");
  CHECK(ai.output == std::vector<int>{1, 0});
  CHECK(ai.next[0] == -1);  // (a|_1)^-1 = e
  CHECK(ai.next[1] == 3);   // (a|_0)^-1 = d'
  // Involution: inverting twice restores the transition structure.
  MealyAutomaton back = inv.inverse();
  for (int i = 0; i < m.state_count(); ++i) {
    CHECK(back.state(i).output == m.state(i).output);
    CHECK(back.state(i).next == m.state(i).next);
  }
}

TEST_CASE("moore diagram lists one arc per state and letter") {
  MealyAutomaton m = preset_automaton("paper-Pi");
  auto arcs = m.moore_diagram();
  // identity self-loops (referenced) + 4 states x 2 letters
  CHECK(arcs.size() == 2 + 8);
  int identity_loops = 0;
  for (const MooreArc& arc : arcs)
    if (arc.state == -1) {
      ++identity_loops;
      CHECK(arc.target == -1);
      CHECK(arc.in == arc.out);
    }
  CHECK(identity_loops == 2);
}

TEST_CASE("presets: adding machine and the four-state torsion machine") {
  MealyAutomaton odo = preset_automaton("adding-machine");
  CHECK(odo.state_count() == 1);
  CHECK(odo.state(0).output == std::vector<int>{1, 0});
  CHECK(odo.state(0).next[0] == -1);
  CHECK(odo.state(0).next[1] == 0);

  MealyAutomaton grig = preset_automaton("grigorchuk");
  CHECK(grig.state_count() == 4);
  CHECK(grig.state(0).next == std::vector<int>{-1, -1});

  CHECK_THROWS_AS(preset_automaton("nope"), usage_error);
}
