// Invertible Mealy automata over a finite alphabet: the finite machines
// whose states generate self-similar groups of rooted-tree automorphisms.
//
// Text format (one automaton per file, '#' starts a comment):
//
//   alphabet: 2
//   state a: 0 -> 1 / d ; 1 -> 0 / e
//   state b: 0 -> 0 / a ; 1 -> 1 / c
//
// Each clause "x -> y / s" means: reading input letter x in this state
// outputs letter y and hands the rest of the word to state s.  The state
// name "e" is reserved for the identity and may be referenced without
// being declared.  Every state must act by a permutation of the alphabet
// (the machine is invertible), and every letter must have exactly one
// clause per state.
#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "selfsim/base.hpp"

namespace selfsim {

// Reserved name of the identity state.
inline constexpr const char* kIdentityStateName = "e";

// One state of a Mealy automaton: for each input letter, an output letter
// and a successor state (index into MealyAutomaton::states, or -1 for the
// identity).
struct MealyState {
  std::string name;
  std::vector<int> output;  // output[x] = state(x), a permutation of the alphabet
  std::vector<int> next;    // next[x]   = index of the section state, -1 = identity
};

// An arc of the Moore diagram: state --in/out--> target.
struct MooreArc {
  int state;   // source state index (-1 = identity)
  int target;  // target state index (-1 = identity)
  int in;      // input letter
  int out;     // output letter
};

class MealyAutomaton {
public:
  MealyAutomaton() = default;
  MealyAutomaton(int alphabet_size, std::vector<MealyState> states)
      : q_(alphabet_size), states_(std::move(states)) {
    validate();
  }

  int alphabet_size() const { return q_; }
  int state_count() const { return static_cast<int>(states_.size()); }
  const MealyState& state(int i) const { return states_[static_cast<std::size_t>(i)]; }
  const std::vector<MealyState>& states() const { return states_; }

  // Index of the state with the given name, or nullopt ("e" -> nullopt too:
  // the identity is not stored as a state).
  std::optional<int> state_index(const std::string& name) const {
    for (int i = 0; i < state_count(); ++i)
      if (states_[static_cast<std::size_t>(i)].name == name) return i;
    return std::nullopt;
  }

  // The inverse automaton: same state set (names suffixed with "'"), arcs
  // with input/output swapped.  State s' acts as the tree automorphism
  // inverse to s.
  MealyAutomaton inverse() const {
    std::vector<MealyState> inv(states_.size());
    for (std::size_t i = 0; i < states_.size(); ++i) {
      const MealyState& s = states_[i];
      MealyState& t = inv[i];
      t.name = s.name + "'";
      t.output.assign(static_cast<std::size_t>(q_), -1);
      t.next.assign(static_cast<std::size_t>(q_), -1);
      for (int x = 0; x < q_; ++x) {
        int y = s.output[static_cast<std::size_t>(x)];
        // s maps x to y, so the inverse maps y back to x; its section at y
        // is the inverse of the section of s at x.
        t.output[static_cast<std::size_t>(y)] = x;
        t.next[static_cast<std::size_t>(y)] = s.next[static_cast<std::size_t>(x)];
      }
    }
    return MealyAutomaton(q_, std::move(inv));
  }

  // All arcs state --in/out--> target, including the identity state's
  // self-loops, ordered by (state, input letter).  The identity appears
  // as index -1 and only if some state references it (or always_identity).
  std::vector<MooreArc> moore_diagram(bool include_identity = true) const {
    std::vector<MooreArc> arcs;
    if (include_identity) {
      bool referenced = false;
      for (const MealyState& s : states_)
        for (int n : s.next)
          if (n < 0) referenced = true;
      if (referenced)
        for (int x = 0; x < q_; ++x) arcs.push_back(MooreArc{-1, -1, x, x});
    }
    for (int i = 0; i < state_count(); ++i)
      for (int x = 0; x < q_; ++x)
        arcs.push_back(MooreArc{i, states_[static_cast<std::size_t>(i)].next[static_cast<std::size_t>(x)],
                                x, states_[static_cast<std::size_t>(i)].output[static_cast<std::size_t>(x)]});
    return arcs;
  }

  // Renders the automaton back into the text format (round-trips with
  // parse_automaton up to whitespace).
  std::string to_text() const {
    std::ostringstream os;
    os << "alphabet: " << q_ << "\n";
    for (const MealyState& s : states_) {
      os << "state " << s.name << ":";
      for (int x = 0; x < q_; ++x) {
        if (x) os << " ;";
        int n = s.next[static_cast<std::size_t>(x)];
        os << " " << x << " -> " << s.output[static_cast<std::size_t>(x)] << " / "
           << (n < 0 ? std::string(kIdentityStateName) : states_[static_cast<std::size_t>(n)].name);
      }
      os << "\n";
    }
    return os.str();
  }

private:
  void validate() const {
    if (q_ < 1) throw parse_error("alphabet size must be at least 1");
    for (const MealyState& s : states_) {
      if (s.name == kIdentityStateName)
        throw parse_error("state name '" + s.name + "' is reserved for the identity");
      if (static_cast<int>(s.output.size()) != q_ || static_cast<int>(s.next.size()) != q_)
        throw parse_error("state '" + s.name + "' must define exactly one clause per letter");
      std::vector<bool> seen(static_cast<std::size_t>(q_), false);
      for (int x = 0; x < q_; ++x) {
        int y = s.output[static_cast<std::size_t>(x)];
        if (y < 0 || y >= q_)
          throw parse_error("state '" + s.name + "' outputs letter out of range");
        if (seen[static_cast<std::size_t>(y)])
          throw parse_error("state '" + s.name + "' is not invertible: output letter " +
                            std::to_string(y) + " repeated");
        seen[static_cast<std::size_t>(y)] = true;
        int n = s.next[static_cast<std::size_t>(x)];
        if (n < -1 || n >= state_count())
          throw parse_error("state '" + s.name + "' has a dangling section reference");
      }
    }
    // Distinct names.
    for (std::size_t i = 0; i < states_.size(); ++i)
      for (std::size_t j = i + 1; j < states_.size(); ++j)
        if (states_[i].name == states_[j].name)
          throw parse_error("duplicate state name '" + states_[i].name + "'");
  }

  int q_ = 0;
  std::vector<MealyState> states_;
};

namespace detail {

inline void strip_comment(std::string& line) {
  std::size_t h = line.find('#');
  if (h != std::string::npos) line.erase(h);
}

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline bool valid_state_name(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace detail

// Parses the automaton text format.  Section references are resolved after
// all states are read, so forward references are fine; referencing "e"
// yields the (implicit) identity.
inline MealyAutomaton parse_automaton(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int q = -1;
  struct RawClause {
    int in = -1, out = -1;
    std::string next;
  };
  struct RawState {
    std::string name;
    std::vector<RawClause> clauses;
    int line = 0;
  };
  std::vector<RawState> raw;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    detail::strip_comment(line);
    std::string t = detail::trim(line);
    if (t.empty()) continue;
    if (t.rfind("alphabet:", 0) == 0) {
      if (q != -1) throw parse_error("duplicate alphabet declaration", lineno);
      std::string rest = detail::trim(t.substr(9));
      try {
        std::size_t pos = 0;
        q = std::stoi(rest, &pos);
        if (pos != rest.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw parse_error("alphabet size must be an integer", lineno);
      }
      if (q < 1) throw parse_error("alphabet size must be at least 1", lineno);
      continue;
    }
    if (t.rfind("state", 0) == 0 && t.size() > 5 &&
        (std::isspace(static_cast<unsigned char>(t[5])))) {
      std::size_t colon = t.find(':');
      if (colon == std::string::npos) throw parse_error("missing ':' in state declaration", lineno);
      RawState rs;
      rs.name = detail::trim(t.substr(5, colon - 5));
      rs.line = lineno;
      if (!detail::valid_state_name(rs.name)) throw parse_error("invalid state name '" + rs.name + "'", lineno);
      if (rs.name == kIdentityStateName)
        throw parse_error("'" + rs.name + "' is reserved for the identity state and cannot be declared", lineno);
      std::string body = t.substr(colon + 1);
      std::size_t i = 0;
      while (i <= body.size()) {
        std::size_t j = body.find(';', i);
        if (j == std::string::npos) j = body.size();
        std::string clause = detail::trim(body.substr(i, j - i));
        i = j + 1;
        if (clause.empty()) {
          if (i > body.size()) break;
          continue;
        }
        std::size_t arrow = clause.find("->");
        std::size_t slash = clause.find('/');
        if (arrow == std::string::npos || slash == std::string::npos || slash < arrow)
          throw parse_error("clause must look like 'x -> y / state'", lineno);
        RawClause rc;
        try {
          std::string a = detail::trim(clause.substr(0, arrow));
          std::string b = detail::trim(clause.substr(arrow + 2, slash - arrow - 2));
          std::size_t pa = 0, pb = 0;
          rc.in = std::stoi(a, &pa);
          rc.out = std::stoi(b, &pb);
          if (pa != a.size() || pb != b.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
          throw parse_error("clause letters must be integers", lineno);
        }
        rc.next = detail::trim(clause.substr(slash + 1));
        if (!detail::valid_state_name(rc.next))
          throw parse_error("invalid section state name '" + rc.next + "'", lineno);
        rs.clauses.push_back(rc);
      }
      raw.push_back(std::move(rs));
      continue;
    }
    throw parse_error("unrecognized line '" + t + "'", lineno);
  }
  if (q == -1) throw parse_error("missing 'alphabet:' declaration");
  if (raw.empty()) throw parse_error("automaton declares no states");

  std::map<std::string, int> index;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (index.count(raw[i].name)) throw parse_error("duplicate state name '" + raw[i].name + "'", raw[i].line);
    index[raw[i].name] = static_cast<int>(i);
  }
  std::vector<MealyState> states(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    MealyState& s = states[i];
    s.name = raw[i].name;
    s.output.assign(static_cast<std::size_t>(q), -1);
    s.next.assign(static_cast<std::size_t>(q), -1);
    std::vector<bool> have(static_cast<std::size_t>(q), false);
    for (const RawClause& rc : raw[i].clauses) {
      if (rc.in < 0 || rc.in >= q)
        throw parse_error("state '" + s.name + "': input letter " + std::to_string(rc.in) + " out of range", raw[i].line);
      if (rc.out < 0 || rc.out >= q)
        throw parse_error("state '" + s.name + "': output letter " + std::to_string(rc.out) + " out of range", raw[i].line);
      if (have[static_cast<std::size_t>(rc.in)])
        throw parse_error("state '" + s.name + "': duplicate clause for letter " + std::to_string(rc.in), raw[i].line);
      have[static_cast<std::size_t>(rc.in)] = true;
      s.output[static_cast<std::size_t>(rc.in)] = rc.out;
      if (rc.next == kIdentityStateName) {
        s.next[static_cast<std::size_t>(rc.in)] = -1;
      } else {
        auto it = index.find(rc.next);
        if (it == index.end())
          throw parse_error("state '" + s.name + "' references unknown state '" + rc.next + "'", raw[i].line);
        s.next[static_cast<std::size_t>(rc.in)] = it->second;
      }
    }
    for (int x = 0; x < q; ++x)
      if (!have[static_cast<std::size_t>(x)])
        throw parse_error("state '" + s.name + "': no clause for letter " + std::to_string(x), raw[i].line);
  }
  return MealyAutomaton(q, std::move(states));
}

// Built-in machines.
//
//  paper-Pi       five states over {0,1}:  a = s(d,1), b = (a,c), c = (a,a),
//                 d = (1,b), where s swaps the two subtrees.
//  adding-machine binary odometer: a = s(1,a).
//  grigorchuk     the four-state torsion machine: a = s(1,1), b = (a,c),
//                 c = (a,d), d = (1,b).
inline MealyAutomaton preset_automaton(const std::string& name) {
  if (name == "paper-Pi") {
    return parse_automaton(
        "alphabet: 2\n"
        "state a: 0 -> 1 / d ; 1 -> 0 / e\n"
        "state b: 0 -> 0 / a ; 1 -> 1 / c\n"
        "state c: 0 -> 0 / a ; 1 -> 1 / a\n"
        "state d: 0 -> 0 / e ; 1 -> 1 / b\n");
  }
  if (name == "adding-machine") {
    return parse_automaton(
        "alphabet: 2\n"
        "state a: 0 -> 1 / e ; 1 -> 0 / a\n");
  }
  if (name == "grigorchuk") {
    return parse_automaton(
        "alphabet: 2\n"
        "state a: 0 -> 1 / e ; 1 -> 0 / e\n"
        "state b: 0 -> 0 / a ; 1 -> 1 / c\n"
        "state c: 0 -> 0 / a ; 1 -> 1 / d\n"
        "state d: 0 -> 0 / e ; 1 -> 1 / b\n");
  }
  throw usage_error("unknown preset automaton '" + name + "'");
}

}  // namespace selfsim
