// Parser for algebraic word expressions over the states of a machine.
//
// Grammar (ASCII, whitespace between tokens is insignificant):
//
//   word    := term+                      juxtaposition = product
//   term    := atom suffix*
//   suffix  := '^' integer                power
//            | '^' atom                   conjugation x^y = y^-1 x y
//   atom    := name | '(' word ')' | '[' word ',' word ']'
//
// Commutators mean [x, y] = x^-1 y^-1 x y.  Suffixes bind tighter than
// juxtaposition and chain left to right, so  d^a^-1  parses as  (d^a)^-1;
// write  d^(a^-1)  to conjugate by an inverse.
//
// A name token that is not itself a state name but whose every character
// is a single-character state name (or 'e') is split into a product, so
// "ba^2b^-1" reads as  b a^2 b^-1,  with suffixes applying to the last
// letter of the run.  In conjugator position such a token is rejected as
// ambiguous: write d^(a b) or d^a b explicitly.
#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "selfsim/base.hpp"
#include "selfsim/mealy.hpp"
#include "selfsim/word.hpp"

namespace selfsim {

// Alternative readings of the two non-associative constructs.  The defaults
// are the conventions documented above; the reversed forms exist so that a
// table replay can diagnose which reading a published row was generated with.
struct ExprConventions {
  bool conjugate_reversed = false;   // x^y = y x y^-1  instead of  y^-1 x y
  bool commutator_reversed = false;  // [x,y] = x y x^-1 y^-1  instead of
                                     //         x^-1 y^-1 x y
};

namespace detail {

class ExprParser {
public:
  ExprParser(const MealyAutomaton& m, const std::string& text,
             ExprConventions conv = {})
      : m_(m), s_(text), conv_(conv) {}

  GroupWord parse() {
    GroupWord w = parse_word();
    skip_ws();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return w;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error(what + " in word expression", 1, static_cast<int>(i_) + 1);
  }

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool at_end() {
    skip_ws();
    return i_ == s_.size();
  }

  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }

  GroupWord parse_word() {
    GroupWord w;
    bool any = false;
    while (true) {
      char c = peek();
      if (c == '\0' || c == ')' || c == ']' || c == ',') break;
      w = word_multiply(w, parse_term());
      any = true;
    }
    if (!any) fail("expected a word");
    return w;
  }

  GroupWord parse_term() {
    std::vector<GroupWord> atoms = parse_atom_run(false);
    GroupWord last = atoms.back();
    while (peek() == '^') {
      ++i_;
      skip_ws();
      char c = i_ < s_.size() ? s_[i_] : '\0';
      if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
        last = word_power(last, parse_integer());
      } else {
        std::vector<GroupWord> conj = parse_atom_run(true);
        const GroupWord& y = conj.front();
        last = conv_.conjugate_reversed
                   ? word_multiply(word_multiply(y, last), word_inverse(y))
                   : word_conjugate(last, y);
      }
    }
    GroupWord w;
    for (std::size_t k = 0; k + 1 < atoms.size(); ++k) w = word_multiply(w, atoms[k]);
    return word_multiply(w, last);
  }

  long long parse_integer() {
    skip_ws();
    std::size_t start = i_;
    if (i_ < s_.size() && s_[i_] == '-') ++i_;
    std::size_t digits = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == digits) fail("expected an integer exponent");
    long long v = 0;
    try {
      v = std::stoll(s_.substr(start, i_ - start));
    } catch (const std::exception&) {
      fail("exponent out of range");
    }
    if (v > 1000000 || v < -1000000) fail("exponent out of range");
    return v;
  }

  // Parses one atom; a splittable name token yields several.  In
  // conjugator position (suffix = true) multi-atom runs are rejected.
  std::vector<GroupWord> parse_atom_run(bool suffix) {
    skip_ws();
    if (i_ >= s_.size()) fail("expected a generator, '(' or '['");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      GroupWord w = parse_word();
      if (peek() != ')') fail("expected ')'");
      ++i_;
      return {w};
    }
    if (c == '[') {
      ++i_;
      GroupWord x = parse_word();
      if (peek() != ',') fail("expected ',' in commutator");
      ++i_;
      GroupWord y = parse_word();
      if (peek() != ']') fail("expected ']'");
      ++i_;
      if (conv_.commutator_reversed)
        return {word_multiply(word_multiply(x, y),
                              word_inverse(word_multiply(y, x)))};
      return {word_commutator(x, y)};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i_;
      while (i_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
        ++i_;
      std::string name = s_.substr(start, i_ - start);
      if (name == kIdentityStateName) return {word_identity()};
      if (auto idx = m_.state_index(name)) return {word_generator(*idx)};
      // Try splitting into single-character state names.
      std::vector<GroupWord> run;
      for (char ch : name) {
        std::string one(1, ch);
        if (one == kIdentityStateName) continue;
        auto idx = m_.state_index(one);
        if (!idx) {
          i_ = start;
          fail("unknown generator '" + name + "'");
        }
        run.push_back(word_generator(*idx));
      }
      if (run.empty()) return {word_identity()};  // a run of e's
      if (suffix && run.size() > 1) {
        i_ = start;
        fail("ambiguous conjugator '" + name + "': parenthesize, e.g. x^(" + name + ")");
      }
      return run;
    }
    fail("expected a generator, '(' or '['");
  }

  const MealyAutomaton& m_;
  const std::string& s_;
  ExprConventions conv_;
  std::size_t i_ = 0;
};

}  // namespace detail

// Parses a word expression (see the grammar above) into a reduced word.
inline GroupWord parse_word_expression(const MealyAutomaton& m, const std::string& text) {
  return detail::ExprParser(m, text).parse();
}

inline GroupWord parse_word_expression(const MealyAutomaton& m, const std::string& text,
                                       ExprConventions conv) {
  return detail::ExprParser(m, text, conv).parse();
}

}  // namespace selfsim
