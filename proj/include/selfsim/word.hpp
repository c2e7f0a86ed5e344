// Freely reduced words over the states of a Mealy automaton and their
// inverses.  A word represents an element of the generated group; all
// arithmetic here is free-group arithmetic (reduction only), equality of
// the represented tree automorphisms is decided by the action engine.
#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "selfsim/base.hpp"
#include "selfsim/mealy.hpp"

namespace selfsim {

// One letter of a word: +(i+1) is generator i, -(i+1) is its inverse,
// where i indexes MealyAutomaton::states.  0 never occurs.
using WordLetter = std::int16_t;

// A freely reduced word.  The empty word is the identity.  Letters read
// left to right; the RIGHTMOST letter acts on a tree word first, i.e.
// (uv)(x) = u(v(x)).
struct GroupWord {
  std::vector<WordLetter> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  bool operator==(const GroupWord& o) const { return letters == o.letters; }
  bool operator!=(const GroupWord& o) const { return letters != o.letters; }
  bool operator<(const GroupWord& o) const {
    if (letters.size() != o.letters.size()) return letters.size() < o.letters.size();
    return letters < o.letters;  // shortlex
  }
};

// Freely reduces a letter sequence (cancels s s^-1 pairs).
inline GroupWord reduce_letters(const std::vector<WordLetter>& in) {
  GroupWord w;
  w.letters.reserve(in.size());
  for (WordLetter l : in) {
    if (l == 0) continue;
    if (!w.letters.empty() && w.letters.back() == -l) {
      w.letters.pop_back();
    } else {
      w.letters.push_back(l);
    }
  }
  return w;
}

inline GroupWord word_identity() { return GroupWord{}; }

// The single-letter word for generator index i (0-based).
inline GroupWord word_generator(int i, bool inverse = false) {
  GroupWord w;
  w.letters.push_back(static_cast<WordLetter>(inverse ? -(i + 1) : (i + 1)));
  return w;
}

inline GroupWord word_inverse(const GroupWord& u) {
  GroupWord w;
  w.letters.reserve(u.letters.size());
  for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it)
    w.letters.push_back(static_cast<WordLetter>(-*it));
  return w;
}

// Concatenation u*v with free reduction at the seam.
inline GroupWord word_multiply(const GroupWord& u, const GroupWord& v) {
  GroupWord w = u;
  for (WordLetter l : v.letters) {
    if (!w.letters.empty() && w.letters.back() == -l) {
      w.letters.pop_back();
    } else {
      w.letters.push_back(l);
    }
  }
  return w;
}

inline GroupWord word_power(const GroupWord& u, long long k) {
  GroupWord base = k < 0 ? word_inverse(u) : u;
  long long n = k < 0 ? -k : k;
  if (n * static_cast<long long>(base.size()) > 100'000'000LL)
    throw cap_exceeded("word power too large");
  GroupWord w;
  w.letters.reserve(static_cast<std::size_t>(n) * base.size());
  for (long long i = 0; i < n; ++i) {
    for (WordLetter l : base.letters) {
      if (!w.letters.empty() && w.letters.back() == -l) {
        w.letters.pop_back();
      } else {
        w.letters.push_back(l);
      }
    }
  }
  return w;
}

// Conjugate x^y = y^-1 x y.
inline GroupWord word_conjugate(const GroupWord& x, const GroupWord& y) {
  return word_multiply(word_multiply(word_inverse(y), x), y);
}

// Commutator [x, y] = x^-1 y^-1 x y.
inline GroupWord word_commutator(const GroupWord& x, const GroupWord& y) {
  return word_multiply(word_multiply(word_inverse(x), word_inverse(y)),
                       word_multiply(x, y));
}

// Renders a word using the automaton's state names, grouping runs of one
// letter into powers:  "a b^-1 c^2".  The empty word renders as "e".
inline std::string word_to_string(const MealyAutomaton& m, const GroupWord& w) {
  if (w.empty()) return kIdentityStateName;
  std::string s;
  std::size_t i = 0;
  while (i < w.letters.size()) {
    std::size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    long long run = static_cast<long long>(j - i);
    WordLetter l = w.letters[i];
    int gen = std::abs(l) - 1;
    long long exponent = l > 0 ? run : -run;
    if (!s.empty()) s.push_back(' ');
    s += m.state(gen).name;
    if (exponent != 1) s += "^" + std::to_string(exponent);
    i = j;
  }
  return s;
}

// A compact stable key for hashing/maps (automaton-relative).
inline std::string word_key(const GroupWord& w) {
  std::string k;
  k.reserve(w.letters.size());
  for (WordLetter l : w.letters) {
    // letters fit comfortably in one byte for machines with < 60 states
    k.push_back(static_cast<char>(l + 64));
  }
  return k;
}

}  // namespace selfsim
