#include <doctest.h>

#include "helpers.hpp"
#include "selfsim/word.hpp"
#include "selfsim/wordexpr.hpp"

using namespace selfsim;
using testing_helpers::S;
using testing_helpers::W;

TEST_CASE("free reduction cancels adjacent inverse pairs") {
  CHECK(W("a a^-1").empty());
  CHECK(W("a b b^-1 a").letters == W("a a").letters);
  CHECK(W("a^-1 a b").letters == W("b").letters);
  CHECK(word_multiply(W("a b"), W("b^-1 a")).letters == W("a a").letters);
}

TEST_CASE("inverse and power behave as free-group operations") {
  GroupWord w = W("a b^-1 c");
  CHECK(word_multiply(w, word_inverse(w)).empty());
  CHECK(word_inverse(w).letters == W("c^-1 b a^-1").letters);
  CHECK(word_power(W("a"), 4).letters == W("a a a a").letters);
  CHECK(word_power(W("a"), -2).letters == W("a^-1 a^-1").letters);
  CHECK(word_power(W("a b"), 0).empty());
}

TEST_CASE("conjugate and commutator expand by definition") {
  // x^y = y^-1 x y ; [x, y] = x^-1 y^-1 x y
  CHECK(word_conjugate(W("d"), W("a")).letters == W("a^-1 d a").letters);
  CHECK(word_commutator(W("c"), W("b")).letters == W("c^-1 b^-1 c b").letters);
}

TEST_CASE("rendering groups runs into powers and round-trips") {
  CHECK(S(W("a a b^-1 b^-1 b^-1")) == "a^2 b^-3");
  CHECK(S(GroupWord{}) == "e");
  GroupWord w = W("b a^2 b^-1 c");
  CHECK(W(S(w)).letters == w.letters);
}

TEST_CASE("expression grammar: suffixes bind tighter and chain left to right") {
  // d^a^-1 = (d^a)^-1 = a^-1 d^-1 a
  CHECK(W("d^a^-1").letters == W("a^-1 d^-1 a").letters);
  // the conjugation-by-inverse reading needs parentheses
  CHECK(W("d^(a^-1)").letters == W("a d a^-1").letters);
  CHECK(W("a^2^3").letters == word_power(W("a"), 6).letters);
  CHECK(W("[a, c^-2]").letters ==
        word_commutator(W("a"), word_power(W("c"), -2)).letters);
  CHECK(W("(a b)^2").letters == W("a b a b").letters);
  CHECK(W("[a,c]^d").letters == W("d^-1 a^-1 c^-1 a c d").letters);
}

TEST_CASE("expression grammar: name runs split into single-letter generators") {
  CHECK(W("ba^2b^-1").letters == W("b a^2 b^-1").letters);
  CHECK(W("bcbc^-1").letters == W("b c b c^-1").letters);
  CHECK(W("[ac,ac^-1]").letters ==
        word_commutator(W("a c"), W("a c^-1")).letters);
  CHECK(W("e").empty());
  CHECK(W("ae").letters == W("a").letters);  // identity letters vanish
}

TEST_CASE("expression grammar: errors carry positions") {
  CHECK_THROWS_AS(W(""), parse_error);
  CHECK_THROWS_AS(W("a^"), parse_error);
  CHECK_THROWS_AS(W("(a"), parse_error);
  CHECK_THROWS_AS(W("[a b]"), parse_error);
  CHECK_THROWS_AS(W("x"), parse_error);       // unknown generator
  CHECK_THROWS_AS(W("d^ab"), parse_error);    // ambiguous conjugator
  CHECK_THROWS_AS(W("a)"), parse_error);      // trailing garbage
  CHECK_THROWS_AS(W("a^9999999"), parse_error);
}

TEST_CASE("words compare by shortlex") {
  CHECK(W("a") < W("a b"));
  CHECK(W("a b") < W("b a"));
  CHECK_FALSE(W("b") < W("a"));
}
