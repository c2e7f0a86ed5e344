#pragma once

// Frozen verification fixtures for the bundled five-state machine preset.
// Everything here is plain data: word expressions in the grammar accepted by
// parse_word_expression, vertex strings over {0,1}, and expected section or
// portrait values ("e" stands for the identity). The test suite and the
// verify-paper command replay these tables against the engine.

#include <vector>

namespace selfsim {
namespace refdata {

// Name of the automaton preset the fixtures describe.
inline constexpr const char* kPresetName = "paper-Pi";

// Core nucleus word list; the full nucleus is this set together with the
// inverses of every entry (and the identity), 67 elements in total.
inline const std::vector<const char*>& nucleus_core_words() {
  static const std::vector<const char*> words = {
      "a", "b", "d", "c", "da", "bd", "cb", "ac",
      "a^-1b", "d^-1c", "a^-1c", "d^-1a", "b^-1d", "c^-1b", "a^2", "a^-1da",
      "d^-1bd", "b^-1cb", "c^-1ac", "a^-1bd", "d^-1cb", "b^-1ac", "c^-1da", "a^-1cb",
      "d^-1ac", "b^-1da", "c^-1bd", "a^-1d^-1bd", "d^-1b^-1cb", "b^-1c^-1ac", "c^-1a^-1da", "a^-1d^-1cb",
      "d^-1b^-1ac",
  };
  return words;
}

inline constexpr int kExpectedNucleusSize = 67;
inline constexpr int kSectionTableDepth = 7;

// One row of the depth-7 section table: for the product left*right, the set
// of sections at depth exactly 7, as reduced words.
struct SectionProfileRow {
  const char* left;
  const char* right;
  std::vector<const char*> members;
};

inline const std::vector<SectionProfileRow>& section_profile_rows() {
  static const std::vector<SectionProfileRow> rows = {
    {"a", "b", {"e", "d", "a", "c", "cb", "b"}},
    {"a", "b^-1", {"e", "d", "a", "c", "a^-1", "c^-1", "b^-1", "d^-1"}},
    {"a", "d", {"e", "d", "a", "c", "b"}},
    {"a", "d^-1", {"e", "d", "a", "c", "b^-1", "d^-1", "a^-1"}},
    {"a", "c^-1", {"e", "d", "a", "c", "a^-1", "c^-1", "b^-1"}},
    {"a", "da", {"e", "b", "d", "a", "a^2", "ac", "c"}},
    {"a", "bd", {"e", "d", "a", "c", "cb", "b", "da"}},
    {"a", "cb", {"e", "a", "c", "b", "d", "cb", "bd"}},
    {"a", "ac", {"e", "d", "a", "c", "cb", "b"}},
    {"a", "d^-1b^-1", {"e", "d", "a", "c", "a^-1", "c^-1", "b^-1", "d^-1", "a^-1d^-1"}},
    {"a", "b^-1c^-1", {"e", "a^-1", "c^-1", "b^-1", "d", "a", "c", "d^-1", "d^-1b^-1"}},
    {"a", "c^-1a^-1", {"e", "a^-1", "c^-1", "b^-1", "d", "a", "c", "d^-1", "b^-1c^-1"}},
    {"a", "d^-1c", {"e", "d", "a", "c", "cb", "b", "d^-1", "a^-1", "a^-1b", "b^-1"}},
    {"a", "b^-1a", {"e", "b^-1", "d^-1", "d", "a", "c", "d^-1c", "a^-1", "c^-1"}},
    {"a", "c^-1d", {"e", "d", "a", "c", "a^-1", "c^-1", "b^-1", "b", "b^-1a"}},
    {"a", "d^-1a", {"e", "b^-1", "d^-1", "a", "c", "a^-1c", "d"}},
    {"a", "b^-1d", {"e", "d", "a", "c", "a^-1", "c^-1", "b^-1", "d^-1a"}},
    {"a", "c^-1b", {"e", "d", "a", "c", "b", "a^-1", "c^-1", "b^-1d"}},
    {"a", "c^-1a", {"e", "d", "a", "b^-1c", "b^-1", "c", "a^-1", "c^-1"}},
    {"a", "d^-1b", {"e", "d", "a", "c", "cb", "b", "a^-1d", "a^-1", "d^-1"}},
    {"a", "b^-1c", {"e", "d", "a", "c", "d^-1b", "d^-1", "b^-1"}},
    {"a", "d^-1bd", {"e", "d", "a", "c", "cb", "b", "a^-1da"}},
    {"a", "b^-1cb", {"e", "d", "a", "c", "cb", "b", "d^-1bd"}},
    {"a", "c^-1ac", {"e", "d", "a", "c", "b^-1cb"}},
    {"a", "d^-1b^-1d", {"e", "d", "a", "c", "a^-1", "c^-1", "b^-1", "d^-1", "a^-1d^-1a"}},
    {"a", "b^-1c^-1b", {"e", "d", "a", "c", "a^-1", "c^-1", "b^-1", "d^-1b^-1d"}},
    {"a", "c^-1a^-1c", {"e", "d^-1", "a^-1", "c^-1", "b^-1c^-1b", "d", "a", "c"}},
    {"a", "d^-1cb", {"e", "a", "c", "b", "d", "cb", "a^-1bd", "a^-1", "d^-1"}},
    {"a", "b^-1ac", {"e", "d", "a", "c", "d^-1cb", "d^-1", "b^-1"}},
    {"a", "c^-1da", {"e", "b", "d", "a", "a^2", "b^-1ac", "b^-1", "c", "a^-1", "c^-1"}},
    {"a", "d^-1b^-1a", {"e", "b^-1", "d^-1", "a", "c", "a^-1d^-1c", "d", "a^-1", "c^-1"}},
    {"a", "b^-1c^-1d", {"e", "a^-1", "c^-1", "b^-1", "d", "a", "c", "d^-1b^-1a"}},
    {"a", "c^-1a^-1b", {"e", "a", "c", "cb", "d", "a^-1", "c^-1", "b^-1c^-1d", "d^-1"}},
    {"a", "d^-1ac", {"e", "a", "c", "a^-1cb", "d^-1", "b", "b^-1", "d", "cb"}},
    {"a", "b^-1da", {"e", "d", "a", "a^2", "d^-1ac", "b^-1", "c", "a^-1", "c^-1"}},
    {"a", "c^-1bd", {"e", "d", "a", "c", "b", "b^-1da", "a^-1", "c^-1"}},
    {"a", "b^-1c^-1a", {"e", "b^-1", "d^-1", "d", "a", "d^-1b^-1c", "a^-1", "c^-1", "c"}},
    {"a", "c^-1a^-1d", {"e", "a^-1", "c^-1", "b^-1", "a", "c", "cb", "d", "b^-1c^-1a"}},
    {"a", "d^-1b^-1c", {"e", "d", "a", "c", "d^-1", "a^-1", "a^-1d^-1b", "b^-1"}},
    {"a", "d^-1b^-1cb", {"e", "d", "a", "c", "cb", "b", "a^-1d^-1bd", "a^-1", "d^-1", "b^-1"}},
    {"a", "b^-1c^-1ac", {"e", "d", "a", "c", "d^-1b^-1cb", "d^-1", "b^-1", "a^-1", "c^-1"}},
    {"a", "c^-1a^-1da", {"e", "a", "c", "cb", "d", "b^-1c^-1ac", "b^-1", "a^-1", "c^-1"}},
    {"a", "d^-1b^-1da", {"e", "b^-1", "d^-1", "d", "a", "a^-1d^-1ac", "c", "a^-1", "c^-1"}},
    {"a", "b^-1c^-1bd", {"e", "d", "a", "c", "a^-1", "c^-1", "b^-1", "b", "d^-1b^-1da"}},
    {"a", "c^-1a^-1cb", {"e", "a", "c", "b", "a^-1", "c^-1", "b^-1c^-1bd", "d", "d^-1", "cb"}},
    {"a", "d^-1b^-1ac", {"e", "a", "c", "a^-1d^-1cb", "d^-1", "b^-1", "d"}},
    {"a", "b^-1c^-1da", {"e", "d", "a", "a^2", "d^-1b^-1ac", "b^-1", "a^-1", "c^-1", "c"}},
    {"a", "c^-1a^-1bd", {"e", "d", "a", "b", "c", "cb", "b^-1c^-1da", "a^-1", "c^-1"}},
    {"a", "a^2", {"e", "d", "a", "c"}},
    {"b", "a", {"e", "b", "d", "da", "a", "c"}},
    {"b", "a^-1", {"e", "b", "d", "a", "c", "d^-1", "a^-1", "c^-1"}},
    {"b", "b", {"e", "a", "c", "b", "d"}},
    {"b", "d^-1", {"e", "a", "c", "b", "d", "d^-1", "a^-1"}},
    {"b", "c^-1", {"e", "b", "d", "a^-1", "c^-1", "b^-1"}},
    {"b", "c", {"e", "a", "c", "b", "d"}},
    {"b", "da", {"e", "b", "d", "a", "da", "a^2", "ac", "c"}},
    {"b", "bd", {"e", "a", "c", "b", "d", "da"}},
    {"b", "cb", {"e", "a", "c", "b", "bd", "d"}},
    {"b", "ac", {"e", "b", "d", "da", "a", "c", "cb"}},
    {"b", "a^-1d^-1", {"e", "b", "d", "a", "c", "b^-1", "d^-1", "a^-1", "c^-1", "a^-2", "c^-1a^-1"}},
    {"b", "d^-1b^-1", {"e", "b^-1", "d^-1", "a^-1", "b", "d", "a^-1d^-1"}},
    {"b", "c^-1a^-1", {"e", "b", "d", "a^-1", "c^-1", "b^-1", "d^-1"}},
    {"b", "a^-1b", {"e", "b", "d", "a", "c", "bd", "a^-1", "c^-1", "c^-1d", "d^-1"}},
    {"b", "d^-1c", {"e", "a", "c", "b", "d", "d^-1", "a^-1", "a^-1b"}},
    {"b", "c^-1d", {"e", "b", "d", "da", "a", "b^-1", "b^-1a", "a^-1", "c^-1"}},
    {"b", "a^-1c", {"e", "b", "d", "a", "c", "d^-1", "a^-1", "c^-1b"}},
    {"b", "d^-1a", {"e", "b", "d", "a", "c", "d^-1", "a^-1c"}},
    {"b", "c^-1b", {"e", "a", "c", "b", "d", "a^-1", "c^-1", "b^-1d"}},
    {"b", "c^-1a", {"e", "b", "d", "da", "a", "b^-1c", "b^-1"}},
    {"b", "a^-1d", {"e", "b", "d", "a", "c", "bd", "c^-1a", "a^-1", "c^-1"}},
    {"b", "d^-1b", {"e", "a", "c", "b", "d", "a^-1d", "a^-1", "d^-1"}},
    {"b", "a^-1da", {"e", "a", "c", "b", "bd", "d", "c^-1ac"}},
    {"b", "d^-1bd", {"e", "a", "c", "b", "d", "a^-1da"}},
    {"b", "c^-1ac", {"e", "b", "d", "da", "a", "c", "b^-1cb"}},
    {"b", "a^-1d^-1a", {"e", "a", "c", "b", "b^-1", "d^-1", "a^-1", "c^-1a^-1c", "d"}},
    {"b", "d^-1b^-1d", {"e", "b^-1", "d^-1", "a^-1d^-1a", "b", "d"}},
    {"b", "c^-1a^-1c", {"e", "b", "d", "d^-1", "a^-1", "c^-1b"}},
    {"b", "a^-1bd", {"e", "b", "d", "a", "c", "bd", "c^-1da", "a^-1", "c^-1"}},
    {"b", "d^-1cb", {"e", "a", "c", "b", "a^-1bd", "a^-1", "d", "d^-1"}},
    {"b", "c^-1da", {"e", "b", "d", "a", "da", "a^2", "b^-1ac", "b^-1"}},
    {"b", "d^-1b^-1a", {"e", "b^-1", "d^-1", "d", "da", "c", "b", "a^-1d^-1c"}},
    {"b", "c^-1a^-1b", {"e", "b", "d", "a^-1", "c^-1", "c^-1d", "d^-1"}},
    {"b", "a^-1d^-1c", {"e", "b", "d", "a", "c", "d^-1", "a^-1", "a^-2", "c^-1a^-1b", "b^-1"}},
    {"b", "a^-1cb", {"e", "b", "d", "a", "c", "c^-1bd", "a^-1", "d^-1", "bd"}},
    {"b", "d^-1ac", {"e", "b", "d", "a", "c", "a^-1cb", "d^-1"}},
    {"b", "c^-1bd", {"e", "a", "c", "b", "d", "b^-1da", "a^-1", "c^-1", "da"}},
    {"b", "c^-1a^-1d", {"e", "b", "d", "a^-1", "c^-1", "b^-1", "c^-1a"}},
    {"b", "a^-1d^-1b", {"e", "b", "d", "a", "c", "a^-1", "c^-1", "c^-1a^-1d", "a^-2", "d^-1"}},
    {"b", "d^-1b^-1c", {"e", "a", "c", "b", "d^-1", "a^-1", "d", "da", "a^-1d^-1b", "b^-1"}},
    {"b", "a^-1d^-1bd", {"e", "b", "d", "a", "c", "bd", "c^-1a^-1da", "a^-1", "c^-1", "d^-1"}},
    {"b", "d^-1b^-1cb", {"e", "a", "c", "b", "d", "da", "a^-1d^-1bd", "a^-1", "d^-1"}},
    {"b", "c^-1a^-1da", {"e", "b", "d", "a", "c^-1ac", "a^-1", "c^-1", "b^-1"}},
    {"b", "d^-1b^-1da", {"e", "d", "a", "d^-1", "a^-1d^-1ac", "b^-1", "da", "c", "b"}},
    {"b", "c^-1a^-1cb", {"e", "b", "d", "a", "c", "c^-1bd", "a^-1", "d^-1"}},
    {"b", "a^-1d^-1ac", {"e", "d^-1", "a^-1", "a", "c", "c^-1a^-1cb", "b", "b^-1", "d"}},
    {"b", "a^-1d^-1cb", {"e", "b", "d", "a", "c", "c^-1a^-1bd", "a^-2", "d^-1", "a^-1"}},
    {"b", "d^-1b^-1ac", {"e", "b", "a", "c", "d", "da", "a^-1d^-1cb", "d^-1", "b^-1"}},
    {"b", "c^-1a^-1bd", {"e", "b", "d", "c^-1da", "a^-1", "c^-1"}},
    {"b", "a^2", {"e", "a", "c", "b", "d", "da"}},
    {"b", "a^-2", {"e", "a", "c", "b", "d^-1", "a^-1", "c^-1", "d"}},
    {"c", "a", {"e", "a", "c", "b", "d"}},
    {"c", "a^-1", {"e", "a", "c", "b", "d^-1", "a^-1", "c^-1"}},
    {"c", "b^-1", {"e", "a", "c", "b", "b^-1", "d^-1"}},
    {"c", "d", {"e", "a", "c", "b", "bd", "d"}},
    {"c", "d^-1", {"e", "a", "c", "b", "b^-1", "d^-1", "a^-1"}},
    {"c", "c", {"e", "a", "c", "b"}},
    {"c", "da", {"e", "a", "c", "b", "bd", "d", "a^2", "ac"}},
    {"c", "bd", {"e", "a", "c", "b", "d", "bd", "da"}},
    {"c", "cb", {"e", "a", "c", "b", "bd", "d"}},
    {"c", "ac", {"e", "d", "a", "c", "cb", "b"}},
    {"c", "a^-1d^-1", {"e", "a", "c", "b", "b^-1", "d^-1", "a^-1", "c^-1", "a^-2", "c^-1a^-1"}},
    {"c", "d^-1b^-1", {"e", "b^-1", "d^-1", "a", "c", "b", "a^-1", "a^-1d^-1"}},
    {"c", "b^-1c^-1", {"e", "a^-1", "c^-1", "b^-1", "d^-1", "a", "c", "b", "d^-1b^-1"}},
    {"c", "a^-1b", {"e", "a", "c", "b", "bd", "d", "a^-1", "c^-1", "c^-1d", "d^-1"}},
    {"c", "d^-1c", {"e", "a", "c", "b", "d^-1", "a^-1", "a^-1b", "b^-1"}},
    {"c", "b^-1a", {"e", "a", "c", "b", "b^-1", "d^-1", "d", "d^-1c"}},
    {"c", "a^-1c", {"e", "a", "c", "b", "d^-1", "a^-1", "c^-1b"}},
    {"c", "d^-1a", {"e", "a", "c", "b", "b^-1", "d^-1", "a^-1c"}},
    {"c", "b^-1d", {"e", "a", "c", "b", "d", "b^-1", "d^-1a"}},
    {"c", "a^-1d", {"e", "a", "c", "b", "bd", "d", "c^-1a", "a^-1", "c^-1"}},
    {"c", "d^-1b", {"e", "a", "c", "b", "a^-1d", "a^-1", "d^-1"}},
    {"c", "b^-1c", {"e", "a", "c", "b", "d^-1b", "d^-1", "b^-1"}},
    {"c", "a^-1da", {"e", "a", "c", "b", "bd", "d", "c^-1ac"}},
    {"c", "d^-1bd", {"e", "a", "c", "b", "bd", "d", "a^-1da"}},
    {"c", "b^-1cb", {"e", "a", "c", "b", "d^-1bd"}},
    {"c", "a^-1d^-1a", {"e", "a", "c", "b", "b^-1", "d^-1", "a^-1", "c^-1a^-1c"}},
    {"c", "d^-1b^-1d", {"e", "a", "c", "b", "b^-1", "d^-1", "a^-1d^-1a"}},
    {"c", "b^-1c^-1b", {"e", "a^-1", "c^-1", "b^-1", "d^-1b^-1d", "a", "c", "b"}},
    {"c", "a^-1bd", {"e", "a", "c", "b", "d", "bd", "c^-1da", "a^-1", "c^-1"}},
    {"c", "d^-1cb", {"e", "a", "c", "b", "a^-1bd", "a^-1", "d^-1"}},
    {"c", "b^-1ac", {"e", "d", "a", "c", "d^-1cb", "d^-1", "b", "b^-1"}},
    {"c", "d^-1b^-1a", {"e", "b^-1", "d^-1", "a", "c", "b", "a^-1d^-1c"}},
    {"c", "b^-1c^-1d", {"e", "a^-1", "c^-1", "b^-1", "b", "bd", "a", "c", "d^-1b^-1a"}},
    {"c", "a^-1d^-1c", {"e", "a", "c", "b", "d^-1", "a^-1", "a^-2", "c^-1a^-1b", "b^-1"}},
    {"c", "a^-1cb", {"e", "a", "c", "b", "c^-1bd", "a^-1", "d", "d^-1", "bd"}},
    {"c", "d^-1ac", {"e", "a", "c", "a^-1cb", "d^-1", "b", "b^-1"}},
    {"c", "b^-1da", {"e", "a", "c", "b", "d", "a^2", "d^-1ac", "b^-1"}},
    {"c", "b^-1c^-1a", {"e", "b^-1", "d^-1", "b", "bd", "a", "c", "d^-1b^-1c", "a^-1", "c^-1"}},
    {"c", "a^-1d^-1b", {"e", "a", "c", "b", "a^-1", "c^-1", "c^-1a^-1d", "a^-2", "d^-1"}},
    {"c", "d^-1b^-1c", {"e", "a", "c", "b", "d^-1", "a^-1", "a^-1d^-1b", "b^-1"}},
    {"c", "a^-1d^-1bd", {"e", "a", "c", "b", "bd", "d", "c^-1a^-1da", "a^-1", "c^-1", "d^-1"}},
    {"c", "d^-1b^-1cb", {"e", "a", "c", "b", "a^-1d^-1bd", "a^-1", "d^-1", "b^-1"}},
    {"c", "b^-1c^-1ac", {"e", "b", "bd", "a", "c", "d^-1b^-1cb", "d^-1", "b^-1"}},
    {"c", "d^-1b^-1da", {"e", "a", "c", "b", "b^-1", "d^-1", "d", "a^-1d^-1ac"}},
    {"c", "b^-1c^-1bd", {"e", "b", "d", "b^-1", "d^-1b^-1da", "a", "a^-1", "c^-1", "bd", "c"}},
    {"c", "a^-1d^-1ac", {"e", "d^-1", "a^-1", "a", "c", "c^-1a^-1cb", "b", "b^-1"}},
    {"c", "a^-1d^-1cb", {"e", "a", "c", "b", "c^-1a^-1bd", "a^-2", "d^-1", "a^-1"}},
    {"c", "d^-1b^-1ac", {"e", "a", "c", "a^-1d^-1cb", "d^-1", "b^-1", "b"}},
    {"c", "b^-1c^-1da", {"e", "a", "c", "d", "b", "bd", "a^2", "d^-1b^-1ac", "b^-1", "a^-1", "c^-1"}},
    {"c", "a^2", {"e", "a", "c", "b", "d"}},
    {"c", "a^-2", {"e", "a", "c", "b", "d^-1", "a^-1", "c^-1"}},
    {"d", "a^-1", {"e", "b", "d", "a", "d^-1", "a^-1", "c^-1"}},
    {"d", "b", {"e", "a", "c", "b", "d"}},
    {"d", "b^-1", {"e", "a^-1", "c^-1", "b^-1", "d", "a", "d^-1"}},
    {"d", "d", {"e", "b", "d", "a"}},
    {"d", "c^-1", {"e", "a^-1", "c^-1", "b^-1", "d", "a", "b"}},
    {"d", "c", {"e", "a", "c", "b", "d", "a^2", "ac"}},
    {"d", "da", {"e", "b", "d", "a^2", "a", "ac"}},
    {"d", "bd", {"e", "a", "c", "b", "d", "da"}},
    {"d", "cb", {"e", "a", "c", "b", "d", "a^2", "ac", "bd"}},
    {"d", "ac", {"e", "d", "a", "c", "a^2", "ac", "cb", "b"}},
    {"d", "a^-1d^-1", {"e", "b", "d", "a", "b^-1", "d^-1", "a^-1", "c^-1", "a^-2", "c^-1a^-1"}},
    {"d", "b^-1c^-1", {"e", "a^-1", "c^-1", "b^-1", "d", "a", "d^-1"}},
    {"d", "c^-1a^-1", {"e", "d", "a", "b", "a^-1", "c^-1", "b^-1", "d^-1", "b^-1c^-1"}},
    {"d", "a^-1b", {"e", "d", "a", "a^2", "ac", "b", "a^-1", "c^-1", "c^-1d", "d^-1"}},
    {"d", "b^-1a", {"e", "d", "a", "a^2", "ac", "d^-1", "d^-1c", "b^-1", "a^-1", "c^-1"}},
    {"d", "c^-1d", {"e", "a^-1", "c^-1", "b^-1", "d", "a", "b", "da", "b^-1a"}},
    {"d", "a^-1c", {"e", "d", "a", "a^2", "ac", "b", "d^-1", "a^-1", "c^-1b"}},
    {"d", "b^-1d", {"e", "a^-1", "c^-1", "b^-1", "b", "d", "a", "d^-1a"}},
    {"d", "c^-1b", {"e", "d", "a", "b", "a^-1", "c^-1", "b^-1d"}},
    {"d", "c^-1a", {"e", "d", "a", "b", "da", "b^-1c", "b^-1", "a^-1", "c^-1"}},
    {"d", "a^-1d", {"e", "b", "d", "a", "c^-1a", "a^-1", "c^-1"}},
    {"d", "b^-1c", {"e", "d", "a", "a^2", "ac", "d^-1b", "d^-1"}},
    {"d", "a^-1da", {"e", "b", "d", "a", "c^-1ac"}},
    {"d", "b^-1cb", {"e", "a", "c", "b", "d", "a^2", "ac", "d^-1bd"}},
    {"d", "c^-1ac", {"e", "b", "d", "da", "a", "c", "b^-1cb"}},
    {"d", "a^-1d^-1a", {"e", "b^-1", "d^-1", "a^-1", "c^-1a^-1c", "b", "d", "a"}},
    {"d", "b^-1c^-1b", {"e", "a^-1", "c^-1", "b^-1", "d", "a", "b^-1d"}},
    {"d", "c^-1a^-1c", {"e", "b", "d", "a", "d^-1", "a^-1", "c^-1", "b^-1c^-1b"}},
    {"d", "a^-1bd", {"e", "d", "a", "a^2", "ac", "b", "c^-1da", "a^-1", "c^-1"}},
    {"d", "b^-1ac", {"e", "d", "a", "c", "a^2", "ac", "d^-1cb", "d^-1"}},
    {"d", "c^-1da", {"e", "d", "a", "b", "da", "a^2", "b^-1ac", "b^-1", "a^-1", "c^-1"}},
    {"d", "b^-1c^-1d", {"e", "a^-1", "c^-1", "b^-1", "d", "a", "b^-1a"}},
    {"d", "c^-1a^-1b", {"e", "b", "d", "a", "a^-1", "c^-1", "b^-1c^-1d", "d^-1"}},
    {"d", "a^-1d^-1c", {"e", "d", "a", "a^2", "ac", "b", "d^-1", "a^-1", "a^-2", "c^-1a^-1b", "b^-1"}},
    {"d", "a^-1cb", {"e", "b", "d", "a", "c", "a^2", "ac", "c^-1bd", "a^-1", "d^-1"}},
    {"d", "b^-1da", {"e", "b", "d", "a^2", "a", "d^-1ac", "b^-1", "ac", "a^-1", "c^-1"}},
    {"d", "c^-1bd", {"e", "d", "a", "b", "b^-1da", "a^-1", "c^-1", "da"}},
    {"d", "b^-1c^-1a", {"e", "d", "a", "b^-1", "d^-1", "b^-1c", "a^-1", "c^-1"}},
    {"d", "c^-1a^-1d", {"e", "d", "a", "b", "a^-1", "c^-1", "b^-1", "b^-1c^-1a"}},
    {"d", "a^-1d^-1b", {"e", "d", "a", "a^2", "ac", "b", "a^-1", "c^-1", "c^-1a^-1d", "a^-2", "d^-1"}},
    {"d", "a^-1d^-1bd", {"e", "d", "a", "a^2", "ac", "b", "c^-1a^-1da", "a^-1", "c^-1", "d^-1"}},
    {"d", "b^-1c^-1ac", {"e", "d", "a", "c", "b^-1cb", "b^-1", "d^-1", "a^-1", "c^-1"}},
    {"d", "c^-1a^-1da", {"e", "b", "d", "a", "b^-1c^-1ac", "b^-1", "a^-1", "c^-1"}},
    {"d", "b^-1c^-1bd", {"e", "a^-1", "c^-1", "b^-1", "d", "a", "b", "b^-1da"}},
    {"d", "c^-1a^-1cb", {"e", "d", "a", "a^2", "ac", "b", "a^-1", "c^-1", "b^-1c^-1bd", "d^-1"}},
    {"d", "a^-1d^-1ac", {"e", "d^-1", "a^-1", "a", "c", "c^-1a^-1cb", "b", "b^-1", "d", "a^2", "ac"}},
    {"d", "a^-1d^-1cb", {"e", "b", "d", "a", "c", "a^2", "ac", "c^-1a^-1bd", "a^-2", "d^-1", "a^-1"}},
    {"d", "b^-1c^-1da", {"e", "d", "a", "a^2", "b^-1ac", "b^-1", "a^-1", "c^-1"}},
    {"d", "c^-1a^-1bd", {"e", "b", "d", "a", "b^-1c^-1da", "a^-1", "c^-1"}},
    {"d", "a^2", {"e", "d", "a", "c", "b", "a^2", "ac"}},
    {"d", "a^-2", {"e", "d^-1", "a^-1", "c^-1", "b", "d", "a"}},
    {"a^-1", "b^-1", {"e", "a^-1", "c^-1", "b^-1", "d^-1", "a^-1d^-1"}},
    {"a^-1", "c^-1", {"e", "a^-1", "c^-1", "b^-1", "d^-1"}},
    {"a^-1", "a^-1d^-1", {"e", "d^-1", "a^-1", "c^-1", "b^-1", "a^-2", "c^-1a^-1"}},
    {"a^-1", "d^-1b^-1", {"e", "a^-1", "c^-1", "b^-1", "d^-1", "a^-2", "c^-1a^-1", "a^-1d^-1"}},
    {"a^-1", "b^-1c^-1", {"e", "a^-1", "c^-1", "b^-1", "d^-1", "a^-1d^-1", "d^-1b^-1"}},
    {"a^-1", "c^-1a^-1", {"e", "d^-1", "a^-1", "c^-1", "b^-1", "b^-1c^-1"}},
    {"a^-1", "a^-1b", {"e", "d^-1", "a^-1", "b", "c^-1b", "d", "c^-1", "c^-1d"}},
    {"a^-1", "b^-1a", {"e", "b^-1", "d^-1", "d", "c^-1a", "a^-1", "c^-1", "a", "c", "a^-1d^-1c"}},
    {"a^-1", "c^-1d", {"e", "a^-1", "c^-1", "b^-1", "b", "d", "c^-1d", "d^-1", "a", "b^-1a"}},
    {"a^-1", "a^-1c", {"e", "d^-1", "a^-1", "b", "c^-1b"}},
    {"a^-1", "b^-1d", {"e", "a^-1", "c^-1", "b^-1", "d", "c^-1a", "d^-1", "a^-1d^-1a"}},
    {"a^-1", "c^-1b", {"e", "a^-1", "c^-1", "b", "d", "c^-1d", "d^-1", "b^-1d"}},
    {"a^-1", "c^-1a", {"e", "d^-1", "a^-1", "c^-1", "d", "a", "b^-1c", "b^-1"}},
    {"a^-1", "a^-1d", {"e", "d^-1", "a^-1", "c^-1", "b", "d", "c^-1a"}},
    {"a^-1", "b^-1c", {"e", "a^-1", "c^-1", "a", "c", "a^-1d^-1b", "d^-1", "b^-1"}},
    {"a^-1", "a^-1da", {"e", "b", "d", "a", "c^-1ac", "d^-1", "a^-1", "c^-1"}},
    {"a^-1", "b^-1cb", {"e", "a", "c", "b", "a^-1d^-1bd", "a^-1", "d^-1", "c^-1"}},
    {"a^-1", "c^-1ac", {"e", "d", "a", "c", "b^-1cb", "d^-1", "a^-1", "c^-1"}},
    {"a^-1", "a^-1d^-1a", {"e", "b^-1", "d^-1", "a^-1", "c^-1a^-1c", "c^-1"}},
    {"a^-1", "d^-1b^-1d", {"e", "a^-1", "c^-1", "b^-1", "d^-1", "a^-1d^-1a"}},
    {"a^-1", "b^-1c^-1b", {"e", "a^-1", "c^-1", "b^-1", "d^-1", "d^-1b^-1d"}},
    {"a^-1", "c^-1a^-1c", {"e", "d^-1", "a^-1", "c^-1", "b^-1c^-1b"}},
    {"a^-1", "a^-1bd", {"e", "d^-1", "a^-1", "b", "c^-1b", "d", "c^-1da", "c^-1"}},
    {"a^-1", "b^-1ac", {"e", "d", "c^-1a", "a^-1", "c^-1", "a", "c", "a^-1d^-1cb", "d^-1", "b^-1"}},
    {"a^-1", "c^-1da", {"e", "a^-1", "c^-1", "b", "d", "c^-1d", "d^-1", "a", "a^2", "b^-1ac", "b^-1"}},
    {"a^-1", "d^-1b^-1a", {"e", "b^-1", "d^-1", "a^-1", "c^-1", "a^-1c", "a^-1d^-1c"}},
    {"a^-1", "b^-1c^-1d", {"e", "a^-1", "c^-1", "b^-1", "d^-1", "d", "a", "d^-1b^-1a"}},
    {"a^-1", "c^-1a^-1b", {"e", "d^-1", "a^-1", "c^-1", "b", "d", "b^-1c^-1d"}},
    {"a^-1", "a^-1d^-1c", {"e", "d^-1", "a^-1", "b", "c^-1b", "a^-2", "c^-1a^-1b", "b^-1"}},
    {"a^-1", "a^-1cb", {"e", "a", "c", "b", "d^-1", "a^-1", "c^-1b", "c^-1bd", "d"}},
    {"a^-1", "b^-1da", {"e", "d", "c^-1a", "d^-1", "a", "a^-1d^-1ac", "b^-1", "c", "a^-1", "c^-1"}},
    {"a^-1", "c^-1bd", {"e", "b", "a^-1d", "a^-1", "c^-1", "d", "c^-1d", "b^-1da", "a"}},
    {"a^-1", "b^-1c^-1a", {"e", "a^-1", "c^-1", "b^-1", "d^-1", "a^-1d^-1", "d", "a", "d^-1b^-1c"}},
    {"a^-1", "c^-1a^-1d", {"e", "d^-1", "a^-1", "c^-1", "b^-1", "b", "d", "b^-1c^-1a"}},
    {"a^-1", "a^-1d^-1b", {"e", "d^-1", "a^-1", "b", "c^-1b", "c^-1", "c^-1a^-1d", "a^-2"}},
    {"a^-1", "d^-1b^-1c", {"e", "a^-1", "c^-1", "d^-1", "a^-2", "c^-1a^-1", "a^-1c", "a^-1d^-1b", "b^-1"}},
    {"a^-1", "a^-1d^-1bd", {"e", "d^-1", "a^-1", "b", "c^-1b", "d", "c^-1a^-1da", "c^-1"}},
    {"a^-1", "d^-1b^-1cb", {"e", "a", "c", "b", "d^-1", "a^-1c", "a^-1d^-1bd", "a^-1", "c^-1", "a^-2", "c^-1a^-1", "b^-1"}},
    {"a^-1", "b^-1c^-1ac", {"e", "d", "a", "c", "d^-1b^-1cb", "d^-1", "b^-1", "a^-1", "c^-1", "a^-1d^-1"}},
    {"a^-1", "c^-1a^-1da", {"e", "b", "d", "a", "b^-1c^-1ac", "b^-1", "a^-1", "c^-1", "d^-1"}},
    {"a^-1", "d^-1b^-1da", {"e", "b^-1", "d^-1", "d", "c^-1a", "a^-1", "c^-1", "a", "a^-1d^-1ac", "a^-1c"}},
    {"a^-1", "b^-1c^-1bd", {"e", "a^-1", "c^-1", "b^-1", "b", "d", "c^-1d", "d^-1", "d^-1b^-1da", "a"}},
    {"a^-1", "c^-1a^-1cb", {"e", "d^-1", "a^-1", "b", "c^-1b", "c^-1", "b^-1c^-1bd", "d"}},
    {"a^-1", "a^-1d^-1ac", {"e", "d^-1", "a^-1", "a", "c", "c^-1a^-1cb", "b", "b^-1", "c^-1b"}},
    {"a^-1", "a^-1d^-1cb", {"e", "a", "c", "b", "d^-1", "a^-1", "c^-1b", "c^-1a^-1bd", "a^-2"}},
    {"a^-1", "d^-1b^-1ac", {"e", "a^-1", "c^-1", "a", "c", "d^-1", "a^-1c", "a^-1d^-1cb", "b^-1"}},
    {"a^-1", "b^-1c^-1da", {"e", "d^-1", "a^-1", "c^-1", "d", "a", "a^2", "d^-1b^-1ac", "b^-1"}},
    {"a^-1", "c^-1a^-1bd", {"e", "d^-1", "a^-1", "c^-1", "b", "d", "b^-1c^-1da"}},
    {"a^-1", "a^-2", {"e", "d^-1", "a^-1", "c^-1"}},
    {"b^-1", "a^-1", {"e", "b^-1", "d^-1", "a^-1", "c^-1", "b^-1c^-1"}},
    {"b^-1", "b^-1", {"e", "a^-1", "c^-1", "b^-1", "d^-1"}},
    {"b^-1", "d^-1", {"e", "a^-1", "c^-1", "b^-1", "d^-1"}},
    {"b^-1", "a^-1d^-1", {"e", "b^-1", "d^-1", "a^-1", "b^-1c^-1", "c^-1", "a^-2", "c^-1a^-1"}},
    {"b^-1", "d^-1b^-1", {"e", "a^-1", "c^-1", "b^-1", "d^-1", "a^-1d^-1"}},
    {"b^-1", "b^-1c^-1", {"e", "a^-1", "c^-1", "b^-1", "d^-1", "d^-1b^-1"}},
    {"b^-1", "c^-1a^-1", {"e", "b^-1", "d^-1", "a^-1", "c^-1", "d^-1b^-1", "b^-1c^-1"}},
    {"b^-1", "a^-1b", {"e", "a", "c", "d^-1b", "d^-1", "b^-1", "b", "d", "a^-1", "c^-1", "b^-1c^-1d"}},
    {"b^-1", "d^-1c", {"e", "d^-1", "a^-1", "a", "d^-1c", "b^-1", "b", "a^-1b"}},
    {"b^-1", "b^-1a", {"e", "b^-1", "d^-1", "a", "d^-1a", "c", "d^-1c", "a^-1", "c^-1"}},
    {"b^-1", "a^-1c", {"e", "a", "c", "d^-1b", "d^-1", "b^-1", "a^-1", "c^-1", "b^-1c^-1b"}},
    {"b^-1", "d^-1a", {"e", "b^-1", "d^-1", "a", "d^-1c", "a^-1c", "a^-1", "c^-1"}},
    {"b^-1", "b^-1d", {"e", "a^-1", "c^-1", "b^-1", "d^-1", "a", "d^-1a"}},
    {"b^-1", "a^-1d", {"e", "b^-1", "d^-1", "b", "d", "b^-1c^-1a", "a^-1", "c^-1"}},
    {"b^-1", "d^-1b", {"e", "b^-1", "d^-1", "b", "a^-1d", "a^-1"}},
    {"b^-1", "b^-1c", {"e", "a^-1", "c^-1", "b^-1", "d^-1", "a", "c", "d^-1b"}},
    {"b^-1", "a^-1da", {"e", "b", "d", "a", "b^-1c^-1ac", "b^-1", "a^-1", "c^-1", "d^-1"}},
    {"b^-1", "d^-1bd", {"e", "b", "d", "a^-1da", "b^-1", "d^-1"}},
    {"b^-1", "b^-1cb", {"e", "a", "c", "b", "d^-1bd", "b^-1", "d^-1"}},
    {"b^-1", "a^-1d^-1a", {"e", "b^-1", "d^-1", "a^-1", "c^-1a^-1c", "c^-1"}},
    {"b^-1", "d^-1b^-1d", {"e", "a^-1", "c^-1", "b^-1", "d^-1", "a^-1d^-1a"}},
    {"b^-1", "b^-1c^-1b", {"e", "a^-1", "c^-1", "b^-1", "d^-1", "d^-1b^-1d"}},
    {"b^-1", "c^-1a^-1c", {"e", "b^-1", "d^-1", "a^-1", "c^-1", "b^-1c^-1b"}},
    {"b^-1", "a^-1bd", {"e", "a", "c", "d^-1b", "d^-1", "b^-1", "b", "d", "b^-1c^-1da", "a^-1", "c^-1"}},
    {"b^-1", "d^-1cb", {"e", "a", "c", "b", "d^-1", "d^-1c", "b^-1", "a^-1bd", "a^-1"}},
    {"b^-1", "b^-1ac", {"e", "b^-1", "a", "d^-1a", "c", "d^-1cb", "d^-1", "a^-1", "c^-1"}},
    {"b^-1", "d^-1b^-1a", {"e", "b^-1", "d^-1", "a", "c", "a^-1d^-1c", "a^-1", "c^-1"}},
    {"b^-1", "b^-1c^-1d", {"e", "a^-1", "c^-1", "b^-1", "d^-1", "a", "d^-1a", "d^-1b^-1a"}},
    {"b^-1", "c^-1a^-1b", {"e", "b^-1", "d^-1", "a^-1", "c^-1", "d", "b^-1d", "b^-1c^-1d"}},
    {"b^-1", "a^-1d^-1c", {"e", "a", "c", "d^-1b", "d^-1", "b^-1", "a^-1", "c^-1b", "a^-2", "c^-1a^-1b"}},
    {"b^-1", "a^-1cb", {"e", "a", "c", "d^-1b", "d^-1", "a^-1", "c^-1", "b", "b^-1c^-1bd", "d"}},
    {"b^-1", "d^-1ac", {"e", "a", "b^-1c", "d^-1", "d^-1c", "a^-1cb", "b", "b^-1"}},
    {"b^-1", "b^-1da", {"e", "b^-1", "d^-1", "d", "a", "d^-1a", "a^2", "d^-1ac", "c", "a^-1", "c^-1"}},
    {"b^-1", "b^-1c^-1a", {"e", "b^-1", "d^-1", "a", "d^-1a", "d^-1b^-1c", "a^-1", "c^-1"}},
    {"b^-1", "c^-1a^-1d", {"e", "b^-1", "d^-1", "a^-1", "c^-1", "d^-1b^-1", "d", "b^-1d", "b^-1c^-1a"}},
    {"b^-1", "a^-1d^-1b", {"e", "a", "c", "d^-1b", "d^-1", "b^-1", "a^-1", "b^-1c^-1", "c^-1b", "c^-1a^-1d", "a^-2"}},
    {"b^-1", "d^-1b^-1c", {"e", "a^-1", "c^-1", "b^-1", "d^-1", "a", "c", "a^-1d^-1b"}},
    {"b^-1", "a^-1d^-1bd", {"e", "a", "c", "d^-1b", "d^-1", "b^-1", "b", "d", "a^-1", "c^-1b", "c^-1a^-1da", "b^-1c^-1"}},
    {"b^-1", "d^-1b^-1cb", {"e", "a", "c", "b", "a^-1d^-1bd", "a^-1", "d^-1", "b^-1"}},
    {"b^-1", "b^-1c^-1ac", {"e", "b^-1", "a", "d^-1a", "c", "d^-1b^-1cb", "d^-1", "a^-1", "c^-1"}},
    {"b^-1", "c^-1a^-1da", {"e", "a^-1", "c^-1", "d", "b^-1d", "a", "b^-1c^-1ac", "b^-1", "d^-1", "d^-1b^-1"}},
    {"b^-1", "d^-1b^-1da", {"e", "b^-1", "d^-1", "a", "d^-1a", "a^-1d^-1ac", "c", "a^-1", "c^-1"}},
    {"b^-1", "b^-1c^-1bd", {"e", "a^-1", "c^-1", "b^-1", "d", "d^-1b^-1da", "a", "d^-1a"}},
    {"b^-1", "c^-1a^-1cb", {"e", "a", "c", "d^-1b", "d^-1", "b^-1", "a^-1", "c^-1", "b", "b^-1c^-1bd", "d", "b^-1d"}},
    {"b^-1", "a^-1d^-1ac", {"e", "d^-1", "a^-1", "a", "b^-1c", "b^-1", "c^-1a^-1cb", "c^-1b", "c", "d^-1b"}},
    {"b^-1", "a^-1d^-1cb", {"e", "a", "c", "d^-1b", "d^-1", "b^-1", "b", "a^-1", "c^-1b", "c^-1a^-1bd", "a^-2"}},
    {"b^-1", "d^-1b^-1ac", {"e", "b^-1", "d^-1", "a", "c", "a^-1d^-1cb", "a^-1", "c^-1"}},
    {"b^-1", "b^-1c^-1da", {"e", "b^-1", "d^-1", "d", "a", "d^-1a", "a^2", "d^-1b^-1ac", "a^-1", "c^-1"}},
    {"b^-1", "c^-1a^-1bd", {"e", "b^-1", "d^-1", "b", "d", "a^-1", "c^-1", "b^-1d", "b^-1c^-1da"}},
    {"b^-1", "a^2", {"e", "d", "a", "b^-1c", "b^-1", "d^-1", "c", "d^-1c"}},
    {"b^-1", "a^-2", {"e", "d^-1", "a^-1", "c^-1", "b^-1", "b^-1c^-1"}},
    {"c^-1", "b^-1", {"e", "a^-1", "c^-1", "b^-1", "d^-1"}},
    {"c^-1", "d^-1", {"e", "a^-1", "c^-1", "b^-1", "d^-1", "a^-2", "c^-1a^-1"}},
    {"c^-1", "c^-1", {"e", "a^-1", "c^-1", "b^-1"}},
    {"c^-1", "a^-1d^-1", {"e", "a^-1", "c^-1", "b^-1", "d^-1", "b^-1c^-1", "a^-2", "c^-1a^-1"}},
    {"c^-1", "d^-1b^-1", {"e", "a^-1", "c^-1", "b^-1", "d^-1", "a^-2", "c^-1a^-1", "a^-1d^-1"}},
    {"c^-1", "b^-1c^-1", {"e", "a^-1", "c^-1", "b^-1", "d^-1", "d^-1b^-1"}},
    {"c^-1", "c^-1a^-1", {"e", "a^-1", "c^-1", "b^-1", "d^-1", "b^-1c^-1"}},
    {"c^-1", "d^-1c", {"e", "d^-1", "a^-1", "a", "b^-1c", "b^-1", "b", "a^-2", "c^-1a^-1b"}},
    {"c^-1", "b^-1a", {"e", "b^-1", "d^-1", "d", "a", "b^-1a", "a^-1", "c^-1", "c", "d^-1c"}},
    {"c^-1", "c^-1d", {"e", "a^-1", "c^-1", "b^-1", "d", "b^-1d", "a", "b^-1a"}},
    {"c^-1", "d^-1a", {"e", "b^-1", "d^-1", "a", "b^-1c", "a^-1", "c^-1a^-1c", "c^-1"}},
    {"c^-1", "b^-1d", {"e", "a^-1", "c^-1", "b^-1", "d", "a", "b^-1a", "d^-1a"}},
    {"c^-1", "c^-1b", {"e", "a^-1", "c^-1", "b^-1", "d", "b^-1d"}},
    {"c^-1", "c^-1a", {"e", "a^-1", "c^-1", "b^-1", "d", "a", "b^-1c"}},
    {"c^-1", "d^-1b", {"e", "b^-1", "b", "c^-1a^-1d", "a^-2", "d^-1", "a^-1"}},
    {"c^-1", "b^-1c", {"e", "a^-1", "c^-1", "b^-1", "a", "c", "d^-1b", "d^-1"}},
    {"c^-1", "d^-1bd", {"e", "b", "d", "c^-1a^-1da", "a^-1", "b^-1"}},
    {"c^-1", "b^-1cb", {"e", "a", "c", "b", "d^-1bd", "a^-1", "c^-1", "b^-1"}},
    {"c^-1", "c^-1ac", {"e", "d", "a", "c", "b^-1cb", "a^-1", "c^-1", "b^-1"}},
    {"c^-1", "a^-1d^-1a", {"e", "b^-1", "d^-1", "a^-1", "c^-1a^-1c", "c^-1"}},
    {"c^-1", "d^-1b^-1d", {"e", "a^-1", "c^-1", "b^-1", "d^-1", "a^-1d^-1a"}},
    {"c^-1", "b^-1c^-1b", {"e", "a^-1", "c^-1", "b^-1", "d^-1b^-1d"}},
    {"c^-1", "c^-1a^-1c", {"e", "a^-1", "c^-1", "b^-1", "d^-1", "b^-1c^-1b"}},
    {"c^-1", "d^-1cb", {"e", "a", "c", "b", "b^-1c", "b^-1", "c^-1a^-1bd", "a^-2", "d^-1", "a^-1"}},
    {"c^-1", "b^-1ac", {"e", "b^-1", "d", "a", "b^-1a", "a^-1", "c^-1", "c", "d^-1cb", "d^-1"}},
    {"c^-1", "c^-1da", {"e", "a^-1", "c^-1", "d", "b^-1d", "a", "a^2", "b^-1ac", "b^-1"}},
    {"c^-1", "d^-1b^-1a", {"e", "b^-1", "d^-1", "a^-1", "c^-1", "a", "c", "a^-1d^-1c"}},
    {"c^-1", "b^-1c^-1d", {"e", "a^-1", "c^-1", "b^-1", "d", "a", "d^-1b^-1a"}},
    {"c^-1", "c^-1a^-1b", {"e", "a^-1", "c^-1", "b^-1", "d", "b^-1d", "b^-1c^-1d", "d^-1"}},
    {"c^-1", "a^-1d^-1c", {"e", "d^-1", "a^-1", "b^-1", "c^-1b", "a^-2", "c^-1a^-1b"}},
    {"c^-1", "d^-1ac", {"e", "a", "b^-1c", "a^-1", "c^-1a^-1cb", "d^-1", "b", "b^-1"}},
    {"c^-1", "b^-1da", {"e", "d", "c^-1a", "b^-1", "a", "b^-1a", "a^2", "d^-1ac", "c", "a^-1", "c^-1"}},
    {"c^-1", "c^-1bd", {"e", "a^-1", "c^-1", "b^-1", "b", "d", "b^-1d", "b^-1da", "a"}},
    {"c^-1", "b^-1c^-1a", {"e", "a^-1", "c^-1", "b^-1", "d^-1", "d", "a", "d^-1b^-1c"}},
    {"c^-1", "c^-1a^-1d", {"e", "a^-1", "c^-1", "b^-1", "d", "b^-1d", "b^-1c^-1a"}},
    {"c^-1", "a^-1d^-1b", {"e", "b^-1", "a^-1", "b^-1c^-1", "c^-1b", "c^-1a^-1d", "a^-2", "d^-1"}},
    {"c^-1", "d^-1b^-1c", {"e", "a^-1", "c^-1", "b^-1", "d^-1", "a^-2", "c^-1a^-1", "a", "c", "a^-1d^-1b"}},
    {"c^-1", "a^-1d^-1bd", {"e", "b", "d", "a^-1", "c^-1b", "c^-1a^-1da", "b^-1", "b^-1c^-1", "d^-1"}},
    {"c^-1", "d^-1b^-1cb", {"e", "a", "c", "b", "a^-1d^-1bd", "a^-1", "d^-1", "b^-1", "a^-2", "c^-1a^-1"}},
    {"c^-1", "b^-1c^-1ac", {"e", "d", "a", "c", "d^-1b^-1cb", "d^-1", "b^-1", "a^-1", "c^-1"}},
    {"c^-1", "c^-1a^-1da", {"e", "a^-1", "c^-1", "d", "b^-1d", "a", "b^-1c^-1ac", "b^-1"}},
    {"c^-1", "d^-1b^-1da", {"e", "b^-1", "d^-1", "d", "a", "b^-1a", "a^-1", "c^-1", "a^-1d^-1ac", "c"}},
    {"c^-1", "b^-1c^-1bd", {"e", "a^-1", "c^-1", "b^-1", "d", "b^-1d", "d^-1b^-1da", "a"}},
    {"c^-1", "c^-1a^-1cb", {"e", "a^-1", "c^-1", "b", "b^-1c^-1bd", "d", "d^-1", "b^-1d"}},
    {"c^-1", "a^-1d^-1ac", {"e", "d^-1", "a^-1", "a", "b^-1c", "b^-1", "c^-1a^-1cb", "c^-1b"}},
    {"c^-1", "a^-1d^-1cb", {"e", "a", "c", "b", "b^-1", "a^-1", "c^-1b", "c^-1a^-1bd", "a^-2", "d^-1"}},
    {"c^-1", "d^-1b^-1ac", {"e", "a^-1", "c^-1", "b^-1", "a", "c", "a^-1d^-1cb", "d^-1"}},
    {"c^-1", "b^-1c^-1da", {"e", "a^-1", "c^-1", "b^-1", "d", "a", "a^2", "d^-1b^-1ac"}},
    {"c^-1", "c^-1a^-1bd", {"e", "a^-1", "c^-1", "b^-1", "b", "d", "b^-1d", "b^-1c^-1da"}},
    {"c^-1", "a^2", {"e", "d", "a", "b^-1c", "b^-1"}},
    {"c^-1", "a^-2", {"e", "d^-1", "a^-1", "c^-1", "b^-1", "b^-1c^-1"}},
    {"d^-1", "a^-1", {"e", "b^-1", "d^-1", "a^-1", "c^-1"}},
    {"d^-1", "d^-1", {"e", "b^-1", "d^-1", "a^-1"}},
    {"d^-1", "c^-1", {"e", "a^-1", "c^-1", "b^-1", "d^-1", "d^-1b^-1"}},
    {"d^-1", "a^-1d^-1", {"e", "b^-1", "d^-1", "a^-1", "c^-1", "a^-2", "c^-1a^-1"}},
    {"d^-1", "d^-1b^-1", {"e", "a^-1", "c^-1", "b^-1", "d^-1", "a^-1d^-1"}},
    {"d^-1", "b^-1c^-1", {"e", "a^-1", "c^-1", "b^-1", "d^-1", "a^-1d^-1", "d^-1b^-1"}},
    {"d^-1", "c^-1a^-1", {"e", "d^-1", "a^-1", "c^-1", "b^-1", "d^-1b^-1", "b^-1c^-1"}},
    {"d^-1", "a^-1b", {"e", "d^-1", "a^-1", "a", "c", "b", "a^-1b", "b^-1", "d", "c^-1", "c^-1d"}},
    {"d^-1", "d^-1c", {"e", "a", "c", "b", "d^-1", "a^-1", "a^-1c", "a^-1b", "b^-1"}},
    {"d^-1", "c^-1d", {"e", "a^-1", "c^-1", "b^-1", "b", "a^-1d", "d^-1", "d", "a", "d^-1b^-1a"}},
    {"d^-1", "a^-1c", {"e", "d^-1", "a^-1", "a", "c", "b", "a^-1b", "b^-1", "c^-1b"}},
    {"d^-1", "d^-1a", {"e", "b^-1", "d^-1", "a^-1", "a^-1c"}},
    {"d^-1", "c^-1b", {"e", "b", "a^-1d", "a^-1", "d^-1", "c^-1", "b^-1", "d^-1b^-1d"}},
    {"d^-1", "c^-1a", {"e", "d^-1", "a^-1", "d", "a", "d^-1b^-1c", "b^-1", "c^-1"}},
    {"d^-1", "a^-1d", {"e", "b^-1", "d^-1", "a^-1", "b", "d", "c^-1a", "c^-1"}},
    {"d^-1", "d^-1b", {"e", "a", "c", "b", "b^-1", "d^-1", "a^-1", "a^-1d"}},
    {"d^-1", "a^-1da", {"e", "b", "d", "a", "c^-1ac", "b^-1", "d^-1", "a^-1"}},
    {"d^-1", "d^-1bd", {"e", "a", "c", "b", "d", "a^-1da", "d^-1", "a^-1"}},
    {"d^-1", "c^-1ac", {"e", "d", "a", "c", "d^-1b^-1cb", "d^-1", "b^-1", "a^-1"}},
    {"d^-1", "a^-1d^-1a", {"e", "b^-1", "d^-1", "a^-1", "c^-1a^-1c"}},
    {"d^-1", "d^-1b^-1d", {"e", "a^-1", "c^-1", "b^-1", "d^-1", "a^-1d^-1a"}},
    {"d^-1", "b^-1c^-1b", {"e", "a^-1", "c^-1", "b^-1", "d^-1", "d^-1b^-1d"}},
    {"d^-1", "c^-1a^-1c", {"e", "b^-1", "d^-1", "a^-1", "c^-1", "b^-1c^-1b"}},
    {"d^-1", "a^-1bd", {"e", "d^-1", "a^-1", "a", "c", "b", "a^-1b", "b^-1", "d", "c^-1da", "c^-1"}},
    {"d^-1", "d^-1cb", {"e", "a", "c", "b", "d^-1", "a^-1c", "a^-1bd", "a^-1", "b^-1"}},
    {"d^-1", "c^-1da", {"e", "b", "a^-1d", "a^-1", "d^-1", "d", "a", "a^2", "d^-1b^-1ac", "b^-1", "c^-1"}},
    {"d^-1", "d^-1b^-1a", {"e", "b^-1", "d^-1", "a^-1", "a^-1c", "a^-1d^-1c", "c^-1"}},
    {"d^-1", "b^-1c^-1d", {"e", "a^-1", "c^-1", "b^-1", "d^-1", "a", "d^-1a", "d^-1b^-1a"}},
    {"d^-1", "c^-1a^-1b", {"e", "b^-1", "d^-1", "a^-1", "b", "d", "c^-1", "b^-1c^-1d"}},
    {"d^-1", "a^-1d^-1c", {"e", "d^-1", "a^-1", "a", "c", "b", "a^-1b", "b^-1", "a^-2", "c^-1a^-1b"}},
    {"d^-1", "a^-1cb", {"e", "a", "c", "d^-1b", "d^-1", "a^-1", "b", "a^-1b", "c^-1bd", "d"}},
    {"d^-1", "d^-1ac", {"e", "d^-1", "a^-1", "a", "c", "a^-1c", "a^-1cb", "b", "b^-1"}},
    {"d^-1", "c^-1bd", {"e", "b", "a^-1d", "a^-1", "b^-1", "d", "d^-1b^-1da", "a", "c^-1"}},
    {"d^-1", "b^-1c^-1a", {"e", "d^-1", "a^-1", "b^-1", "a^-1d^-1", "a", "d^-1a", "d^-1b^-1c", "c^-1"}},
    {"d^-1", "c^-1a^-1d", {"e", "d^-1", "a^-1", "c^-1", "b^-1", "d^-1b^-1", "b", "d", "b^-1c^-1a"}},
    {"d^-1", "a^-1d^-1b", {"e", "d^-1", "a^-1", "a", "c", "b", "a^-1b", "b^-1", "c^-1", "c^-1a^-1d", "a^-2"}},
    {"d^-1", "d^-1b^-1c", {"e", "d^-1", "a^-1", "a^-1c", "a^-1d^-1b", "b^-1"}},
    {"d^-1", "a^-1d^-1bd", {"e", "d^-1", "a^-1", "a", "c", "b", "a^-1b", "b^-1", "d", "c^-1a^-1da", "c^-1"}},
    {"d^-1", "d^-1b^-1cb", {"e", "a", "c", "b", "d^-1", "a^-1c", "a^-1d^-1bd", "a^-1", "b^-1"}},
    {"d^-1", "b^-1c^-1ac", {"e", "b^-1", "a", "d^-1a", "c", "d^-1b^-1cb", "d^-1", "a^-1", "a^-1d^-1", "c^-1"}},
    {"d^-1", "c^-1a^-1da", {"e", "b", "d", "a", "b^-1c^-1ac", "b^-1", "a^-1", "c^-1", "d^-1", "d^-1b^-1"}},
    {"d^-1", "d^-1b^-1da", {"e", "b^-1", "d^-1", "a", "a^-1d^-1ac", "a^-1c", "a^-1", "c^-1"}},
    {"d^-1", "b^-1c^-1bd", {"e", "a^-1", "c^-1", "b^-1", "b", "a^-1d", "d^-1", "d", "d^-1b^-1da", "a", "d^-1a"}},
    {"d^-1", "c^-1a^-1cb", {"e", "d^-1", "a^-1", "a", "c", "b", "a^-1b", "b^-1", "c^-1", "b^-1c^-1bd", "d"}},
    {"d^-1", "a^-1d^-1ac", {"e", "d^-1", "a^-1", "a", "c", "c^-1a^-1cb", "b", "b^-1", "a^-1b"}},
    {"d^-1", "a^-1d^-1cb", {"e", "a", "c", "d^-1b", "d^-1", "a^-1", "b", "a^-1b", "c^-1a^-1bd", "a^-2"}},
    {"d^-1", "d^-1b^-1ac", {"e", "d^-1", "a^-1", "a", "c", "a^-1c", "a^-1d^-1cb", "b^-1"}},
    {"d^-1", "b^-1c^-1da", {"e", "d^-1", "a^-1", "d", "a", "b^-1", "d^-1a", "a^2", "d^-1b^-1ac", "c^-1"}},
    {"d^-1", "c^-1a^-1bd", {"e", "b^-1", "d^-1", "a^-1", "b", "d", "b^-1c^-1da", "c^-1"}},
    {"d^-1", "a^2", {"e", "d", "a", "c", "b^-1", "d^-1", "a^-1c"}},
    {"d^-1", "a^-2", {"e", "d^-1", "a^-1", "c^-1", "b^-1"}},
  };
  return rows;
}

// Portrait rows: word expression, level, and the published level-n section
// tuple in lexicographic vertex order. Rows are replayed verbatim; the
// verifier reports which rows the engine reproduces.
struct PortraitRow {
  const char* word;
  int level;
  std::vector<const char*> sections;
};

inline const std::vector<PortraitRow>& portrait_rows() {
  static const std::vector<PortraitRow> rows = {
    {"b^-1c^2b", 4, {"e", "e", "a", "c", "e", "e", "a", "c", "a", "b^-1cb", "e", "e", "a", "b^-1cb", "e", "e"}},
    {"(c^4)^b", 4, {"e", "e", "a^2", "c^2", "e", "e", "a^2", "c^2", "a^2", "(c^2)^b", "e", "e", "a^2", "(c^2)^b", "e", "e"}},
    {"(b^2)^c", 4, {"e", "e", "a", "c", "e", "e", "a", "c", "e", "b", "e", "b^c", "e", "b", "e", "b"}},
    {"bcbc^-1", 3, {"e", "b", "e", "b", "d", "d", "bd", "db^-1"}},
    {"[c,b^-1]", 3, {"e", "e", "e", "e", "e", "e", "d^-1b^-1", "b"}},
    {"[ac,ac^-1]", 4, {"e", "e", "e", "[c,a]", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e"}},
    {"[ac,c^2]", 4, {"e", "e", "e", "[a,c]^c", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e"}},
    {"[a^2,da]", 4, {"e", "e", "e", "e", "e", "e", "[a,d]^a", "e", "e", "e", "e", "e", "e", "e", "e", "e"}},
    {"[c,b^2]", 4, {"e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "[c,b]", "e", "e", "e", "e"}},
    {"[b,d^2]", 4, {"e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "[b,d]", "e", "e"}},
    {"[d,a^2]", 4, {"e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "[d,a]", "e"}},
    {"(b^-1c)^2", 3, {"e", "e", "e", "e", "d^-1", "d^-1b", "d^-1b", "d^-1"}},
    {"a^2", 3, {"e", "e", "a", "c", "e", "e", "a", "c"}},
    {"(db^-1)^2", 3, {"e", "b^-1", "e", "b^-1", "e", "e", "ad^-1a", "a^2d^-1"}},
    {"ba^2b^-1", 3, {"a", "c", "e", "e", "e", "e", "c", "dad^-1"}},
    {"db^-1db", 3, {"e", "e", "e", "e", "d", "d", "ad^-1ad", "a^2"}},
    {"[b,d]", 3, {"e", "e", "e", "e", "e", "e", "[d,a]", "e"}},
    {"[b,d^-1]", 3, {"e", "e", "e", "e", "e", "e", "[d,a^-1]", "e"}},
    {"[b^-1,d]", 3, {"e", "e", "e", "e", "e", "e", "[d^-1,a]", "e"}},
    {"[b^-1,d^-1]", 3, {"e", "e", "e", "e", "e", "e", "[d^-1,a^-1]", "e"}},
    {"b^2", 4, {"e", "e", "a", "c", "e", "e", "a", "c", "e", "b", "e", "b", "e", "b", "e", "b"}},
    {"(c^2)^b", 4, {"e", "e", "a", "c", "e", "e", "a", "c", "a", "c", "e", "e", "a", "c", "e", "e"}},
    {"c^2", 4, {"e", "e", "a", "c", "e", "e", "a", "c", "e", "e", "a", "c", "e", "e", "a", "c"}},
    {"b^2", 4, {"e", "e", "a", "c", "e", "e", "a", "c", "c^2", "a^2", "d", "d", "e", "b", "e", "b"}},
    {"(c^2)^(a^-1)", 4, {"e", "e", "a", "c", "e", "e", "a", "c", "c^2", "a^2", "d", "d", "b", "e", "e", "b^(a^-1)"}},
    {"(b^2)^(a^-1)", 4, {"c^2", "a^2", "d", "d", "e", "b", "e", "b", "e", "e", "a", "c", "e", "e", "a^(c^-1)", "c^(a^-1)"}},
    {"d^2", 5, {"e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "a", "c", "e", "e", "a", "c", "c^2", "a^2", "d", "d", "e", "b", "e", "b"}},
    {"a^4", 6, {"e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "a", "c", "e", "e", "a", "c", "c^2", "a^2", "d", "d", "e", "b", "e", "b", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "a", "c", "e", "e", "a", "c", "c^2", "a^2", "d", "d", "e", "b", "e", "b"}},
    {"[c^2,a^-1]", 5, {"e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "[a,d^-1]", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e"}},
    {"[c^-2,a^-1]", 5, {"e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "[a^-1,d^-1]", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", "e"}},
  };
  return rows;
}

// Relator expressions (every one should be the identity element). Sign
// variants are expanded; repeated entries in the source list are collapsed.
inline const std::vector<const char*>& relator_expressions() {
  static const std::vector<const char*> relators = {
      "[d,d^a]",
      "[d,d^(a^-1)]",
      "[a^2,a^c]",
      "[a^2,a^(c^-1)]",
      "[bc^-1,d^a]",
      "[bc^-1,d^(a^-1)]",
      "[c^2,c^b]",
      "[c^2,c^(b^-1)]",
      "[d^2,d^a]",
      "[d^2,d^(a^-1)]",
      "[b^-1c,d^a]",
      "[b^-1c,d^(a^-1)]",
      "[d^(a^-1),d^b]",
      "[d^(a^-1),d^(b^-1)]",
      "[d^(a^-1),bdc^-1]",
      "[d^(a^-1),bc^-1d]",
      "[d^(a^-1),bc^-1d^-1]",
      "[d^(a^-1),bd^-1c]",
      "[d^(a^-1),bd^-1c^-1]",
      "[d^(a^-1),d^c]",
      "[d^(a^-1),d^(c^-1)]",
      "[d^(a^-1),dc^-1b]",
      "[d^(a^-1),b^-1cd]",
      "[d^(a^-1),b^-1dc]",
      "[d^(a^-1),b^-1d^-1c]",
      "[d^(a^-1),c^-1bd]",
      "[d^b,d^(a^-1)]",
      "[d^(b^-1),d^a]",
      "[bdc^-1,d^a]",
      "[bd^-1c^-1,d^a]",
      "[d^c,d^a]",
      "[d^(c^-1),d^a]",
      "[cb^-1d,d^a]",
      "[cb^-1d^-1,d^a]",
      "[db^-1c,d^a]",
      "[dc^-1b,d^a]",
      "[d^a,d^b]",
      "[d^a,b^-1dc]",
      "[d^a,b^-1d^-1c]",
      "[d^a,d^3]",
      "[d^(a^-1),d^3]",
      "[d^(a^-1),db^-1c]",
      "[d^a,b^-1cd]",
      "[d^a,d^c]",
      "[bc^-1d,d^a]",
      "[bc^-1d^-1,d^a]",
      "[d^a,c^-1bd]",
  };
  return relators;
}

// Listed generators of the level-n stabilizer subgroups, n = 1, 2, 3.
struct StabilizerFixture {
  int level;
  std::vector<const char*> generators;
};

inline const std::vector<StabilizerFixture>& stabilizer_fixtures() {
  static const std::vector<StabilizerFixture> fixtures = {
      {1,
       {"b", "c", "d", "a^2", "aca", "ac^-1a",
        "aba", "ab^-1a", "ada", "ad^-1a"}},
      {2,
       {"d", "a^2", "b^2", "c^2", "ada", "ad^-1a",
        "bdb", "bd^-1b", "cdc", "cd^-1c", "ab^2a", "ab^-2a",
        "cb^2c", "cb^-2c", "ba^2b", "ba^-2b", "ca^2c", "ca^-2c",
        "ad^2a", "ad^-2a", "cd^2c", "cd^-2c", "bc^2b", "bc^-2b",
        "bd^2b", "bd^-2b", "[a,c]", "[a,c^-1]", "[a,d]", "[a,d^-1]",
        "[b,c]", "[b,c^-1]", "[b,d]", "[b,d^-1]", "[c,d]", "[c,d^-1]"}},
      {3,
       {"a^2", "b^2", "c^2", "d^2", "(ac)^2", "(ac^-1)^2",
        "(bc)^2", "(bc^-1)^2", "(bd)^2", "(bd^-1)^2", "[a,c]", "[a,c^-1]",
        "[b,c]", "[b,c^-1]", "[b,d]", "[b,d^-1]"}},
  };
  return fixtures;
}

// Listed generators of the rigid stabilizers of the named vertices.
struct RigidFixture {
  const char* vertex;
  std::vector<const char*> generators;
};

inline const std::vector<RigidFixture>& rigid_fixtures() {
  static const std::vector<RigidFixture> fixtures = {
      {"0",
       {"d^a", "d^(a^-1)"}},
      {"1",
       {"d", "c^-1b", "cb^-1", "bdc^-1", "bc^-1d", "dc^-1b",
        "c^-1db", "cb^-1d^-1", "bd^-1b^-1", "b^-1d^-1c", "cdb^-1", "c^-1d^-1b"}},
      {"00",
       {"[ac,ac^-1]", "[ac,c^2]", "[ac^-1,c^2]"}},
      {"01",
       {"[a,c^2]", "[a^2,da]", "[ad,a^-1d]", "[ca,c^2]", "[ca,a^-1c]"}},
      {"10",
       {"[b,c]", "[b,bc]", "[b,cb]", "[b,dc]", "[b,b^-1c]", "[c,b^2]",
        "[c,cb]", "[b^2,bc]", "[b^2,cb]", "[b^2,dc]", "[b^2,b^-1c]", "[c^2,a^-1c]"}},
      {"11",
       {"[b,d]", "[b,bd]", "[b,bc^-1]", "[b,bd^-1]", "[b,db]", "[b,d^2]",
        "[b,b^-1d]", "[b,c^-1d]", "[c,bc]", "[c,bc^-1]", "[c,b^-1c]", "[d,a^2]",
        "[d,b^2]", "[d,bd]", "[d,bd^-1]", "[d,db]", "[d,b^-1d]", "[a^2,ad]",
        "[a^2,ad^-1]", "[a^2,d^2]", "[a^2,a^-1d]", "[ad^-1,da]", "[b^2,bd]", "[b^2,bc^-1]",
        "[b^2,bd^-1]", "[b^2,db]", "[b^2,d^2]", "[b^2,b^-1d]", "[b^2,c^-1d]", "[bc,b^-1c]",
        "[bd,bd^-1]", "[bd,db]", "[bd,d^2]", "[bd,b^-1d]", "[bc^-1,cb]", "[bd^-1,c^2]",
        "[bd^-1,db]", "[bd^-1,d^2]", "[bd^-1,b^-1d]", "[c^2,b^-1d]", "[db,d^2]", "[db,b^-1d]",
        "[d^2,b^-1d]"}},
  };
  return fixtures;
}

// Trivial-restriction witnesses: word w and vertex v with w|_v = identity.
struct TrivialRestrictionWitness {
  const char* word;
  const char* vertex;
};

inline const std::vector<TrivialRestrictionWitness>&
trivial_restriction_witnesses() {
  static const std::vector<TrivialRestrictionWitness> witnesses = {
      {"a", "1"},
      {"d", "0"},
      {"b", "01"},
      {"c", "11"},
      {"c^-1a^-1bd", "000"},
      {"b^-1c^-1da", "110"},
      {"d^-1b^-1ac", "000"},
      {"a^-1d^-1cb", "111"},
      {"a^-1d^-1ac", "111"},
      {"c^-1a^-1cb", "010"},
      {"b^-1c^-1bd", "000"},
      {"d^-1b^-1da", "000"},
      {"c^-1a^-1da", "001"},
      {"b^-1c^-1ac", "110"},
      {"d^-1b^-1cb", "110"},
      {"a^-1d^-1bd", "000"},
      {"d^-1b^-1c", "000"},
  };
  return witnesses;
}

// First-level self-replication witnesses: for each generator g, a word w
// fixing the first level with w|_x equal to g at the given letter x.
struct SectionWitness {
  const char* generator;
  const char* witness;
  const char* letter;
};

inline const std::vector<SectionWitness>& first_level_section_witnesses() {
  static const std::vector<SectionWitness> witnesses = {
      {"a", "c", "0"},
      {"a^-1", "c^-1", "0"},
      {"b", "d", "1"},
      {"b^-1", "d^-1", "1"},
      {"c", "b", "1"},
      {"c^-1", "b^-1", "1"},
      {"d", "a^2", "1"},
      {"d^-1", "a^-2", "0"},
  };
  return witnesses;
}

// Power laws: generator^(2^n) lies in Stab(in_level) but not in
// Stab(out_level), for n = 1..3 with the listed level offsets.
struct StabilizerPowerLaw {
  const char* generator;
  int in_offset;   // member of Stab(3n + in_offset)
  int out_offset;  // not a member of Stab(3n + out_offset)
};

inline const std::vector<StabilizerPowerLaw>& stabilizer_power_laws() {
  static const std::vector<StabilizerPowerLaw> laws = {
      {"a", 0, 1},
      {"b", 1, 2},
      {"c", 1, 2},
      {"d", 2, 3},
  };
  return laws;
}

// Recorded activity classification of the main preset: the section-growth
// class and the two intersecting state cycles that witness it.
inline constexpr const char* kExpectedActivity = "exponential";

inline const std::vector<const char*>& expected_activity_cycles() {
  static const std::vector<const char*> cycles = {
      "b->a->d->b",
      "b->c->a->d->b",
  };
  return cycles;
}

}  // namespace refdata
}  // namespace selfsim
