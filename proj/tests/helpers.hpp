// Shared test fixtures: lazily constructed engines for the built-in
// machines and terse word builders.
#pragma once

#include <map>
#include <memory>
#include <string>

#include "selfsim/action.hpp"
#include "selfsim/mealy.hpp"
#include "selfsim/wordexpr.hpp"

namespace testing_helpers {

inline const selfsim::WordEngine& engine_for(const std::string& preset) {
  static std::map<std::string, std::unique_ptr<selfsim::WordEngine>> cache;
  auto it = cache.find(preset);
  if (it == cache.end()) {
    it = cache.emplace(preset, std::make_unique<selfsim::WordEngine>(
                                   selfsim::preset_automaton(preset)))
             .first;
  }
  return *it->second;
}

inline const selfsim::WordEngine& pi() { return engine_for("paper-Pi"); }

// Parses an expression over the five-state machine.
inline selfsim::GroupWord W(const std::string& expr) {
  return selfsim::parse_word_expression(pi().machine(), expr);
}

// Renders a word over the five-state machine.
inline std::string S(const selfsim::GroupWord& w) {
  return selfsim::word_to_string(pi().machine(), w);
}

inline selfsim::Vertex V(const std::string& digits) {
  return selfsim::vertex_from_string(digits, 2);
}

}  // namespace testing_helpers
