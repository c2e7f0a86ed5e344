#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace selfsim {

// Outcome of a property check.  "undecided_at_cap" means the search budget ran
// out before the property could be confirmed or refuted.
enum class Verdict { holds, fails, undecided_at_cap };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    default: return "undecided-at-cap";
  }
}

// One named finding attached to a report: either a witness supporting the
// verdict or a counterexample refuting the property.  Fields are free-form
// key/value pairs so each check can record whatever identifies its finding
// (word, vertex, section, ...).
struct ReportItem {
  std::string label;
  std::map<std::string, std::string> fields;

  ReportItem() = default;
  explicit ReportItem(std::string lab) : label(std::move(lab)) {}

  ReportItem& set(const std::string& key, std::string value) {
    fields[key] = std::move(value);
    return *this;
  }
};

// Structured result of a property check: what was checked, with which
// parameters, what the verdict is, and the evidence for it.
struct PropertyReport {
  std::string property;
  Verdict verdict = Verdict::undecided_at_cap;
  std::map<std::string, std::string> parameters;
  std::vector<ReportItem> witnesses;
  std::vector<ReportItem> counterexamples;

  nlohmann::json to_json() const {
    auto items_json = [](const std::vector<ReportItem>& items) {
      nlohmann::json arr = nlohmann::json::array();
      for (const ReportItem& it : items) {
        nlohmann::json o;
        o["label"] = it.label;
        for (const auto& [k, v] : it.fields) o[k] = v;
        arr.push_back(std::move(o));
      }
      return arr;
    };
    nlohmann::json j;
    j["property"] = property;
    j["verdict"] = verdict_name(verdict);
    j["parameters"] = nlohmann::json::object();
    for (const auto& [k, v] : parameters) j["parameters"][k] = v;
    j["witnesses"] = items_json(witnesses);
    j["counterexamples"] = items_json(counterexamples);
    return j;
  }

  // Plain-text rendering for terminal output.  Long evidence lists are
  // truncated; the JSON form is always complete.
  std::string to_text(std::size_t max_items = 12) const {
    std::string out;
    out += "property: " + property + "\n";
    out += std::string("verdict: ") + verdict_name(verdict) + "\n";
    for (const auto& [k, v] : parameters) out += "  " + k + " = " + v + "\n";
    auto dump = [&](const char* title, const std::vector<ReportItem>& items) {
      if (items.empty()) return;
      out += std::string(title) + " (" + std::to_string(items.size()) + "):\n";
      std::size_t shown = 0;
      for (const ReportItem& it : items) {
        if (shown == max_items) {
          out += "  ... " + std::to_string(items.size() - shown) + " more\n";
          break;
        }
        out += "  " + it.label;
        for (const auto& [k, v] : it.fields) out += "  " + k + "=" + v;
        out += "\n";
        ++shown;
      }
    };
    dump("witnesses", witnesses);
    dump("counterexamples", counterexamples);
    return out;
  }
};

}  // namespace selfsim
