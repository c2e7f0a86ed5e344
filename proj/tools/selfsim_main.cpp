// Command-line surface for the self-similar group toolkit: automaton loading,
// word calculus, structure checks, level graphs, and spectra, with
// deterministic text/csv/dot/json artifacts.
//
// Exit codes: 0 success, 1 property failure, 2 usage error, 3 resource cap.
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "selfsim/action.hpp"
#include "selfsim/analysis.hpp"
#include "selfsim/fixtures.hpp"
#include "selfsim/mealy.hpp"
#include "selfsim/nucleus.hpp"
#include "selfsim/operators.hpp"
#include "selfsim/relations.hpp"
#include "selfsim/report.hpp"
#include "selfsim/schreier.hpp"
#include "selfsim/spectral.hpp"
#include "selfsim/word.hpp"
#include "selfsim/wordexpr.hpp"

namespace {

using namespace selfsim;
using nlohmann::json;

constexpr int kExitSuccess = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

struct GlobalConfig {
  std::string automaton = "paper-Pi";
  int threads = 1;
  double tolerance = -1.0;   // < 0: per-command default
  long long cap = -1;        // < 0: per-command default
  std::string format;       // empty: per-command default
  std::string out_path;
};

int env_thread_default() {
  const char* env = std::getenv("SELFSIM_THREADS");
  if (!env) return 1;
  char* end = nullptr;
  long value = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || value < 1) return 1;
  return static_cast<int>(value);
}

std::string iso_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

MealyAutomaton load_automaton(const std::string& source) {
  if (source == "paper-Pi" || source == "adding-machine" ||
      source == "grigorchuk")
    return preset_automaton(source);
  std::ifstream in(source);
  if (!in)
    throw usage_error("automaton source '" + source +
                      "' is neither a preset nor a readable file");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_automaton(text.str());
}

// Chooses the output format, restricted to what the command supports.
std::string pick_format(const GlobalConfig& cfg, const std::string& fallback,
                        const std::vector<std::string>& allowed) {
  std::string format = cfg.format.empty() ? fallback : cfg.format;
  for (const std::string& candidate : allowed)
    if (format == candidate) return format;
  std::string list;
  for (const std::string& candidate : allowed) {
    if (!list.empty()) list += "|";
    list += candidate;
  }
  throw usage_error("format '" + format + "' not supported here (use " + list +
                    ")");
}

// Prints the stdout summary header, then either writes the artifact to the
// requested path or streams it to stdout. The timestamp lives only in the
// header, so artifacts are byte-identical across runs.
int emit(const GlobalConfig& cfg, const std::string& command,
         const std::string& artifact, int exit_code) {
  std::cout << "# selfsim " << command << " | generated " << iso_timestamp()
            << "\n";
  if (!cfg.out_path.empty()) {
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw usage_error("cannot write to '" + cfg.out_path + "'");
    out << artifact;
    if (!out) throw usage_error("write to '" + cfg.out_path + "' failed");
    std::cout << "wrote " << cfg.out_path << " (" << artifact.size()
              << " bytes)\n";
  } else {
    std::cout << artifact;
  }
  return exit_code;
}

std::string render_report(const PropertyReport& report,
                          const std::string& format) {
  if (format == "json") return report.to_json().dump(2) + "\n";
  return report.to_text(50);
}

int verdict_exit(Verdict verdict) {
  switch (verdict) {
    case Verdict::holds: return kExitSuccess;
    case Verdict::fails: return kExitPropertyFailure;
    default: return kExitResourceCap;
  }
}

long long vertex_cap(const GlobalConfig& cfg, long long fallback) {
  return cfg.cap > 0 ? cfg.cap : fallback;
}

// Smallest depth at which every section of generator * nucleus-element lands
// back in the nucleus; -1 when no depth up to the bound works.
int generator_contraction_depth(const WordEngine& engine,
                                const Nucleus& nucleus, int max_depth) {
  for (int depth = 1; depth <= max_depth; ++depth)
    if (verify_contraction(engine, nucleus, depth).holds) return depth;
  return -1;
}

// --- nucleus -----------------------------------------------------------------

int run_nucleus(const GlobalConfig& cfg) {
  WordEngine engine(load_automaton(cfg.automaton));
  Nucleus nucleus = compute_nucleus(engine);
  if (nucleus.contraction_depth < 0) {
    std::cerr << "nucleus search did not certify contraction within bounds\n";
    return kExitPropertyFailure;
  }
  int depth = generator_contraction_depth(
      engine, nucleus, std::max(nucleus.contraction_depth, 1));

  std::string format = pick_format(cfg, "text", {"text", "json"});
  std::string artifact;
  if (format == "json") {
    json doc;
    doc["automaton"] = cfg.automaton;
    doc["states"] = engine.generator_count();
    doc["alphabet"] = engine.alphabet_size();
    doc["elements"] = json::array();
    for (const GroupWord& w : nucleus.elements)
      doc["elements"].push_back(word_to_string(engine.machine(), w));
    doc["element_count"] = nucleus.elements.size();
    doc["contraction_depth"] = depth;
    doc["pair_contraction_depth"] = nucleus.contraction_depth;
    artifact = doc.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "automaton: " << cfg.automaton << " (" << engine.generator_count()
        << " states, alphabet " << engine.alphabet_size() << ")\n";
    out << "nucleus elements: " << nucleus.elements.size() << "\n";
    out << "contraction depth: " << depth
        << "  (sections of generator * element at this depth stay in the"
           " nucleus)\n";
    out << "pair contraction depth: " << nucleus.contraction_depth
        << "  (same for products of two elements)\n";
    out << "elements:\n";
    for (const GroupWord& w : nucleus.elements)
      out << "  " << word_to_string(engine.machine(), w) << "\n";
    artifact = out.str();
  }
  return emit(cfg, "nucleus", artifact, kExitSuccess);
}

// --- check <property> --------------------------------------------------------

int run_check(const GlobalConfig& cfg, const std::string& property, int radius,
              int depth, int weak_branch_k, int max_level) {
  WordEngine engine(load_automaton(cfg.automaton));
  std::string format = pick_format(cfg, "text", {"text", "json"});

  PropertyReport report;
  if (property == "contracting") {
    Nucleus nucleus = compute_nucleus(engine);
    report.property = "contracting";
    report.verdict =
        nucleus.contraction_depth >= 0 ? Verdict::holds : Verdict::undecided_at_cap;
    report.parameters["elements"] = std::to_string(nucleus.elements.size());
    report.parameters["pair_contraction_depth"] =
        std::to_string(nucleus.contraction_depth);
    if (nucleus.contraction_depth >= 0)
      report.parameters["contraction_depth"] = std::to_string(
          generator_contraction_depth(engine, nucleus,
                                      std::max(nucleus.contraction_depth, 1)));
  } else if (property == "fractal") {
    report = check_fractal(engine, radius);
  } else if (property == "open-set") {
    Nucleus nucleus = compute_nucleus(engine);
    report = check_open_set_condition(engine, nucleus.elements, depth);
  } else if (property == "activity") {
    ActivityClass activity = activity_class(engine);
    report.property = "activity";
    report.verdict = Verdict::holds;
    report.parameters["class"] = activity_to_string(activity);
    for (const std::string& cycle : activity.witness_cycles)
      report.witnesses.push_back(ReportItem(cycle));
  } else if (property == "weak-branch") {
    report.property = "weak-branch";
    report.verdict = Verdict::holds;
    report.parameters["max_k"] = std::to_string(weak_branch_k);
    for (int k = 1; k <= weak_branch_k; ++k) {
      PropertyReport sub = verify_weak_branch_witness(engine, k);
      if (sub.verdict != Verdict::holds) report.verdict = sub.verdict;
      for (const ReportItem& item : sub.witnesses)
        report.witnesses.push_back(item);
      for (const ReportItem& item : sub.counterexamples)
        report.counterexamples.push_back(item);
    }
  } else if (property == "level-transitive") {
    report = check_level_transitive(engine, max_level);
  } else {
    throw usage_error("unknown property '" + property +
                      "' (use contracting|fractal|open-set|activity|"
                      "weak-branch|level-transitive)");
  }

  return emit(cfg, "check " + property, render_report(report, format),
              verdict_exit(report.verdict));
}

// --- schreier ----------------------------------------------------------------

int run_schreier(const GlobalConfig& cfg, int level, const std::string& mode) {
  WordEngine engine(load_automaton(cfg.automaton));
  GraphMode graph_mode;
  if (mode == "multigraph")
    graph_mode = GraphMode::multigraph;
  else if (mode == "simplicial")
    graph_mode = GraphMode::simplicial;
  else
    throw usage_error("unknown graph mode '" + mode +
                      "' (use multigraph|simplicial)");
  SchreierGraph graph =
      build_schreier(engine, level, graph_mode, vertex_cap(cfg, 16384));
  std::string format = pick_format(cfg, "dot", {"dot", "csv"});
  return emit(cfg, "schreier", export_graph(graph, format), kExitSuccess);
}

// --- spectrum ----------------------------------------------------------------

EigenSelection parse_selection(const std::string& text, int& k) {
  if (text == "none") return EigenSelection::values_only;
  if (text == "all") return EigenSelection::all;
  auto parse_count = [&](const std::string& spec) {
    std::size_t colon = spec.find(':');
    if (colon == std::string::npos)
      throw usage_error("selection '" + spec + "' needs a count, e.g. " +
                        spec + ":3");
    k = std::stoi(spec.substr(colon + 1));
    return spec.substr(0, colon);
  };
  std::string head = text;
  if (text.rfind("smallest", 0) == 0 && parse_count(text) == "smallest")
    return EigenSelection::smallest;
  if (text.rfind("largest", 0) == 0 && parse_count(text) == "largest")
    return EigenSelection::largest;
  throw usage_error("unknown vector selection '" + head +
                    "' (use none|all|smallest:k|largest:k)");
}

int run_spectrum(const GlobalConfig& cfg, int level,
                 const std::string& kind_name,
                 const std::vector<double>& weights,
                 const std::string& vectors, int histogram_bins,
                 const std::string& vectors_out) {
  WordEngine engine(load_automaton(cfg.automaton));
  OperatorKind kind = operator_kind_from_name(kind_name);
  LevelOperator op =
      build_operator(engine, level, kind, weights, vertex_cap(cfg, 16384));

  int k = 0;
  EigenSelection selection = parse_selection(vectors, k);
  SpectrumResult result = eigen_decompose(op, selection, k);

  if (!vectors_out.empty()) {
    if (result.vector_indices.empty())
      throw usage_error("--vectors-out needs --vectors all|smallest:k|largest:k");
    std::ofstream out(vectors_out, std::ios::binary);
    if (!out) throw usage_error("cannot write to '" + vectors_out + "'");
    out << eigenvector_csv(result);
  }

  std::string format = pick_format(cfg, "csv", {"csv", "json"});
  std::string artifact;
  if (format == "json") {
    json doc;
    doc["level"] = level;
    doc["kind"] = operator_kind_name(kind);
    doc["size"] = op.matrix.rows;
    doc["eigenvalues"] = json::array();
    for (double value : result.eigenvalues)
      doc["eigenvalues"].push_back(value);
    doc["vector_indices"] = result.vector_indices;
    doc["residuals"] = result.residuals;
    doc["operator_norm"] = result.operator_norm;
    doc["converged"] = result.converged;
    doc["trace"] = matrix_trace(op.matrix);
    if (!op.weights.empty()) doc["weights"] = op.weights;
    if (histogram_bins > 0) {
      json bins = json::array();
      for (const HistogramBin& bin :
           spectrum_histogram(result.eigenvalues, histogram_bins)) {
        json row;
        row["lo"] = bin.lo;
        row["hi"] = bin.hi;
        row["count"] = bin.count;
        bins.push_back(std::move(row));
      }
      doc["histogram"] = std::move(bins);
    }
    artifact = doc.dump(2) + "\n";
  } else if (histogram_bins > 0) {
    artifact = histogram_csv(spectrum_histogram(result.eigenvalues,
                                                histogram_bins));
  } else {
    artifact = spectrum_csv(result);
  }
  return emit(cfg, "spectrum", artifact,
              result.converged ? kExitSuccess : kExitPropertyFailure);
}

// --- convergence ---------------------------------------------------------

int run_convergence(const GlobalConfig& cfg, const std::string& kind_name,
                    int n_min, int n_max, const std::vector<double>& weights) {
  WordEngine engine(load_automaton(cfg.automaton));
  OperatorKind kind = operator_kind_from_name(kind_name);
  double tolerance = cfg.tolerance > 0 ? cfg.tolerance : 1e-6;
  ConvergenceReport report = spectral_convergence(
      engine, kind, n_min, n_max, tolerance, weights, vertex_cap(cfg, 16384));
  std::string format = pick_format(cfg, "text", {"text", "json"});
  PropertyReport property = convergence_property_report(report);
  return emit(cfg, "convergence", render_report(property, format),
              report.holds ? kExitSuccess : kExitPropertyFailure);
}

// --- kesten --------------------------------------------------------------

int run_kesten(const GlobalConfig& cfg, int max_level) {
  WordEngine engine(load_automaton(cfg.automaton));
  KestenReport report =
      kesten_bound_check(engine, max_level, vertex_cap(cfg, 16384));
  std::string format = pick_format(cfg, "text", {"text", "json"});
  std::string artifact;
  if (format == "json") {
    artifact = kesten_property_report(report).to_json().dump(2) + "\n";
  } else {
    std::ostringstream out;
    int g = engine.generator_count();
    out << "amenability lower bound 2*sqrt(2g-1)/(2g) with g = " << g << ": "
        << format_double(report.bound) << "\n";
    out << "level  second_largest  norm_candidate  second>=bound"
           "  norm>=bound\n";
    for (const KestenReport::Row& row : report.rows)
      out << row.level << "  " << format_double(row.second_largest) << "  "
          << format_double(row.norm_candidate) << "  "
          << (row.second_ge_bound ? "yes" : "no") << "  "
          << (row.norm_ge_bound ? "yes" : "no") << "\n";
    artifact = out.str();
  }
  return emit(cfg, "kesten", artifact, kExitSuccess);
}

// --- schur-probe -----------------------------------------------------------

int run_schur_probe(const GlobalConfig& cfg, int level, double gamma,
                    double cond_threshold) {
  WordEngine engine(load_automaton(cfg.automaton));
  double tolerance = cfg.tolerance > 0 ? cfg.tolerance : 1e-6;
  SchurProbe probe = schur_block_probe(engine, level, gamma, cond_threshold,
                                       tolerance, vertex_cap(cfg, 16384));
  std::string format = pick_format(cfg, "text", {"text", "json"});
  std::string artifact;
  if (format == "json") {
    json doc;
    doc["level"] = probe.level;
    doc["gamma"] = probe.gamma;
    doc["half"] = probe.half;
    doc["block00_invertible"] = probe.block00_invertible;
    doc["block11_invertible"] = probe.block11_invertible;
    doc["cond00"] = format_double(probe.cond00);
    doc["cond11"] = format_double(probe.cond11);
    doc["det_full"] = probe.det_full;
    doc["det00"] = probe.det00;
    doc["det_complement_of00"] = probe.det_complement_of00;
    doc["det11"] = probe.det11;
    doc["det_complement_of11"] = probe.det_complement_of11;
    doc["rel_error00"] = probe.rel_error00;
    doc["rel_error11"] = probe.rel_error11;
    doc["factorization_verified"] = probe.factorization_verified;
    doc["singular_gammas"] = probe.singular_gammas;
    artifact = doc.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "level: " << probe.level << ", gamma: " << format_double(probe.gamma)
        << ", block size: " << probe.half << "\n";
    out << "block00 invertible: " << (probe.block00_invertible ? "yes" : "no")
        << " (cond " << format_double(probe.cond00) << ")\n";
    out << "block11 invertible: " << (probe.block11_invertible ? "yes" : "no")
        << " (cond " << format_double(probe.cond11) << ")\n";
    out << "det(M - gamma I): " << format_double(probe.det_full) << "\n";
    if (probe.block00_invertible)
      out << "det00 * det(complement00): "
          << format_double(probe.det00 * probe.det_complement_of00)
          << "  (relative error " << format_double(probe.rel_error00) << ")\n";
    if (probe.block11_invertible)
      out << "det11 * det(complement11): "
          << format_double(probe.det11 * probe.det_complement_of11)
          << "  (relative error " << format_double(probe.rel_error11) << ")\n";
    out << "factorization verified: "
        << (probe.factorization_verified ? "yes" : "no") << "\n";
    out << "singular gammas (diagonal block spectra):\n";
    for (double value : probe.singular_gammas)
      out << "  " << format_double(value) << "\n";
    artifact = out.str();
  }
  return emit(cfg, "schur-probe", artifact, kExitSuccess);
}

// --- relations ---------------------------------------------------------------

int run_relations(const GlobalConfig& cfg, int max_length, bool raw,
                  int fingerprint_level) {
  WordEngine engine(load_automaton(cfg.automaton));
  RelatorSet set =
      enumerate_relations(engine, max_length, fingerprint_level, raw,
                          cfg.cap > 0 ? cfg.cap : 500000000LL);
  std::string format = pick_format(cfg, "text", {"text", "json"});
  std::string artifact;
  if (format == "json") {
    json doc;
    doc["max_length"] = set.max_length;
    doc["mode"] = set.raw ? "raw" : "minimal";
    doc["words_scanned"] = set.words_scanned;
    doc["relators"] = json::array();
    for (const GroupWord& w : set.relators)
      doc["relators"].push_back(word_to_string(engine.machine(), w));
    artifact = doc.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "max length: " << set.max_length
        << ", mode: " << (set.raw ? "raw" : "minimal") << "\n";
    out << "words scanned: " << set.words_scanned << "\n";
    out << "relators found: " << set.relators.size() << "\n";
    for (const GroupWord& w : set.relators)
      out << "  " << word_to_string(engine.machine(), w) << "  (length "
          << w.letters.size() << ")\n";
    artifact = out.str();
  }
  return emit(cfg, "relations", artifact, kExitSuccess);
}

// --- stabilizer / rigid --------------------------------------------------

int run_stabilizer(const GlobalConfig& cfg, int level,
                   const std::string& expr) {
  WordEngine engine(load_automaton(cfg.automaton));
  std::string format = pick_format(cfg, "text", {"text", "json"});
  if (expr.empty()) {
    PropertyReport lists = fixture_stabilizer_lists(engine);
    PropertyReport laws = fixture_stabilizer_power_laws(engine);
    std::string artifact = render_report(lists, format);
    artifact += render_report(laws, format);
    bool holds = lists.verdict == Verdict::holds && laws.verdict == Verdict::holds;
    return emit(cfg, "stabilizer", artifact,
                holds ? kExitSuccess : kExitPropertyFailure);
  }
  GroupWord word = parse_word_expression(engine.machine(), expr);
  bool member = stabilizer_member(engine, word, level);
  std::string artifact;
  if (format == "json") {
    json doc;
    doc["expr"] = expr;
    doc["reduced"] = word_to_string(engine.machine(), word);
    doc["level"] = level;
    doc["member"] = member;
    artifact = doc.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "word: " << word_to_string(engine.machine(), word) << "\n";
    out << "level: " << level << "\n";
    out << "stabilizer member: " << (member ? "true" : "false") << "\n";
    artifact = out.str();
  }
  return emit(cfg, "stabilizer", artifact,
              member ? kExitSuccess : kExitPropertyFailure);
}

int run_rigid(const GlobalConfig& cfg, const std::string& vertex_digits,
              const std::string& expr) {
  WordEngine engine(load_automaton(cfg.automaton));
  std::string format = pick_format(cfg, "text", {"text", "json"});
  if (expr.empty()) {
    PropertyReport lists = fixture_rigid_lists(engine);
    return emit(cfg, "rigid", render_report(lists, format),
                verdict_exit(lists.verdict));
  }
  if (vertex_digits.empty())
    throw usage_error("rigid membership needs --vertex");
  Vertex vertex = vertex_from_string(vertex_digits, engine.alphabet_size());
  GroupWord word = parse_word_expression(engine.machine(), expr);
  bool member = rigid_stabilizer_member(engine, word, vertex);
  std::string artifact;
  if (format == "json") {
    json doc;
    doc["expr"] = expr;
    doc["reduced"] = word_to_string(engine.machine(), word);
    doc["vertex"] = vertex_digits;
    doc["member"] = member;
    artifact = doc.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "word: " << word_to_string(engine.machine(), word) << "\n";
    out << "vertex: " << vertex_digits << "\n";
    out << "rigid stabilizer member: " << (member ? "true" : "false") << "\n";
    artifact = out.str();
  }
  return emit(cfg, "rigid", artifact,
              member ? kExitSuccess : kExitPropertyFailure);
}

// --- portrait ----------------------------------------------------------------

int run_portrait(const GlobalConfig& cfg, const std::string& expr, int depth) {
  WordEngine engine(load_automaton(cfg.automaton));
  std::string format = pick_format(cfg, "text", {"text", "json"});
  if (expr.empty()) {
    PropertyReport table = verify_portrait_table(engine);
    return emit(cfg, "portrait", render_report(table, format),
                verdict_exit(table.verdict));
  }
  if (depth < 0) throw usage_error("portrait depth must be >= 0");
  GroupWord word = parse_word_expression(engine.machine(), expr);
  Portrait portrait = engine.portrait(word, depth);
  const int q = engine.alphabet_size();
  std::string artifact;
  if (format == "json") {
    json doc;
    doc["expr"] = expr;
    doc["reduced"] = word_to_string(engine.machine(), word);
    doc["level"] = portrait.level;
    doc["permutation"] = portrait.permutation;
    doc["sections"] = json::object();
    for (std::size_t v = 0; v < portrait.sections.size(); ++v)
      doc["sections"][vertex_to_string(
          vertex_from_index(q, depth, static_cast<long long>(v)), q)] =
          word_to_string(engine.machine(), portrait.sections[v]);
    artifact = doc.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "word: " << word_to_string(engine.machine(), word) << "\n";
    out << "level: " << portrait.level << "\n";
    out << "permutation:";
    for (int image : portrait.permutation) out << " " << image;
    out << "\n";
    out << "sections:\n";
    for (std::size_t v = 0; v < portrait.sections.size(); ++v)
      out << "  "
          << vertex_to_string(
                 vertex_from_index(q, depth, static_cast<long long>(v)), q)
          << ": " << word_to_string(engine.machine(), portrait.sections[v])
          << "\n";
    artifact = out.str();
  }
  return emit(cfg, "portrait", artifact, kExitSuccess);
}

// --- word --------------------------------------------------------------------

int run_word_is_trivial(const GlobalConfig& cfg, const std::string& expr) {
  WordEngine engine(load_automaton(cfg.automaton));
  GroupWord word = parse_word_expression(engine.machine(), expr);
  bool trivial = engine.is_trivial(word);
  std::string format = pick_format(cfg, "text", {"text", "json"});
  std::string artifact;
  if (format == "json") {
    json doc;
    doc["expr"] = expr;
    doc["reduced"] = word_to_string(engine.machine(), word);
    doc["trivial"] = trivial;
    artifact = doc.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "expr: " << expr << "\n";
    out << "reduced: " << word_to_string(engine.machine(), word) << "  ("
        << word.letters.size() << " letters)\n";
    out << "trivial: " << (trivial ? "true" : "false") << "\n";
    artifact = out.str();
  }
  return emit(cfg, "word is-trivial", artifact,
              trivial ? kExitSuccess : kExitPropertyFailure);
}

int run_word_equal(const GlobalConfig& cfg, const std::string& lhs,
                   const std::string& rhs) {
  WordEngine engine(load_automaton(cfg.automaton));
  GroupWord left = parse_word_expression(engine.machine(), lhs);
  GroupWord right = parse_word_expression(engine.machine(), rhs);
  bool equal = engine.words_equal(left, right);
  std::string format = pick_format(cfg, "text", {"text", "json"});
  std::string artifact;
  if (format == "json") {
    json doc;
    doc["lhs"] = word_to_string(engine.machine(), left);
    doc["rhs"] = word_to_string(engine.machine(), right);
    doc["equal"] = equal;
    artifact = doc.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "lhs: " << word_to_string(engine.machine(), left) << "\n";
    out << "rhs: " << word_to_string(engine.machine(), right) << "\n";
    out << "equal: " << (equal ? "true" : "false") << "\n";
    artifact = out.str();
  }
  return emit(cfg, "word equal", artifact,
              equal ? kExitSuccess : kExitPropertyFailure);
}

int run_word_apply(const GlobalConfig& cfg, const std::string& expr,
                   const std::string& vertex_digits) {
  WordEngine engine(load_automaton(cfg.automaton));
  GroupWord word = parse_word_expression(engine.machine(), expr);
  const int q = engine.alphabet_size();
  Vertex vertex = vertex_from_string(vertex_digits, q);
  Vertex image = engine.apply(word, vertex);
  std::string format = pick_format(cfg, "text", {"text", "json"});
  std::string artifact;
  if (format == "json") {
    json doc;
    doc["expr"] = expr;
    doc["vertex"] = vertex_digits;
    doc["image"] = vertex_to_string(image, q);
    artifact = doc.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "word: " << word_to_string(engine.machine(), word) << "\n";
    out << "vertex: " << vertex_digits << "\n";
    out << "image: " << vertex_to_string(image, q) << "\n";
    artifact = out.str();
  }
  return emit(cfg, "word apply", artifact, kExitSuccess);
}

int run_word_section(const GlobalConfig& cfg, const std::string& expr,
                     const std::string& vertex_digits) {
  WordEngine engine(load_automaton(cfg.automaton));
  GroupWord word = parse_word_expression(engine.machine(), expr);
  const int q = engine.alphabet_size();
  Vertex vertex = vertex_from_string(vertex_digits, q);
  GroupWord section = engine.section(word, vertex);
  std::string format = pick_format(cfg, "text", {"text", "json"});
  std::string artifact;
  if (format == "json") {
    json doc;
    doc["expr"] = expr;
    doc["vertex"] = vertex_digits;
    doc["section"] = word_to_string(engine.machine(), section);
    doc["trivial"] = section.letters.empty();
    artifact = doc.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "word: " << word_to_string(engine.machine(), word) << "\n";
    out << "vertex: " << vertex_digits << "\n";
    out << "section: " << word_to_string(engine.machine(), section) << "\n";
    artifact = out.str();
  }
  return emit(cfg, "word section", artifact, kExitSuccess);
}

// --- verify-paper --------------------------------------------------------

// The published tables and appendix data concern the 5-state preset; the
// fixture suite is meaningless for any other machine.
int run_verify_paper(const GlobalConfig& cfg) {
  if (cfg.automaton != "paper-Pi")
    throw usage_error("verify-paper checks the paper-Pi preset tables; run"
                      " without --automaton or with --automaton paper-Pi");
  WordEngine engine(load_automaton(cfg.automaton));

  FixtureSuite suite = run_all_fixtures(engine);
  std::vector<PropertyReport> reports = suite.reports;

  // Cross-module quick fixtures: graphs and spectra at small levels.
  reports.push_back(check_schreier_connectivity(engine, 8));
  {
    PropertyReport covering;
    covering.property = "schreier-covering";
    covering.verdict = Verdict::holds;
    covering.parameters["max_level"] = "6";
    for (int level = 1; level <= 6; ++level) {
      CoveringCheck check = verify_covering(engine, level);
      if (!check.holds) {
        covering.verdict = Verdict::fails;
        for (const CoveringCheck::Mismatch& mismatch : check.mismatches)
          covering.counterexamples.push_back(
              ReportItem("level " + std::to_string(level) + " generator " +
                         mismatch.generator + " vertex " +
                         std::to_string(mismatch.vertex)));
      }
    }
    if (covering.verdict == Verdict::holds)
      covering.witnesses.push_back(
          ReportItem("levels 1..6 project onto the level below"));
    reports.push_back(covering);
  }
  {
    PropertyReport laplacian;
    laplacian.property = "level-1-laplacian-spectrum";
    SpectrumResult result = eigen_decompose(
        build_operator(engine, 1, OperatorKind::laplacian),
        EigenSelection::values_only);
    bool ok = result.eigenvalues.size() == 2 &&
              std::fabs(result.eigenvalues[0] - 0.0) <= 1e-12 &&
              std::fabs(result.eigenvalues[1] - 4.0) <= 1e-12;
    laplacian.verdict = ok ? Verdict::holds : Verdict::fails;
    laplacian.parameters["expected"] = "{0, 4}";
    for (double value : result.eigenvalues)
      laplacian.witnesses.push_back(ReportItem(format_double(value)));
    reports.push_back(laplacian);
  }
  reports.push_back(convergence_property_report(
      spectral_convergence(engine, OperatorKind::markov, 1, 5)));
  reports.push_back(kesten_property_report(kesten_bound_check(engine, 4)));
  reports.push_back(schur_property_report(schur_block_probe(engine, 2, 0.0)));

  std::string format = pick_format(cfg, "text", {"text", "json"});
  int failed = 0;
  for (const PropertyReport& report : reports)
    if (report.verdict != Verdict::holds) ++failed;

  std::string artifact;
  if (format == "json") {
    json doc;
    doc["fixtures"] = json::array();
    for (const PropertyReport& report : reports)
      doc["fixtures"].push_back(report.to_json());
    doc["total"] = reports.size();
    doc["failed"] = failed;
    artifact = doc.dump(2) + "\n";
  } else {
    std::ostringstream out;
    for (const PropertyReport& report : reports) {
      out << (report.verdict == Verdict::holds ? "[ok]   " : "[FAIL] ")
          << report.property;
      if (!report.counterexamples.empty())
        out << "  (" << report.counterexamples.size() << " counterexamples)";
      out << "\n";
    }
    out << "fixtures: " << reports.size() << ", failed: " << failed << "\n";
    for (const PropertyReport& report : reports) {
      if (report.verdict == Verdict::holds) continue;
      out << "\n--- " << report.property << " ---\n";
      out << report.to_text(50);
    }
    artifact = out.str();
  }
  return emit(cfg, "verify-paper", artifact,
              failed == 0 ? kExitSuccess : kExitPropertyFailure);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"self-similar group toolkit: word calculus, structure checks,"
               " level graphs, and spectra for Mealy automaton groups"};
  app.require_subcommand(1);

  GlobalConfig cfg;
  cfg.threads = env_thread_default();

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--automaton", cfg.automaton,
                    "preset (paper-Pi, adding-machine, grigorchuk) or"
                    " automaton file path")
        ->capture_default_str();
    sub->add_option("--threads", cfg.threads,
                    "worker thread cap (default: SELFSIM_THREADS or 1)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tolerance", cfg.tolerance,
                    "numeric tolerance override where applicable");
    sub->add_option("--cap", cfg.cap,
                    "resource cap override (vertices, scanned words)");
    sub->add_option("--format", cfg.format, "output format: text|json|dot|csv");
    sub->add_option("--out", cfg.out_path, "write the artifact to this path");
  };

  CLI::App* nucleus = app.add_subcommand(
      "nucleus", "compute the nucleus and its contraction depths");
  add_common(nucleus);

  std::string check_property;
  int check_radius = 3;
  int check_depth = 4;
  int check_weak_k = 3;
  int check_max_level = 10;
  CLI::App* check = app.add_subcommand(
      "check", "verify a structural property (exit 1 if it fails)");
  check
      ->add_option("property", check_property,
                   "contracting|fractal|open-set|activity|weak-branch|"
                   "level-transitive")
      ->required();
  check->add_option("--radius", check_radius,
                    "nucleus-word search radius for fractal");
  check->add_option("--depth", check_depth,
                    "maximum witness depth for open-set");
  check->add_option("--k", check_weak_k, "largest weak-branch index");
  check->add_option("--max-level", check_max_level,
                    "largest level for level-transitive");
  add_common(check);

  int schreier_level = 1;
  std::string schreier_mode = "multigraph";
  CLI::App* schreier = app.add_subcommand(
      "schreier", "build a level graph and export it as dot or csv");
  schreier->add_option("--level", schreier_level, "tree level")->required();
  schreier->add_option("--mode", schreier_mode, "multigraph|simplicial")
      ->capture_default_str();
  add_common(schreier);

  int spectrum_level = 1;
  std::string spectrum_kind = "markov";
  std::vector<double> spectrum_weights;
  std::string spectrum_vectors = "none";
  int spectrum_histogram_bins = 0;
  std::string spectrum_vectors_out;
  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "eigen-decompose a level operator and emit csv or json");
  spectrum->add_option("--level", spectrum_level, "tree level")->required();
  spectrum
      ->add_option("--kind", spectrum_kind,
                   "markov|laplacian|hecke|adjacency-simplicial|"
                   "laplacian-simplicial")
      ->capture_default_str();
  spectrum->add_option("--weights", spectrum_weights,
                       "hecke weights, one per generator (comma separated)")
      ->delimiter(',');
  spectrum
      ->add_option("--vectors", spectrum_vectors,
                   "none|all|smallest:k|largest:k")
      ->capture_default_str();
  spectrum->add_option("--histogram", spectrum_histogram_bins,
                       "emit an eigenvalue histogram with this many bins");
  spectrum->add_option("--vectors-out", spectrum_vectors_out,
                       "write requested eigenvectors to this csv path");
  add_common(spectrum);

  std::string convergence_kind = "markov";
  int convergence_from = 1;
  int convergence_to = 6;
  std::vector<double> convergence_weights;
  CLI::App* convergence = app.add_subcommand(
      "convergence", "check spectra of consecutive levels for containment");
  convergence->add_option("--kind", convergence_kind, "operator kind")
      ->capture_default_str();
  convergence->add_option("--from", convergence_from, "first level")
      ->capture_default_str();
  convergence->add_option("--to", convergence_to, "last level")
      ->capture_default_str();
  convergence
      ->add_option("--weights", convergence_weights, "hecke weights")
      ->delimiter(',');
  add_common(convergence);

  int kesten_max_level = 10;
  CLI::App* kesten = app.add_subcommand(
      "kesten", "amenability bound and per-level second eigenvalues");
  kesten->add_option("--max-level", kesten_max_level, "largest level")
      ->capture_default_str();
  add_common(kesten);

  int schur_level = 2;
  double schur_gamma = 0.0;
  double schur_cond_threshold = 1e12;
  CLI::App* schur = app.add_subcommand(
      "schur-probe", "probe block elimination of the Markov operator");
  schur->add_option("--level", schur_level, "tree level (>= 2)")->required();
  schur->add_option("--gamma", schur_gamma, "spectral parameter")
      ->capture_default_str();
  schur->add_option("--cond-threshold", schur_cond_threshold,
                    "condition number above which a block counts as singular")
      ->capture_default_str();
  add_common(schur);

  int relations_max_length = 8;
  bool relations_raw = false;
  int relations_fingerprint = 8;
  CLI::App* relations = app.add_subcommand(
      "relations", "enumerate short relators of the automaton group");
  relations->add_option("--max-length", relations_max_length,
                        "largest word length scanned")
      ->required();
  relations->add_flag("--raw", relations_raw,
                      "keep every trivial word instead of minimal classes");
  relations->add_option("--fingerprint-level", relations_fingerprint,
                        "tree depth of the permutation fingerprint")
      ->capture_default_str();
  add_common(relations);

  int stabilizer_level = 1;
  std::string stabilizer_expr;
  CLI::App* stabilizer = app.add_subcommand(
      "stabilizer", "level stabilizer membership, or the published"
                    " generator-list tables when no --expr is given");
  stabilizer->add_option("--level", stabilizer_level, "tree level")
      ->capture_default_str();
  stabilizer->add_option("--expr", stabilizer_expr, "word expression");
  add_common(stabilizer);

  std::string rigid_vertex;
  std::string rigid_expr;
  CLI::App* rigid = app.add_subcommand(
      "rigid", "rigid stabilizer membership, or the published generator-list"
               " tables when no --expr is given");
  rigid->add_option("--vertex", rigid_vertex, "vertex digits, e.g. 01");
  rigid->add_option("--expr", rigid_expr, "word expression");
  add_common(rigid);

  std::string portrait_expr;
  int portrait_depth = 1;
  CLI::App* portrait = app.add_subcommand(
      "portrait", "level-n portrait of a word, or the published portrait"
                  " table when no --expr is given");
  portrait->add_option("--expr", portrait_expr, "word expression");
  portrait->add_option("--depth", portrait_depth, "portrait level")
      ->capture_default_str();
  add_common(portrait);

  CLI::App* word = app.add_subcommand("word", "word calculus");
  word->require_subcommand(1);
  std::string word_expr;
  std::string word_lhs;
  std::string word_rhs;
  std::string word_vertex;
  CLI::App* word_trivial =
      word->add_subcommand("is-trivial", "decide triviality of a word");
  word_trivial->add_option("--expr", word_expr, "word expression")->required();
  add_common(word_trivial);
  CLI::App* word_equal = word->add_subcommand("equal", "compare two words");
  word_equal->add_option("--lhs", word_lhs, "left word")->required();
  word_equal->add_option("--rhs", word_rhs, "right word")->required();
  add_common(word_equal);
  CLI::App* word_apply =
      word->add_subcommand("apply", "apply a word to a vertex");
  word_apply->add_option("--expr", word_expr, "word expression")->required();
  word_apply->add_option("--vertex", word_vertex, "vertex digits")->required();
  add_common(word_apply);
  CLI::App* word_section =
      word->add_subcommand("section", "section of a word at a vertex");
  word_section->add_option("--expr", word_expr, "word expression")->required();
  word_section->add_option("--vertex", word_vertex, "vertex digits")
      ->required();
  add_common(word_section);

  CLI::App* verify = app.add_subcommand(
      "verify-paper", "run every published-table fixture; exit 1 if any fails");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(nucleus)) return run_nucleus(cfg);
    if (app.got_subcommand(check))
      return run_check(cfg, check_property, check_radius, check_depth,
                       check_weak_k, check_max_level);
    if (app.got_subcommand(schreier))
      return run_schreier(cfg, schreier_level, schreier_mode);
    if (app.got_subcommand(spectrum))
      return run_spectrum(cfg, spectrum_level, spectrum_kind, spectrum_weights,
                          spectrum_vectors, spectrum_histogram_bins,
                          spectrum_vectors_out);
    if (app.got_subcommand(convergence))
      return run_convergence(cfg, convergence_kind, convergence_from,
                             convergence_to, convergence_weights);
    if (app.got_subcommand(kesten)) return run_kesten(cfg, kesten_max_level);
    if (app.got_subcommand(schur))
      return run_schur_probe(cfg, schur_level, schur_gamma,
                             schur_cond_threshold);
    if (app.got_subcommand(relations))
      return run_relations(cfg, relations_max_length, relations_raw,
                           relations_fingerprint);
    if (app.got_subcommand(stabilizer))
      return run_stabilizer(cfg, stabilizer_level, stabilizer_expr);
    if (app.got_subcommand(rigid)) return run_rigid(cfg, rigid_vertex, rigid_expr);
    if (app.got_subcommand(portrait))
      return run_portrait(cfg, portrait_expr, portrait_depth);
    if (app.got_subcommand(word)) {
      if (word->got_subcommand(word_trivial))
        return run_word_is_trivial(cfg, word_expr);
      if (word->got_subcommand(word_equal))
        return run_word_equal(cfg, word_lhs, word_rhs);
      if (word->got_subcommand(word_apply))
        return run_word_apply(cfg, word_expr, word_vertex);
      if (word->got_subcommand(word_section))
        return run_word_section(cfg, word_expr, word_vertex);
    }
    if (app.got_subcommand(verify)) return run_verify_paper(cfg);
    throw usage_error("no command selected");
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cap_exceeded& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
