// The action engine: evaluates words over an invertible Mealy automaton as
// automorphisms of the rooted q-ary tree.
//
// Conventions (fixed across the whole library):
//   * products act rightmost-first: (uv)(x) = u(v(x));
//   * sections compose as (uv)|_x = u|_{v(x)} * v|_x;
//   * vertices of level n are indexed lexicographically, the first letter
//     of the vertex word being most significant.
//
// Triviality of a word is decided by breadth-first closure of its section
// graph: a reduced word represents the identity automorphism iff every
// word in its section closure fixes the alphabet pointwise at the root.
// The search is capped; hitting the cap raises cap_exceeded ("undecided at
// this cap") and never returns a wrong answer.
#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "selfsim/base.hpp"
#include "selfsim/mealy.hpp"
#include "selfsim/word.hpp"

namespace selfsim {

struct EngineOptions {
  // Maximum number of distinct reduced words a triviality search may visit.
  std::size_t closure_cap = 1'000'000;
  // Maximum number of memoized triviality facts kept.
  std::size_t memo_cap = 4'000'000;
};

// Level-n portrait of a word: the permutation it induces on the q^n
// vertices of level n (lexicographic indexing) together with the reduced
// section word at every such vertex.
struct Portrait {
  int level = 0;
  std::vector<int> permutation;      // permutation[v] = image vertex index
  std::vector<GroupWord> sections;   // sections[v]    = reduced section word
};

// The set of reduced words reachable from a word by taking sections, with
// a flag telling whether the closure was exhausted (no depth truncation).
struct SectionClosure {
  std::vector<GroupWord> words;  // deduplicated, shortlex order
  bool complete = false;
};

class WordEngine {
public:
  explicit WordEngine(MealyAutomaton machine, EngineOptions options = {})
      : m_(std::move(machine)), opt_(options) {
    if (m_.state_count() > 60)
      throw usage_error("machines with more than 60 states are not supported");
    q_ = m_.alphabet_size();
    int k = m_.state_count();
    out_.assign(static_cast<std::size_t>(k), {});
    next_.assign(static_cast<std::size_t>(k), {});
    inv_out_.assign(static_cast<std::size_t>(k), {});
    for (int g = 0; g < k; ++g) {
      const MealyState& s = m_.state(g);
      out_[static_cast<std::size_t>(g)] = s.output;
      next_[static_cast<std::size_t>(g)] = s.next;
      inv_out_[static_cast<std::size_t>(g)].assign(static_cast<std::size_t>(q_), -1);
      for (int x = 0; x < q_; ++x)
        inv_out_[static_cast<std::size_t>(g)][static_cast<std::size_t>(s.output[static_cast<std::size_t>(x)])] = x;
    }
  }

  const MealyAutomaton& machine() const { return m_; }
  int alphabet_size() const { return q_; }
  int generator_count() const { return m_.state_count(); }
  const EngineOptions& options() const { return opt_; }

  // Parses a word given as state names/powers, e.g. "a b^-1 c^2" (see
  // word_to_string).  For richer expressions use parse_word_expression.
  GroupWord word_from_names(const std::vector<std::pair<std::string, long long>>& factors) const {
    GroupWord w;
    for (const auto& [name, exp] : factors) {
      auto idx = m_.state_index(name);
      if (!idx) {
        if (name == kIdentityStateName) continue;
        throw parse_error("unknown generator '" + name + "'");
      }
      w = word_multiply(w, word_power(word_generator(*idx), exp));
    }
    return w;
  }

  // --- elementary action ---------------------------------------------

  // Image of the vertex under the word's automorphism.
  Vertex apply(const GroupWord& w, const Vertex& v) const {
    Vertex image;
    image.reserve(v.size());
    std::vector<WordLetter> cur = w.letters;
    std::vector<WordLetter> tmp;
    for (int x : v) {
      GroupWord sec;
      image.push_back(act(cur, x, tmp, &sec));
      cur = std::move(sec.letters);
    }
    return image;
  }

  // Reduced section word w|_v.
  GroupWord section(const GroupWord& w, const Vertex& v) const {
    std::vector<WordLetter> cur = w.letters;
    std::vector<WordLetter> tmp;
    for (int x : v) {
      GroupWord sec;
      act(cur, x, tmp, &sec);
      cur = std::move(sec.letters);
    }
    GroupWord r;
    r.letters = std::move(cur);
    return r;
  }

  // Section at a single letter.
  GroupWord section_at(const GroupWord& w, int x) const {
    std::vector<WordLetter> tmp;
    GroupWord sec;
    act(w.letters, x, tmp, &sec);
    return sec;
  }

  // The permutation the word induces on the alphabet.
  std::vector<int> root_permutation(const GroupWord& w) const {
    std::vector<int> p(static_cast<std::size_t>(q_));
    std::vector<WordLetter> tmp;
    for (int x = 0; x < q_; ++x) p[static_cast<std::size_t>(x)] = act(w.letters, x, tmp, nullptr);
    return p;
  }

  bool root_trivial(const GroupWord& w) const {
    std::vector<WordLetter> tmp;
    for (int x = 0; x < q_; ++x)
      if (act(w.letters, x, tmp, nullptr) != x) return false;
    return true;
  }

  // The permutation induced on the q^n vertices of level n (lexicographic
  // indexing).
  std::vector<int> level_permutation(const GroupWord& w, int n) const {
    if (n < 0) throw usage_error("level must be nonnegative");
    check_level_size(n);
    return level_perm_rec(w, n);
  }

  // Level-n portrait: permutation plus all level-n sections.
  Portrait portrait(const GroupWord& w, int n) const {
    if (n < 0) throw usage_error("level must be nonnegative");
    check_level_size(n);
    Portrait p;
    p.level = n;
    portrait_rec(w, n, p.permutation, p.sections);
    return p;
  }

  // --- triviality / equality ------------------------------------------

  // Whether the word represents the identity automorphism.  Exact; may
  // throw cap_exceeded if the section closure exceeds the configured cap.
  bool is_trivial(const GroupWord& w) const {
    if (w.empty()) return true;
    const std::string root_key = word_key(w);
    if (auto hit = memo_lookup(root_key)) return *hit;

    std::unordered_set<std::string> visited;
    std::deque<GroupWord> queue;
    visited.insert(root_key);
    queue.push_back(w);
    bool nontrivial = false;
    std::vector<WordLetter> tmp;
    while (!queue.empty() && !nontrivial) {
      GroupWord u = std::move(queue.front());
      queue.pop_front();
      if (!root_trivial(u)) {
        memo_store(word_key(u), false);
        nontrivial = true;
        break;
      }
      for (int x = 0; x < q_ && !nontrivial; ++x) {
        GroupWord s;
        act(u.letters, x, tmp, &s);
        if (s.empty()) continue;
        std::string k = word_key(s);
        if (auto hit = memo_lookup(k)) {
          if (!*hit) nontrivial = true;  // a nontrivial section
          continue;                      // trivial section: nothing below it
        }
        if (visited.insert(k).second) {
          if (visited.size() > opt_.closure_cap)
            throw cap_exceeded("triviality search exceeded the closure cap of " +
                               std::to_string(opt_.closure_cap) + " words");
          queue.push_back(std::move(s));
        }
      }
    }
    if (nontrivial) {
      memo_store(root_key, false);
      return false;
    }
    // Everything visited acts trivially at its root and so does every word
    // below it: the whole closure is trivial.
    memo_store_all(visited, true);
    return true;
  }

  // Whether two words represent the same automorphism.
  bool words_equal(const GroupWord& u, const GroupWord& v) const {
    if (u == v) return true;
    return is_trivial(word_multiply(u, word_inverse(v)));
  }

  // --- section closures -------------------------------------------------

  // All reduced words reachable from w by sections, optionally cut at a
  // maximum depth.  complete = true iff no truncation happened (the set is
  // closed under taking sections).
  SectionClosure section_closure(const GroupWord& w, std::optional<int> max_depth = std::nullopt) const {
    SectionClosure out;
    std::unordered_set<std::string> visited;
    std::deque<std::pair<GroupWord, int>> queue;
    visited.insert(word_key(w));
    queue.emplace_back(w, 0);
    std::vector<GroupWord> collected;
    collected.push_back(w);
    bool truncated = false;
    std::vector<WordLetter> tmp;
    while (!queue.empty()) {
      auto [u, depth] = std::move(queue.front());
      queue.pop_front();
      if (max_depth && depth >= *max_depth) {
        // Would this word produce anything new deeper down?  If yes the
        // closure is truncated.
        for (int x = 0; x < q_; ++x) {
          GroupWord s;
          act(u.letters, x, tmp, &s);
          if (!visited.count(word_key(s))) truncated = true;
        }
        continue;
      }
      for (int x = 0; x < q_; ++x) {
        GroupWord s;
        act(u.letters, x, tmp, &s);
        std::string k = word_key(s);
        if (visited.insert(k).second) {
          if (visited.size() > opt_.closure_cap)
            throw cap_exceeded("section closure exceeded the cap of " +
                               std::to_string(opt_.closure_cap) + " words");
          collected.push_back(s);
          queue.emplace_back(std::move(s), depth + 1);
        }
      }
    }
    std::sort(collected.begin(), collected.end());
    out.words = std::move(collected);
    out.complete = !truncated;
    return out;
  }

  // The set of reduced section words at depth exactly k (deduplicated as
  // words; distinct words may still represent equal automorphisms).
  std::vector<GroupWord> sections_at_depth(const GroupWord& w, int k) const {
    std::vector<GroupWord> layer{w};
    std::vector<WordLetter> tmp;
    for (int step = 0; step < k; ++step) {
      std::unordered_set<std::string> seen;
      std::vector<GroupWord> next_layer;
      for (const GroupWord& u : layer) {
        for (int x = 0; x < q_; ++x) {
          GroupWord s;
          act(u.letters, x, tmp, &s);
          if (seen.insert(word_key(s)).second) {
            if (seen.size() > opt_.closure_cap)
              throw cap_exceeded("depth-section layer exceeded the cap");
            next_layer.push_back(std::move(s));
          }
        }
      }
      layer = std::move(next_layer);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
  }

private:
  // Acts with the reduced letter sequence w on one alphabet letter x,
  // returning the output letter.  If sec is non-null it receives the
  // reduced section word.  tmp is scratch (letters collected right to
  // left, then reversed with free reduction).
  int act(const std::vector<WordLetter>& w, int x, std::vector<WordLetter>& tmp, GroupWord* sec) const {
    int y = x;
    if (sec) tmp.clear();
    for (std::size_t i = w.size(); i-- > 0;) {
      WordLetter L = w[i];
      if (L > 0) {
        std::size_t g = static_cast<std::size_t>(L - 1);
        int n = next_[g][static_cast<std::size_t>(y)];
        int ny = out_[g][static_cast<std::size_t>(y)];
        if (sec && n >= 0) tmp.push_back(static_cast<WordLetter>(n + 1));
        y = ny;
      } else {
        std::size_t g = static_cast<std::size_t>(-L - 1);
        int z = inv_out_[g][static_cast<std::size_t>(y)];  // s(z) = y
        int n = next_[g][static_cast<std::size_t>(z)];
        if (sec && n >= 0) tmp.push_back(static_cast<WordLetter>(-(n + 1)));
        y = z;
      }
    }
    if (sec) {
      sec->letters.clear();
      sec->letters.reserve(tmp.size());
      for (std::size_t i = tmp.size(); i-- > 0;) {
        WordLetter l = tmp[i];
        if (!sec->letters.empty() && sec->letters.back() == -l) {
          sec->letters.pop_back();
        } else {
          sec->letters.push_back(l);
        }
      }
    }
    return y;
  }

  std::vector<int> level_perm_rec(const GroupWord& w, int n) const {
    if (n == 0) return {0};
    std::vector<int> perm(static_cast<std::size_t>(pow_int(q_, n)));
    std::vector<WordLetter> tmp;
    long long stride = pow_int(q_, n - 1);
    for (int x = 0; x < q_; ++x) {
      GroupWord s;
      int y = act(w.letters, x, tmp, &s);
      std::vector<int> sub = level_perm_rec(s, n - 1);
      for (long long t = 0; t < stride; ++t)
        perm[static_cast<std::size_t>(x * stride + t)] =
            static_cast<int>(y * stride) + sub[static_cast<std::size_t>(t)];
    }
    return perm;
  }

  void portrait_rec(const GroupWord& w, int n, std::vector<int>& perm, std::vector<GroupWord>& secs) const {
    if (n == 0) {
      perm = {0};
      secs = {w};
      return;
    }
    long long stride = pow_int(q_, n - 1);
    perm.assign(static_cast<std::size_t>(stride * q_), 0);
    secs.assign(static_cast<std::size_t>(stride * q_), GroupWord{});
    std::vector<WordLetter> tmp;
    for (int x = 0; x < q_; ++x) {
      GroupWord s;
      int y = act(w.letters, x, tmp, &s);
      std::vector<int> sub_perm;
      std::vector<GroupWord> sub_secs;
      portrait_rec(s, n - 1, sub_perm, sub_secs);
      for (long long t = 0; t < stride; ++t) {
        perm[static_cast<std::size_t>(x * stride + t)] =
            static_cast<int>(y * stride) + sub_perm[static_cast<std::size_t>(t)];
        secs[static_cast<std::size_t>(x * stride + t)] = std::move(sub_secs[static_cast<std::size_t>(t)]);
      }
    }
  }

  static long long pow_int(int b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
  }

  void check_level_size(int n) const {
    long long v = 1;
    for (int i = 0; i < n; ++i) {
      v *= q_;
      if (v > (1LL << 24))
        throw cap_exceeded("level " + std::to_string(n) + " has too many vertices");
    }
  }

  std::optional<bool> memo_lookup(const std::string& k) const {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = memo_.find(k);
    if (it == memo_.end()) return std::nullopt;
    return it->second;
  }

  void memo_store(const std::string& k, bool v) const {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    if (memo_.size() < opt_.memo_cap) memo_.emplace(k, v);
  }

  void memo_store_all(const std::unordered_set<std::string>& keys, bool v) const {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    for (const std::string& k : keys) {
      if (memo_.size() >= opt_.memo_cap) break;
      memo_.emplace(k, v);
    }
  }

  MealyAutomaton m_;
  EngineOptions opt_;
  int q_ = 0;
  std::vector<std::vector<int>> out_;      // out_[g][x]     = g(x)
  std::vector<std::vector<int>> next_;     // next_[g][x]    = g|_x (state index, -1 identity)
  std::vector<std::vector<int>> inv_out_;  // inv_out_[g][y] = x with g(x) = y

  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<std::string, bool> memo_;
};

// Canonical ids for group elements: words are bucketed by the permutation
// they induce on a fixed level and equal buckets are resolved by the exact
// equality test.  Each id keeps the shortlex-least spelling seen so far as
// its representative.
class ElementIndex {
public:
  explicit ElementIndex(const WordEngine& engine, int fingerprint_level = 7)
      : eng_(engine), fp_level_(fingerprint_level) {}

  const WordEngine& engine() const { return eng_; }

  int id_of(const GroupWord& w) {
    std::uint64_t fp = fingerprint(w);
    std::vector<int>& bucket = buckets_[fp];
    for (int id : bucket) {
      if (eng_.words_equal(w, reps_[static_cast<std::size_t>(id)])) {
        if (w < reps_[static_cast<std::size_t>(id)]) reps_[static_cast<std::size_t>(id)] = w;
        return id;
      }
    }
    int id = static_cast<int>(reps_.size());
    reps_.push_back(w);
    bucket.push_back(id);
    return id;
  }

  // Lookup without inserting; -1 if the element is not indexed yet.
  int find(const GroupWord& w) const {
    std::uint64_t fp = fingerprint(w);
    auto it = buckets_.find(fp);
    if (it == buckets_.end()) return -1;
    for (int id : it->second)
      if (eng_.words_equal(w, reps_[static_cast<std::size_t>(id)])) return id;
    return -1;
  }

  const GroupWord& rep(int id) const { return reps_[static_cast<std::size_t>(id)]; }
  int size() const { return static_cast<int>(reps_.size()); }

private:
  std::uint64_t fingerprint(const GroupWord& w) const {
    std::vector<int> p = eng_.level_permutation(w, fp_level_);
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (int v : p) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
      h *= 1099511628211ull;
    }
    return h;
  }

  const WordEngine& eng_;
  int fp_level_;
  std::vector<GroupWord> reps_;
  std::unordered_map<std::uint64_t, std::vector<int>> buckets_;
};

}  // namespace selfsim
