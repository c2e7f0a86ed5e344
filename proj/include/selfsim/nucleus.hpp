#pragma once

// Nucleus computation for contracting actions.
//
// The nucleus is the minimal finite set that eventually absorbs all sections:
// for every group element g there is a depth n(g) such that every section of
// g at depth >= n(g) lies in the set. It is computed here as a fixed point of
// "deep sections" over pairwise products, where the deep sections of a word
// are exactly the elements it keeps producing at unbounded depth.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "selfsim/action.hpp"
#include "selfsim/word.hpp"

namespace selfsim {

struct Nucleus {
  // Shortlex-minimal representatives, shortlex sorted, identity included.
  std::vector<GroupWord> elements;
  // Smallest k such that every pairwise product of nucleus elements (the
  // generators are among them) has all of its depth-k sections in the set;
  // -1 when not certified within the search bound.
  int contraction_depth = -1;
};

namespace detail {

// Elements of the section closure of w that occur at unbounded depth: a
// closure word yields sections arbitrarily deep exactly when it is reachable
// from a cycle of the (finite) closure graph.
inline std::vector<GroupWord> deep_sections(const WordEngine& engine,
                                            const GroupWord& w) {
  SectionClosure closure = engine.section_closure(w);
  if (!closure.complete) throw cap_exceeded("section closure hit the cap");

  std::map<std::string, int> node_of;
  for (std::size_t i = 0; i < closure.words.size(); ++i)
    node_of.emplace(word_key(closure.words[i]), static_cast<int>(i));

  const int n = static_cast<int>(closure.words.size());
  const int q = engine.alphabet_size();
  std::vector<std::vector<int>> next(n);
  for (int i = 0; i < n; ++i) {
    for (int x = 0; x < q; ++x) {
      GroupWord s = engine.section_at(closure.words[i], x);
      next[i].push_back(node_of.at(word_key(s)));
    }
  }

  // Nodes on a cycle: kept after iteratively deleting nodes with no
  // predecessor among the survivors.
  std::vector<int> indegree(n, 0);
  for (int i = 0; i < n; ++i)
    for (int t : next[i]) ++indegree[t];
  std::vector<int> queue;
  std::vector<bool> removed(n, false);
  for (int i = 0; i < n; ++i)
    if (indegree[i] == 0) queue.push_back(i);
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    removed[v] = true;
    for (int t : next[v])
      if (--indegree[t] == 0) queue.push_back(t);
  }

  // Everything reachable from a surviving (cyclic) node.
  std::vector<bool> deep(n, false);
  std::vector<int> stack;
  for (int i = 0; i < n; ++i)
    if (!removed[i]) {
      deep[i] = true;
      stack.push_back(i);
    }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int t : next[v])
      if (!deep[t]) {
        deep[t] = true;
        stack.push_back(t);
      }
  }

  std::vector<GroupWord> result;
  for (int i = 0; i < n; ++i)
    if (deep[i]) result.push_back(closure.words[i]);
  return result;
}

}  // namespace detail

// All sections of w at depth exactly `depth`, one entry per level vertex in
// lexicographic order (duplicates included).
inline std::vector<GroupWord> sections_at_level(const WordEngine& engine,
                                                const GroupWord& w,
                                                int depth) {
  std::vector<GroupWord> layer{w};
  const int q = engine.alphabet_size();
  for (int d = 0; d < depth; ++d) {
    std::vector<GroupWord> next;
    next.reserve(layer.size() * static_cast<std::size_t>(q));
    for (const GroupWord& u : layer)
      for (int x = 0; x < q; ++x) next.push_back(engine.section_at(u, x));
    layer = std::move(next);
  }
  return layer;
}

// Computes the nucleus by iterating deep sections of pairwise products of the
// current set (seeded with the generators, their inverses, and the identity)
// to a fixed point, then certifies the smallest contraction depth up to
// `max_depth`. Throws cap_exceeded if the closure does not stabilize within
// `max_rounds` rounds (the action may be non-contracting).
inline Nucleus compute_nucleus(const WordEngine& engine, int max_depth = 16,
                               int max_rounds = 32) {
  ElementIndex index(engine);

  std::vector<GroupWord> seed;
  seed.push_back(word_identity());
  for (int g = 0; g < engine.generator_count(); ++g) {
    seed.push_back(word_generator(g, false));
    seed.push_back(word_generator(g, true));
  }

  std::set<int> members;
  for (const GroupWord& w : seed) members.insert(index.id_of(w));

  bool grew = true;
  int rounds = 0;
  while (grew) {
    if (++rounds > max_rounds)
      throw cap_exceeded("nucleus closure did not stabilize");
    grew = false;
    // Snapshot: pair products over the current set plus the seed.
    std::vector<int> ids(members.begin(), members.end());
    for (int u : ids) {
      for (int v : ids) {
        GroupWord product = word_multiply(index.rep(u), index.rep(v));
        for (const GroupWord& s : detail::deep_sections(engine, product)) {
          int id = index.id_of(s);
          if (members.insert(id).second) grew = true;
        }
      }
    }
  }

  Nucleus result;
  for (int id : members) result.elements.push_back(index.rep(id));
  std::sort(result.elements.begin(), result.elements.end());

  // Certify the contraction depth: smallest k with all depth-k sections of
  // all pairwise products back in the set. Membership is monotone in k once
  // the set is section-closed, so the maximum over products is the answer.
  int depth = 0;
  for (const GroupWord& u : result.elements) {
    for (const GroupWord& v : result.elements) {
      GroupWord product = word_multiply(u, v);
      std::vector<GroupWord> layer{product};
      int k = 0;
      while (true) {
        std::vector<GroupWord> outside;
        for (const GroupWord& w : layer)
          if (index.find(w) < 0 || members.count(index.find(w)) == 0)
            outside.push_back(w);
        if (outside.empty()) break;
        if (k == max_depth) return result;  // depth stays -1: not certified
        ++k;
        std::vector<GroupWord> next;
        for (const GroupWord& w : outside)
          for (int x = 0; x < engine.alphabet_size(); ++x)
            next.push_back(engine.section_at(w, x));
        layer = std::move(next);
      }
      depth = std::max(depth, k);
    }
  }
  result.contraction_depth = depth;
  return result;
}

// Outcome of replaying the contraction inclusion at a fixed depth: every
// product s*x over s in S u S^-1 and x in the nucleus must have all of its
// depth-k sections inside the nucleus.
struct ContractionCheck {
  bool holds = false;
  int depth = 0;
  long checked = 0;  // number of (product, vertex) pairs examined
  // Counterexamples: (product word, vertex) pairs whose section escaped.
  std::vector<std::pair<GroupWord, Vertex>> failures;
};

inline ContractionCheck verify_contraction(const WordEngine& engine,
                                           const Nucleus& nucleus, int depth) {
  ElementIndex index(engine);
  std::set<int> members;
  for (const GroupWord& w : nucleus.elements) members.insert(index.id_of(w));

  ContractionCheck check;
  check.depth = depth;
  const int q = engine.alphabet_size();

  std::vector<GroupWord> gens;
  for (int g = 0; g < engine.generator_count(); ++g) {
    gens.push_back(word_generator(g, false));
    gens.push_back(word_generator(g, true));
  }

  for (const GroupWord& s : gens) {
    for (const GroupWord& x : nucleus.elements) {
      GroupWord product = word_multiply(s, x);
      std::vector<GroupWord> layer = sections_at_level(engine, product, depth);
      Vertex v(static_cast<std::size_t>(depth), 0);
      for (std::size_t i = 0; i < layer.size(); ++i) {
        ++check.checked;
        int id = index.find(layer[i]);
        if (id < 0 || members.count(id) == 0) {
          // Decode vertex index i into letters, most significant first.
          std::size_t rest = i;
          for (int d = depth - 1; d >= 0; --d) {
            v[static_cast<std::size_t>(d)] = static_cast<int>(rest % q);
            rest /= static_cast<std::size_t>(q);
          }
          check.failures.emplace_back(product, v);
        }
      }
    }
  }
  check.holds = check.failures.empty();
  return check;
}

// For each non-identity nucleus element, a witness that removing it breaks
// closure: either another member with a level-1 section equal to it, or a
// pair of other members whose product has it among its depth-k sections.
struct MinimalityWitness {
  GroupWord element;
  bool found = false;
  std::optional<GroupWord> section_source;            // level-1 closure break
  std::optional<std::pair<GroupWord, GroupWord>> product_pair;  // depth-k break
};

inline std::vector<MinimalityWitness> nucleus_minimality_witnesses(
    const WordEngine& engine, const Nucleus& nucleus) {
  ElementIndex index(engine);
  std::vector<int> ids;
  for (const GroupWord& w : nucleus.elements) ids.push_back(index.id_of(w));

  const int q = engine.alphabet_size();
  const int depth = std::max(nucleus.contraction_depth, 0);

  // Level-1 section sources per element id.
  std::map<int, std::vector<int>> section_sources;
  for (std::size_t i = 0; i < nucleus.elements.size(); ++i)
    for (int x = 0; x < q; ++x) {
      GroupWord s = engine.section_at(nucleus.elements[i], x);
      section_sources[index.id_of(s)].push_back(ids[i]);
    }

  // One pass over all pair products: for each element id, remember a factor
  // pair that avoids the element itself yet reproduces it at depth k.
  std::map<int, std::pair<int, int>> product_witness;
  for (std::size_t a = 0; a < nucleus.elements.size(); ++a)
    for (std::size_t b = 0; b < nucleus.elements.size(); ++b) {
      GroupWord product =
          word_multiply(nucleus.elements[a], nucleus.elements[b]);
      for (const GroupWord& s : sections_at_level(engine, product, depth)) {
        int id = index.find(s);
        if (id < 0 || id == ids[a] || id == ids[b]) continue;
        product_witness.emplace(id, std::make_pair(ids[a], ids[b]));
      }
    }

  std::vector<MinimalityWitness> witnesses;
  for (std::size_t i = 0; i < nucleus.elements.size(); ++i) {
    const GroupWord& n = nucleus.elements[i];
    if (n.letters.empty()) continue;  // identity is always required
    MinimalityWitness witness;
    witness.element = n;

    auto it = section_sources.find(ids[i]);
    if (it != section_sources.end())
      for (int src : it->second)
        if (src != ids[i]) {
          witness.found = true;
          witness.section_source = index.rep(src);
          break;
        }

    if (!witness.found) {
      auto jt = product_witness.find(ids[i]);
      if (jt != product_witness.end()) {
        witness.found = true;
        witness.product_pair = std::make_pair(index.rep(jt->second.first),
                                              index.rep(jt->second.second));
      }
    }
    witnesses.push_back(std::move(witness));
  }
  return witnesses;
}

}  // namespace selfsim
