// Exhaustive search for relators: freely reduced words over the generators
// and their inverses whose action on the tree is trivial.  Candidates are
// prefiltered by their permutation on a fixed level (a collision-resistant
// fingerprint) and every candidate is confirmed exactly.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "selfsim/action.hpp"
#include "selfsim/base.hpp"
#include "selfsim/word.hpp"

namespace selfsim {

// Result of an exhaustive relator search up to a word length.
struct RelatorSet {
  int max_length = 0;
  int hash_level = 0;
  bool raw = false;             // true: every confirmed trivial word is kept
  long long words_scanned = 0;  // freely reduced words enumerated
  std::vector<GroupWord> relators;  // shortlex order
};

namespace detail {

inline GroupWord word_rotation(const GroupWord& w, std::size_t i) {
  GroupWord r;
  r.letters.reserve(w.letters.size());
  r.letters.insert(r.letters.end(), w.letters.begin() + static_cast<long>(i),
                   w.letters.end());
  r.letters.insert(r.letters.end(), w.letters.begin(),
                   w.letters.begin() + static_cast<long>(i));
  return r;
}

inline bool cyclically_reduced(const GroupWord& w) {
  if (w.letters.size() < 2) return true;
  return w.letters.front() != static_cast<WordLetter>(-w.letters.back());
}

// Shortlex-least word among all rotations of w and of its inverse; the
// canonical representative of the conjugacy-and-inversion class of a
// cyclically reduced word.
inline GroupWord rotation_class_representative(const GroupWord& w) {
  GroupWord best = w;
  const GroupWord inv = word_inverse(w);
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    GroupWord r = word_rotation(w, i);
    if (r < best) best = std::move(r);
    GroupWord ri = word_rotation(inv, i);
    if (ri < best) best = std::move(ri);
  }
  return best;
}

// True if r rewrites to a strictly shorter word using one of the given
// relators: some cyclic form u of a relator (or its inverse) splits as
// u = p q with |p| > |q| and p occurs in r, so p can be replaced by q^-1.
inline bool dehn_reducible(const GroupWord& r, const std::vector<GroupWord>& relators) {
  auto contains = [](const std::vector<WordLetter>& hay,
                     const std::vector<WordLetter>& needle) {
    if (needle.empty() || needle.size() > hay.size()) return false;
    for (std::size_t i = 0; i + needle.size() <= hay.size(); ++i) {
      bool match = true;
      for (std::size_t j = 0; j < needle.size(); ++j)
        if (hay[i + j] != needle[j]) {
          match = false;
          break;
        }
      if (match) return true;
    }
    return false;
  };
  for (const GroupWord& s : relators) {
    for (const GroupWord& form : {s, word_inverse(s)}) {
      for (std::size_t i = 0; i < form.letters.size(); ++i) {
        const GroupWord rot = word_rotation(form, i);
        for (std::size_t plen = form.letters.size(); plen > form.letters.size() / 2;
             --plen) {
          std::vector<WordLetter> prefix(rot.letters.begin(),
                                         rot.letters.begin() + static_cast<long>(plen));
          if (contains(r.letters, prefix)) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace detail

// Enumerates every freely reduced word of length <= max_length and returns
// the confirmed relators.  In the default (minimal) mode, relators that are
// conjugates, inverses or rotations of one another are merged into one
// shortlex-least representative, and representatives that rewrite to a
// shorter word modulo a shorter found relator are dropped (best-effort
// minimality by free rewriting).  Raw mode returns every trivial word.
inline RelatorSet enumerate_relations(const WordEngine& engine, int max_length,
                                      int hash_level = 8, bool raw = false,
                                      long long max_words = 500000000LL) {
  if (max_length < 1) throw usage_error("relator search needs max length >= 1");
  if (hash_level < 1) throw usage_error("fingerprint level must be >= 1");
  const int q = engine.alphabet_size();
  const long long leaves = vertex_count(q, hash_level);
  if (leaves > 1048576) throw usage_error("fingerprint level too large");

  RelatorSet result;
  result.max_length = max_length;
  result.hash_level = hash_level;
  result.raw = raw;

  // Search letters in generator order, each followed by its inverse, and
  // their permutations on the fingerprint level.
  std::vector<WordLetter> letter_codes;
  std::vector<std::vector<std::uint32_t>> letter_perm;
  for (int g = 0; g < engine.generator_count(); ++g) {
    for (bool inverse : {false, true}) {
      const GroupWord gw = word_generator(g, inverse);
      letter_codes.push_back(gw.letters[0]);
      const std::vector<int> p = engine.level_permutation(gw, hash_level);
      letter_perm.emplace_back(p.begin(), p.end());
    }
  }

  const std::size_t n = static_cast<std::size_t>(leaves);
  const std::size_t depth_cap = static_cast<std::size_t>(max_length);
  // perm[d] = permutation of the current length-d prefix word.
  std::vector<std::vector<std::uint32_t>> perm(
      depth_cap + 1, std::vector<std::uint32_t>(n));
  for (std::size_t x = 0; x < n; ++x) perm[0][x] = static_cast<std::uint32_t>(x);

  std::vector<GroupWord> confirmed;
  std::vector<WordLetter> word;
  std::vector<std::size_t> arc(depth_cap + 1, 0);
  const std::size_t letter_count = letter_codes.size();
  std::size_t depth = 0;
  long long scanned = 0;

  // Depth-first search over freely reduced words.
  while (true) {
    if (depth == depth_cap || arc[depth] == letter_count) {
      if (depth == 0) break;
      --depth;
      word.pop_back();
      continue;
    }
    const std::size_t li = arc[depth]++;
    if (!word.empty() &&
        word.back() == static_cast<WordLetter>(-letter_codes[li]))
      continue;  // keep the word freely reduced
    if (++scanned > max_words)
      throw cap_exceeded("relator search exceeded the cap of " +
                         std::to_string(max_words) + " words");
    const std::vector<std::uint32_t>& lp = letter_perm[li];
    const std::vector<std::uint32_t>& src = perm[depth];
    std::vector<std::uint32_t>& dst = perm[depth + 1];
    for (std::size_t x = 0; x < n; ++x) dst[x] = src[lp[x]];
    word.push_back(letter_codes[li]);
    ++depth;
    arc[depth] = 0;

    bool fingerprint_trivial = true;
    for (std::size_t x = 0; x < n; ++x)
      if (dst[x] != x) {
        fingerprint_trivial = false;
        break;
      }
    if (fingerprint_trivial) {
      GroupWord candidate;
      candidate.letters = word;
      if (engine.is_trivial(candidate)) confirmed.push_back(std::move(candidate));
    }
  }
  result.words_scanned = scanned;
  std::sort(confirmed.begin(), confirmed.end());

  if (raw) {
    result.relators = std::move(confirmed);
    return result;
  }

  // A relator that is not cyclically reduced is a conjugate of its cyclic
  // core, which is itself a shorter confirmed relator; drop it.
  std::vector<GroupWord> reps;
  std::set<std::string> seen;
  for (const GroupWord& w : confirmed) {
    if (!detail::cyclically_reduced(w)) continue;
    GroupWord rep = detail::rotation_class_representative(w);
    if (seen.insert(word_key(rep)).second) reps.push_back(std::move(rep));
  }
  std::sort(reps.begin(), reps.end());

  std::vector<GroupWord> kept;
  for (const GroupWord& r : reps) {
    std::vector<GroupWord> shorter;
    for (const GroupWord& s : kept)
      if (s.letters.size() < r.letters.size()) shorter.push_back(s);
    if (!detail::dehn_reducible(r, shorter)) kept.push_back(r);
  }
  result.relators = std::move(kept);
  return result;
}

}  // namespace selfsim
