#pragma once

// Brute-force reference computations used to derive expected values. They
// work on raw words and never touch presentations or automata.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "symdyn/alphabet.hpp"

namespace oracle {

using symdyn::Symbol;
using symdyn::Word;

inline std::vector<Word> all_words(int symbols, std::size_t length) {
  std::vector<Word> out{{}};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<Word> next;
    for (const Word& w : out)
      for (int a = 0; a < symbols; ++a) {
        Word w2 = w;
        w2.push_back(a);
        next.push_back(std::move(w2));
      }
    out = std::move(next);
  }
  return out;
}

inline bool contains_factor(const Word& w, const Word& f) {
  return std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end();
}

/// A word predicate defining a shift by "no factor is bad".
using Admissible = std::function<bool(const Word&)>;

inline Admissible avoiding(std::vector<Word> forbidden) {
  return [forbidden = std::move(forbidden)](const Word& w) {
    return std::none_of(forbidden.begin(), forbidden.end(), [&](const Word& f) { return contains_factor(w, f); });
  };
}

/// Words of length n that sit in the middle of an admissible word with
/// `pad` extra symbols on each side: B_n of the shift once pad is large
/// enough for the constraints at hand.
inline std::set<Word> language(int symbols, std::size_t n, const Admissible& ok, std::size_t pad = 4) {
  std::set<Word> out;
  for (const Word& w : all_words(symbols, n + 2 * pad))
    if (ok(w)) out.insert(Word(w.begin() + static_cast<long>(pad), w.begin() + static_cast<long>(pad + n)));
  return out;
}

/// Sliding window image: out_i = rule(w_{[i, i + window)}).
inline Word slide(const Word& w, std::size_t window, const std::function<Symbol(const Word&)>& rule) {
  Word out;
  for (std::size_t i = 0; i + window <= w.size(); ++i) out.push_back(rule(Word(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i + window))));
  return out;
}

/// K-step gluing on words: uv, va in B and |v| = K imply uva in B, for
/// single symbols u, a. `language` must answer membership for lengths up to K + 2.
inline bool glues(int symbols, std::size_t K, const std::function<bool(const Word&)>& in_language) {
  for (const Word& v : all_words(symbols, K)) {
    if (!in_language(v)) continue;
    for (int u = 0; u < symbols; ++u)
      for (int a = 0; a < symbols; ++a) {
        Word uv{u}, va = v, uva{u};
        uv.insert(uv.end(), v.begin(), v.end());
        va.push_back(a);
        uva.insert(uva.end(), v.begin(), v.end());
        uva.push_back(a);
        if (in_language(uv) && in_language(va) && !in_language(uva)) return false;
      }
  }
  return true;
}

}  // namespace oracle
