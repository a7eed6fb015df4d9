#pragma once

#include <span>
#include <vector>

#include "symdyn/presentation.hpp"

namespace symdyn {

/// Minimal deterministic automaton of the language B(X).
///
/// States are the distinct follower sets F(w) = {v : wv in B(X)} of words
/// w in B(X); state 0 is F(empty word). Every state is accepting and missing
/// transitions mean "not in the language". Built by subset construction from
/// the full state set followed by partition refinement, then renumbered in
/// breadth-first order so that equal languages give identical automata.
class FollowerAutomaton {
 public:
  explicit FollowerAutomaton(const Presentation& presentation);

  const Alphabet& alphabet() const { return alphabet_; }
  int size() const { return static_cast<int>(delta_.size() / std::max<std::size_t>(alphabet_.size(), 1)); }
  int initial() const { return 0; }

  /// -1 when wa is not in the language.
  int next(int state, Symbol a) const { return delta_[static_cast<std::size_t>(state) * alphabet_.size() + static_cast<std::size_t>(a)]; }
  int read(int state, std::span<const Symbol> word) const;
  bool accepts(std::span<const Symbol> word) const { return read(initial(), word) >= 0; }

  /// The essential part as a right-resolving presentation.
  Presentation essential() const;

  friend bool operator==(const FollowerAutomaton&, const FollowerAutomaton&) = default;

 private:
  Alphabet alphabet_;
  std::vector<int> delta_;
};

/// Exact equality of the presented languages. Alphabets must contain the same
/// symbol names (order may differ); otherwise AlphabetMismatch.
bool language_equal(const Presentation& a, const Presentation& b);

/// B(a) is a subset of B(b); symbols are matched by name.
bool language_included(const Presentation& a, const Presentation& b);

}  // namespace symdyn
