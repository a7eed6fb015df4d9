#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "symdyn/alphabet.hpp"

namespace symdyn {

using State = int;
using StateSet = boost::dynamic_bitset<>;

struct Edge {
  State source;
  Symbol label;
  State target;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Forbidden-word description of a shift of finite type.
struct SftSpec {
  Alphabet alphabet;
  std::vector<Word> forbidden;

  /// N for an N-step SFT: longest forbidden word length minus one.
  int step() const;

  friend bool operator==(const SftSpec&, const SftSpec&) = default;
};

/// Finite labeled directed graph presenting a sofic shift.
///
/// Construction trims the graph to its essential part (every state keeps an
/// incoming and an outgoing edge) and throws EmptyShiftError when nothing is
/// left. States that survive keep their relative order, so a graph that is
/// already essential keeps its numbering.
class Presentation {
 public:
  Presentation(Alphabet alphabet, std::vector<std::string> state_names, std::vector<Edge> edges);
  /// States named "0", "1", ...
  Presentation(Alphabet alphabet, std::size_t num_states, std::vector<Edge> edges);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t num_states() const { return state_names_.size(); }
  const std::vector<std::string>& state_names() const { return state_names_; }
  const std::vector<Edge>& edges() const { return edges_; }

  const std::optional<SftSpec>& sft_spec() const { return sft_spec_; }
  void set_sft_spec(SftSpec spec) { sft_spec_ = std::move(spec); }

  StateSet all_states() const { return StateSet(num_states()).set(); }
  StateSet no_states() const { return StateSet(num_states()); }

  const std::vector<State>& successors(State s, Symbol a) const { return succ_[index(s, a)]; }
  const std::vector<State>& predecessors(State t, Symbol a) const { return pred_[index(t, a)]; }

  /// States reachable from `from` by one edge labeled a.
  StateSet step(const StateSet& from, Symbol a) const;
  /// States with an edge labeled a into `to`.
  StateSet step_back(const StateSet& to, Symbol a) const;
  StateSet read(StateSet from, std::span<const Symbol> word) const;
  /// States from which some path labeled `word` ends in `to`.
  StateSet read_back(StateSet to, std::span<const Symbol> word) const;

  /// End states of left-infinite paths labeled ...loop loop loop.
  StateSet left_periodic_states(std::span<const Symbol> loop) const;
  /// Start states of right-infinite paths labeled loop loop loop...
  StateSet right_periodic_states(std::span<const Symbol> loop) const;

  /// Symbols that label at least one edge (B_1 of the presented shift).
  std::vector<Symbol> used_symbols() const;

  /// At most one outgoing edge per (state, symbol).
  bool is_right_resolving() const;

 private:
  std::size_t index(State s, Symbol a) const {
    return static_cast<std::size_t>(s) * alphabet_.size() + static_cast<std::size_t>(a);
  }

  Alphabet alphabet_;
  std::vector<std::string> state_names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<State>> succ_;
  std::vector<std::vector<State>> pred_;
  std::optional<SftSpec> sft_spec_;
};

}  // namespace symdyn
