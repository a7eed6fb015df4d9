#include "symdyn/presentation.hpp"

#include <algorithm>

#include "symdyn/error.hpp"

namespace symdyn {

int SftSpec::step() const {
  std::size_t longest = 0;
  for (const auto& w : forbidden) longest = std::max(longest, w.size());
  return longest == 0 ? 0 : static_cast<int>(longest) - 1;
}

Presentation::Presentation(Alphabet alphabet, std::size_t num_states, std::vector<Edge> edges)
    : Presentation(std::move(alphabet),
                   [&] {
                     std::vector<std::string> names;
                     for (std::size_t i = 0; i < num_states; ++i) names.push_back(std::to_string(i));
                     return names;
                   }(),
                   std::move(edges)) {}

Presentation::Presentation(Alphabet alphabet, std::vector<std::string> state_names, std::vector<Edge> edges)
    : alphabet_(std::move(alphabet)) {
  const std::size_t n = state_names.size();
  for (const Edge& e : edges) {
    if (e.source < 0 || static_cast<std::size_t>(e.source) >= n || e.target < 0 ||
        static_cast<std::size_t>(e.target) >= n)
      throw Error("edge refers to a missing state");
    if (e.label < 0 || static_cast<std::size_t>(e.label) >= alphabet_.size())
      throw Error("edge label outside the alphabet");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  // Trim: repeatedly drop states lacking an incoming or outgoing edge.
  std::vector<bool> alive(n, true);
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<int> in(n, 0), out(n, 0);
    for (const Edge& e : edges) {
      if (alive[e.source] && alive[e.target]) {
        ++out[e.source];
        ++in[e.target];
      }
    }
    for (std::size_t s = 0; s < n; ++s) {
      if (alive[s] && (in[s] == 0 || out[s] == 0)) {
        alive[s] = false;
        changed = true;
      }
    }
  }
  std::vector<State> renumber(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (alive[s]) {
      renumber[s] = static_cast<State>(state_names_.size());
      state_names_.push_back(std::move(state_names[s]));
    }
  }
  if (state_names_.empty()) throw EmptyShiftError("the presented shift is empty");
  for (const Edge& e : edges) {
    if (alive[e.source] && alive[e.target]) edges_.push_back({renumber[e.source], e.label, renumber[e.target]});
  }
  std::sort(edges_.begin(), edges_.end());

  succ_.assign(num_states() * alphabet_.size(), {});
  pred_.assign(num_states() * alphabet_.size(), {});
  for (const Edge& e : edges_) {
    succ_[index(e.source, e.label)].push_back(e.target);
    pred_[index(e.target, e.label)].push_back(e.source);
  }
}

StateSet Presentation::step(const StateSet& from, Symbol a) const {
  StateSet out(num_states());
  for (auto s = from.find_first(); s != StateSet::npos; s = from.find_next(s))
    for (State t : succ_[index(static_cast<State>(s), a)]) out.set(static_cast<std::size_t>(t));
  return out;
}

StateSet Presentation::step_back(const StateSet& to, Symbol a) const {
  StateSet out(num_states());
  for (auto t = to.find_first(); t != StateSet::npos; t = to.find_next(t))
    for (State s : pred_[index(static_cast<State>(t), a)]) out.set(static_cast<std::size_t>(s));
  return out;
}

StateSet Presentation::read(StateSet from, std::span<const Symbol> word) const {
  for (Symbol a : word) {
    if (from.none()) break;
    from = step(from, a);
  }
  return from;
}

StateSet Presentation::read_back(StateSet to, std::span<const Symbol> word) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (to.none()) break;
    to = step_back(to, *it);
  }
  return to;
}

StateSet Presentation::left_periodic_states(std::span<const Symbol> loop) const {
  // Decreasing iteration from all states converges to the greatest fixed
  // point, which (finite branching) is exactly the set of ends of
  // left-infinite paths.
  StateSet cur = all_states();
  for (;;) {
    StateSet next = read(cur, loop) & cur;
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

StateSet Presentation::right_periodic_states(std::span<const Symbol> loop) const {
  StateSet cur = all_states();
  for (;;) {
    StateSet next = read_back(cur, loop) & cur;
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

std::vector<Symbol> Presentation::used_symbols() const {
  std::vector<bool> used(alphabet_.size(), false);
  for (const Edge& e : edges_) used[static_cast<std::size_t>(e.label)] = true;
  std::vector<Symbol> out;
  for (std::size_t a = 0; a < used.size(); ++a)
    if (used[a]) out.push_back(static_cast<Symbol>(a));
  return out;
}

bool Presentation::is_right_resolving() const {
  return std::all_of(succ_.begin(), succ_.end(), [](const auto& v) { return v.size() <= 1; });
}

}  // namespace symdyn
