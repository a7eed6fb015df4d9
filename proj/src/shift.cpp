#include "symdyn/shift.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include "symdyn/error.hpp"
#include "symdyn/follower.hpp"

namespace symdyn {

namespace {

bool contains_factor(std::span<const Symbol> word, const std::vector<Word>& forbidden) {
  for (const Word& f : forbidden) {
    if (f.size() > word.size()) continue;
    for (std::size_t i = 0; i + f.size() <= word.size(); ++i)
      if (std::equal(f.begin(), f.end(), word.begin() + static_cast<long>(i))) return true;
  }
  return false;
}

}  // namespace

Presentation from_forbidden(const SftSpec& spec) {
  const Alphabet& alphabet = spec.alphabet;
  const std::size_t k = alphabet.size();
  for (const Word& f : spec.forbidden) {
    if (f.empty()) throw Error("forbidden words must be nonempty");
    for (Symbol s : f)
      if (s < 0 || static_cast<std::size_t>(s) >= k) throw Error("forbidden word uses a symbol outside the alphabet");
  }
  const auto width = static_cast<std::size_t>(spec.step());

  // States: factor-free words of length `width`.
  std::vector<Word> states;
  std::map<Word, State> index;
  Word w(width, 0);
  for (;;) {
    if (!contains_factor(w, spec.forbidden)) {
      index[w] = static_cast<State>(states.size());
      states.push_back(w);
    }
    std::size_t i = width;
    while (i > 0 && static_cast<std::size_t>(w[i - 1]) + 1 == k) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
  }

  std::vector<Edge> edges;
  for (std::size_t s = 0; s < states.size(); ++s) {
    for (std::size_t a = 0; a < k; ++a) {
      Word window = states[s];
      window.push_back(static_cast<Symbol>(a));
      if (contains_factor(window, spec.forbidden)) continue;
      Word target(window.begin() + 1, window.end());
      edges.push_back({static_cast<State>(s), static_cast<Symbol>(a), index.at(target)});
    }
  }
  std::vector<std::string> names;
  for (const Word& s : states) names.push_back(s.empty() ? "e" : block_name(alphabet, s));
  Presentation p(alphabet, std::move(names), std::move(edges));
  p.set_sft_spec(spec);
  return p;
}

Presentation full_shift(const Alphabet& alphabet) {
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < alphabet.size(); ++a) edges.push_back({0, static_cast<Symbol>(a), 0});
  Presentation p(alphabet, std::vector<std::string>{"e"}, std::move(edges));
  p.set_sft_spec(SftSpec{alphabet, {}});
  return p;
}

Presentation vertex_shift(const Alphabet& alphabet, const std::vector<std::vector<bool>>& allowed) {
  const std::size_t k = alphabet.size();
  if (allowed.size() != k) throw Error("adjacency matrix size does not match the alphabet");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    if (allowed[i].size() != k) throw Error("adjacency matrix must be square");
    for (std::size_t j = 0; j < k; ++j)
      if (allowed[i][j]) edges.push_back({static_cast<State>(i), static_cast<Symbol>(j), static_cast<State>(j)});
  }
  return Presentation(alphabet, alphabet.names(), std::move(edges));
}

bool is_vertex_shift(const Presentation& p) {
  std::vector<Symbol> label(p.num_states(), -1);
  for (const Edge& e : p.edges()) {
    auto& l = label[static_cast<std::size_t>(e.target)];
    if (l >= 0 && l != e.label) return false;
    l = e.label;
  }
  std::vector<Symbol> sorted = label;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::set<Word> language(const Presentation& p, std::size_t n) {
  std::set<Word> out;
  Word w;
  const std::size_t k = p.alphabet().size();
  std::function<void(const StateSet&)> extend = [&](const StateSet& states) {
    if (w.size() == n) {
      out.insert(w);
      return;
    }
    for (std::size_t a = 0; a < k; ++a) {
      StateSet next = p.step(states, static_cast<Symbol>(a));
      if (next.none()) continue;
      w.push_back(static_cast<Symbol>(a));
      extend(next);
      w.pop_back();
    }
  };
  extend(p.all_states());
  return out;
}

bool in_language(const Presentation& p, std::span<const Symbol> word) { return p.read(p.all_states(), word).any(); }

Presentation determinize(const Presentation& p) {
  const std::size_t k = p.alphabet().size();
  std::vector<StateSet> subsets;
  std::unordered_map<StateSet, State> index;
  std::vector<Edge> edges;
  auto intern = [&](StateSet s) {
    auto [it, fresh] = index.emplace(s, static_cast<State>(subsets.size()));
    if (fresh) subsets.push_back(std::move(s));
    return it->second;
  };
  intern(p.all_states());
  for (std::size_t q = 0; q < subsets.size(); ++q) {
    for (std::size_t a = 0; a < k; ++a) {
      StateSet next = p.step(subsets[q], static_cast<Symbol>(a));
      if (next.none()) continue;
      edges.push_back({static_cast<State>(q), static_cast<Symbol>(a), intern(std::move(next))});
    }
  }
  std::vector<std::string> names;
  for (const StateSet& s : subsets) {
    std::string name = "{";
    for (auto i = s.find_first(); i != StateSet::npos; i = s.find_next(i)) {
      if (name.size() > 1) name += ',';
      name += p.state_names()[i];
    }
    names.push_back(name + "}");
  }
  return Presentation(p.alphabet(), std::move(names), std::move(edges));
}

Presentation minimize(const Presentation& p) { return FollowerAutomaton(p).essential(); }

Presentation reverse(const Presentation& p) {
  std::vector<Edge> edges;
  edges.reserve(p.edges().size());
  for (const Edge& e : p.edges()) edges.push_back({e.target, e.label, e.source});
  return Presentation(p.alphabet(), p.state_names(), std::move(edges));
}

namespace {

// Longest word separating two distinct follower states (both reads defined,
// ending in distinct states). nullopt when separating words are unbounded.
// Returns -1 when there are no distinct pairs at all.
std::optional<int> longest_separating_word(const FollowerAutomaton& f) {
  const int n = f.size();
  const auto k = static_cast<Symbol>(f.alphabet().size());
  auto id = [n](int p, int q) { return p < q ? p * n + q : q * n + p; };
  std::vector<int> memo(static_cast<std::size_t>(n) * n, -2);  // -2 unvisited, -3 on stack
  std::optional<int> best = -1;
  // Iterative DFS over distinct pairs computing longest paths; a back edge
  // means a cycle of distinct pairs, i.e. not an SFT.
  struct Frame {
    int p, q;
    Symbol a;
    int best;
  };
  for (int p0 = 0; p0 < n; ++p0) {
    for (int q0 = p0 + 1; q0 < n; ++q0) {
      if (memo[id(p0, q0)] != -2) continue;
      std::vector<Frame> stack{{p0, q0, 0, 0}};
      memo[id(p0, q0)] = -3;
      while (!stack.empty()) {
        Frame& fr = stack.back();
        if (fr.a == k) {
          memo[id(fr.p, fr.q)] = fr.best;
          int done = fr.best;
          stack.pop_back();
          if (!stack.empty()) stack.back().best = std::max(stack.back().best, done + 1);
          continue;
        }
        Symbol a = fr.a++;
        int p2 = f.next(fr.p, a), q2 = f.next(fr.q, a);
        if (p2 < 0 || q2 < 0 || p2 == q2) continue;
        int m = memo[id(p2, q2)];
        if (m == -3) return std::nullopt;
        if (m >= 0) {
          fr.best = std::max(fr.best, m + 1);
          continue;
        }
        memo[id(p2, q2)] = -3;
        stack.push_back({std::min(p2, q2), std::max(p2, q2), 0, 0});
      }
      best = std::max(*best, memo[id(p0, q0)]);
    }
  }
  return best;
}

}  // namespace

std::optional<int> step_of(const Presentation& p) {
  auto longest = longest_separating_word(FollowerAutomaton(p));
  if (!longest) return std::nullopt;
  return *longest + 1;
}

bool is_sft(const Presentation& p) { return step_of(p).has_value(); }

bool lasso_membership(const LassoPoint& point, const Presentation& p) {
  for (const Word* w : {&point.left_loop(), &point.center(), &point.right_loop()})
    for (Symbol s : *w)
      if (s < 0 || static_cast<std::size_t>(s) >= p.alphabet().size()) return false;
  StateSet ends = p.left_periodic_states(point.left_loop());
  StateSet after_center = p.read(ends, point.center());
  return (after_center & p.right_periodic_states(point.right_loop())).any();
}

}  // namespace symdyn
