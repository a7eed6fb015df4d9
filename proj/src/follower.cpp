#include "symdyn/follower.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "symdyn/error.hpp"

namespace symdyn {

namespace {

struct SubsetDfa {
  std::vector<StateSet> subsets;
  std::vector<int> delta;  // subsets x symbols, -1 = dead
};

SubsetDfa subset_construction(const Presentation& p) {
  const std::size_t k = p.alphabet().size();
  SubsetDfa dfa;
  std::unordered_map<StateSet, int> index;
  auto intern = [&](StateSet s) {
    auto [it, fresh] = index.emplace(s, static_cast<int>(dfa.subsets.size()));
    if (fresh) dfa.subsets.push_back(std::move(s));
    return it->second;
  };
  intern(p.all_states());
  for (std::size_t q = 0; q < dfa.subsets.size(); ++q) {
    for (std::size_t a = 0; a < k; ++a) {
      StateSet next = p.step(dfa.subsets[q], static_cast<Symbol>(a));
      dfa.delta.push_back(next.none() ? -1 : intern(std::move(next)));
    }
  }
  return dfa;
}

}  // namespace

FollowerAutomaton::FollowerAutomaton(const Presentation& presentation) : alphabet_(presentation.alphabet()) {
  const std::size_t k = alphabet_.size();
  SubsetDfa dfa = subset_construction(presentation);
  const std::size_t n = dfa.subsets.size();

  // Moore refinement; all states accept, the dead state is its own class.
  std::vector<int> cls(n, 0);
  for (std::size_t classes = 1;;) {
    std::map<std::vector<int>, int> sig_index;
    std::vector<int> next(n);
    for (std::size_t q = 0; q < n; ++q) {
      std::vector<int> sig{cls[q]};
      for (std::size_t a = 0; a < k; ++a) {
        int t = dfa.delta[q * k + a];
        sig.push_back(t < 0 ? -1 : cls[static_cast<std::size_t>(t)]);
      }
      next[q] = sig_index.emplace(std::move(sig), static_cast<int>(sig_index.size())).first->second;
    }
    cls = std::move(next);
    if (sig_index.size() == classes) break;
    classes = sig_index.size();
  }

  // Renumber classes breadth-first from the initial state.
  std::vector<std::size_t> representative;
  std::deque<std::size_t> queue{0};
  std::vector<int> class_number(n, -1);
  class_number[static_cast<std::size_t>(cls[0])] = 0;
  representative.push_back(0);
  while (!queue.empty()) {
    std::size_t q = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < k; ++a) {
      int t = dfa.delta[q * k + a];
      if (t < 0) continue;
      auto c = static_cast<std::size_t>(cls[static_cast<std::size_t>(t)]);
      if (class_number[c] < 0) {
        class_number[c] = static_cast<int>(representative.size());
        representative.push_back(static_cast<std::size_t>(t));
        queue.push_back(static_cast<std::size_t>(t));
      }
    }
  }
  delta_.assign(representative.size() * k, -1);
  for (std::size_t i = 0; i < representative.size(); ++i) {
    for (std::size_t a = 0; a < k; ++a) {
      int t = dfa.delta[representative[i] * k + a];
      if (t >= 0) delta_[i * k + a] = class_number[static_cast<std::size_t>(cls[static_cast<std::size_t>(t)])];
    }
  }
}

int FollowerAutomaton::read(int state, std::span<const Symbol> word) const {
  for (Symbol a : word) {
    if (state < 0) return -1;
    state = next(state, a);
  }
  return state;
}

Presentation FollowerAutomaton::essential() const {
  std::vector<Edge> edges;
  std::vector<std::string> names;
  const int n = size();
  for (int q = 0; q < n; ++q) {
    names.push_back("F" + std::to_string(q));
    for (std::size_t a = 0; a < alphabet_.size(); ++a) {
      int t = next(q, static_cast<Symbol>(a));
      if (t >= 0) edges.push_back({q, static_cast<Symbol>(a), t});
    }
  }
  return Presentation(alphabet_, std::move(names), std::move(edges));
}

namespace {

// Walks the product of the two follower automata; `strict` demands equal
// sets of defined symbols, otherwise only inclusion of a's in b's.
bool compare_languages(const Presentation& a, const Presentation& b, bool strict) {
  FollowerAutomaton fa(a), fb(b);
  const Alphabet& al = a.alphabet();
  std::vector<Symbol> to_b(al.size(), -1);
  for (std::size_t s = 0; s < al.size(); ++s) to_b[s] = b.alphabet().find(al.name(static_cast<Symbol>(s))).value_or(-1);

  std::map<std::pair<int, int>, bool> seen;
  std::deque<std::pair<int, int>> queue{{0, 0}};
  seen[{0, 0}] = true;
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    std::size_t defined_in_b_from_a = 0;
    for (std::size_t s = 0; s < al.size(); ++s) {
      int pa = fa.next(p, static_cast<Symbol>(s));
      int qb = to_b[s] < 0 ? -1 : fb.next(q, to_b[s]);
      if (pa >= 0 && qb < 0) return false;
      if (pa < 0 && qb >= 0 && strict) return false;
      if (pa >= 0 && qb >= 0) {
        ++defined_in_b_from_a;
        if (seen.emplace(std::make_pair(pa, qb), true).second) queue.emplace_back(pa, qb);
      }
    }
    if (strict) {
      // Symbols of b missing from a's alphabet cannot be defined.
      std::size_t defined_in_b = 0;
      for (std::size_t s = 0; s < b.alphabet().size(); ++s)
        if (fb.next(q, static_cast<Symbol>(s)) >= 0) ++defined_in_b;
      if (defined_in_b != defined_in_b_from_a) return false;
    }
  }
  return true;
}

}  // namespace

bool language_equal(const Presentation& a, const Presentation& b) {
  if (!a.alphabet().same_symbols(b.alphabet()))
    throw AlphabetMismatch("language_equal needs alphabets with the same symbols");
  return compare_languages(a, b, true);
}

bool language_included(const Presentation& a, const Presentation& b) { return compare_languages(a, b, false); }

}  // namespace symdyn
