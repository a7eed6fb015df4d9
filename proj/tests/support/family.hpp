#pragma once

// The exhaustive family of small 1-block codes used by the cross-checks:
//   (a) every labeled graph with at most 2 states over at most 3 symbols,
//   (b) every vertex shift on at most 3 symbols,
//   (c) every right-resolving graph with 3 states over 2 symbols,
// each domain kept once per language, with every 1-block rule up to renaming
// of the codomain (set partitions of the used symbols).

#include <map>
#include <string>
#include <vector>

#include "symdyn/code.hpp"
#include "symdyn/error.hpp"
#include "symdyn/follower.hpp"
#include "symdyn/shift.hpp"

namespace family {

using namespace symdyn;

struct Member {
  SlidingBlockCode code;
  bool vertex_domain;
  std::string origin;
};

inline Alphabet numbered(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return Alphabet(names);
}

/// Restricted growth strings: images[i] <= 1 + max(images[0..i)).
inline void partitions(std::size_t n, std::vector<Symbol>& prefix, std::vector<std::vector<Symbol>>& out) {
  if (prefix.size() == n) {
    out.push_back(prefix);
    return;
  }
  Symbol top = -1;
  for (Symbol s : prefix) top = std::max(top, s);
  for (Symbol s = 0; s <= top + 1; ++s) {
    prefix.push_back(s);
    partitions(n, prefix, out);
    prefix.pop_back();
  }
}

class Builder {
 public:
  void add_domain(const Presentation& p, bool vertex, const std::string& origin) {
    const FollowerAutomaton f(p);
    std::string key = std::to_string(p.alphabet().size()) + ":";
    for (int q = 0; q < f.size(); ++q)
      for (std::size_t a = 0; a < p.alphabet().size(); ++a) key += std::to_string(f.next(q, static_cast<Symbol>(a))) + ",";
    auto [it, fresh] = seen_.emplace(key, domains_.size());
    if (!fresh) {
      // Same language: keep the first presentation, but remember it is a vertex shift.
      if (vertex) domains_[it->second].vertex = true;
      return;
    }
    domains_.push_back({p, vertex, origin});
  }

  std::vector<Member> members() const {
    std::vector<Member> out;
    for (const auto& d : domains_) {
      const std::vector<Symbol> used = d.presentation.used_symbols();
      std::vector<std::vector<Symbol>> rules;
      std::vector<Symbol> prefix;
      partitions(used.size(), prefix, rules);
      for (const auto& rule : rules) {
        std::vector<Symbol> images(d.presentation.alphabet().size(), 0);
        Symbol top = 0;
        for (std::size_t i = 0; i < used.size(); ++i) {
          images[static_cast<std::size_t>(used[i])] = rule[i];
          top = std::max(top, rule[i]);
        }
        out.push_back({SlidingBlockCode::one_block(d.presentation, images, numbered(top + 1)), d.vertex, d.origin});
      }
    }
    return out;
  }

  std::size_t num_domains() const { return domains_.size(); }

 private:
  struct Domain {
    Presentation presentation;
    bool vertex;
    std::string origin;
  };
  std::vector<Domain> domains_;
  std::map<std::string, std::size_t> seen_;
};

inline void add_graphs(Builder& b, int states, int symbols) {
  std::vector<Edge> all;
  for (int s = 0; s < states; ++s)
    for (int a = 0; a < symbols; ++a)
      for (int t = 0; t < states; ++t) all.push_back({s, a, t});
  for (unsigned long mask = 1; mask < (1UL << all.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1) edges.push_back(all[i]);
    try {
      b.add_domain(Presentation(numbered(symbols), static_cast<std::size_t>(states), edges), false, "graph");
    } catch (const EmptyShiftError&) {
    }
  }
}

inline void add_vertex_shifts(Builder& b, int symbols) {
  const int cells = symbols * symbols;
  for (unsigned long mask = 1; mask < (1UL << cells); ++mask) {
    std::vector<std::vector<bool>> allowed(static_cast<std::size_t>(symbols), std::vector<bool>(static_cast<std::size_t>(symbols)));
    for (int i = 0; i < cells; ++i) allowed[static_cast<std::size_t>(i / symbols)][static_cast<std::size_t>(i % symbols)] = mask >> i & 1;
    try {
      b.add_domain(vertex_shift(numbered(symbols), allowed), true, "vertex");
    } catch (const EmptyShiftError&) {
    }
  }
}

inline void add_right_resolving(Builder& b, int states, int symbols) {
  const int slots = states * symbols;
  std::vector<int> choice(static_cast<std::size_t>(slots), 0);  // 0 = no edge, t + 1 = edge to t
  for (;;) {
    std::vector<Edge> edges;
    for (int i = 0; i < slots; ++i)
      if (choice[static_cast<std::size_t>(i)] > 0) edges.push_back({i / symbols, i % symbols, choice[static_cast<std::size_t>(i)] - 1});
    try {
      b.add_domain(Presentation(numbered(symbols), static_cast<std::size_t>(states), edges), false, "right-resolving");
    } catch (const EmptyShiftError&) {
    }
    int i = 0;
    while (i < slots && ++choice[static_cast<std::size_t>(i)] > states) choice[static_cast<std::size_t>(i++)] = 0;
    if (i == slots) break;
  }
}

inline std::vector<Member> exhaustive() {
  Builder b;
  for (int symbols = 1; symbols <= 3; ++symbols) {
    add_vertex_shifts(b, symbols);
    for (int states = 1; states <= 2; ++states) add_graphs(b, states, symbols);
  }
  add_right_resolving(b, 3, 2);
  return b.members();
}

}  // namespace family
