#include "symdyn/random.hpp"

#include <map>

#include "symdyn/error.hpp"
#include "symdyn/follower.hpp"
#include "symdyn/shift.hpp"

namespace symdyn {

namespace {

constexpr int kMaxDraws = 10000;

Alphabet numbered_alphabet(int size) {
  std::vector<std::string> names;
  for (int i = 0; i < size; ++i) names.push_back(std::to_string(i));
  return Alphabet(std::move(names));
}

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& items) {
  std::uniform_int_distribution<std::size_t> dist(0, items.size() - 1);
  return items[dist(rng)];
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

struct Step {
  Symbol label;
  State target;
};

std::vector<Step> out_steps(const Presentation& p, State s) {
  std::vector<Step> steps;
  for (std::size_t a = 0; a < p.alphabet().size(); ++a)
    for (State t : p.successors(s, static_cast<Symbol>(a))) steps.push_back({static_cast<Symbol>(a), t});
  return steps;
}

/// Random walk from `start` until a state repeats; returns the labels of the
/// lead-in, of the cycle, and the state where the cycle starts.
std::tuple<Word, Word, State> walk_to_cycle(Rng& rng, const Presentation& p, State start) {
  std::map<State, std::size_t> seen{{start, 0}};
  Word labels;
  State s = start;
  for (;;) {
    const Step step = pick(rng, out_steps(p, s));
    labels.push_back(step.label);
    s = step.target;
    auto [it, fresh] = seen.emplace(s, labels.size());
    if (!fresh) {
      const auto cut = static_cast<long>(it->second);
      return {Word(labels.begin(), labels.begin() + cut), Word(labels.begin() + cut, labels.end()), s};
    }
  }
}

Word repeated(Rng& rng, const Word& loop, int max_repeat) {
  Word out;
  for (int r = uniform(rng, 1, std::max(1, max_repeat)); r > 0; --r) out.insert(out.end(), loop.begin(), loop.end());
  return out;
}

}  // namespace

namespace {

std::vector<std::vector<bool>> random_transitions(Rng& rng, int symbols, double density) {
  if (symbols < 1) throw PreconditionError("need at least one symbol");
  std::bernoulli_distribution keep(density);
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    std::vector<std::vector<bool>> allowed(static_cast<std::size_t>(symbols), std::vector<bool>(static_cast<std::size_t>(symbols)));
    for (auto& row : allowed)
      for (std::size_t j = 0; j < row.size(); ++j) row[j] = keep(rng);
    try {
      vertex_shift(numbered_alphabet(symbols), allowed);
      return allowed;
    } catch (const EmptyShiftError&) {
    }
  }
  throw Error("could not draw a nonempty vertex shift");
}

}  // namespace

Presentation random_vertex_shift(Rng& rng, int symbols, double density) {
  return vertex_shift(numbered_alphabet(symbols), random_transitions(rng, symbols, density));
}

SftSpec random_sft_spec(Rng& rng, int symbols, double density) {
  const auto allowed = random_transitions(rng, symbols, density);
  SftSpec spec{numbered_alphabet(symbols), {}};
  for (int i = 0; i < symbols; ++i)
    for (int j = 0; j < symbols; ++j)
      if (!allowed[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) spec.forbidden.push_back({i, j});
  return spec;
}

Presentation random_presentation(Rng& rng, int states, int symbols, double density) {
  if (states < 1 || symbols < 1) throw PreconditionError("need at least one state and one symbol");
  std::bernoulli_distribution keep(density);
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    std::vector<Edge> edges;
    for (int s = 0; s < states; ++s)
      for (int a = 0; a < symbols; ++a)
        for (int t = 0; t < states; ++t)
          if (keep(rng)) edges.push_back({s, a, t});
    try {
      return Presentation(numbered_alphabet(symbols), static_cast<std::size_t>(states), std::move(edges));
    } catch (const EmptyShiftError&) {
    }
  }
  throw Error("could not draw a nonempty presentation");
}

SlidingBlockCode random_one_block_code(Rng& rng, const Presentation& domain, int codomain_symbols) {
  if (codomain_symbols < 1) throw PreconditionError("need at least one codomain symbol");
  std::vector<Symbol> images(domain.alphabet().size());
  for (Symbol& b : images) b = uniform(rng, 0, codomain_symbols - 1);
  return SlidingBlockCode::one_block(domain, images, numbered_alphabet(codomain_symbols));
}

LassoPoint random_lasso(Rng& rng, const Presentation& p, int max_center, int max_repeat) {
  const State start = uniform(rng, 0, static_cast<int>(p.num_states()) - 1);
  auto [lead, left_cycle, left_state] = walk_to_cycle(rng, p, start);
  // Middle part from the left cycle's base state.
  Word center;
  State s = left_state;
  for (int k = uniform(rng, 0, max_center); k > 0; --k) {
    const Step step = pick(rng, out_steps(p, s));
    center.push_back(step.label);
    s = step.target;
  }
  auto [tail, right_cycle, right_state] = walk_to_cycle(rng, p, s);
  center.insert(center.end(), tail.begin(), tail.end());
  const long origin = -uniform(rng, 0, static_cast<int>(center.size()));
  return LassoPoint(repeated(rng, left_cycle, max_repeat), center, repeated(rng, right_cycle, max_repeat), origin);
}

LassoPoint random_left_continuation(Rng& rng, const LassoPoint& x, const Presentation& target, int max_center) {
  const LassoPoint xu = x.unrolled(0, 1);
  const Word past = xu.window(xu.origin(), 1);
  // Walk the follower automaton of the target from the follower state of
  // the left half: read enough loop copies to reach a stable state.
  const FollowerAutomaton f(target);
  int q = f.initial();
  for (int r = 0; r <= f.size(); ++r) q = f.read(q, xu.left_loop());
  q = f.read(q, past);
  if (q < 0) throw DomainError("left half of the point is not in the target shift");
  Word center = past;
  std::map<int, std::size_t> seen;
  const int extra = uniform(rng, 0, max_center);
  for (int k = 0;; ++k) {
    if (k >= extra) {
      auto [it, fresh] = seen.emplace(q, center.size());
      if (!fresh) {
        const auto cut = static_cast<long>(it->second);
        Word loop(center.begin() + cut, center.end());
        center.resize(static_cast<std::size_t>(cut));
        return LassoPoint(xu.left_loop(), center, loop, xu.origin());
      }
    }
    std::vector<Symbol> options;
    for (std::size_t b = 0; b < f.alphabet().size(); ++b)
      if (f.next(q, static_cast<Symbol>(b)) >= 0) options.push_back(static_cast<Symbol>(b));
    const Symbol b = pick(rng, options);
    center.push_back(b);
    q = f.next(q, b);
  }
}

}  // namespace symdyn
