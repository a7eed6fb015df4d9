#include "symdyn/resolving.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>

#include "symdyn/error.hpp"
#include "symdyn/shift.hpp"

namespace symdyn {

namespace {

constexpr int kMaxRetractLayers = 100000;

const SlidingBlockCode& one_block_only(const SlidingBlockCode& code) {
  if (!code.is_one_block()) throw PreconditionError("operation needs a 1-block code");
  return code;
}

std::vector<Symbol> symbol_images(const SlidingBlockCode& code) {
  std::vector<Symbol> phi(code.domain().alphabet().size(), -1);
  for (Symbol a : code.domain().used_symbols()) phi[static_cast<std::size_t>(a)] = code.map_symbol(a);
  return phi;
}

Word map_word(const std::vector<Symbol>& phi, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Symbol a : w) out.push_back(phi[static_cast<std::size_t>(a)]);
  return out;
}

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

long floor_mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

/// Splits a walk at the first repeated position into (lead-in, cycle).
template <typename Key>
std::pair<Word, Word> split_walk(const Word& labels, const std::map<Key, std::size_t>& seen, const Key& repeated) {
  const auto cut = static_cast<long>(seen.at(repeated));
  return {Word(labels.begin(), labels.begin() + cut), Word(labels.begin() + cut, labels.end())};
}

/// Walk taking the smallest available symbol (and first target) until a
/// state repeats.
std::pair<Word, Word> forward_walk(const Presentation& p, State start) {
  std::map<State, std::size_t> seen{{start, 0}};
  Word labels;
  State s = start;
  for (;;) {
    Symbol a = 0;
    while (p.successors(s, a).empty()) ++a;
    labels.push_back(a);
    s = p.successors(s, a).front();
    if (!seen.emplace(s, labels.size()).second) return split_walk(labels, seen, s);
  }
}

std::pair<Word, Word> follower_walk(const FollowerAutomaton& f, int start) {
  std::map<int, std::size_t> seen{{start, 0}};
  Word labels;
  int q = start;
  for (;;) {
    Symbol b = 0;
    while (f.next(q, b) < 0) ++b;
    labels.push_back(b);
    q = f.next(q, b);
    if (!seen.emplace(q, labels.size()).second) return split_walk(labels, seen, q);
  }
}

State first_state(const StateSet& s) { return static_cast<State>(s.find_first()); }

/// End states at coordinate k of left-infinite paths labeled x_{(-inf, k]}.
StateSet states_at(const Presentation& p, const LassoPoint& x, long k) {
  LassoPoint xu = x.unrolled(k, k + 1);
  StateSet ends = p.left_periodic_states(xu.left_loop());
  return p.read(ends, xu.window(xu.origin(), k + 1));
}

/// States at coordinate k from which y_{[k+1, inf)} can be read.
StateSet readable_from(const Presentation& p, const LassoPoint& y, long k) {
  LassoPoint yu = y.unrolled(k + 1, k + 2);
  StateSet starts = p.right_periodic_states(yu.right_loop());
  return p.read_back(starts, yu.window(k + 1, yu.center_end()));
}

/// Words of B(p) of length 1..bound in length-then-lexicographic order.
std::vector<Word> words_up_to(const Presentation& p, int bound, bool primitive_only) {
  const std::vector<Symbol> symbols = p.used_symbols();
  std::vector<Word> out;
  std::vector<std::pair<Word, StateSet>> level{{{}, p.all_states()}};
  for (int len = 1; len <= bound; ++len) {
    std::vector<std::pair<Word, StateSet>> next;
    for (const auto& [w, reach] : level) {
      for (Symbol a : symbols) {
        StateSet t = p.step(reach, a);
        if (t.none()) continue;
        Word w2 = w;
        w2.push_back(a);
        next.emplace_back(std::move(w2), std::move(t));
      }
    }
    for (const auto& entry : next)
      if (!primitive_only || primitive_period(entry.first) == entry.first.size()) out.push_back(entry.first);
    level = std::move(next);
  }
  return out;
}

struct RightRay {
  Word center;
  Word loop;
};

/// Right rays w' v^inf with |w'|, |v| <= bound, one per distinct set of
/// states able to read them.
std::vector<std::pair<StateSet, RightRay>> right_rays(const Presentation& p, int bound) {
  std::vector<std::pair<StateSet, RightRay>> rays;
  std::map<StateSet, int> depth;
  for (const Word& v : words_up_to(p, bound, true)) {
    StateSet g = p.right_periodic_states(v);
    if (g.none() || depth.count(g)) continue;
    depth[g] = 0;
    rays.push_back({g, {{}, v}});
  }
  // Prepend symbols breadth first; the first discovery has minimal center.
  const std::vector<Symbol> symbols = p.used_symbols();
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (depth[rays[i].first] >= bound) continue;
    for (Symbol b : symbols) {
      StateSet g = p.step_back(rays[i].first, b);
      if (g.none() || depth.count(g)) continue;
      depth[g] = depth[rays[i].first] + 1;
      RightRay ray = rays[i].second;
      ray.center.insert(ray.center.begin(), b);
      rays.push_back({g, std::move(ray)});
    }
  }
  return rays;
}

}  // namespace

EresolvingResult is_right_eresolving(const SlidingBlockCode& code) {
  one_block_only(code);
  const Presentation& d = code.domain();
  const Presentation img = image(code);
  std::map<Symbol, std::set<Symbol>> extensions;
  for (const Word& w : language(d, 2)) extensions[w[0]].insert(code.map_symbol(w[1]));
  const auto image_pairs = language(img, 2);
  for (Symbol a0 : d.used_symbols()) {
    const Symbol b0 = code.map_symbol(a0);
    for (const Word& b : image_pairs)
      if (b[0] == b0 && !extensions[a0].count(b[1])) return {false, std::make_pair(a0, b)};
  }
  return {};
}

EresolvingResult is_left_eresolving(const SlidingBlockCode& code) {
  one_block_only(code);
  return is_right_eresolving(reversed(code));
}

RetractAnalyzer::RetractAnalyzer(const SlidingBlockCode& code, std::size_t max_configurations)
    : code_(one_block_only(code)),
      image_(image(code)),
      follower_(image_),
      phi_(symbol_images(code)),
      max_configurations_(max_configurations) {
  build_configurations();
  build_limit_configurations();
}

void RetractAnalyzer::build_configurations() {
  const Presentation& d = code_.domain();
  std::map<std::pair<StateSet, int>, int> index;
  auto add = [&](StateSet states, int follower) {
    auto [it, fresh] = index.emplace(std::make_pair(states, follower), static_cast<int>(configs_.size()));
    if (fresh) {
      if (configs_.size() >= max_configurations_)
        throw CapExceeded("retract analysis exceeds " + std::to_string(max_configurations_) + " configurations");
      configs_.push_back({std::move(states), follower});
    }
    return it->second;
  };
  add(d.all_states(), follower_.initial());
  const std::size_t symbols = d.alphabet().size();
  for (std::size_t c = 0; c < configs_.size(); ++c) {
    std::vector<int> row(symbols, -1);
    for (std::size_t a = 0; a < symbols; ++a) {
      if (phi_[a] < 0) continue;
      StateSet next = d.step(configs_[c].states, static_cast<Symbol>(a));
      if (next.none()) continue;
      const int q = follower_.next(configs_[c].follower, phi_[a]);
      row[a] = add(std::move(next), q);
    }
    trans_.push_back(std::move(row));
  }
}

void RetractAnalyzer::build_limit_configurations() {
  const int count = static_cast<int>(configs_.size());
  const std::size_t symbols = phi_.size();

  // Configurations on a cycle of the transition graph.
  std::vector<bool> on_cycle(static_cast<std::size_t>(count), false);
  for (int z = 0; z < count; ++z) {
    std::vector<bool> seen(static_cast<std::size_t>(count), false);
    std::deque<int> queue{z};
    while (!queue.empty() && !on_cycle[static_cast<std::size_t>(z)]) {
      const int c = queue.front();
      queue.pop_front();
      for (int t : trans_[static_cast<std::size_t>(c)]) {
        if (t < 0) continue;
        if (t == z) {
          on_cycle[static_cast<std::size_t>(z)] = true;
          break;
        }
        if (!seen[static_cast<std::size_t>(t)]) {
          seen[static_cast<std::size_t>(t)] = true;
          queue.push_back(t);
        }
      }
    }
  }

  // z is periodic when some u has f_u(start) = z and f_u(z) = z: search the
  // pair graph from (start, z) for (z, z).
  for (int z = 0; z < count; ++z) {
    if (!on_cycle[static_cast<std::size_t>(z)]) continue;
    auto key = [count](int c1, int c2) { return static_cast<long>(c1) * count + c2; };
    std::unordered_map<long, std::pair<long, Symbol>> parent;
    const long root = key(0, z), goal = key(z, z);
    parent[root] = {-1, -1};
    std::deque<long> queue{root};
    bool found = false;
    while (!queue.empty() && !found) {
      const long pair = queue.front();
      queue.pop_front();
      const auto c1 = static_cast<std::size_t>(pair / count), c2 = static_cast<std::size_t>(pair % count);
      for (std::size_t a = 0; a < symbols; ++a) {
        const int t1 = trans_[c1][a], t2 = trans_[c2][a];
        if (t1 < 0 || t2 < 0) continue;
        const long next = key(t1, t2);
        if (next == goal) {
          Word loop{static_cast<Symbol>(a)};
          for (long p = pair; p != root; p = parent[p].first) loop.push_back(parent[p].second);
          std::reverse(loop.begin(), loop.end());
          periodic_loop_[z] = std::move(loop);
          found = true;
          break;
        }
        if (parent.emplace(next, std::make_pair(pair, static_cast<Symbol>(a))).second) queue.push_back(next);
      }
    }
  }

  // Forward closure of the periodic configurations.
  std::deque<int> queue;
  for (const auto& [z, loop] : periodic_loop_) {
    limit_info_[z] = {z, {}};
    limit_.push_back(z);
    queue.push_back(z);
  }
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < symbols; ++a) {
      const int t = trans_[static_cast<std::size_t>(c)][a];
      if (t < 0 || limit_info_.count(t)) continue;
      LimitInfo info = limit_info_.at(c);
      info.path.push_back(static_cast<Symbol>(a));
      limit_info_[t] = std::move(info);
      limit_.push_back(t);
      queue.push_back(t);
    }
  }
}

const RetractAnalyzer::Layer& RetractAnalyzer::layer(int n) {
  if (layers_.empty()) {
    Layer first;
    for (int c : limit_) first.push_back({c, configs_[static_cast<std::size_t>(c)].states, -1, -1});
    layers_.push_back(std::move(first));
  }
  while (static_cast<int>(layers_.size()) <= n) {
    const Layer& prev = layers_.back();
    Layer next;
    std::map<std::pair<int, StateSet>, std::size_t> seen;
    for (std::size_t i = 0; i < prev.size(); ++i) {
      for (std::size_t a = 0; a < phi_.size(); ++a) {
        const int c = trans_[static_cast<std::size_t>(prev[i].config)][a];
        if (c < 0) continue;
        StateSet lift = image_.step(prev[i].lift, phi_[a]);
        if (seen.emplace(std::make_pair(c, lift), next.size()).second)
          next.push_back({c, std::move(lift), static_cast<int>(i), static_cast<Symbol>(a)});
      }
    }
    layers_.push_back(std::move(next));
  }
  return layers_[static_cast<std::size_t>(n)];
}

std::optional<Word> RetractAnalyzer::failing_continuation(const StateSet& lift, int follower) {
  if (good_.count({lift, follower})) return std::nullopt;
  struct Node {
    StateSet lift;
    int follower;
    int parent;
    Symbol symbol;
  };
  std::vector<Node> nodes{{lift, follower, -1, -1}};
  std::set<std::pair<StateSet, int>> seen{{lift, follower}};
  const auto symbols = static_cast<Symbol>(image_.alphabet().size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (Symbol b = 0; b < symbols; ++b) {
      const int q = follower_.next(nodes[i].follower, b);
      if (q < 0) continue;
      StateSet next = image_.step(nodes[i].lift, b);
      if (next.none()) {
        Word word{b};
        for (int j = static_cast<int>(i); nodes[static_cast<std::size_t>(j)].parent >= 0;
             j = nodes[static_cast<std::size_t>(j)].parent)
          word.push_back(nodes[static_cast<std::size_t>(j)].symbol);
        std::reverse(word.begin(), word.end());
        return word;
      }
      std::pair<StateSet, int> key{next, q};
      if (good_.count(key) || !seen.insert(key).second) continue;
      nodes.push_back({std::move(next), q, static_cast<int>(i), b});
    }
  }
  for (Node& node : nodes) good_.insert({std::move(node.lift), node.follower});
  return std::nullopt;
}

std::optional<std::pair<std::size_t, Word>> RetractAnalyzer::first_failure(int n) {
  const Layer& triples = layer(n);
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const Triple& t = triples[i];
    if (auto word = failing_continuation(t.lift, configs_[static_cast<std::size_t>(t.config)].follower))
      return std::make_pair(i, std::move(*word));
  }
  return std::nullopt;
}

CodedPair RetractAnalyzer::witness(int n, std::size_t index, const Word& failure) {
  Word tail;
  std::size_t k = index;
  for (int level = n; level > 0; --level) {
    const Triple& t = layers_[static_cast<std::size_t>(level)][k];
    tail.push_back(t.symbol);
    k = static_cast<std::size_t>(t.parent);
  }
  std::reverse(tail.begin(), tail.end());
  const LimitInfo& info = limit_info_.at(layers_[0][k].config);
  const Word& loop = periodic_loop_.at(info.root);
  const Word center = concat(info.path, tail);
  const long origin = 1 - static_cast<long>(center.size());

  const Config& last = configs_[static_cast<std::size_t>(layers_[static_cast<std::size_t>(n)][index].config)];
  auto [xpath, xcycle] = forward_walk(code_.domain(), first_state(last.states));
  LassoPoint x(loop, concat(center, xpath), xcycle, origin);

  auto [ypath, ycycle] = follower_walk(follower_, follower_.read(last.follower, failure));
  LassoPoint y(map_word(phi_, loop), concat(concat(map_word(phi_, center), failure), ypath), ycycle, origin);
  return {x.canonical(), y.canonical()};
}

RetractVerdict RetractAnalyzer::check(int n) {
  if (n < 0) throw PreconditionError("retract distance must be nonnegative");
  if (auto failure = first_failure(n)) return {false, n, witness(n, failure->first, failure->second)};
  return {true, n, std::nullopt};
}

std::optional<int> RetractAnalyzer::minimal_retract() {
  std::set<std::vector<std::pair<int, StateSet>>> seen;
  for (int n = 0; n < kMaxRetractLayers; ++n) {
    if (!first_failure(n)) return n;
    std::vector<std::pair<int, StateSet>> keys;
    for (const Triple& t : layer(n)) keys.emplace_back(t.config, t.lift);
    std::sort(keys.begin(), keys.end());
    if (!seen.insert(std::move(keys)).second) return std::nullopt;
  }
  throw CapExceeded("retract layers did not stabilize");
}

RetractVerdict check_retract(const SlidingBlockCode& code, int n) { return RetractAnalyzer(code).check(n); }

std::optional<int> minimal_retract(const SlidingBlockCode& code) { return RetractAnalyzer(code).minimal_retract(); }

std::optional<int> minimal_left_retract(const SlidingBlockCode& code) { return minimal_retract(reversed(code)); }

bool lift_exists(const SlidingBlockCode& code, const LassoPoint& x, const LassoPoint& y, long k) {
  one_block_only(code);
  return states_at(code.domain(), x, k).intersects(readable_from(image(code), y, k));
}

bool validate_retract_witness(const SlidingBlockCode& code, int n, const CodedPair& witness) {
  one_block_only(code);
  if (!lasso_membership(witness.x, code.domain())) return false;
  if (!lasso_membership(witness.y, image(code))) return false;
  if (!apply(code, witness.x).agrees_left(witness.y, 0)) return false;
  return !lift_exists(code, witness.x, witness.y, -n);
}

bool is_right_continuing_sft(const SlidingBlockCode& code) {
  if (!is_sft(code.domain())) throw NotApplicable("right continuing is only decided for SFT domains");
  if (code.is_one_block()) return minimal_retract(code).has_value();
  return minimal_retract(recode_to_one_block(code).one_block).has_value();
}

RetractOracle::RetractOracle(const SlidingBlockCode& code, int bound)
    : code_(code), image_(image(code)), phi_(symbol_images(code)) {
  one_block_only(code);
  if (bound < 1) throw PreconditionError("oracle needs a positive bound");
  const Presentation& d = code_.domain();
  const std::vector<Symbol> symbols = d.used_symbols();

  // Left rays u^inf w, one per (exact domain states, exact image states).
  std::map<std::pair<StateSet, StateSet>, int> depth;
  for (const Word& u : words_up_to(d, bound, true)) {
    StateSet e = d.left_periodic_states(u);
    if (e.none()) continue;
    StateSet ey = image_.left_periodic_states(map_word(phi_, u));
    if (depth.emplace(std::make_pair(e, ey), 0).second) left_.push_back({e, ey, u, {}});
  }
  for (std::size_t i = 0; i < left_.size(); ++i) {
    const int dep = depth.at({left_[i].states, left_[i].image_states});
    if (dep >= bound) continue;
    for (Symbol a : symbols) {
      StateSet t = d.step(left_[i].states, a);
      if (t.none()) continue;
      StateSet ty = image_.step(left_[i].image_states, phi_[static_cast<std::size_t>(a)]);
      if (!depth.emplace(std::make_pair(t, ty), dep + 1).second) continue;
      LeftRay ray{std::move(t), std::move(ty), left_[i].loop, left_[i].center};
      ray.center.push_back(a);
      left_.push_back(std::move(ray));
    }
  }

  for (auto& [readable, ray] : right_rays(image_, bound))
    right_.push_back({std::move(readable), std::move(ray.center), std::move(ray.loop)});
}

RetractVerdict RetractOracle::check(int n) const {
  if (n < 0) throw PreconditionError("oracle needs n >= 0");
  const Presentation& d = code_.domain();
  const std::vector<Symbol> symbols = d.used_symbols();

  // n further symbols: x-states, lift states, image states.
  struct Extended {
    StateSet states;
    StateSet lift;
    StateSet image_states;
    std::size_t ray;
    Word tail;
  };
  std::vector<Extended> current;
  for (std::size_t i = 0; i < left_.size(); ++i)
    current.push_back({left_[i].states, left_[i].states, left_[i].image_states, i, {}});
  for (int step = 0; step < n; ++step) {
    std::vector<Extended> next;
    std::set<std::pair<StateSet, StateSet>> seen;
    for (const Extended& e : current) {
      for (Symbol a : symbols) {
        StateSet t = d.step(e.states, a);
        if (t.none()) continue;
        const Symbol b = phi_[static_cast<std::size_t>(a)];
        StateSet lift = image_.step(e.lift, b);
        StateSet ty = image_.step(e.image_states, b);
        if (!seen.insert({lift, ty}).second) continue;
        Word tail = e.tail;
        tail.push_back(a);
        next.push_back({std::move(t), std::move(lift), std::move(ty), e.ray, std::move(tail)});
      }
    }
    current = std::move(next);
  }

  for (const Extended& e : current) {
    for (const RightRay& ray : right_) {
      if (!e.image_states.intersects(ray.readable) || e.lift.intersects(ray.readable)) continue;
      const LeftRay& left = left_[e.ray];
      const Word center = concat(left.center, e.tail);
      const long origin = 1 - static_cast<long>(center.size());
      auto [xpath, xcycle] = forward_walk(d, first_state(e.states));
      LassoPoint x(left.loop, concat(center, xpath), xcycle, origin);
      LassoPoint y(map_word(phi_, left.loop), concat(map_word(phi_, center), ray.center), ray.loop, origin);
      return {false, n, CodedPair{x.canonical(), y.canonical()}};
    }
  }
  return {true, n, std::nullopt};
}

RetractVerdict oracle_retract(const SlidingBlockCode& code, int n, int bound) {
  if (n < 0) throw PreconditionError("oracle needs n >= 0");
  return RetractOracle(code, bound).check(n);
}

bool left_asymptotic_lift_exists(const SlidingBlockCode& code, const LassoPoint& x, const LassoPoint& y) {
  one_block_only(code);
  const Presentation& d = code.domain();
  const Presentation img = image(code);
  const LassoPoint fx = apply(code, x);
  const long start = std::min({x.origin(), y.origin(), fx.origin()}) - 1;
  if (!fx.agrees_left(y, start)) throw PreconditionError("phi(x) is not left asymptotic to y");

  // Inside the left loop of x the exact end states depend only on the phase.
  const Word& u = x.left_loop();
  const auto period = static_cast<long>(u.size());
  const StateSet ends = d.left_periodic_states(u);
  std::vector<StateSet> by_phase;
  for (std::size_t i = 0; i < u.size(); ++i)
    by_phase.push_back(d.read(ends, std::span<const Symbol>(u.data(), i + 1)));
  auto phase_of = [&](long k) { return static_cast<std::size_t>(period - 1 - floor_mod(x.origin() - 1 - k, period)); };

  const long joint = std::lcm(period, static_cast<long>(y.left_loop().size()));
  StateSet readable = readable_from(img, y, start);
  std::set<std::pair<long, StateSet>> seen;
  for (long k = start;; --k) {
    if (by_phase[phase_of(k)].intersects(readable)) return true;
    if (readable.none() || !seen.insert({floor_mod(k, joint), readable}).second) return false;
    readable = img.step_back(readable, y.at(k));
  }
}

std::optional<CodedPair> refute_right_continuing_bounded(const SlidingBlockCode& code, int bound) {
  one_block_only(code);
  if (bound < 1) throw PreconditionError("search bound must be positive");
  const Presentation& d = code.domain();
  const Presentation img = image(code);
  const std::vector<Symbol> phi = symbol_images(code);
  const auto futures = right_rays(img, bound);
  const auto loops = words_up_to(d, bound, true);
  std::vector<Word> centers{{}};
  for (const Word& w : words_up_to(d, bound, false)) centers.push_back(w);

  for (const Word& u : loops) {
    const StateSet ends = d.left_periodic_states(u);
    if (ends.none()) continue;
    const Word fu = map_word(phi, u);
    const StateSet image_ends = img.left_periodic_states(fu);
    for (const Word& w : centers) {
      // u^inf u_0 w' is the same ray as a rotated loop with a shorter center.
      if (!w.empty() && w.front() == u.front()) continue;
      const StateSet states = d.read(ends, w);
      if (states.none()) continue;
      const Word fw = map_word(phi, w);
      const StateSet image_states = img.read(image_ends, fw);
      const long origin = 1 - static_cast<long>(w.size());
      auto [xpath, xcycle] = forward_walk(d, first_state(states));
      const LassoPoint x(u, concat(w, xpath), xcycle, origin);
      for (const auto& [readable, ray] : futures) {
        if (!image_states.intersects(readable)) continue;
        const LassoPoint y(fu, concat(fw, ray.center), ray.loop, origin);
        if (!left_asymptotic_lift_exists(code, x, y)) return CodedPair{x.canonical(), y.canonical()};
      }
    }
  }
  return std::nullopt;
}

SlidingBlockCode one_step_form(const SlidingBlockCode& code) {
  SlidingBlockCode one = code.is_one_block() ? code : recode_to_one_block(code).one_block;
  const auto step = step_of(one.domain());
  if (!step) throw PreconditionError("domain is not a shift of finite type");
  if (*step <= 1) return one;
  // Blocks x_{[i-N+1, i]} keep coordinate i in place, so retracts are unchanged.
  HigherBlock hb = higher_block(one.domain(), *step - 1, 0);
  std::vector<Symbol> images;
  for (const Word& block : hb.blocks) images.push_back(one.map_symbol(block.back()));
  return SlidingBlockCode::one_block(hb.presentation, images, one.codomain_alphabet());
}

KBoundReport verify_sft_factor_bound(const SlidingBlockCode& code) {
  const auto step = step_of(code.domain());
  if (!step) throw PreconditionError("domain is not a shift of finite type");
  const SlidingBlockCode one = one_step_form(code);
  const auto retract = minimal_retract(one);
  if (!retract) throw PreconditionError("code has no retract");

  KBoundReport report;
  report.recoded = !code.is_one_block() || *step > 1;
  report.R = *retract;
  report.domain_symbols = one.domain().used_symbols().size();
  const int symbols = static_cast<int>(report.domain_symbols);
  report.d = symbols * symbols + 1;
  report.K = report.d + report.R + 1;
  report.actual_step = step_of(image(one));
  report.is_sft_confirmed = report.actual_step.has_value();
  return report;
}

}  // namespace symdyn
