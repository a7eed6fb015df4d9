#include "symdyn/code.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "symdyn/error.hpp"
#include "symdyn/follower.hpp"
#include "symdyn/shift.hpp"

namespace symdyn {

SlidingBlockCode::SlidingBlockCode(Presentation domain, int memory, int anticipation, std::map<Word, Symbol> rule,
                                   Alphabet codomain)
    : domain_(std::move(domain)),
      memory_(memory),
      anticipation_(anticipation),
      rule_(std::move(rule)),
      codomain_(std::move(codomain)) {
  if (memory_ < 0 || anticipation_ < 0) throw Error("memory and anticipation must be nonnegative");
  const auto blocks = language(domain_, static_cast<std::size_t>(window()));
  if (blocks.size() != rule_.size() ||
      !std::equal(blocks.begin(), blocks.end(), rule_.begin(), [](const Word& w, const auto& kv) { return w == kv.first; }))
    throw Error("block rule must be defined on exactly the allowed blocks of the domain");
  for (const auto& [block, image] : rule_)
    if (image < 0 || static_cast<std::size_t>(image) >= codomain_.size())
      throw Error("block rule maps outside the codomain alphabet");
  if (is_one_block()) {
    symbol_images_.assign(domain_.alphabet().size(), -1);
    for (const auto& [block, image] : rule_) symbol_images_[static_cast<std::size_t>(block[0])] = image;
  }
}

SlidingBlockCode SlidingBlockCode::one_block(Presentation domain, const std::vector<Symbol>& images,
                                             Alphabet codomain) {
  std::map<Word, Symbol> rule;
  for (Symbol a : domain.used_symbols()) {
    if (static_cast<std::size_t>(a) >= images.size()) throw Error("missing image for a domain symbol");
    rule[{a}] = images[static_cast<std::size_t>(a)];
  }
  return SlidingBlockCode(std::move(domain), 0, 0, std::move(rule), std::move(codomain));
}

SlidingBlockCode SlidingBlockCode::identity(Presentation domain) {
  std::vector<Symbol> images(domain.alphabet().size());
  for (std::size_t a = 0; a < images.size(); ++a) images[a] = static_cast<Symbol>(a);
  Alphabet codomain = domain.alphabet();
  return one_block(std::move(domain), images, std::move(codomain));
}

Symbol SlidingBlockCode::map_block(std::span<const Symbol> block) const {
  auto it = rule_.find(Word(block.begin(), block.end()));
  if (it == rule_.end()) throw DomainError("block " + domain_.alphabet().format(block) + " is not in the domain");
  return it->second;
}

Symbol SlidingBlockCode::map_symbol(Symbol a) const {
  if (!is_one_block()) throw PreconditionError("map_symbol needs a 1-block code");
  Symbol b = a >= 0 && static_cast<std::size_t>(a) < symbol_images_.size() ? symbol_images_[static_cast<std::size_t>(a)] : -1;
  if (b < 0) throw DomainError("symbol does not occur in the domain");
  return b;
}

Word SlidingBlockCode::map_word(std::span<const Symbol> word) const {
  Word out;
  const auto w = static_cast<std::size_t>(window());
  for (std::size_t i = 0; i + w <= word.size(); ++i) out.push_back(map_block(word.subspan(i, w)));
  return out;
}

LassoPoint apply(const SlidingBlockCode& code, const LassoPoint& point) {
  if (!lasso_membership(point, code.domain())) throw DomainError("point is not in the domain of the code");
  const long m = code.memory(), a = code.anticipation();
  const long o = point.origin(), e = point.center_end();
  const auto u = static_cast<long>(point.left_loop().size());
  const auto v = static_cast<long>(point.right_loop().size());
  auto out = [&](long lo, long hi) {
    Word w;
    for (long i = lo; i < hi; ++i) w.push_back(code.map_block(point.window(i - m, i + a + 1)));
    return w;
  };
  return LassoPoint(out(o - a - u, o - a), out(o - a, e + m), out(e + m, e + m + v), o - a);
}

HigherBlock higher_block(const Presentation& presentation, int width) {
  if (width < 1) throw Error("block width must be at least 1");
  return higher_block(presentation, 0, width - 1);
}

HigherBlock higher_block(const Presentation& p, int memory, int anticipation) {
  if (memory < 0 || anticipation < 0) throw Error("memory and anticipation must be nonnegative");
  const auto width = static_cast<std::size_t>(memory + anticipation + 1);
  if (width == 1) {
    std::vector<Word> blocks;
    for (std::size_t a = 0; a < p.alphabet().size(); ++a) blocks.push_back({static_cast<Symbol>(a)});
    return {p, SlidingBlockCode::identity(p), std::move(blocks)};
  }

  // States: (q, w) with w the label of a path of length width - 1 ending at q.
  std::set<std::pair<State, Word>> level;
  for (std::size_t q = 0; q < p.num_states(); ++q) level.insert({static_cast<State>(q), {}});
  for (std::size_t step = 1; step < width; ++step) {
    std::set<std::pair<State, Word>> next;
    for (const auto& [q, w] : level) {
      for (std::size_t a = 0; a < p.alphabet().size(); ++a) {
        for (State r : p.successors(q, static_cast<Symbol>(a))) {
          Word w2 = w;
          w2.push_back(static_cast<Symbol>(a));
          next.insert({r, std::move(w2)});
        }
      }
    }
    level = std::move(next);
  }
  std::map<std::pair<State, Word>, State> state_index;
  std::vector<std::string> state_names;
  for (const auto& s : level) {
    state_index[s] = static_cast<State>(state_names.size());
    state_names.push_back(p.state_names()[static_cast<std::size_t>(s.first)] + ":" + block_name(p.alphabet(), s.second));
  }
  std::map<Word, Symbol> block_index;
  struct RawEdge {
    State source;
    Word block;
    State target;
  };
  std::vector<RawEdge> raw;
  for (const auto& [s, id] : state_index) {
    const auto& [q, w] = s;
    for (std::size_t a = 0; a < p.alphabet().size(); ++a) {
      for (State r : p.successors(q, static_cast<Symbol>(a))) {
        Word block = w;
        block.push_back(static_cast<Symbol>(a));
        Word tail(block.begin() + 1, block.end());
        block_index.emplace(block, 0);
        raw.push_back({id, block, state_index.at({r, tail})});
      }
    }
  }
  std::vector<Word> blocks;
  std::vector<std::string> names;
  for (auto& [block, id] : block_index) {
    id = static_cast<Symbol>(blocks.size());
    blocks.push_back(block);
    names.push_back(block_name(p.alphabet(), block));
  }
  std::vector<Edge> edges;
  for (const RawEdge& e : raw) edges.push_back({e.source, block_index.at(e.block), e.target});
  Alphabet alphabet(std::move(names));
  Presentation hp(alphabet, std::move(state_names), std::move(edges));
  SlidingBlockCode conjugacy(p, memory, anticipation, block_index, alphabet);
  return {std::move(hp), std::move(conjugacy), std::move(blocks)};
}

OneBlockRecoding recode_to_one_block(const SlidingBlockCode& code) {
  if (code.is_one_block()) {
    std::vector<Word> blocks;
    for (std::size_t a = 0; a < code.domain().alphabet().size(); ++a) blocks.push_back({static_cast<Symbol>(a)});
    return {SlidingBlockCode::identity(code.domain()), code, std::move(blocks)};
  }
  HigherBlock hb = higher_block(code.domain(), code.memory(), code.anticipation());
  std::vector<Symbol> images;
  for (const Word& block : hb.blocks) images.push_back(code.map_block(block));
  SlidingBlockCode one = SlidingBlockCode::one_block(hb.presentation, images, code.codomain_alphabet());
  return {std::move(hb.conjugacy), std::move(one), std::move(hb.blocks)};
}

Presentation image(const SlidingBlockCode& code) {
  if (!code.is_one_block()) return image(recode_to_one_block(code).one_block);
  const Presentation& d = code.domain();
  std::vector<Edge> edges;
  edges.reserve(d.edges().size());
  for (const Edge& e : d.edges()) edges.push_back({e.source, code.map_symbol(e.label), e.target});
  return Presentation(code.codomain_alphabet(), d.state_names(), std::move(edges));
}

SlidingBlockCode compose(const SlidingBlockCode& outer, const SlidingBlockCode& inner) {
  if (!language_included(image(inner), outer.domain()))
    throw DomainError("image of the inner code is not contained in the domain of the outer code");
  const Alphabet& mid = inner.codomain_alphabet();
  std::vector<Symbol> translate(mid.size(), -1);
  for (std::size_t s = 0; s < mid.size(); ++s)
    translate[s] = outer.domain().alphabet().find(mid.name(static_cast<Symbol>(s))).value_or(-1);

  const int memory = inner.memory() + outer.memory();
  const int anticipation = inner.anticipation() + outer.anticipation();
  std::map<Word, Symbol> rule;
  for (const Word& w : language(inner.domain(), static_cast<std::size_t>(memory + anticipation + 1))) {
    Word between = inner.map_word(w);
    for (Symbol& s : between) s = translate[static_cast<std::size_t>(s)];
    rule[w] = outer.map_block(between);
  }
  return SlidingBlockCode(inner.domain(), memory, anticipation, std::move(rule), outer.codomain_alphabet());
}

SlidingBlockCode reversed(const SlidingBlockCode& code) {
  std::map<Word, Symbol> rule;
  for (const auto& [block, image] : code.rule()) rule[Word(block.rbegin(), block.rend())] = image;
  return SlidingBlockCode(reverse(code.domain()), code.anticipation(), code.memory(), std::move(rule),
                          code.codomain_alphabet());
}

namespace {

struct PairEdge {
  int source;
  int target;
  Symbol left;
  Symbol right;
};

}  // namespace

InjectivityResult is_injective(const SlidingBlockCode& code) {
  OneBlockRecoding recoding = recode_to_one_block(code);
  const SlidingBlockCode& phi = recoding.one_block;
  const Presentation& d = phi.domain();
  const int n = static_cast<int>(d.num_states());

  // Label-product graph restricted to equal images.
  std::map<Symbol, std::vector<const Edge*>> by_image;
  for (const Edge& e : d.edges()) by_image[phi.map_symbol(e.label)].push_back(&e);
  std::vector<PairEdge> edges;
  for (const auto& [img, group] : by_image)
    for (const Edge* e1 : group)
      for (const Edge* e2 : group)
        edges.push_back({e1->source * n + e2->source, e1->target * n + e2->target, e1->label, e2->label});

  // Keep the part carrying bi-infinite paths.
  const std::size_t vertices = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  std::vector<bool> alive(vertices, true);
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<int> in(vertices, 0), out(vertices, 0);
    for (const PairEdge& e : edges) {
      if (alive[static_cast<std::size_t>(e.source)] && alive[static_cast<std::size_t>(e.target)]) {
        ++out[static_cast<std::size_t>(e.source)];
        ++in[static_cast<std::size_t>(e.target)];
      }
    }
    for (std::size_t v = 0; v < vertices; ++v) {
      if (alive[v] && (in[v] == 0 || out[v] == 0)) {
        alive[v] = false;
        changed = true;
      }
    }
  }
  auto live = [&](const PairEdge& e) {
    return alive[static_cast<std::size_t>(e.source)] && alive[static_cast<std::size_t>(e.target)];
  };
  const PairEdge* split = nullptr;
  for (const PairEdge& e : edges) {
    if (live(e) && e.left != e.right) {
      split = &e;
      break;
    }
  }
  if (split == nullptr) return {};

  std::vector<std::vector<const PairEdge*>> in_edges(vertices), out_edges(vertices);
  for (const PairEdge& e : edges) {
    if (!live(e)) continue;
    out_edges[static_cast<std::size_t>(e.source)].push_back(&e);
    in_edges[static_cast<std::size_t>(e.target)].push_back(&e);
  }
  // Walk until a vertex repeats; returns (path to the cycle, cycle).
  auto walk = [&](int start, bool backward) {
    std::vector<const PairEdge*> path;
    std::map<int, std::size_t> seen{{start, 0}};
    int v = start;
    for (;;) {
      const PairEdge* e = backward ? in_edges[static_cast<std::size_t>(v)].front() : out_edges[static_cast<std::size_t>(v)].front();
      path.push_back(e);
      v = backward ? e->source : e->target;
      auto [it, fresh] = seen.emplace(v, path.size());
      if (!fresh) {
        std::vector<const PairEdge*> lead(path.begin(), path.begin() + static_cast<long>(it->second));
        std::vector<const PairEdge*> cycle(path.begin() + static_cast<long>(it->second), path.end());
        return std::make_pair(lead, cycle);
      }
    }
  };
  auto [back_lead, back_cycle] = walk(split->source, true);
  auto [fwd_lead, fwd_cycle] = walk(split->target, false);
  // Backward walks list edges in reverse time order.
  std::reverse(back_lead.begin(), back_lead.end());
  std::reverse(back_cycle.begin(), back_cycle.end());

  auto labels = [](const std::vector<const PairEdge*>& es, bool left) {
    Word w;
    for (const PairEdge* e : es) w.push_back(left ? e->left : e->right);
    return w;
  };
  auto point = [&](bool left) {
    Word center = labels(back_lead, left);
    center.push_back(left ? split->left : split->right);
    Word tail = labels(fwd_lead, left);
    center.insert(center.end(), tail.begin(), tail.end());
    LassoPoint p(labels(back_cycle, left), center, labels(fwd_cycle, left), -static_cast<long>(back_lead.size()));
    // Back to the original domain alphabet: coordinate i of the block point
    // carries x_i at offset `memory` of its block.
    std::vector<Symbol> decode;
    for (const Word& b : recoding.blocks) decode.push_back(b[static_cast<std::size_t>(code.memory())]);
    return p.relabeled(decode);
  };
  InjectivityResult result;
  result.injective = false;
  result.witness = std::make_pair(point(true), point(false));
  return result;
}

}  // namespace symdyn
