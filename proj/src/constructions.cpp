#include "symdyn/constructions.hpp"

#include <map>

#include "symdyn/error.hpp"
#include "symdyn/resolving.hpp"
#include "symdyn/shift.hpp"

namespace symdyn {

namespace {

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// Assigns symbols to names in first-seen order and rejects two different
/// sources rendered to the same name.
class NameTable {
 public:
  Symbol add(const std::string& name, const Word& source) {
    auto [it, fresh] = index_.emplace(name, static_cast<Symbol>(names_.size()));
    if (fresh) {
      names_.push_back(name);
      sources_.push_back(source);
    } else if (sources_[static_cast<std::size_t>(it->second)] != source) {
      throw Error("recoded symbol name '" + name + "' is ambiguous");
    }
    return it->second;
  }
  Symbol at(const std::string& name) const { return index_.at(name); }
  Alphabet alphabet() const { return Alphabet(names_); }

 private:
  std::vector<std::string> names_;
  std::vector<Word> sources_;
  std::map<std::string, Symbol> index_;
};

}  // namespace

NoRetractExample no_retract_example() {
  Alphabet xa({"1", "1bar", "2", "3"});
  Alphabet ya({"1", "2", "3"});
  const Symbol one = 0, bar = 1, two = 2, three = 3;
  constexpr State normal = 0, barred = 1;
  std::vector<Edge> edges{
      {normal, one, normal},   {normal, two, normal},   {normal, three, normal}, {normal, bar, barred},
      {barred, two, barred},   {barred, one, normal},   {barred, bar, barred},
  };
  Presentation x(xa, std::vector<std::string>{"N", "B"}, std::move(edges));
  SlidingBlockCode phi = SlidingBlockCode::one_block(x, {0, 0, 1, 2}, ya);
  return {std::move(x), full_shift(ya), std::move(phi)};
}

LassoPoint repair_lift(const NoRetractExample& example, const LassoPoint& x, const LassoPoint& y) {
  const Alphabet& xa = example.X.alphabet();
  const Alphabet& ya = example.Y.alphabet();
  if (!lasso_membership(x, example.X)) throw PreconditionError("x is not a point of X");
  if (!lasso_membership(y, example.Y)) throw PreconditionError("y is not a point of Y");
  if (!apply(example.phi, x).agrees_left(y, 0)) throw PreconditionError("phi(x) and y differ on (-inf, 0]");

  std::vector<Symbol> to_x(ya.size());
  for (std::size_t b = 0; b < ya.size(); ++b) to_x[b] = xa.symbol(ya.name(static_cast<Symbol>(b)));
  auto translate = [&](Word w) {
    for (Symbol& b : w) b = to_x[static_cast<std::size_t>(b)];
    return w;
  };

  const LassoPoint xu = x.unrolled(0, 1);
  const LassoPoint yu = y.unrolled(1, 2);
  LassoPoint spliced(xu.left_loop(), concat(xu.window(xu.origin(), 1), translate(yu.window(1, yu.center_end()))),
                     translate(yu.right_loop()), xu.origin());

  const Symbol one = xa.symbol("1"), bar = xa.symbol("1bar"), two = xa.symbol("2"), three = xa.symbol("3");
  std::vector<long> flips;
  const long end = spliced.center_end() + static_cast<long>(spliced.right_loop().size());
  const long floor = spliced.origin() - static_cast<long>(spliced.left_loop().size());
  for (long j = 1; j < end; ++j) {
    if (spliced.at(j) != three) continue;
    long k = j - 1;
    while (k >= floor && spliced.at(k) == two) --k;
    if (k >= floor && spliced.at(k) == bar) flips.push_back(k);
  }
  if (flips.empty()) return spliced.canonical();

  const LassoPoint wide = spliced.unrolled(flips.front(), 1);
  Word center = wide.center();
  for (long k : flips) center[static_cast<std::size_t>(k - wide.origin())] = one;
  return LassoPoint(wide.left_loop(), center, wide.right_loop(), wide.origin()).canonical();
}

CodedPair no_retract_witness(const NoRetractExample& example, int n) {
  if (n < 0) throw PreconditionError("n must be nonnegative");
  const Alphabet& xa = example.X.alphabet();
  const Alphabet& ya = example.Y.alphabet();
  const auto run = static_cast<std::size_t>(n) + 1;
  LassoPoint x({xa.symbol("1bar")}, Word(run, xa.symbol("2")), {xa.symbol("2")}, -n);
  LassoPoint y({ya.symbol("1")}, Word(run, ya.symbol("2")), {ya.symbol("3")}, -n);
  return {x, y};
}

SqrtPair sqrt_construction(const SlidingBlockCode& code) {
  if (!code.is_one_block()) throw PreconditionError("sqrt construction needs a 1-block code");
  SqrtPair out{code.domain(), code.domain(), code, 0, "a", false};
  while (code.domain().alphabet().find(out.spacer_name) || code.codomain_alphabet().find(out.spacer_name)) {
    out.spacer_name += "'";
    out.spacer_renamed = true;
  }

  // Each edge s -c-> t becomes s -c-> t* -spacer-> t.
  auto interleave = [&](const Presentation& p) {
    std::vector<std::string> symbols = p.alphabet().names();
    symbols.push_back(out.spacer_name);
    const auto spacer = static_cast<Symbol>(symbols.size() - 1);
    const auto n = static_cast<State>(p.num_states());
    std::vector<std::string> states = p.state_names();
    for (const std::string& s : p.state_names()) states.push_back(s + "*");
    std::vector<Edge> edges;
    for (const Edge& e : p.edges()) edges.push_back({e.source, e.label, e.target + n});
    for (State t = 0; t < n; ++t) edges.push_back({t + n, spacer, t});
    return Presentation(Alphabet(std::move(symbols)), std::move(states), std::move(edges));
  };
  out.sqrt_x = interleave(code.domain());
  out.sqrt_y = interleave(image(code));

  const std::size_t base = code.domain().alphabet().size();
  std::vector<Symbol> images(base + 1, 0);
  for (Symbol a : code.domain().used_symbols()) images[static_cast<std::size_t>(a)] = code.map_symbol(a);
  out.spacer = static_cast<Symbol>(base);
  images[base] = static_cast<Symbol>(code.codomain_alphabet().size());
  out.sqrt_phi = SlidingBlockCode::one_block(out.sqrt_x, images, out.sqrt_y.alphabet());
  return out;
}

RecodedCode retract_zero_recode(const SlidingBlockCode& code) {
  if (!code.is_one_block()) throw PreconditionError("retract-zero recoding needs a 1-block code");
  const auto retract = minimal_retract(code);
  if (!retract) throw PreconditionError("code has no retract");
  const int R = *retract;
  const Presentation& x = code.domain();
  const Alphabet& ya = code.codomain_alphabet();

  NameTable table;
  std::map<Word, Symbol> rule;
  std::vector<Symbol> last;
  for (const Word& block : language(x, static_cast<std::size_t>(R) + 1)) {
    const Word img = code.map_word(block);
    const Symbol s = table.add(pair_name(x.alphabet().name(block.front()), block_name(ya, img)),
                               concat({block.front()}, img));
    if (static_cast<std::size_t>(s) == last.size()) last.push_back(img.back());
    rule[block] = s;
  }
  SlidingBlockCode psi(x, R, 0, std::move(rule), table.alphabet());
  Presentation domain = image(psi);
  SlidingBlockCode bar_phi = SlidingBlockCode::one_block(domain, last, ya);
  return {R, std::move(psi), std::move(domain), std::move(bar_phi), std::nullopt, std::nullopt};
}

RecodedCode bicontinuing_recode(const SlidingBlockCode& code) {
  if (!code.is_one_block()) throw PreconditionError("bicontinuing recoding needs a 1-block code");
  const auto right = minimal_retract(code);
  const auto left = minimal_left_retract(code);
  if (!right || !left) throw PreconditionError("code lacks a right or a left retract");
  const int R = std::max(*right, *left);
  const auto width = static_cast<std::size_t>(2 * R + 1);
  const Presentation& x = code.domain();
  const Alphabet& ya = code.codomain_alphabet();
  const Presentation y = image(code);

  NameTable blocks;
  std::map<Word, Symbol> theta_rule;
  for (const Word& w : language(y, width)) theta_rule[w] = blocks.add(block_name(ya, w), w);
  SlidingBlockCode theta(y, R, R, std::move(theta_rule), blocks.alphabet());

  NameTable pairs;
  std::map<Word, Symbol> rule;
  std::vector<Symbol> projection;
  for (const Word& block : language(x, width)) {
    const Word img = code.map_word(block);
    const Symbol center = block[static_cast<std::size_t>(R)];
    const Symbol s = pairs.add(pair_name(x.alphabet().name(center), block_name(ya, img)), concat({center}, img));
    if (static_cast<std::size_t>(s) == projection.size()) projection.push_back(blocks.at(block_name(ya, img)));
    rule[block] = s;
  }
  SlidingBlockCode psi(x, R, R, std::move(rule), pairs.alphabet());
  Presentation domain = image(psi);
  SlidingBlockCode bar_phi = SlidingBlockCode::one_block(domain, projection, theta.codomain_alphabet());
  Presentation codomain = image(theta);
  return {R, std::move(psi), std::move(domain), std::move(bar_phi), std::move(theta), std::move(codomain)};
}

RecodingCheck verify_recoding(const SlidingBlockCode& code, const RecodedCode& recoded, Rng& rng, int samples) {
  RecodingCheck check;
  check.psi_injective = is_injective(recoded.psi).injective;
  if (recoded.theta) check.theta_injective = is_injective(*recoded.theta).injective;
  check.bar_phi_one_block = recoded.bar_phi.is_one_block();
  if (check.bar_phi_one_block) {
    check.right_retract_zero = check_retract(recoded.bar_phi, 0).holds;
    if (recoded.theta) check.left_retract_zero = check_retract(reversed(recoded.bar_phi), 0).holds;
  }
  check.commutes = true;
  for (int i = 0; i < samples; ++i) {
    const LassoPoint x = random_lasso(rng, code.domain());
    const LassoPoint lhs = apply(recoded.bar_phi, apply(recoded.psi, x));
    const LassoPoint rhs = recoded.theta ? apply(*recoded.theta, apply(code, x)) : apply(code, x);
    if (!(lhs == rhs)) check.commutes = false;
    ++check.samples;
  }
  return check;
}

}  // namespace symdyn
