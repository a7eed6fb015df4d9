#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "support/oracles.hpp"
#include "symdyn/corpus.hpp"
#include "symdyn/error.hpp"
#include "symdyn/follower.hpp"
#include "symdyn/random.hpp"
#include "symdyn/shift.hpp"

using namespace symdyn;

namespace {

Symbol min_rule(const Word& w) { return std::min(w[0], w[1]); }

/// Image words of length n, computed by sliding over every word of length
/// n + window - 1 of the full shift.
std::set<Word> slid_language(int symbols, std::size_t n, std::size_t window, Symbol (*rule)(const Word&)) {
  std::set<Word> out;
  for (const Word& w : oracle::all_words(symbols, n + window - 1)) out.insert(oracle::slide(w, window, rule));
  return out;
}

}  // namespace

TEST_CASE("min code image words") {
  const SlidingBlockCode phi = corpus::min_code();
  const Presentation img = image(phi);
  // Frozen from the sliding oracle: every binary 3-word except 101.
  const std::set<Word> b3{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}};
  CHECK(slid_language(2, 3, 2, min_rule) == b3);
  CHECK(language(img, 3) == b3);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(language(img, n) == slid_language(2, n, 2, min_rule));
  CHECK(is_sft(img));
  CHECK(step_of(img) == 2);
}

TEST_CASE("apply matches the sliding oracle on lasso windows") {
  const SlidingBlockCode phi = corpus::min_code();
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const LassoPoint x = random_lasso(rng, phi.domain());
    const LassoPoint y = apply(phi, x);
    const Word wx = x.window(-12, 13);
    const Word wy = oracle::slide(wx, 2, min_rule);
    // wy[i] is the image at coordinate -12 + i + 1 (memory 1).
    CHECK(y.window(-11, 13) == wy);
  }
  const SlidingBlockCode xr = corpus::xor_code();
  const LassoPoint x({0}, {1}, {0}, 0);
  CHECK(apply(xr, x).window(-2, 3) == Word{0, 1, 1, 0, 0});
}

TEST_CASE("code construction validates the rule table") {
  const Presentation g = corpus::golden_mean();
  std::map<Word, Symbol> rule{{{0}, 0}};
  CHECK_THROWS_AS(SlidingBlockCode(g, 0, 0, rule, Alphabet({"0"})), Error);
  rule[{1}] = 3;
  CHECK_THROWS_AS(SlidingBlockCode(g, 0, 0, rule, Alphabet({"0"})), Error);
  CHECK_THROWS_AS(apply(SlidingBlockCode::identity(g), LassoPoint::periodic({1})), DomainError);
}

TEST_CASE("images of full-shift codes") {
  CHECK(language_equal(image(corpus::xor_code()), corpus::full_shift(2)));
  CHECK(language_equal(image(corpus::eresolving_counterexample()), corpus::full_shift(2)));
  CHECK(language_equal(image(corpus::identity_golden_mean()), corpus::golden_mean()));
}

TEST_CASE("injectivity") {
  CHECK(is_injective(corpus::identity_golden_mean()).injective);
  const auto xr = is_injective(corpus::xor_code());
  CHECK_FALSE(xr.injective);
  REQUIRE(xr.witness.has_value());
  const SlidingBlockCode xor_code = corpus::xor_code();
  CHECK(apply(xor_code, xr.witness->first) == apply(xor_code, xr.witness->second));
  CHECK_FALSE(xr.witness->first == xr.witness->second);
  CHECK_FALSE(is_injective(corpus::min_code()).injective);
  CHECK(is_injective(higher_block(corpus::even_shift(), 1, 1).conjugacy).injective);
}

TEST_CASE("higher block conjugacies are injective and shift the window") {
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const Presentation p = random_presentation(rng, 3, 2, 0.4);
    const HigherBlock hb = higher_block(p, 1, 1);
    CHECK(is_injective(hb.conjugacy).injective);
    CHECK(language_equal(image(hb.conjugacy), hb.presentation));
    const LassoPoint x = random_lasso(rng, p);
    const LassoPoint bx = apply(hb.conjugacy, x);
    for (long i = -5; i <= 5; ++i) CHECK(hb.blocks[static_cast<std::size_t>(bx.at(i))] == x.window(i - 1, i + 2));
  }
}

TEST_CASE("recoding to 1-block factors the code") {
  for (const SlidingBlockCode& phi : {corpus::min_code(), corpus::xor_code()}) {
    const OneBlockRecoding r = recode_to_one_block(phi);
    CHECK(r.one_block.is_one_block());
    Rng rng(4);
    for (int trial = 0; trial < 50; ++trial) {
      const LassoPoint x = random_lasso(rng, phi.domain());
      CHECK(apply(r.one_block, apply(r.conjugacy, x)) == apply(phi, x));
    }
  }
}

TEST_CASE("composition and reversal") {
  const SlidingBlockCode m = corpus::min_code();
  const SlidingBlockCode x = corpus::xor_code();
  const SlidingBlockCode xm = compose(x, m);
  CHECK(xm.memory() == 1);
  CHECK(xm.anticipation() == 1);
  Rng rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const LassoPoint p = random_lasso(rng, m.domain());
    CHECK(apply(xm, p) == apply(x, apply(m, p)));
  }
  // image(min) forbids 101, so the golden-mean identity cannot follow it.
  CHECK_THROWS_AS(compose(corpus::identity_golden_mean(), m), DomainError);

  const SlidingBlockCode r = reversed(m);
  CHECK(r.memory() == 0);
  CHECK(r.anticipation() == 1);
  const LassoPoint p({0, 1}, {1, 1, 0}, {1}, -1);
  const LassoPoint rp(Word{1}, Word{0, 1, 1}, Word{1, 0}, -1);
  // rp is p read backwards around coordinate 0.
  for (long i = -6; i <= 6; ++i) REQUIRE(rp.at(i) == p.at(-i));
  const LassoPoint mp = apply(m, p);
  const LassoPoint rmp = apply(r, rp);
  for (long i = -6; i <= 6; ++i) CHECK(rmp.at(i) == mp.at(-i));
}
