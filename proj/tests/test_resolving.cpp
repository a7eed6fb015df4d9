#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <string>

#include "symdyn/constructions.hpp"
#include "symdyn/corpus.hpp"
#include "symdyn/error.hpp"
#include "symdyn/follower.hpp"
#include "symdyn/random.hpp"
#include "symdyn/resolving.hpp"
#include "symdyn/shift.hpp"

using namespace symdyn;

namespace {

SlidingBlockCode bundled_code(const std::string& name) { return std::get<SlidingBlockCode>(corpus::get(name)); }

SlidingBlockCode one_block_of(const SlidingBlockCode& code) {
  return code.is_one_block() ? code : recode_to_one_block(code).one_block;
}

}  // namespace

TEST_CASE("minimal retracts of the bundled codes") {
  // Frozen; each value is cross-checked against the brute-force oracle below.
  const std::vector<std::pair<std::string, std::optional<int>>> expected{
      {"identity-golden-mean", 0},
      {"identity-full-2", 0},
      {"min-code", 2},
      {"xor-code", 0},
      {"non-continuing", std::nullopt},
      {"sqrt-non-continuing", std::nullopt},
      {"eresolving-counterexample", 1},
      {"no-retract-example", std::nullopt},
  };
  for (const auto& [name, retract] : expected) {
    CAPTURE(name);
    const SlidingBlockCode code = one_block_of(bundled_code(name));
    CHECK(minimal_retract(code) == retract);
    const RetractOracle oracle(code, 5);
    for (int n = 0; n <= 3; ++n) {
      CAPTURE(n);
      const RetractVerdict v = check_retract(code, n);
      CHECK(v.holds == (retract && n >= *retract));
      CHECK(oracle.check(n).holds == v.holds);
      if (!v.holds) {
        REQUIRE(v.witness.has_value());
        CHECK(validate_retract_witness(code, n, *v.witness));
      }
    }
  }
}

TEST_CASE("left retracts") {
  CHECK(minimal_left_retract(one_block_of(corpus::xor_code())) == 0);
  CHECK(minimal_left_retract(corpus::identity_golden_mean()) == 0);
  // min is symmetric under reversal, so both sides need 2.
  const SlidingBlockCode m = one_block_of(corpus::min_code());
  CHECK(minimal_left_retract(m) == 2);
  const RetractOracle reversed_oracle(reversed(m), 5);
  CHECK_FALSE(reversed_oracle.check(1).holds);
  CHECK(reversed_oracle.check(2).holds);
}

TEST_CASE("eresolving") {
  CHECK(is_right_eresolving(corpus::identity_golden_mean()).holds);
  CHECK(is_right_eresolving(corpus::non_continuing_code()).holds == false);
  CHECK(is_right_eresolving(bundled_code("sqrt-non-continuing")).holds);

  // Frozen failing triple: from a0 = 1 the image word 11 cannot continue.
  const SlidingBlockCode c = corpus::eresolving_counterexample();
  const EresolvingResult r = is_right_eresolving(c);
  CHECK_FALSE(r.holds);
  REQUIRE(r.failure.has_value());
  CHECK(c.domain().alphabet().name(r.failure->first) == "1");
  CHECK(r.failure->second == Word{1, 1});
  // Every symbol has predecessors with both images.
  CHECK(is_left_eresolving(c).holds);
}

TEST_CASE("eresolving fails on the no-retract example but its square root passes") {
  CHECK_FALSE(is_right_eresolving(no_retract_example().phi).holds);
  CHECK(is_right_eresolving(bundled_code("sqrt-no-retract-example")).holds);
}

TEST_CASE("lift existence on explicit points") {
  const SlidingBlockCode c = corpus::non_continuing_code();
  // b^inf . d^inf is not a point, but b^inf maps to 1^inf and 1^inf 0^inf
  // lifts only through c, which is not left asymptotic to b.
  const LassoPoint x = LassoPoint::periodic({1});
  const LassoPoint y({1}, {}, {0}, 1);
  CHECK_FALSE(lift_exists(c, x, y, -3));
  CHECK_FALSE(left_asymptotic_lift_exists(c, x, y));
  const LassoPoint x2({0}, {}, {1}, 0);
  const LassoPoint y2({0}, {1}, {0}, 0);
  CHECK(left_asymptotic_lift_exists(c, x2, LassoPoint({0}, {1, 1}, {1}, 0)));
  CHECK_FALSE(left_asymptotic_lift_exists(c, x2, y2));
}

TEST_CASE("right continuing on SFT domains") {
  CHECK(is_right_continuing_sft(corpus::min_code()));
  CHECK(is_right_continuing_sft(corpus::xor_code()));
  CHECK_FALSE(is_right_continuing_sft(corpus::non_continuing_code()));
  CHECK_THROWS_AS(is_right_continuing_sft(SlidingBlockCode::identity(corpus::even_shift())), NotApplicable);
  CHECK_THROWS_AS(is_right_continuing_sft(no_retract_example().phi), NotApplicable);

  const auto refutation = refute_right_continuing_bounded(corpus::non_continuing_code(), 3);
  REQUIRE(refutation.has_value());
  CHECK(apply(corpus::non_continuing_code(), refutation->x).agrees_left(refutation->y, 0));
  CHECK_FALSE(left_asymptotic_lift_exists(corpus::non_continuing_code(), refutation->x, refutation->y));
  CHECK_FALSE(refute_right_continuing_bounded(corpus::identity_golden_mean(), 3).has_value());
  CHECK_FALSE(refute_right_continuing_bounded(one_block_of(corpus::min_code()), 3).has_value());
}

TEST_CASE("SFT factor bound on the min code") {
  // Frozen: the 2-block recoding has 4 symbols, so d = 17 and K = 17 + 2 + 1.
  const KBoundReport k = verify_sft_factor_bound(corpus::min_code());
  CHECK(k.R == 2);
  CHECK(k.d == 17);
  CHECK(k.K == 20);
  CHECK(k.actual_step == 2);
  CHECK(k.is_sft_confirmed);
  CHECK(k.recoded);
  CHECK_THROWS_AS(verify_sft_factor_bound(corpus::non_continuing_code()), PreconditionError);
  CHECK_THROWS_AS(verify_sft_factor_bound(SlidingBlockCode::identity(corpus::even_shift())), PreconditionError);
}

TEST_CASE("one-step form keeps the retract") {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const Presentation x = from_forbidden(random_sft_spec(rng, 3, 0.6));
    const SlidingBlockCode code = random_one_block_code(rng, x, 2);
    const SlidingBlockCode f = one_step_form(code);
    CHECK(f.is_one_block());
    CHECK(step_of(f.domain()) <= 1);
    CHECK(minimal_retract(f) == minimal_retract(code));
    CHECK(language_equal(image(f), image(code)));
  }
}

TEST_CASE("retract properties on random codes") {
  Rng rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const int states = std::uniform_int_distribution<int>(1, 3)(rng);
    const int symbols = std::uniform_int_distribution<int>(1, 3)(rng);
    const Presentation p = random_presentation(rng, states, symbols, 0.45);
    const SlidingBlockCode code = random_one_block_code(rng, p, std::uniform_int_distribution<int>(1, 3)(rng));
    CAPTURE(trial);
    RetractAnalyzer analyzer(code);
    const std::optional<int> r = analyzer.minimal_retract();
    const RetractOracle oracle(code, 4);
    bool previous = false;
    for (int n = 0; n <= 4; ++n) {
      const RetractVerdict v = analyzer.check(n);
      // A lift at distance n is also one at distance n + 1.
      if (previous) CHECK(v.holds);
      previous = v.holds;
      CHECK(v.holds == (r && n >= *r));
      if (!v.holds) {
        REQUIRE(v.witness.has_value());
        CHECK(validate_retract_witness(code, n, *v.witness));
        CHECK_FALSE(lift_exists(code, v.witness->x, v.witness->y, -n));
      } else {
        CHECK(oracle.check(n).holds);
      }
    }
    if (r) CHECK_FALSE(refute_right_continuing_bounded(code, 3).has_value());
    CHECK(minimal_left_retract(code) == minimal_retract(reversed(code)));
    if (is_vertex_shift(p) && is_right_eresolving(code).holds) CHECK(r == 0);
  }
}
