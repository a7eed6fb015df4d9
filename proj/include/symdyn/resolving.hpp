#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "symdyn/code.hpp"
#include "symdyn/follower.hpp"

namespace symdyn {

/// Outcome of an eresolving check. On failure, `failure` holds a domain
/// symbol a0 and an image word b0 b1 with phi(a0) = b0 such that no a0 a1 in
/// B_2(X) has phi(a1) = b1. The left check reports them in reversed time
/// (a1 and b1 b0).
struct EresolvingResult {
  bool holds = true;
  std::optional<std::pair<Symbol, Word>> failure;
};

/// 1-block codes only; the codomain is taken to be image(code).
EresolvingResult is_right_eresolving(const SlidingBlockCode& code);
EresolvingResult is_left_eresolving(const SlidingBlockCode& code);

/// Lift-at-distance-n outcome: either every (x, y) with phi(x)_i = y_i for
/// i <= 0 has a lift agreeing with x on i <= -n, or `witness` is a pair that
/// has none.
struct RetractVerdict {
  bool holds = true;
  int n = 0;
  std::optional<CodedPair> witness;
};

/// Exact retract decider for a fixed 1-block code.
///
/// A configuration (S, q) pairs the exact set S of domain states reachable by
/// some path labeled by a word w with the follower state q of phi(w). The
/// configurations of left-infinite rays are the "limit" configurations: those
/// reachable from a configuration z with f_u(start) = z = f_u(z) for a word
/// u. From there the lift states are advanced n steps by image symbols only,
/// and a lift fails to exist iff some continuation allowed by q empties them.
class RetractAnalyzer {
 public:
  explicit RetractAnalyzer(const SlidingBlockCode& code, std::size_t max_configurations = 50000);

  RetractVerdict check(int n);
  /// Least n with check(n).holds, or nullopt when the lift layers start to
  /// repeat without any of them holding.
  std::optional<int> minimal_retract();

  std::size_t num_configurations() const { return configs_.size(); }
  std::size_t num_limit_configurations() const { return limit_.size(); }

 private:
  struct Config {
    StateSet states;
    int follower;
  };
  struct Triple {
    int config;
    StateSet lift;
    int parent;
    Symbol symbol;
  };
  using Layer = std::vector<Triple>;

  void build_configurations();
  void build_limit_configurations();
  const Layer& layer(int n);
  /// First triple of layer n without a lift, with its failing continuation.
  std::optional<std::pair<std::size_t, Word>> first_failure(int n);
  /// Shortest image word that empties `lift` while staying in the follower
  /// language from `follower`.
  std::optional<Word> failing_continuation(const StateSet& lift, int follower);
  CodedPair witness(int n, std::size_t index, const Word& failure);

  SlidingBlockCode code_;
  Presentation image_;
  FollowerAutomaton follower_;
  std::vector<Symbol> phi_;
  std::size_t max_configurations_;

  std::vector<Config> configs_;
  std::vector<std::vector<int>> trans_;
  /// Limit configuration f_s(z): its periodic root z and the path s.
  struct LimitInfo {
    int root;
    Word path;
  };
  std::map<int, Word> periodic_loop_;
  std::vector<int> limit_;
  std::map<int, LimitInfo> limit_info_;
  std::vector<Layer> layers_;
  std::set<std::pair<StateSet, int>> good_;
};

RetractVerdict check_retract(const SlidingBlockCode& code, int n);
std::optional<int> minimal_retract(const SlidingBlockCode& code);
/// Retract of the time-reversed code (lift agreeing on [n, inf)).
std::optional<int> minimal_left_retract(const SlidingBlockCode& code);

/// Whether some x' with phi(x') = y agrees with x on every coordinate <= k.
/// Exact for lasso points.
bool lift_exists(const SlidingBlockCode& code, const LassoPoint& x, const LassoPoint& y, long k);

/// Memberships, image agreement on (-inf, 0], and absence of a lift at distance n.
bool validate_retract_witness(const SlidingBlockCode& code, int n, const CodedPair& witness);

/// Right continuing for SFT domains: decided as "has a retract". Codes with
/// memory or anticipation are recoded first. Throws NotApplicable when the
/// domain is not an SFT.
bool is_right_continuing_sft(const SlidingBlockCode& code);

/// Brute-force cross-check of check_retract: enumerates x = u^inf w a_1..a_n
/// and y = phi(x)_{(-inf,0]} w' v^inf with |u|, |w|, |w'|, |v| <= bound and
/// looks for one without a lift. Sound for refutation only.
RetractVerdict oracle_retract(const SlidingBlockCode& code, int n, int bound);

/// oracle_retract with the n-independent ray enumeration done once.
class RetractOracle {
 public:
  RetractOracle(const SlidingBlockCode& code, int bound);

  RetractVerdict check(int n) const;

 private:
  struct LeftRay {
    StateSet states;
    StateSet image_states;
    Word loop;
    Word center;
  };
  struct RightRay {
    StateSet readable;
    Word center;
    Word loop;
  };

  SlidingBlockCode code_;
  Presentation image_;
  std::vector<Symbol> phi_;
  std::vector<LeftRay> left_;
  std::vector<RightRay> right_;
};

/// Whether some x' left asymptotic to x has phi(x') = y. Requires phi(x) to
/// be left asymptotic to y. Exact for lasso points.
bool left_asymptotic_lift_exists(const SlidingBlockCode& code, const LassoPoint& x, const LassoPoint& y);

/// Bounded search for (x, y) with phi(x) = y on (-inf, 0] and no lift of y
/// left asymptotic to x. A result refutes right continuing; nullopt proves
/// nothing.
std::optional<CodedPair> refute_right_continuing_bounded(const SlidingBlockCode& code, int bound);

struct KBoundReport {
  int R = 0;
  int d = 0;
  int K = 0;
  std::optional<int> actual_step;
  bool is_sft_confirmed = false;
  /// Whether the domain had to be rewritten as a 1-step SFT with a 1-block code.
  bool recoded = false;
  std::size_t domain_symbols = 0;
};

/// Checks that the image of a code with a retract on an SFT is an SFT whose
/// step is at most K = |B_1(X)|^2 + 1 + R + 1, computed on the 1-step, 1-block
/// recoding. Throws PreconditionError for non-SFT domains or codes without a
/// retract.
KBoundReport verify_sft_factor_bound(const SlidingBlockCode& code);

/// The 1-step SFT form used by verify_sft_factor_bound: domain recoded to blocks of
/// its step (when the step exceeds 1) and the code made 1-block.
SlidingBlockCode one_step_form(const SlidingBlockCode& code);

}  // namespace symdyn
