#pragma once

#include <optional>
#include <string>

#include "symdyn/code.hpp"
#include "symdyn/random.hpp"

namespace symdyn {

/// Right continuing factor map without a retract.
///
/// X is the sofic shift over {1, 1bar, 2, 3} whose forbidden words are
/// 1bar 2^n 3 (n >= 0), presented by two states: "N" and "B" (a 1bar was
/// read and only 2s since). Y is the full shift on {1, 2, 3} and phi merges
/// 1bar into 1.
struct NoRetractExample {
  Presentation X;
  Presentation Y;
  SlidingBlockCode phi;
};

NoRetractExample no_retract_example();

/// Lift of y left asymptotic to x, for x in X and y in Y agreeing with phi(x)
/// on (-inf, 0]: splice x_{(-inf,0]} with y_{[1,inf)} and turn the 1bar of
/// every forbidden 1bar 2^n 3 crossing the seam into 1. Throws
/// PreconditionError when the inputs do not qualify.
LassoPoint repair_lift(const NoRetractExample& example, const LassoPoint& x, const LassoPoint& y);

/// x = 1bar^inf 2^n . 2 2^inf and y = 1^inf 2^n . 2 3^inf: phi(x) = y on
/// (-inf, 0] but no lift of y agrees with x on (-inf, -n].
CodedPair no_retract_witness(const NoRetractExample& example, int n);

/// Spacer interleaving of a 1-block code: every symbol is followed by the
/// spacer, which the code fixes.
struct SqrtPair {
  Presentation sqrt_x;
  Presentation sqrt_y;
  SlidingBlockCode sqrt_phi;
  Symbol spacer;
  std::string spacer_name;
  /// Set when "a" was taken and the spacer had to be renamed.
  bool spacer_renamed = false;
};

SqrtPair sqrt_construction(const SlidingBlockCode& code);

/// Recoding of a 1-block code with a retract into one with retract 0
/// (psi with memory R), or of a bi-continuing code into one with retract 0
/// on both sides (psi and theta with window [-R, R]).
struct RecodedCode {
  int R = 0;
  SlidingBlockCode psi;
  Presentation domain;
  SlidingBlockCode bar_phi;
  std::optional<SlidingBlockCode> theta;
  std::optional<Presentation> codomain;
};

/// (psi x)_i = (x_{i-R}, (phi x)_{[i-R, i]}), bar_phi reads off the last
/// image symbol. R is the minimal retract.
RecodedCode retract_zero_recode(const SlidingBlockCode& code);

/// (psi x)_i = (x_i, (phi x)_{[i-R, i+R]}), (theta y)_i = y_{[i-R, i+R]},
/// bar_phi maps (a, b) to b. R is the larger of the two retracts.
RecodedCode bicontinuing_recode(const SlidingBlockCode& code);

/// Independent re-check of a recoding's postconditions.
struct RecodingCheck {
  bool psi_injective = false;
  bool theta_injective = true;
  bool bar_phi_one_block = false;
  bool right_retract_zero = false;
  bool left_retract_zero = true;
  /// bar_phi o psi = phi (or theta o phi) on every sampled point.
  bool commutes = false;
  int samples = 0;

  bool ok() const {
    return psi_injective && theta_injective && bar_phi_one_block && right_retract_zero && left_retract_zero && commutes;
  }
};

RecodingCheck verify_recoding(const SlidingBlockCode& code, const RecodedCode& recoded, Rng& rng, int samples = 50);

}  // namespace symdyn
