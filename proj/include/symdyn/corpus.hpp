#pragma once

#include <string>
#include <variant>
#include <vector>

#include "symdyn/code.hpp"

namespace symdyn {

/// Small named shifts and codes shipped with the library.
namespace corpus {

Presentation golden_mean();
/// Runs of 0s between 1s have even length; deterministic 2-state graph.
Presentation even_shift();
/// The even shift on three states with two 0-edges leaving the 1-state.
Presentation even_shift_nondeterministic();
Presentation full_shift(int symbols);

/// y_i = min(x_{i-1}, x_i) on the full 2-shift.
SlidingBlockCode min_code();
/// y_i = x_i + x_{i+1} mod 2 on the full 2-shift.
SlidingBlockCode xor_code();
/// Vertex shift a->a, a->b, b->b, c->c, c->d, d->d with a, d -> 0 and
/// b, c -> 1. Not right continuing: b^inf . 0^inf has no lift.
SlidingBlockCode non_continuing_code();
/// Vertex shift on {0, 1, 1'} where 1 must be followed by 0; 1' -> 1.
/// Onto the full 2-shift and not right eresolving.
SlidingBlockCode eresolving_counterexample();
SlidingBlockCode identity_golden_mean();

using Entry = std::variant<Presentation, SlidingBlockCode>;

struct Named {
  std::string name;
  std::string description;
};

const std::vector<Named>& names();
/// Throws Error for unknown names.
Entry get(const std::string& name);

}  // namespace corpus

}  // namespace symdyn
