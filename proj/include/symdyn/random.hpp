#pragma once

#include <random>

#include "symdyn/code.hpp"

namespace symdyn {

using Rng = std::mt19937_64;

/// Vertex shift on `symbols` symbols with each transition kept with
/// probability `density`; redrawn until the shift is nonempty.
Presentation random_vertex_shift(Rng& rng, int symbols, double density = 0.5);

/// Forbidden 2-words of a random vertex shift (same draw as
/// random_vertex_shift), so the result serializes in forbidden form.
SftSpec random_sft_spec(Rng& rng, int symbols, double density = 0.5);

/// Labeled graph with `states` states over `symbols` symbols; each
/// (state, symbol, state) edge kept with probability `density`; redrawn
/// until nonempty.
Presentation random_presentation(Rng& rng, int states, int symbols, double density = 0.3);

/// 1-block code with images drawn uniformly from `codomain_symbols` symbols
/// named "0", "1", ...
SlidingBlockCode random_one_block_code(Rng& rng, const Presentation& domain, int codomain_symbols);

/// Point of the presented shift: a random cycle as left loop, a random path
/// of length <= max_center, then a random cycle as right loop. Loops are
/// repeated up to `max_repeat` times and the origin is random within the center.
LassoPoint random_lasso(Rng& rng, const Presentation& presentation, int max_center = 6, int max_repeat = 2);

/// A point y of `target` with y_i = x_i for i <= 0: the left half of x followed
/// by a random continuation allowed after it.
LassoPoint random_left_continuation(Rng& rng, const LassoPoint& x, const Presentation& target, int max_center = 6);

}  // namespace symdyn
