#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "symdyn/lasso.hpp"
#include "symdyn/presentation.hpp"

namespace symdyn {

/// De Bruijn-style vertex presentation of the SFT avoiding every forbidden
/// factor. Throws EmptyShiftError when no bi-infinite point survives.
Presentation from_forbidden(const SftSpec& spec);

Presentation full_shift(const Alphabet& alphabet);

/// 1-step vertex shift: symbol j may follow symbol i iff allowed[i][j].
Presentation vertex_shift(const Alphabet& alphabet, const std::vector<std::vector<bool>>& allowed);

/// True when states correspond one-to-one to symbols and every edge is
/// labeled by the symbol of its target state.
bool is_vertex_shift(const Presentation& presentation);

/// B_n(X) in lexicographic (canonical symbol) order.
std::set<Word> language(const Presentation& presentation, std::size_t n);
bool in_language(const Presentation& presentation, std::span<const Symbol> word);

/// Subset construction from the full state set, trimmed.
Presentation determinize(const Presentation& presentation);
/// Essential part of the minimal deterministic (follower set) automaton.
Presentation minimize(const Presentation& presentation);

Presentation reverse(const Presentation& presentation);

bool is_sft(const Presentation& presentation);
/// Least K such that the shift is a K-step SFT; nullopt when it is not an SFT.
std::optional<int> step_of(const Presentation& presentation);

bool lasso_membership(const LassoPoint& point, const Presentation& presentation);

}  // namespace symdyn
