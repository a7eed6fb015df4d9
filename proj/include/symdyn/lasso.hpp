#pragma once

#include <string>
#include <vector>

#include "symdyn/alphabet.hpp"

namespace symdyn {

/// Eventually periodic bi-infinite point u^inf w v^inf.
///
/// The center w occupies coordinates [origin, origin + |w|); the left loop u
/// repeats to the left of the center (its last symbol sits at origin - 1) and
/// the right loop v repeats from origin + |w| on. Rendered with a '.' before
/// coordinate 0.
class LassoPoint {
 public:
  LassoPoint(Word left_loop, Word center, Word right_loop, long origin = 0);

  static LassoPoint periodic(Word loop, long origin = 0) { return LassoPoint(loop, {}, loop, origin); }

  const Word& left_loop() const { return left_; }
  const Word& center() const { return center_; }
  const Word& right_loop() const { return right_; }
  long origin() const { return origin_; }
  long center_end() const { return origin_ + static_cast<long>(center_.size()); }

  Symbol at(long i) const;
  /// Symbols on [lo, hi).
  Word window(long lo, long hi) const;

  /// sigma^k: coordinate i of the result is coordinate i + k of this point.
  LassoPoint shifted(long k) const;
  /// Same point with the center widened to cover at least [lo, hi).
  LassoPoint unrolled(long lo, long hi) const;
  /// Primitive loops, maximally absorbed center; unique per point.
  LassoPoint canonical() const;
  /// Applies a symbol-to-symbol map coordinatewise.
  LassoPoint relabeled(const std::vector<Symbol>& map) const;

  /// x_i == other_i for all i <= k.
  bool agrees_left(const LassoPoint& other, long k) const;
  /// x_i == other_i for all i >= k.
  bool agrees_right(const LassoPoint& other, long k) const;

  std::string to_string(const Alphabet& alphabet) const;

  friend bool operator==(const LassoPoint& a, const LassoPoint& b);

 private:
  Word left_;
  Word center_;
  Word right_;
  long origin_;
};

}  // namespace symdyn
