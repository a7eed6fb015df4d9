#include "symdyn/lasso.hpp"

#include <algorithm>
#include <numeric>

#include "symdyn/error.hpp"

namespace symdyn {

namespace {

long floor_mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

Word rotate_left(const Word& w) {
  Word r(w.begin() + 1, w.end());
  r.push_back(w.front());
  return r;
}

Word rotate_right(const Word& w) {
  Word r;
  r.reserve(w.size());
  r.push_back(w.back());
  r.insert(r.end(), w.begin(), w.end() - 1);
  return r;
}

}  // namespace

LassoPoint::LassoPoint(Word left_loop, Word center, Word right_loop, long origin)
    : left_(std::move(left_loop)), center_(std::move(center)), right_(std::move(right_loop)), origin_(origin) {
  if (left_.empty() || right_.empty()) throw Error("lasso loops must be nonempty");
}

Symbol LassoPoint::at(long i) const {
  const long end = center_end();
  if (i >= origin_ && i < end) return center_[static_cast<std::size_t>(i - origin_)];
  if (i >= end) return right_[static_cast<std::size_t>((i - end) % static_cast<long>(right_.size()))];
  const long u = static_cast<long>(left_.size());
  return left_[static_cast<std::size_t>(u - 1 - floor_mod(origin_ - 1 - i, u))];
}

Word LassoPoint::window(long lo, long hi) const {
  Word w;
  for (long i = lo; i < hi; ++i) w.push_back(at(i));
  return w;
}

LassoPoint LassoPoint::shifted(long k) const { return LassoPoint(left_, center_, right_, origin_ - k); }

LassoPoint LassoPoint::unrolled(long lo, long hi) const {
  const long u = static_cast<long>(left_.size());
  const long v = static_cast<long>(right_.size());
  long new_origin = origin_;
  while (new_origin > lo) new_origin -= u;
  long new_end = center_end();
  while (new_end < hi) new_end += v;
  // Loops keep their phase because we moved by whole periods.
  return LassoPoint(left_, window(new_origin, new_end), right_, new_origin);
}

LassoPoint LassoPoint::canonical() const {
  Word u(left_.begin(), left_.begin() + static_cast<long>(primitive_period(left_)));
  Word v(right_.begin(), right_.begin() + static_cast<long>(primitive_period(right_)));
  Word w = center_;
  long origin = origin_;

  while (!w.empty() && w.back() == v.back()) {
    v = rotate_right(v);
    w.pop_back();
  }
  while (!w.empty() && w.front() == u.front()) {
    u = rotate_left(u);
    w.erase(w.begin());
    ++origin;
  }
  if (w.empty()) {
    // The left period may run on into the right loop; push the boundary right
    // while it does. If it never breaks within lcm steps the point is periodic.
    const long limit = std::lcm(static_cast<long>(u.size()), static_cast<long>(v.size()));
    long moved = 0;
    while (moved < limit && v.front() == u.front()) {
      u = rotate_left(u);
      v = rotate_left(v);
      ++origin;
      ++moved;
    }
    if (moved == limit) {
      const long p = static_cast<long>(u.size());
      const long r = floor_mod(origin, p);
      // Rotate so that the loop starts at coordinate r in [0, p).
      LassoPoint tmp(u, {}, u, origin);
      Word loop = tmp.window(r, r + p);
      return LassoPoint(loop, {}, loop, r);
    }
  }
  return LassoPoint(std::move(u), std::move(w), std::move(v), origin);
}

LassoPoint LassoPoint::relabeled(const std::vector<Symbol>& map) const {
  auto m = [&](const Word& w) {
    Word out;
    out.reserve(w.size());
    for (Symbol s : w) out.push_back(map.at(static_cast<std::size_t>(s)));
    return out;
  };
  return LassoPoint(m(left_), m(center_), m(right_), origin_);
}

bool LassoPoint::agrees_left(const LassoPoint& other, long k) const {
  const long a = std::min(origin_, other.origin_);
  const long p = std::lcm(static_cast<long>(left_.size()), static_cast<long>(other.left_.size()));
  for (long i = std::min(a, k + 1) - p; i <= k; ++i)
    if (at(i) != other.at(i)) return false;
  return true;
}

bool LassoPoint::agrees_right(const LassoPoint& other, long k) const {
  const long b = std::max(center_end(), other.center_end());
  const long p = std::lcm(static_cast<long>(right_.size()), static_cast<long>(other.right_.size()));
  for (long i = k; i < std::max(b, k) + p; ++i)
    if (at(i) != other.at(i)) return false;
  return true;
}

bool operator==(const LassoPoint& a, const LassoPoint& b) {
  const long k = std::min(a.origin_, b.origin_);
  return a.agrees_left(b, k) && a.agrees_right(b, k);
}

std::string LassoPoint::to_string(const Alphabet& alphabet) const {
  const bool compact = alphabet.single_character_names();
  auto group = [&](const Word& w) {
    std::string s = alphabet.format(w);
    return w.size() > 1 ? "(" + s + ")" : s;
  };
  // Make the center cover coordinate 0 so the marker can be placed inside it.
  LassoPoint p = unrolled(std::min(origin_, 0L), std::max(center_end(), 0L));
  std::string out = group(p.left_) + "^inf ";
  for (long i = p.origin_; i < p.center_end(); ++i) {
    if (i == 0) out += ".";
    out += alphabet.name(p.at(i));
    if (!compact) out += ' ';
  }
  if (p.center_end() == 0) out += ".";
  out += (compact ? " " : "") + group(p.right_) + "^inf";
  return out;
}

}  // namespace symdyn
