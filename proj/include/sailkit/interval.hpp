// Closed rational intervals; the workhorse of sign determination for
// algebraic quantities (refine operands until the interval misses zero).
#ifndef SAILKIT_INTERVAL_HPP
#define SAILKIT_INTERVAL_HPP

#include "sailkit/numeric.hpp"

#include <algorithm>
#include <optional>

namespace sailkit {

struct QInterval {
  Rat lo, hi;

  QInterval() : lo(0), hi(0) {}
  QInterval(Rat point) : lo(point), hi(point) {}
  QInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}

  bool is_point() const { return lo == hi; }
  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return sign(lo) <= 0 && sign(hi) >= 0; }

  /// Sign of every point in the interval, if uniform.
  std::optional<int> uniform_sign() const {
    if (sign(lo) > 0) return 1;
    if (sign(hi) < 0) return -1;
    if (sign(lo) == 0 && sign(hi) == 0) return 0;
    return std::nullopt;
  }
};

inline QInterval operator+(const QInterval& a, const QInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}
inline QInterval operator-(const QInterval& a, const QInterval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}
inline QInterval operator-(const QInterval& a) { return {-a.hi, -a.lo}; }

inline QInterval operator*(const QInterval& a, const QInterval& b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)),
          std::max(std::max(p1, p2), std::max(p3, p4))};
}

inline QInterval operator*(const Rat& c, const QInterval& a) {
  if (sign(c) >= 0) return {c * a.lo, c * a.hi};
  return {c * a.hi, c * a.lo};
}

inline QInterval operator+(const Rat& c, const QInterval& a) {
  return {c + a.lo, c + a.hi};
}

inline QInterval pow(const QInterval& a, unsigned e) {
  QInterval r{Rat(1), Rat(1)};
  for (unsigned i = 0; i < e; ++i) r = r * a;
  return r;
}

inline bool disjoint(const QInterval& a, const QInterval& b) {
  return a.hi < b.lo || b.hi < a.lo;
}

}  // namespace sailkit

#endif  // SAILKIT_INTERVAL_HPP
