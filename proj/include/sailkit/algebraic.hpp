// Real algebraic numbers: an irreducible primitive integer polynomial plus an
// isolating rational interval. Comparisons and arithmetic are exact; zero is
// decided by the minimal polynomial (the zero value has minimal polynomial x),
// never by interval width.
#ifndef SAILKIT_ALGEBRAIC_HPP
#define SAILKIT_ALGEBRAIC_HPP

#include "sailkit/factor.hpp"
#include "sailkit/poly.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace sailkit {

class AlgebraicReal {
 public:
  AlgebraicReal() : AlgebraicReal(Rat(0)) {}
  explicit AlgebraicReal(const Rat& r);
  explicit AlgebraicReal(long v) : AlgebraicReal(Rat(v)) {}

  /// The unique root of f inside the open interval iv. f may be any nonzero
  /// polynomial with exactly one root there; the stored minimal polynomial is
  /// the irreducible factor owning that root.
  static AlgebraicReal from_root(const poly::IPoly& f, const QInterval& iv);

  /// Internal constructor: mp already irreducible/primitive/positive-leading,
  /// iv isolating with non-root endpoints (not validated).
  static AlgebraicReal unchecked(poly::IPoly mp, QInterval iv);

  const poly::IPoly& min_poly() const { return mp_; }
  int degree() const { return poly::deg(mp_); }
  bool is_rational() const { return degree() == 1; }
  Rat rational_value() const;

  /// Current isolating interval (a point interval for rationals).
  const QInterval& interval() const { return iv_; }
  /// Halve the isolating interval.
  void refine() const;
  /// Refine until the interval width is at most eps and return it.
  QInterval refined(const Rat& eps) const;

  int sign() const;
  double approx() const;

  AlgebraicReal operator-() const;
  AlgebraicReal inverse() const;
  AlgebraicReal pow(unsigned e) const;
  AlgebraicReal abs() const { return sign() >= 0 ? *this : -*this; }

  friend AlgebraicReal operator+(const AlgebraicReal& a, const AlgebraicReal& b);
  friend AlgebraicReal operator-(const AlgebraicReal& a, const AlgebraicReal& b);
  friend AlgebraicReal operator*(const AlgebraicReal& a, const AlgebraicReal& b);
  friend AlgebraicReal operator/(const AlgebraicReal& a, const AlgebraicReal& b);

  /// -1, 0, +1 as a < b, a == b, a > b. Exact.
  friend int compare(const AlgebraicReal& a, const AlgebraicReal& b);
  friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) {
    return compare(a, b) == 0;
  }
  friend bool operator<(const AlgebraicReal& a, const AlgebraicReal& b) {
    return compare(a, b) < 0;
  }

 private:
  poly::IPoly mp_;
  mutable QInterval iv_;
};

/// All real roots of f as canonical algebraic numbers, ascending.
std::vector<AlgebraicReal> real_roots(const poly::IPoly& f);

/// Canonical representation of a value known to be a root of `vanishing`,
/// localized by ever-tighter enclosures: `enclosure()` must return rational
/// intervals whose interior contains the value, `refine` must tighten them.
AlgebraicReal select_algebraic_root(const poly::IPoly& vanishing,
                                    const std::function<QInterval()>& enclosure,
                                    const std::function<void()>& refine);

// ---- expression trees over algebraic leaves ----

/// A polynomial expression over rationals and algebraic reals. Signs are
/// decided by interval refinement with an exact resultant-based fold as the
/// zero certificate.
class Expr {
 public:
  static Expr constant(const Rat& r);
  static Expr leaf(const AlgebraicReal& a);

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  Expr operator-() const;
  Expr pow(unsigned e) const;

  /// Exact value of the expression.
  AlgebraicReal fold() const;
  /// Exact sign.
  int sign() const;
  QInterval enclosure() const;
  void refine_leaves() const;

  struct Node;

 private:
  std::shared_ptr<Node> n_;
  explicit Expr(std::shared_ptr<Node> n) : n_(std::move(n)) {}
};

inline int sign_of(const Expr& e) { return e.sign(); }

}  // namespace sailkit

#endif  // SAILKIT_ALGEBRAIC_HPP
