// Elements of Q(theta) for a fixed real algebraic theta, stored as rational
// coordinates over the power basis 1, theta, ..., theta^(d-1).
#ifndef SAILKIT_NUMBERFIELD_HPP
#define SAILKIT_NUMBERFIELD_HPP

#include "sailkit/algebraic.hpp"

#include <memory>

namespace sailkit {

class NumberField {
 public:
  explicit NumberField(AlgebraicReal theta);

  const AlgebraicReal& theta() const { return theta_; }
  int degree() const { return theta_.degree(); }
  /// Monic minimal polynomial of theta over Q.
  const poly::QPoly& min_poly_monic() const { return monic_; }

 private:
  AlgebraicReal theta_;
  poly::QPoly monic_;
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

NumberFieldPtr make_field(const AlgebraicReal& theta);
NumberFieldPtr rational_field();  // Q itself (degree 1, theta = 0)

/// Number field element. A default-constructed NFE is the rational 0 of the
/// degree-1 field; rational constants unify with any field on contact.
class NFE {
 public:
  NFE() : NFE(Rat(0)) {}
  explicit NFE(const Rat& r);
  explicit NFE(long v) : NFE(Rat(v)) {}
  NFE(NumberFieldPtr K, QVec coords);

  static NFE theta(const NumberFieldPtr& K);
  static NFE from_rat(const NumberFieldPtr& K, const Rat& r);

  const NumberFieldPtr& field() const { return K_; }
  const QVec& coords() const { return c_; }
  bool is_rational() const;
  Rat rational_value() const;

  bool is_zero() const;
  int sign() const;
  QInterval enclosure() const;
  void refine_field() const;
  double approx() const;

  NFE operator-() const;
  NFE inverse() const;
  friend NFE operator+(const NFE& a, const NFE& b);
  friend NFE operator-(const NFE& a, const NFE& b);
  friend NFE operator*(const NFE& a, const NFE& b);
  friend NFE operator/(const NFE& a, const NFE& b);
  NFE& operator+=(const NFE& o) { return *this = *this + o; }
  NFE& operator-=(const NFE& o) { return *this = *this - o; }
  NFE& operator*=(const NFE& o) { return *this = *this * o; }

  friend NFE operator*(const Rat& c, const NFE& a);
  friend bool operator==(const NFE& a, const NFE& b) { return (a - b).is_zero(); }
  friend bool operator!=(const NFE& a, const NFE& b) { return !(a == b); }

  /// Canonical algebraic value (minimal polynomial + isolating interval).
  AlgebraicReal to_algebraic() const;
  /// The value as a polynomial expression over the field generator.
  Expr to_expr() const;

 private:
  NumberFieldPtr K_;
  QVec c_;
};

/// Same field object, or same generator as a value (used when cones carry
/// several conjugate embeddings of one polynomial).
bool same_field(const NumberFieldPtr& a, const NumberFieldPtr& b);

/// Coerce a and b into a common field if one is rational; throws if both are
/// irrational over different generators.
std::pair<NFE, NFE> unify(const NFE& a, const NFE& b);

}  // namespace sailkit

namespace Eigen {
template <>
struct NumTraits<sailkit::NFE> : GenericNumTraits<sailkit::NFE> {
  typedef sailkit::NFE Real;
  typedef sailkit::NFE NonInteger;
  typedef sailkit::NFE Nested;
  static inline Real epsilon() { return Real(); }
  static inline Real dummy_precision() { return Real(); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 300,
    MulCost = 300
  };
};
}  // namespace Eigen

namespace sailkit {
using FVec = VecX<NFE>;
using FMat = MatX<NFE>;
}  // namespace sailkit

#endif  // SAILKIT_NUMBERFIELD_HPP
