// Exact scalar types and Eigen dense aliases used throughout sailkit.
//
// All arithmetic in this library is exact: big integers (mpz_class),
// rationals (mpq_class), and algebraic reals built on top of them.
// Floating point appears only as a non-authoritative hint (root finding
// seeds, SVG layout); every decision predicate is exact.
#ifndef SAILKIT_NUMERIC_HPP
#define SAILKIT_NUMERIC_HPP

#include <gmpxx.h>

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace Eigen {

// Custom-scalar NumTraits, per the Eigen manual.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace sailkit {

using Int = mpz_class;
using Rat = mpq_class;

template <class S>
using MatX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using VecX = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using IMat = MatX<Int>;
using IVec = VecX<Int>;
using QMat = MatX<Rat>;
using QVec = VecX<Rat>;

/// Error with a stable machine-readable code (mirrored into CLI output).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline int sign(const Int& x) { return sgn(x); }
inline int sign(const Rat& x) { return sgn(x); }
inline int sign(long x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline Int num(const Rat& x) { return x.get_num(); }
inline Int den(const Rat& x) { return x.get_den(); }

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor_rat(const Rat& x) { return floor_div(num(x), den(x)); }
inline Int ceil_rat(const Rat& x) { return ceil_div(num(x), den(x)); }

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
  return Rat(pow_int(num(base), e), pow_int(den(base), e));
}

/// floor(sqrt(x)) for x >= 0.
inline Int isqrt(const Int& x) {
  if (sgn(x) < 0) throw Error("NegativeSqrt", "isqrt of negative integer");
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

inline bool is_perfect_square(const Int& x) {
  return sgn(x) >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

/// Rational enclosure [lb, ub] of sqrt(s) for s >= 0, width shrinking with
/// `bits` of dyadic refinement.
inline std::pair<Rat, Rat> sqrt_enclosure(const Rat& s, unsigned bits = 32) {
  if (sign(s) < 0) throw Error("NegativeSqrt", "sqrt_enclosure of negative");
  if (sign(s) == 0) return {Rat(0), Rat(0)};
  Int scale = pow_int(2, bits);
  // sqrt(s) = sqrt(num*den) / den; bound sqrt(num*den*scale^2) by isqrt.
  Int t = num(s) * den(s) * scale * scale;
  Int r = isqrt(t);  // r^2 <= t < (r+1)^2
  Rat lb(r, den(s) * scale);
  Rat ub(r + 1, den(s) * scale);
  lb.canonicalize();
  ub.canonicalize();
  return {lb, ub};
}

inline double to_double(const Rat& x) { return x.get_d(); }

/// Exact rational from a decimal/fraction string ("p/q" or "p").
inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw Error("MalformedNumber", "cannot parse rational: " + s);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Int& x) { return x.get_str(); }
inline std::string to_string(const Rat& x) {
  Rat c = x;
  c.canonicalize();
  return c.get_str();
}

inline Int int_from_string(const std::string& s) {
  Int r;
  if (r.set_str(s, 10) != 0)
    throw Error("MalformedNumber", "cannot parse integer: " + s);
  return r;
}

}  // namespace sailkit

#endif  // SAILKIT_NUMERIC_HPP
