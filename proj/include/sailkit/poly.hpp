// Dense univariate polynomials over exact scalars, stored ascending
// (coeffs[k] multiplies x^k, top coefficient nonzero, empty = zero).
//
// Everything the algebraic layer needs lives here: exact division, primitive
// PRS gcd, squarefree decomposition, resultants (including resultants in y of
// bivariate polynomials, used to compose algebraic numbers), Sturm sequences
// and real root isolation with rational endpoints.
#ifndef SAILKIT_POLY_HPP
#define SAILKIT_POLY_HPP

#include "sailkit/interval.hpp"
#include "sailkit/numeric.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace sailkit::poly {

using IPoly = VecX<Int>;
using QPoly = VecX<Rat>;

template <class S>
int deg(const VecX<S>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <class S>
bool is_zero(const VecX<S>& p) {
  return p.size() == 0;
}

template <class S>
VecX<S> trim(VecX<S> p) {
  Eigen::Index n = p.size();
  while (n > 0 && sign(p(n - 1)) == 0) --n;
  p.conservativeResize(n);
  return p;
}

template <class S>
VecX<S> from_list(std::initializer_list<S> cs) {
  VecX<S> p(static_cast<Eigen::Index>(cs.size()));
  Eigen::Index i = 0;
  for (const S& c : cs) p(i++) = c;
  return trim(p);
}

inline IPoly ipoly(std::initializer_list<long> cs) {
  IPoly p(static_cast<Eigen::Index>(cs.size()));
  Eigen::Index i = 0;
  for (long c : cs) p(i++) = Int(c);
  return trim(p);
}

template <class S>
S lc(const VecX<S>& p) {
  return p(p.size() - 1);
}

template <class S>
S coeff(const VecX<S>& p, Eigen::Index k) {
  return k < p.size() ? p(k) : S(0);
}

template <class S>
VecX<S> add(const VecX<S>& a, const VecX<S>& b) {
  VecX<S> r = VecX<S>::Zero(std::max(a.size(), b.size()));
  r.head(a.size()) += a;
  r.head(b.size()) += b;
  return trim(r);
}

template <class S>
VecX<S> sub(const VecX<S>& a, const VecX<S>& b) {
  VecX<S> r = VecX<S>::Zero(std::max(a.size(), b.size()));
  r.head(a.size()) += a;
  r.head(b.size()) -= b;
  return trim(r);
}

template <class S>
VecX<S> neg(const VecX<S>& a) {
  VecX<S> r = a;
  for (Eigen::Index i = 0; i < r.size(); ++i) r(i) = -r(i);
  return r;
}

template <class S>
VecX<S> mul(const VecX<S>& a, const VecX<S>& b) {
  if (is_zero(a) || is_zero(b)) return VecX<S>();
  VecX<S> r = VecX<S>::Zero(a.size() + b.size() - 1);
  for (Eigen::Index i = 0; i < a.size(); ++i)
    for (Eigen::Index j = 0; j < b.size(); ++j) r(i + j) += a(i) * b(j);
  return trim(r);
}

template <class S>
VecX<S> scale(const VecX<S>& a, const S& c) {
  if (sign(c) == 0) return VecX<S>();
  VecX<S> r = a;
  for (Eigen::Index i = 0; i < r.size(); ++i) r(i) = r(i) * c;
  return r;
}

template <class S>
VecX<S> shift_pow(const VecX<S>& a, Eigen::Index k) {  // a(x) * x^k
  if (is_zero(a)) return a;
  VecX<S> r = VecX<S>::Zero(a.size() + k);
  r.tail(a.size()) = a;
  return r;
}

template <class S>
VecX<S> derivative(const VecX<S>& a) {
  if (a.size() <= 1) return VecX<S>();
  VecX<S> r(a.size() - 1);
  for (Eigen::Index i = 1; i < a.size(); ++i) r(i - 1) = a(i) * S(i);
  return trim(r);
}

template <class S, class T>
T eval(const VecX<S>& p, const T& x) {
  T acc(0);
  for (Eigen::Index i = p.size(); i-- > 0;) acc = acc * x + T(p(i));
  return acc;
}

inline QInterval eval_interval(const IPoly& p, const QInterval& x) {
  QInterval acc(Rat(0));
  for (Eigen::Index i = p.size(); i-- > 0;)
    acc = acc * x + QInterval(Rat(p(i)));
  return acc;
}

inline QInterval eval_interval(const QPoly& p, const QInterval& x) {
  QInterval acc(Rat(0));
  for (Eigen::Index i = p.size(); i-- > 0;) acc = acc * x + QInterval(p(i));
  return acc;
}

// ---- integer-specific helpers ----

Int content(const IPoly& p);
IPoly primitive_part(const IPoly& p);  // content removed, leading coeff > 0
QPoly to_q(const IPoly& p);
IPoly clear_denominators(const QPoly& p);  // primitive integer multiple

/// Quotient/remainder over the rationals (b != 0).
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

/// Exact division over Z; throws if not exact.
IPoly exact_div(const IPoly& a, const IPoly& b);

/// Pseudo-remainder prem(a, b) (lc(b)^(deg a - deg b + 1) * a mod b).
IPoly pseudo_rem(const IPoly& a, const IPoly& b);

/// Primitive-PRS gcd over Z, result primitive with positive leading coeff.
IPoly gcd(const IPoly& a, const IPoly& b);

/// f / gcd(f, f'), primitive, positive leading coefficient.
IPoly squarefree_part(const IPoly& f);

/// Yun's algorithm: f = prod parts[i].first ^ parts[i].second, the firsts
/// squarefree and pairwise coprime.
std::vector<std::pair<IPoly, int>> squarefree_decomposition(const IPoly& f);

/// Resultant of two integer polynomials (Sylvester determinant, Bareiss).
Int resultant(const IPoly& a, const IPoly& b);

/// A bivariate polynomial as coefficients in y; entry k is the x-polynomial
/// multiplying y^k.
using BiPoly = std::vector<IPoly>;

/// Res_y(a(y), b(x, y)) as a polynomial in x. a is univariate in y.
IPoly resultant_y(const IPoly& a, const BiPoly& b);

/// b(x,y) = g(x - y) for univariate g.
BiPoly subst_x_minus_y(const IPoly& g);
/// b(x,y) = y^deg(g) * g(x / y).
BiPoly homogenize_x_over_y(const IPoly& g);

// ---- argument transformations (all keep integrality) ----

IPoly compose_shift(const IPoly& f, const Rat& c);     // ~ f(x + c), cleared
IPoly compose_scale_arg(const IPoly& f, const Rat& r); // ~ f(x / r), cleared
IPoly reverse(const IPoly& f);                         // x^deg f(1/x)
IPoly compose_neg(const IPoly& f);                     // f(-x), sign-normalized

// ---- Sturm machinery ----

struct SturmSeq {
  std::vector<QPoly> seq;
  /// sign variations at x (limit from the right at exact roots is what the
  /// classical count uses; we only ever query at non-root rationals or use
  /// the standard half-open convention).
  int variations_at(const Rat& x) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;
};

SturmSeq sturm(const IPoly& f);

/// Number of distinct real roots in (a, b].
int count_roots(const SturmSeq& s, const Rat& a, const Rat& b);
int count_real_roots(const SturmSeq& s);
int count_roots_gt(const SturmSeq& s, const Rat& a);  // roots in (a, +inf)

/// All real roots isolated in disjoint open intervals (lo, hi), lo < root <
/// hi, sorted ascending. f need not be squarefree (roots reported once).
std::vector<QInterval> isolate_real_roots(const IPoly& f);

/// Bisect an isolating interval of squarefree f until width <= eps.
QInterval refine_root(const IPoly& f, QInterval iv, const Rat& eps);
/// One bisection step.
QInterval refine_step(const IPoly& f, const QInterval& iv);

/// 1 + max |a_i / a_n|: every real root lies in (-bound, bound).
Rat cauchy_bound(const IPoly& f);

std::string to_string(const IPoly& f, const char* var = "x");

}  // namespace sailkit::poly

#endif  // SAILKIT_POLY_HPP
