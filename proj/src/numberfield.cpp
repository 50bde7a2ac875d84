#include "sailkit/numberfield.hpp"

namespace sailkit {

using poly::IPoly;
using poly::QPoly;

NumberField::NumberField(AlgebraicReal theta) : theta_(std::move(theta)) {
  const IPoly& mp = theta_.min_poly();
  monic_ = QPoly(mp.size());
  Rat l(poly::lc(mp));
  for (Eigen::Index i = 0; i < mp.size(); ++i) {
    monic_(i) = Rat(mp(i)) / l;
    monic_(i).canonicalize();
  }
}

NumberFieldPtr make_field(const AlgebraicReal& theta) {
  return std::make_shared<NumberField>(theta);
}

NumberFieldPtr rational_field() {
  static NumberFieldPtr q = std::make_shared<NumberField>(AlgebraicReal(Rat(0)));
  return q;
}

NFE::NFE(const Rat& r) : K_(rational_field()), c_(1) { c_(0) = r; }

NFE::NFE(NumberFieldPtr K, QVec coords) : K_(std::move(K)), c_(std::move(coords)) {
  if (c_.size() != K_->degree())
    throw Error("FieldMismatch", "coordinate length != field degree");
}

NFE NFE::theta(const NumberFieldPtr& K) {
  if (K->degree() == 1) {
    // theta is the rational root itself
    QVec c(1);
    c(0) = K->theta().rational_value();
    return NFE(K, c);
  }
  QVec c = QVec::Zero(K->degree());
  c(1) = 1;
  return NFE(K, c);
}

NFE NFE::from_rat(const NumberFieldPtr& K, const Rat& r) {
  QVec c = QVec::Zero(K->degree());
  c(0) = r;
  return NFE(K, c);
}

bool NFE::is_rational() const {
  for (Eigen::Index i = 1; i < c_.size(); ++i)
    if (sailkit::sign(c_(i)) != 0) return false;
  return true;
}

Rat NFE::rational_value() const {
  if (!is_rational()) throw Error("NotRational", "NFE has irrational part");
  Rat r = c_(0);
  if (K_->degree() > 1) return r;
  // degree-1 field with nonzero generator value folds into the constant
  return r;
}

bool NFE::is_zero() const {
  for (Eigen::Index i = 0; i < c_.size(); ++i)
    if (sailkit::sign(c_(i)) != 0) return false;
  return true;
}

QInterval NFE::enclosure() const {
  QInterval t = K_->theta().interval();
  QInterval acc{Rat(0), Rat(0)};
  for (Eigen::Index i = c_.size(); i-- > 0;)
    acc = acc * t + QInterval(c_(i));
  return acc;
}

void NFE::refine_field() const { K_->theta().refine(); }

int NFE::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sailkit::sign(c_(0));
  // nonzero is guaranteed (coords of degree < deg(minpoly) cannot vanish at
  // theta), so interval refinement terminates
  while (true) {
    QInterval e = enclosure();
    if (!e.contains_zero()) return sailkit::sign(e.lo);
    refine_field();
  }
}

double NFE::approx() const {
  QInterval e = enclosure();
  Rat target = e.width() / 1000000;
  for (int i = 0; i < 64 && !e.is_point(); ++i) {
    refine_field();
    e = enclosure();
    if (e.width() <= target) break;
  }
  return to_double(e.mid());
}

std::pair<NFE, NFE> unify(const NFE& a, const NFE& b) {
  if (same_field(a.field(), b.field())) {
    if (a.field() == b.field()) return {a, b};
    return {a, NFE(a.field(), b.coords())};
  }
  if (a.is_rational()) return {NFE::from_rat(b.field(), a.rational_value()), b};
  if (b.is_rational()) return {a, NFE::from_rat(a.field(), b.rational_value())};
  throw Error("FieldMismatch", "cannot mix elements of distinct number fields");
}

bool same_field(const NumberFieldPtr& a, const NumberFieldPtr& b) {
  if (a == b) return true;
  if (a->degree() != b->degree()) return false;
  if (a->degree() == 1) return true;  // both are Q
  return compare(a->theta(), b->theta()) == 0;
}

NFE NFE::operator-() const {
  QVec c = c_;
  for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = -c(i);
  return NFE(K_, c);
}

NFE operator+(const NFE& ain, const NFE& bin) {
  auto [a, b] = unify(ain, bin);
  return NFE(a.K_, a.c_ + b.c_);
}

NFE operator-(const NFE& a, const NFE& b) { return a + (-b); }

NFE operator*(const Rat& s, const NFE& a) {
  QVec c = a.c_;
  for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = s * c(i);
  return NFE(a.K_, c);
}

NFE operator*(const NFE& ain, const NFE& bin) {
  auto [a, b] = unify(ain, bin);
  const int d = a.K_->degree();
  if (d == 1) {
    QVec c(1);
    c(0) = a.c_(0) * b.c_(0);
    return NFE(a.K_, c);
  }
  // multiply then reduce by the monic minimal polynomial
  QVec prod = QVec::Zero(2 * d - 1);
  for (int i = 0; i < d; ++i) {
    if (sign(a.c_(i)) == 0) continue;
    for (int j = 0; j < d; ++j) prod(i + j) += a.c_(i) * b.c_(j);
  }
  const QPoly& m = a.K_->min_poly_monic();
  for (int k = 2 * d - 2; k >= d; --k) {
    if (sign(prod(k)) == 0) continue;
    Rat c = prod(k);
    prod(k) = 0;
    for (int i = 0; i < d; ++i) prod(k - d + i) -= c * m(i);
  }
  return NFE(a.K_, prod.head(d).eval());
}

NFE NFE::inverse() const {
  if (is_zero()) throw Error("DivisionByZero", "NFE inverse of zero");
  const int d = K_->degree();
  if (d == 1) {
    QVec c(1);
    c(0) = Rat(1) / c_(0);
    return NFE(K_, c);
  }
  // extended euclid in Q[x]: u * g + v * m = 1 with g this element
  QPoly g = poly::trim(QPoly(c_));
  const QPoly& m = K_->min_poly_monic();
  QPoly r0 = m, r1 = g;
  QPoly s0, s1 = poly::from_list<Rat>({Rat(1)});
  // invariant: r_i = s_i * g  (mod m)
  while (true) {
    auto [q, r2] = poly::divmod(r0, r1);
    if (poly::is_zero(r2)) break;
    QPoly s2 = poly::sub(s0, poly::mul(q, s1));
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  // r1 is a constant gcd (m irreducible, g nonzero of smaller degree)
  if (poly::deg(r1) != 0)
    throw Error("FieldMismatch", "minimal polynomial not irreducible?");
  Rat inv_c = Rat(1) / r1(0);
  QPoly u = poly::scale(s1, inv_c);
  // reduce u mod m just in case, then pad
  auto [q2, rem] = poly::divmod(u, m);
  (void)q2;
  QVec c = QVec::Zero(d);
  for (Eigen::Index i = 0; i < rem.size(); ++i) c(i) = rem(i);
  return NFE(K_, c);
}

NFE operator/(const NFE& a, const NFE& b) { return a * b.inverse(); }

AlgebraicReal NFE::to_algebraic() const {
  if (is_rational()) return AlgebraicReal(is_zero() ? Rat(0) : c_(0));
  // vanishing polynomial: Res_y(mp_theta(y), x - g(y)) = prod (x - g(theta_i))
  IPoly f = K_->theta().min_poly();
  // clear denominators of g: g = G / D with integer G
  QPoly gq = poly::trim(QPoly(c_));
  Int D = 1;
  for (Eigen::Index i = 0; i < gq.size(); ++i) D = lcm(D, den(gq(i)));
  IPoly G(gq.size());
  for (Eigen::Index i = 0; i < gq.size(); ++i) {
    Rat t = gq(i) * Rat(D);
    t.canonicalize();
    G(i) = num(t);
  }
  // b(x, y) = D*x - G(y): coefficients in y
  poly::BiPoly b(std::max<size_t>(G.size(), 1));
  {
    IPoly c0(2);
    c0(0) = -G(0);
    c0(1) = D;
    b[0] = poly::trim(c0);
    for (Eigen::Index k = 1; k < G.size(); ++k) {
      IPoly ck(1);
      ck(0) = -G(k);
      b[k] = poly::trim(ck);
    }
  }
  while (!b.empty() && poly::is_zero(b.back())) b.pop_back();
  IPoly van = poly::resultant_y(f, b);
  // select the factor containing the value
  IPoly sf = poly::squarefree_part(van);
  auto factors = poly::factor_squarefree(sf);
  std::vector<poly::SturmSeq> sturms;
  for (const auto& h : factors) sturms.push_back(poly::sturm(h));
  while (true) {
    QInterval e = enclosure();
    int total = 0, which = -1;
    for (size_t i = 0; i < factors.size(); ++i) {
      int c = poly::count_roots(sturms[i], e.lo, e.hi);
      if (c > 0) {
        total += c;
        which = static_cast<int>(i);
      }
    }
    if (total == 1) {
      QPoly hq = poly::to_q(factors[which]);
      if (sailkit::sign(poly::eval(hq, e.lo)) != 0 &&
          sailkit::sign(poly::eval(hq, e.hi)) != 0) {
        if (poly::deg(factors[which]) == 1) {
          Rat v(-factors[which](0), factors[which](1));
          v.canonicalize();
          return AlgebraicReal(v);
        }
        return AlgebraicReal::unchecked(factors[which], e);
      }
    }
    refine_field();
  }
}

Expr NFE::to_expr() const {
  Expr t = Expr::leaf(K_->theta());
  Expr acc = Expr::constant(Rat(0));
  for (Eigen::Index i = c_.size(); i-- > 0;)
    acc = acc * t + Expr::constant(c_(i));
  return acc;
}

}  // namespace sailkit
