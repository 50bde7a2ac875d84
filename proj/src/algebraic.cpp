#include "sailkit/algebraic.hpp"

#include <functional>

namespace sailkit {

using poly::IPoly;
using poly::QPoly;

namespace {

// Strong interval invariant: for irrational values, f(lo) != 0, f(hi) != 0 and
// exactly one root of f lies in (lo, hi).
bool endpoint_clean(const IPoly& f, const QInterval& iv) {
  QPoly fq = poly::to_q(f);
  return sign(poly::eval(fq, iv.lo)) != 0 && sign(poly::eval(fq, iv.hi)) != 0;
}

}  // namespace

AlgebraicReal::AlgebraicReal(const Rat& r) {
  // minimal polynomial q x - p
  mp_ = IPoly(2);
  mp_(0) = -num(r);
  mp_(1) = den(r);
  mp_ = poly::trim(mp_);
  if (mp_.size() == 1) {  // r == 0: poly is just x
    mp_ = IPoly(2);
    mp_(0) = 0;
    mp_(1) = 1;
  }
  iv_ = QInterval(r);
}

AlgebraicReal AlgebraicReal::unchecked(IPoly mp, QInterval iv) {
  if (poly::deg(mp) == 1) {
    Rat v(-mp(0), mp(1));
    v.canonicalize();
    return AlgebraicReal(v);
  }
  AlgebraicReal a(Rat(0));
  a.mp_ = std::move(mp);
  a.iv_ = std::move(iv);
  return a;
}

AlgebraicReal AlgebraicReal::from_root(const IPoly& f, const QInterval& iv) {
  if (poly::is_zero(f) || poly::deg(f) == 0)
    throw Error("BadAlgebraic", "from_root needs a nonconstant polynomial");
  auto factors = poly::factor_squarefree(poly::squarefree_part(f));
  const AlgebraicReal* found = nullptr;
  std::vector<AlgebraicReal> owners;
  for (const IPoly& h : factors) {
    for (const AlgebraicReal& r : real_roots(h)) {
      // is the root of r strictly inside (iv.lo, iv.hi)?
      if (r.is_rational()) {
        Rat v = r.rational_value();
        if (iv.lo < v && v < iv.hi) owners.push_back(r);
        continue;
      }
      QInterval j = r.interval();
      QPoly hq = poly::to_q(h);
      bool decided = false;
      while (!decided) {
        if (j.lo >= iv.lo && j.hi <= iv.hi) {
          owners.push_back(r);
          decided = true;
        } else if (j.hi <= iv.lo || j.lo >= iv.hi) {
          decided = true;  // outside
        } else if (j.contains(iv.lo) && sailkit::sign(poly::eval(hq, iv.lo)) == 0) {
          decided = true;  // the root is exactly iv.lo: not inside the open iv
        } else if (j.contains(iv.hi) && sailkit::sign(poly::eval(hq, iv.hi)) == 0) {
          decided = true;
        } else {
          r.refine();
          j = r.interval();
        }
      }
    }
  }
  if (owners.size() != 1)
    throw Error("BadAlgebraic",
                "interval does not isolate exactly one real root");
  found = &owners[0];
  return *found;
}

Rat AlgebraicReal::rational_value() const {
  if (!is_rational())
    throw Error("NotRational", "algebraic number of degree > 1");
  Rat r(-mp_(0), mp_(1));
  r.canonicalize();
  return r;
}

void AlgebraicReal::refine() const {
  if (iv_.is_point()) return;
  iv_ = poly::refine_step(mp_, iv_);
}

QInterval AlgebraicReal::refined(const Rat& eps) const {
  while (!iv_.is_point() && iv_.width() > eps) refine();
  return iv_;
}

int AlgebraicReal::sign() const {
  if (is_rational()) return sailkit::sign(rational_value());
  // irreducible of degree >= 2 never vanishes at 0
  while (iv_.contains_zero()) refine();
  return sailkit::sign(iv_.lo);
}

double AlgebraicReal::approx() const {
  refined(Rat(1, 1000000000));
  return to_double(iv_.mid());
}

AlgebraicReal AlgebraicReal::operator-() const {
  if (is_rational()) return AlgebraicReal(Rat(-rational_value()));
  return unchecked(poly::compose_neg(mp_), QInterval(-iv_.hi, -iv_.lo));
}

AlgebraicReal AlgebraicReal::inverse() const {
  if (is_rational()) {
    Rat v = rational_value();
    if (sailkit::sign(v) == 0) throw Error("DivisionByZero", "1/0");
    return AlgebraicReal(Rat(1) / v);
  }
  while (iv_.contains_zero()) refine();
  QInterval ninv(Rat(1) / iv_.hi, Rat(1) / iv_.lo);
  return unchecked(poly::reverse(mp_), ninv);
}

AlgebraicReal select_algebraic_root(const IPoly& vanish,
                                    const std::function<QInterval()>& enc,
                                    const std::function<void()>& refine_ops) {
  IPoly sf = poly::squarefree_part(vanish);
  auto factors = poly::factor_squarefree(sf);
  std::vector<poly::SturmSeq> sturms;
  sturms.reserve(factors.size());
  for (const auto& h : factors) sturms.push_back(poly::sturm(h));
  for (int round = 0;; ++round) {
    QInterval e = enc();
    // candidates: factors with a root in (lo, hi]
    int total = 0;
    int which = -1;
    for (size_t i = 0; i < factors.size(); ++i) {
      int c = poly::count_roots(sturms[i], e.lo, e.hi);
      if (c > 0) {
        total += c;
        which = static_cast<int>(i);
      }
    }
    if (total == 1 && endpoint_clean(factors[which], e)) {
      const IPoly& h = factors[which];
      if (poly::deg(h) == 1) {
        Rat v(-h(0), h(1));
        v.canonicalize();
        return AlgebraicReal(v);
      }
      return AlgebraicReal::unchecked(h, e);
    }
    if (round > 4096)
      throw Error("AlgebraicStall", "root selection failed to converge");
    refine_ops();
  }
}

AlgebraicReal operator+(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (a.is_rational() && b.is_rational())
    return AlgebraicReal(Rat(a.rational_value() + b.rational_value()));
  if (a.is_rational()) return b + a;
  if (b.is_rational()) {
    Rat r = b.rational_value();
    // roots of mp(x - r) are (root + r)
    IPoly g = poly::compose_shift(a.min_poly(), -r);
    QInterval iv(a.interval().lo + r, a.interval().hi + r);
    return AlgebraicReal::unchecked(g, iv);
  }
  IPoly van = poly::resultant_y(a.min_poly(), poly::subst_x_minus_y(b.min_poly()));
  return select_algebraic_root(
      van, [&] { return QInterval(a.interval()) + QInterval(b.interval()); },
      [&] {
        a.refine();
        b.refine();
      });
}

AlgebraicReal operator-(const AlgebraicReal& a, const AlgebraicReal& b) {
  return a + (-b);
}

AlgebraicReal operator*(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (a.is_rational() && b.is_rational())
    return AlgebraicReal(Rat(a.rational_value() * b.rational_value()));
  if (a.is_rational()) return b * a;
  if (b.is_rational()) {
    Rat r = b.rational_value();
    if (sign(r) == 0) return AlgebraicReal(Rat(0));
    IPoly g = poly::compose_scale_arg(a.min_poly(), r);
    QInterval s = r * a.interval();
    return AlgebraicReal::unchecked(g, s);
  }
  IPoly van =
      poly::resultant_y(a.min_poly(), poly::homogenize_x_over_y(b.min_poly()));
  return select_algebraic_root(
      van, [&] { return QInterval(a.interval()) * QInterval(b.interval()); },
      [&] {
        a.refine();
        b.refine();
      });
}

AlgebraicReal operator/(const AlgebraicReal& a, const AlgebraicReal& b) {
  return a * b.inverse();
}

AlgebraicReal AlgebraicReal::pow(unsigned e) const {
  AlgebraicReal acc(Rat(1));
  AlgebraicReal base = *this;
  unsigned k = e;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

int compare(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (a.is_rational() && b.is_rational()) {
    Rat x = a.rational_value(), y = b.rational_value();
    return x < y ? -1 : (x == y ? 0 : 1);
  }
  bool same_poly = a.mp_.size() == b.mp_.size();
  if (same_poly)
    for (Eigen::Index i = 0; i < a.mp_.size(); ++i)
      if (a.mp_(i) != b.mp_(i)) {
        same_poly = false;
        break;
      }
  if (same_poly) {
    // equal iff the hull of the two isolating intervals holds a single root
    QInterval ha(std::min(a.iv_.lo, b.iv_.lo), std::max(a.iv_.hi, b.iv_.hi));
    if (!disjoint(a.iv_, b.iv_)) {
      poly::SturmSeq s = poly::sturm(a.mp_);
      if (poly::count_roots(s, ha.lo, ha.hi) == 1) return 0;
    }
  }
  // distinct values: refine until the intervals separate
  while (!disjoint(a.iv_, b.iv_)) {
    a.refine();
    b.refine();
  }
  return a.iv_.hi < b.iv_.lo ? -1 : 1;
}

std::vector<AlgebraicReal> real_roots(const IPoly& f) {
  std::vector<AlgebraicReal> out;
  if (poly::is_zero(f) || poly::deg(f) == 0) return out;
  for (const auto& [h, mult] : poly::factor(f)) {
    (void)mult;
    for (const QInterval& iv : poly::isolate_real_roots(h)) {
      if (iv.is_point()) {
        out.push_back(AlgebraicReal(iv.lo));
      } else {
        out.push_back(AlgebraicReal::unchecked(h, iv));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const AlgebraicReal& x, const AlgebraicReal& y) {
              return compare(x, y) < 0;
            });
  return out;
}

// ---- Expr ----

struct Expr::Node {
  enum Kind { kConst, kLeaf, kAdd, kMul, kNeg, kPow } kind;
  Rat c;
  AlgebraicReal a;
  std::shared_ptr<Node> l, r;
  unsigned e = 0;
  mutable std::optional<AlgebraicReal> folded;
};

Expr Expr::constant(const Rat& r) {
  auto n = std::make_shared<Node>();
  n->kind = Node::kConst;
  n->c = r;
  return Expr(n);
}

Expr Expr::leaf(const AlgebraicReal& a) {
  auto n = std::make_shared<Node>();
  n->kind = Node::kLeaf;
  n->a = a;
  return Expr(n);
}

Expr operator+(const Expr& a, const Expr& b) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Node::kAdd;
  n->l = a.n_;
  n->r = b.n_;
  return Expr(n);
}

Expr operator*(const Expr& a, const Expr& b) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Node::kMul;
  n->l = a.n_;
  n->r = b.n_;
  return Expr(n);
}

Expr Expr::operator-() const {
  auto n = std::make_shared<Node>();
  n->kind = Node::kNeg;
  n->l = n_;
  return Expr(n);
}

Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

Expr Expr::pow(unsigned e) const {
  auto n = std::make_shared<Node>();
  n->kind = Node::kPow;
  n->l = n_;
  n->e = e;
  return Expr(n);
}

namespace {

QInterval node_enclosure(const Expr::Node* n) {
  using N = Expr::Node;
  switch (n->kind) {
    case N::kConst:
      return QInterval(n->c);
    case N::kLeaf:
      return n->a.interval();
    case N::kAdd:
      return node_enclosure(n->l.get()) + node_enclosure(n->r.get());
    case N::kMul:
      return node_enclosure(n->l.get()) * node_enclosure(n->r.get());
    case N::kNeg:
      return -node_enclosure(n->l.get());
    case N::kPow:
      return pow(node_enclosure(n->l.get()), n->e);
  }
  return QInterval(Rat(0));
}

void node_refine(const Expr::Node* n) {
  using N = Expr::Node;
  switch (n->kind) {
    case N::kConst:
      return;
    case N::kLeaf:
      n->a.refine();
      return;
    case N::kPow:
    case N::kNeg:
      node_refine(n->l.get());
      return;
    case N::kAdd:
    case N::kMul:
      node_refine(n->l.get());
      node_refine(n->r.get());
      return;
  }
}

AlgebraicReal node_fold(const Expr::Node* n) {
  using N = Expr::Node;
  if (n->folded) return *n->folded;
  AlgebraicReal v;
  switch (n->kind) {
    case N::kConst:
      v = AlgebraicReal(n->c);
      break;
    case N::kLeaf:
      v = n->a;
      break;
    case N::kAdd:
      v = node_fold(n->l.get()) + node_fold(n->r.get());
      break;
    case N::kMul:
      v = node_fold(n->l.get()) * node_fold(n->r.get());
      break;
    case N::kNeg:
      v = -node_fold(n->l.get());
      break;
    case N::kPow:
      v = node_fold(n->l.get()).pow(n->e);
      break;
  }
  n->folded = v;
  return v;
}

}  // namespace

QInterval Expr::enclosure() const { return node_enclosure(n_.get()); }
void Expr::refine_leaves() const { node_refine(n_.get()); }
AlgebraicReal Expr::fold() const { return node_fold(n_.get()); }

int Expr::sign() const {
  for (int round = 0; round < 24; ++round) {
    QInterval e = enclosure();
    auto s = e.uniform_sign();
    if (s) return *s;
    if (!e.contains_zero()) return sailkit::sign(e.lo);
    refine_leaves();
  }
  return fold().sign();
}

}  // namespace sailkit
