#include "sailkit/cone.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace sailkit::cone {

using poly::IPoly;
using poly::QPoly;

Rat field_trace(const NFE& g) {
  const NumberFieldPtr& k = g.field();
  const int d = k->degree();
  if (d == 1) return g.coords()(0);
  // power sums of the minimal polynomial's roots via Newton's identities
  const QPoly& m = k->min_poly_monic();  // x^d + a_(d-1) x^(d-1) + ... + a_0
  QVec p(d);
  p(0) = Rat(d);
  for (int kk = 1; kk < d; ++kk) {
    Rat s = -Rat(kk) * m(d - kk);
    for (int i = 1; i < kk; ++i) s -= m(d - i) * p(kk - i);
    p(kk) = s;
  }
  Rat tr(0);
  for (int i = 0; i < d; ++i) tr += g.coords()(i) * p(i);
  tr.canonicalize();
  return tr;
}

NFE ConeSpec::form_value(int i, const IVec& x) const {
  const Ray& r = rays[i];
  NFE acc = NFE::from_rat(r.field, Rat(0));
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    if (sign(x(k)) == 0) continue;
    acc = acc + Rat(x(k)) * r.form(k);
  }
  return acc;
}

int ConeSpec::form_sign(int i, const IVec& x) const {
  return form_value(i, x).sign();
}

Where ConeSpec::classify(const IVec& x) const {
  if (sign(gcd_vec(x)) == 0) return Where::Boundary;  // the origin
  bool boundary = false;
  for (int i = 0; i < dimension; ++i) {
    int s = form_sign(i, x);
    if (s < 0) return Where::Exterior;
    if (s == 0) boundary = true;
  }
  return boundary ? Where::Boundary : Where::Interior;
}

Rat ConeSpec::height_rational(const IVec& x) const {
  if (!height_q) throw Error("Internal", "cone has no rational height");
  Rat h(0);
  for (Eigen::Index k = 0; k < x.size(); ++k) h += (*height_q)(k)*Rat(x(k));
  h.canonicalize();
  return h;
}

int ConeSpec::height_compare(const IVec& x, const Rat& bound) const {
  if (height_q) {
    Rat h = height_rational(x);
    return h < bound ? -1 : (h == bound ? 0 : 1);
  }
  NFE acc = NFE::from_rat(common_field, -bound);
  for (Eigen::Index k = 0; k < x.size(); ++k)
    acc = acc + Rat(x(k)) * (*height_f)(k);
  return acc.sign();
}

QInterval ConeSpec::ray_coord_enclosure(int ray, int coord, const Rat& eps) const {
  const NFE& v = rays[ray].direction(coord);
  QInterval e = v.enclosure();
  while (e.width() > eps) {
    v.refine_field();
    e = v.enclosure();
  }
  return e;
}

std::vector<AlgebraicReal> real_eigenvalues(const IMat& a) {
  return real_roots(char_poly(a));
}

namespace {

// Symbolic eigen data over Q[x]/(factor): right and left eigenvector formulas
// with rational-coefficient entries, shared by all conjugate embeddings.
struct SymbolicEigen {
  std::vector<QPoly> right;  // entries of the right eigenvector, mod factor
  std::vector<QPoly> left;
};

FVec eval_formula(const std::vector<QPoly>& formula, const NumberFieldPtr& k) {
  FVec v(static_cast<Eigen::Index>(formula.size()));
  const int d = k->degree();
  for (size_t i = 0; i < formula.size(); ++i) {
    QVec c = QVec::Zero(d);
    for (Eigen::Index j = 0; j < formula[i].size() && j < d; ++j)
      c(j) = formula[i](j);
    v(static_cast<Eigen::Index>(i)) = NFE(k, c);
  }
  return v;
}

std::vector<QPoly> kernel_formula(const IMat& a, const NumberFieldPtr& k) {
  // kernel of (a - theta I) over Q(theta); must be one-dimensional
  const Eigen::Index n = a.rows();
  FMat m(n, n);
  NFE th = NFE::theta(k);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = NFE::from_rat(k, Rat(a(i, j)));
      if (i == j) m(i, j) = m(i, j) - th;
    }
  auto kern = kernel_field(m);
  if (kern.size() != 1)
    throw Error("DefectiveEigenvalue",
                "selected eigenvalue has eigenspace dimension != 1");
  // normalize: first nonzero coordinate = 1
  FVec v = kern[0];
  Eigen::Index first = -1;
  for (Eigen::Index i = 0; i < n; ++i)
    if (!v(i).is_zero()) {
      first = i;
      break;
    }
  NFE inv = v(first).inverse();
  std::vector<QPoly> out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    NFE e = v(i) * inv;
    out[i] = poly::trim(QPoly(e.coords()));
  }
  return out;
}

}  // namespace

ConeSpec cone_from_matrix(const IMat& a, const std::vector<int>& selection) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw Error("NonSquare", "cone_from_matrix needs square A");
  Int d = det_bareiss(a);
  if (d != 1 && d != -1)
    throw Error("NotUnimodular", "matrix determinant must be +-1");
  if (static_cast<Eigen::Index>(selection.size()) != n)
    throw Error("InvalidSelection", "need exactly n eigenray indices");

  IPoly chi = char_poly(a);
  auto factors = poly::factor(chi);
  // ascending real eigenvalues with their factors
  struct RootRef {
    AlgebraicReal value;
    IPoly factor;
  };
  std::vector<RootRef> roots;
  int total_real = 0, total_all = 0;
  for (const auto& [h, mult] : factors) {
    (void)mult;
    total_all += poly::deg(h) * mult;
    for (const AlgebraicReal& r : real_roots(h)) {
      roots.push_back({r, h});
      ++total_real;
    }
  }
  if (total_real < static_cast<int>(poly::deg(chi)) && total_real == 0)
    throw Error("ComplexEigenvalueSelected", "matrix has no real eigenvalues");
  std::sort(roots.begin(), roots.end(), [](const RootRef& x, const RootRef& y) {
    return compare(x.value, y.value) < 0;
  });

  ConeSpec c;
  c.dimension = static_cast<int>(n);
  c.source_matrix = a;
  c.ray_selection = selection;
  IMat at = a.transpose();

  std::map<std::string, SymbolicEigen> memo;  // per-factor symbolic formulas
  auto factor_key = [](const IPoly& f) { return poly::to_string(f); };

  for (int idx : selection) {
    if (idx < 0 || idx >= total_real)
      throw Error("ComplexEigenvalueSelected",
                  "eigenray index outside the real eigenvalue range");
    const RootRef& rr = roots[idx];
    NumberFieldPtr k = make_field(rr.value);
    std::string key = factor_key(rr.factor);
    auto it = memo.find(key);
    if (it == memo.end()) {
      SymbolicEigen se;
      se.right = kernel_formula(a, k);
      se.left = kernel_formula(at, k);
      it = memo.insert({key, se}).first;
    }
    Ray ray;
    ray.field = k;
    ray.direction = eval_formula(it->second.right, k);
    FVec left = eval_formula(it->second.left, k);
    // normalize the form: <form, direction> = 1
    NFE dot = NFE::from_rat(k, Rat(0));
    for (Eigen::Index i = 0; i < n; ++i) dot = dot + left(i) * ray.direction(i);
    if (dot.is_zero())
      throw Error("DefectiveEigenvalue",
                  "left/right eigenvectors orthogonal (defective matrix)");
    NFE inv = dot.inverse();
    ray.form = FVec(n);
    for (Eigen::Index i = 0; i < n; ++i) ray.form(i) = left(i) * inv;
    ray.eigenvalue = NFE::theta(k);
    c.rays.push_back(ray);
  }

  // forbid selecting the same eigenvalue twice
  for (size_t i = 0; i < selection.size(); ++i)
    for (size_t j = i + 1; j < selection.size(); ++j)
      if (selection[i] == selection[j])
        throw Error("InvalidSelection", "eigenray selected twice");

  // group rays by factor; conjugate-complete check and rational height
  QVec h = QVec::Zero(n);
  std::map<std::string, FactorGroup> groups;
  for (size_t i = 0; i < selection.size(); ++i) {
    const RootRef& rr = roots[selection[i]];
    auto& g = groups[factor_key(rr.factor)];
    g.factor = rr.factor;
    g.ray_indices.push_back(static_cast<int>(i));
  }
  for (auto& [key, g] : groups) {
    (void)key;
    int degf = poly::deg(g.factor);
    int realf = static_cast<int>(poly::isolate_real_roots(g.factor).size());
    if (degf == 1) {
      for (int ri : g.ray_indices)
        for (Eigen::Index kk = 0; kk < n; ++kk)
          h(kk) += c.rays[ri].form(kk).coords()(0);
      c.groups.push_back(g);
      continue;
    }
    if (realf != degf || static_cast<int>(g.ray_indices.size()) != degf)
      throw Error("UnsupportedCone",
                  "eigenray selection must take every root of each "
                  "irrational factor (conjugate-complete)");
    int rep = g.ray_indices[0];
    for (Eigen::Index kk = 0; kk < n; ++kk)
      h(kk) += field_trace(c.rays[rep].form(kk));
    c.groups.push_back(g);
  }
  for (Eigen::Index kk = 0; kk < n; ++kk) h(kk).canonicalize();
  c.height_q = h;
  return c;
}

ConeSpec cone_from_generators(const NumberFieldPtr& k,
                              const std::vector<FVec>& generators) {
  const Eigen::Index n = static_cast<Eigen::Index>(generators.size());
  if (n == 0) throw Error("InvalidCone", "no generators");
  if (generators[0].size() != n)
    throw Error("InvalidCone", "need n generators of dimension n");
  FMat g(n, n);  // columns are generators
  for (Eigen::Index j = 0; j < n; ++j) g.col(j) = generators[j];
  auto ginv = inverse_field(g);
  if (!ginv)
    throw Error("InvalidCone", "generators are linearly dependent");
  ConeSpec c;
  c.dimension = static_cast<int>(n);
  bool all_rational = k->degree() == 1;
  FVec hf(n);
  for (Eigen::Index i = 0; i < n; ++i)
    hf(i) = NFE::from_rat(k, Rat(0));
  for (Eigen::Index i = 0; i < n; ++i) {
    Ray ray;
    ray.field = k;
    ray.direction = generators[i];
    ray.form = FVec(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      ray.form(j) = (*ginv)(i, j);
      hf(j) = hf(j) + ray.form(j);
    }
    c.rays.push_back(ray);
  }
  c.common_field = k;
  if (all_rational) {
    QVec h(n);
    for (Eigen::Index j = 0; j < n; ++j) h(j) = hf(j).coords()(0);
    c.height_q = h;
  } else {
    // the height may still be rational (conjugate symmetry); detect it
    bool rat = true;
    for (Eigen::Index j = 0; j < n && rat; ++j) rat = hf(j).is_rational();
    if (rat) {
      QVec h(n);
      for (Eigen::Index j = 0; j < n; ++j) h(j) = hf(j).coords()(0);
      c.height_q = h;
    } else {
      c.height_f = hf;
    }
  }
  FactorGroup g0;
  g0.factor = k->theta().min_poly();
  for (int i = 0; i < c.dimension; ++i) g0.ray_indices.push_back(i);
  c.groups.push_back(g0);
  return c;
}

ConeSpec cone_from_rational(const std::vector<IVec>& generators) {
  NumberFieldPtr q = rational_field();
  std::vector<FVec> gens;
  for (const IVec& v : generators) gens.push_back(to_field(v, q));
  return cone_from_generators(q, gens);
}

bool irrationality_check(const ConeSpec& c) {
  // facet hyperplane i: <L_i, x> = 0. Expanding over the power basis of the
  // ray's field gives d rational linear equations; a nonzero lattice point
  // exists iff the rational kernel is nontrivial.
  const int n = c.dimension;
  for (int i = 0; i < n; ++i) {
    const Ray& r = c.rays[i];
    const int d = r.field->degree();
    QMat sys(d, n);
    for (int kk = 0; kk < n; ++kk)
      for (int m = 0; m < d; ++m) sys(m, kk) = r.form(kk).coords()(m);
    if (rank_field<Rat>(sys) < n) return false;
  }
  return true;
}

namespace {

struct LinearEnclosure {
  // rational interval coefficients of a linear form (refined on demand)
  std::vector<QInterval> coef;
};

}  // namespace

std::vector<IVec> enumerate_cone_points(const ConeSpec& c, const Rat& height) {
  if (sign(height) <= 0)
    throw Error("HeightNotPositive", "height bound must be positive");
  const int n = c.dimension;
  // region = conv(0, H w_1, ..., H w_n): coordinate bounds from enclosures
  Rat eps(1, 1024);
  std::vector<Int> lo(n), hi(n);
  for (int k = 0; k < n; ++k) {
    Rat l(0), h(0);
    for (int i = 0; i < n; ++i) {
      QInterval e = c.ray_coord_enclosure(i, k, eps);
      Rat el = height * e.lo, eh = height * e.hi;
      if (el < l) l = el;
      if (eh > h) h = eh;
    }
    lo[k] = floor_rat(l);
    hi[k] = ceil_rat(h);
  }
  // interval coefficients of forms and height for subtree pruning
  std::vector<LinearEnclosure> forms(n);
  for (int i = 0; i < n; ++i) {
    forms[i].coef.resize(n);
    for (int k = 0; k < n; ++k) {
      const NFE& v = c.rays[i].form(k);
      QInterval e = v.enclosure();
      while (e.width() > eps) {
        v.refine_field();
        e = v.enclosure();
      }
      forms[i].coef[k] = e;
    }
  }
  LinearEnclosure henc;
  henc.coef.resize(n);
  for (int k = 0; k < n; ++k) {
    if (c.height_q) {
      henc.coef[k] = QInterval((*c.height_q)(k));
    } else {
      const NFE& v = (*c.height_f)(k);
      QInterval e = v.enclosure();
      while (e.width() > eps) {
        v.refine_field();
        e = v.enclosure();
      }
      henc.coef[k] = e;
    }
  }

  std::vector<IVec> out;
  IVec x = IVec::Zero(n);
  // recursive descent over coordinates with interval pruning
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      if (sign(gcd_vec(x)) == 0) return;
      if (c.height_compare(x, height) > 0) return;
      if (c.classify(x) == Where::Exterior) return;
      out.push_back(x);
      return;
    }
    for (Int v = lo[k]; v <= hi[k]; ++v) {
      x(k) = v;
      // prune: evaluate each constraint over the remaining box
      bool feasible = true;
      auto range_of = [&](const LinearEnclosure& f) {
        QInterval acc(Rat(0));
        for (int j = 0; j <= k; ++j)
          acc = acc + Rat(x(j)) * f.coef[j];
        for (int j = k + 1; j < n; ++j)
          acc = acc + QInterval(Rat(lo[j]), Rat(hi[j])) * f.coef[j];
        return acc;
      };
      for (int i = 0; i < n && feasible; ++i) {
        QInterval r = range_of(forms[i]);
        if (sign(r.hi) < 0) feasible = false;
      }
      if (feasible) {
        QInterval r = range_of(henc);
        if (r.lo > height) feasible = false;
      }
      if (feasible) rec(k + 1);
    }
    x(k) = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const IVec& a, const IVec& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a(i) != b(i)) return a(i) < b(i);
    }
    return false;
  });
  return out;
}

}  // namespace sailkit::cone
