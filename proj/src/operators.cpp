#include "sailkit/operators.hpp"

#include "sailkit/sail.hpp"

#include <algorithm>

namespace sailkit::ops {

using poly::IPoly;

PropertyFlags check_properties(const IMat& a) {
  PropertyFlags out;
  IPoly chi = char_poly(a);
  Int d = det_bareiss(a);
  out.det_one = (d == 1);
  out.p1 = sign(poly::eval(chi, Rat(1))) != 0;
  out.distinct = poly::deg(poly::gcd(chi, poly::derivative(chi))) == 0;

  // P2 over the set of eigenvalues (multiplicities do not matter)
  out.p2 = true;
  struct Pair {
    AlgebraicReal modulus_sq;
  };
  std::vector<AlgebraicReal> real_sq;
  std::vector<AlgebraicReal> pair_mods;
  for (const auto& [f, mult] : poly::factor(chi)) {
    (void)mult;
    for (const AlgebraicReal& b : real_roots(f)) real_sq.push_back(b * b);
    for (const PairData& pd : complex_pair_data(f))
      pair_mods.push_back(pd.modulus_sq);
  }
  for (size_t i = 0; i < pair_mods.size() && out.p2; ++i) {
    for (const AlgebraicReal& rs : real_sq)
      if (compare(pair_mods[i], rs) == 0) {
        out.p2 = false;
        break;
      }
    for (size_t j = 0; j < pair_mods.size() && out.p2; ++j)
      if (j != i && compare(pair_mods[i], pair_mods[j]) == 0) out.p2 = false;
  }

  out.in_a0 = out.det_one && out.p1 && out.p2;
  out.in_a1 = out.in_a0 && out.distinct;
  return out;
}

bool is_hyperbolic(const IMat& a) {
  Int d = det_bareiss(a);
  if (d != 1 && d != -1) return false;
  IPoly chi = char_poly(a);
  if (!poly::is_irreducible(chi)) return false;
  poly::SturmSeq s = poly::sturm(chi);
  const int n = poly::deg(chi);
  if (poly::count_real_roots(s) != n) return false;
  return poly::count_roots_gt(s, Rat(0)) == n;
}

AffineMap AffineMap::compose(const AffineMap& o) const {
  return {linear * o.linear, linear * o.translation + translation};
}

AffineMap AffineMap::inverse() const {
  IMat li = sail::unimodular_inverse(linear);
  return {li, IVec(-(li * translation))};
}

AffineMap identity_affine(int n) {
  return {identity_imat(n), IVec(IVec::Zero(n))};
}

std::pair<IVec, IMat> linearize_affine(const AffineMap& m) {
  const Eigen::Index n = m.linear.rows();
  IPoly chi = char_poly(m.linear);
  if (sign(poly::eval(chi, Rat(1))) == 0)
    throw Error("P1Violated", "E - A is singular (eigenvalue 1)");
  IMat ema = identity_imat(static_cast<int>(n)) - m.linear;
  auto sol = solve_field(to_q(ema), to_q(m.translation));
  if (!sol) throw Error("P1Violated", "E - A not invertible");
  IVec b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Rat c = (*sol)(i);
    c.canonicalize();
    if (den(c) != 1)
      throw Error("NonIntegralFixedData",
                  "(E - A)^{-1} a is not a lattice vector");
    b(i) = num(c);
  }
  return {b, m.linear};
}

SpectralFiltration spectral_filtration(const IMat& a) {
  EigenDecomposition ed = eigen_decomposition(a);
  SpectralFiltration out;
  out.dimension = ed.dimension;
  // collect (modulus_sq, parts) with exact dedup
  struct Part {
    bool is_real;
    const RealEigenvalue* re = nullptr;
    const ComplexPairEigenvalue* pe = nullptr;
  };
  std::vector<std::pair<AlgebraicReal, std::vector<Part>>> classes;
  auto add = [&](const AlgebraicReal& msq, Part p) {
    for (auto& cl : classes)
      if (compare(cl.first, msq) == 0) {
        cl.second.push_back(p);
        return;
      }
    classes.push_back({msq, {p}});
  };
  for (const auto& re : ed.reals) add(re.value * re.value, {true, &re, nullptr});
  for (const auto& pe : ed.pairs) add(pe.modulus_sq, {false, nullptr, &pe});
  std::sort(classes.begin(), classes.end(), [](const auto& x, const auto& y) {
    return compare(x.first, y.first) < 0;
  });

  for (auto& [msq, parts] : classes) {
    SpectralComponent comp;
    comp.modulus_sq = msq;
    comp.basis_available = true;
    std::vector<QVec> rbasis;
    for (const Part& p : parts) {
      if (p.is_real) {
        const RealEigenvalue& re = *p.re;
        comp.dimension += re.multiplicity;
        if (re.value.is_rational()) {
          // rational generalized eigenspace
          QMat m = to_q(a);
          for (Eigen::Index i = 0; i < m.rows(); ++i)
            m(i, i) -= re.value.rational_value();
          QMat pw = m;
          for (int e = 1; e < re.multiplicity; ++e) pw = pw * m;
          for (const QVec& v : kernel_field(pw)) rbasis.push_back(v);
        } else if (re.multiplicity == 1) {
          comp.field_lines.push_back({re.field, re.eigenvectors.at(0)});
        } else {
          // generalized eigenspace over the number field
          NumberFieldPtr k = re.field;
          const Eigen::Index n = a.rows();
          FMat m(n, n);
          NFE th = NFE::theta(k);
          for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) {
              m(i, j) = NFE::from_rat(k, Rat(a(i, j)));
              if (i == j) m(i, j) = m(i, j) - th;
            }
          FMat pw = m;
          for (int e = 1; e < re.multiplicity; ++e) pw = pw * m;
          for (const FVec& v : kernel_field(pw))
            comp.field_lines.push_back({k, v});
        }
      } else {
        const ComplexPairEigenvalue& pe = *p.pe;
        comp.dimension += 2 * pe.multiplicity;
        if (pe.modulus_sq.is_rational() && pe.trace_re2.is_rational()) {
          // rational invariant plane: kernel of (A^2 - t A + m E)^mult
          QMat aq = to_q(a);
          QMat plane = aq * aq - pe.trace_re2.rational_value() * aq;
          for (Eigen::Index i = 0; i < plane.rows(); ++i)
            plane(i, i) += pe.modulus_sq.rational_value();
          QMat pw = plane;
          for (int e = 1; e < pe.multiplicity; ++e) pw = pw * plane;
          for (const QVec& v : kernel_field(pw)) rbasis.push_back(v);
        } else {
          comp.basis_available = false;
        }
      }
    }
    if (!rbasis.empty()) comp.rational_basis = rbasis;
    if (comp.basis_available) {
      int got = static_cast<int>(rbasis.size());
      for (auto& fl : comp.field_lines) {
        (void)fl;
        ++got;
      }
      if (got != comp.dimension) comp.basis_available = false;
    }
    out.components.push_back(comp);
  }
  return out;
}

EdgeCountReport edge_count_in_subspaces(const IMat& a,
                                        const SpectralFiltration& f,
                                        const cone::ConeSpec& c) {
  if (!sail::preserves_cone(a, c))
    throw Error("ConeNotInvariant", "matrix does not preserve the cone");
  EdgeCountReport out;
  out.counts.assign(f.components.size(), 0);
  if (f.components.size() == 1) {
    out.counts[0] = c.dimension;
    out.matches_dimensions = (f.components[0].dimension == c.dimension);
    return out;
  }
  for (int i = 0; i < c.dimension; ++i) {
    const auto& ray = c.rays[i];
    // the generator must be an eigenray: A w = t w
    FVec w(c.dimension);
    for (int r = 0; r < c.dimension; ++r) {
      NFE acc = NFE::from_rat(ray.field, Rat(0));
      for (int k = 0; k < c.dimension; ++k)
        acc = acc + Rat(a(r, k)) * ray.direction(k);
      w(r) = acc;
    }
    int k0 = -1;
    for (int k = 0; k < c.dimension; ++k)
      if (!ray.direction(k).is_zero()) {
        k0 = k;
        break;
      }
    NFE t = w(k0) / ray.direction(k0);
    for (int k = 0; k < c.dimension; ++k)
      if (!(w(k) - t * ray.direction(k)).is_zero())
        throw Error("Unsupported",
                    "generator is not an eigenray of the operator");
    AlgebraicReal msq = (t * t).to_algebraic();
    bool placed = false;
    for (size_t j = 0; j < f.components.size(); ++j)
      if (compare(f.components[j].modulus_sq, msq) == 0) {
        ++out.counts[j];
        placed = true;
        break;
      }
    if (!placed)
      throw Error("Internal", "eigenray modulus missing from filtration");
  }
  out.matches_dimensions = true;
  for (size_t j = 0; j < f.components.size(); ++j)
    if (out.counts[j] != f.components[j].dimension)
      out.matches_dimensions = false;
  return out;
}

GrowthReport jordan_growth_probe(const IMat& cell, const QVec& h, int e_index,
                                 long m_lo, long m_hi, long burn_in) {
  const Eigen::Index n = cell.rows();
  if (n != cell.cols()) throw Error("NonSquare", "jordan cell not square");
  Int lambda = cell(0, 0);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      Int expect = (i == j) ? lambda : (j == i + 1 ? Int(1) : Int(0));
      if (cell(i, j) != expect)
        throw Error("NotAJordanCell",
                    "probe needs a single Jordan cell with integer eigenvalue");
    }
  if (sign(lambda) == 0) throw Error("NotAJordanCell", "eigenvalue zero");
  for (Eigen::Index i = 0; i < n; ++i)
    if (sign(h(i)) == 0)
      throw Error("CoordinateZero", "h must have nonzero coordinates");
  if (e_index < 0 || e_index >= n)
    throw Error("BadIndex", "basis index out of range");

  GrowthReport out;
  const long expo = static_cast<long>(n) - 1 - e_index;  // n - i with i 1-based
  QMat aq = to_q(cell);
  QVec v = h;
  // advance to m_lo
  for (long m = 1; m <= m_lo; ++m) v = aq * v;
  Rat lam_abs = abs(Rat(lambda));
  Rat lam_pow = pow_rat(lam_abs, static_cast<unsigned long>(m_lo));
  bool first = true;
  for (long m = m_lo; m <= m_hi; ++m) {
    Rat denom = lam_pow * pow_rat(Rat(m), static_cast<unsigned long>(expo));
    Rat val = v(e_index);
    Rat ratio = abs(val) / denom;
    ratio.canonicalize();
    out.ratios.push_back({m, ratio});
    if (m >= burn_in) {
      if (first || ratio < out.min_ratio) out.min_ratio = ratio;
      if (first || ratio > out.max_ratio) out.max_ratio = ratio;
      first = false;
    }
    v = aq * v;
    lam_pow *= lam_abs;
  }
  out.bounded_positive = !first && sign(out.min_ratio) > 0;
  return out;
}

Classification3 classify_unimodular_3d(const IMat& a) {
  if (a.rows() != 3 || a.cols() != 3)
    throw Error("WrongDimension", "classifier needs a 3x3 matrix");
  Classification3 out;
  out.charpoly = char_poly(a);
  Int d = det_bareiss(a);
  if (d != 1 && d != -1) return out;
  const IPoly& chi = out.charpoly;

  auto rank_of = [&](const IMat& m) { return hnf(m).rank; };

  if (d == 1 && sign(poly::eval(chi, Rat(1))) == 0) {
    // chi = (x-1)(x^2 - t x + 1)
    auto [q, r] = poly::divmod(poly::to_q(chi), poly::to_q(poly::ipoly({-1, 1})));
    (void)r;
    Rat t = -q(1);
    IMat ame = a - identity_imat(3);
    if (t == Rat(2)) {  // (x-1)^3
      int rk = rank_of(ame);
      if (rk == 0) out.form = UnimodularForm3::Identity;
      if (rk == 1) out.form = UnimodularForm3::Unipotent2;
      if (rk == 2) out.form = UnimodularForm3::Unipotent3;
      return out;
    }
    if (t == Rat(-2)) {  // (x-1)(x+1)^2
      IMat ape = a + identity_imat(3);
      if (rank_of(ape) == 2) {
        out.form = UnimodularForm3::MinusPair;
      } else {
        out.form = UnimodularForm3::RotationFix;  // diag(1,-1,-1): angle pi
        out.rotation_2cos = Rat(-2);
      }
      return out;
    }
    if (t > Rat(2) || t < Rat(-2)) {
      out.form = UnimodularForm3::DiagHyperbolic;
      poly::IPoly quad(3);
      quad(0) = 1;
      quad(1) = -num(t);  // t is an integer here (monic integer charpoly)
      quad(2) = 1;
      out.hyperbolic_quadratic = quad;
      return out;
    }
    out.form = UnimodularForm3::RotationFix;
    out.rotation_2cos = t;
    return out;
  }
  if (d == -1 && sign(poly::eval(chi, Rat(-1))) == 0) {
    // chi = (x+1)(x^2 - t x + 1)
    auto [q, r] = poly::divmod(poly::to_q(chi), poly::to_q(poly::ipoly({1, 1})));
    (void)r;
    Rat t = -q(1);
    if (t < Rat(2) && t > Rat(-2)) {
      out.form = UnimodularForm3::RotationFlip;
      out.rotation_2cos = t;
    }
    return out;
  }
  return out;
}

}  // namespace sailkit::ops
