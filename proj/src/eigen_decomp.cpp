#include "sailkit/eigen_decomp.hpp"

#include <Eigen/Eigenvalues>

#include <complex>

namespace sailkit {

using poly::IPoly;
using poly::QPoly;

namespace {

// ---- Gaussian rational arithmetic for complex root certification ----

struct CRat {
  Rat re, im;
};

CRat c_add(const CRat& a, const CRat& b) { return {a.re + b.re, a.im + b.im}; }
CRat c_sub(const CRat& a, const CRat& b) { return {a.re - b.re, a.im - b.im}; }
CRat c_mul(const CRat& a, const CRat& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
CRat c_div(const CRat& a, const CRat& b) {
  Rat n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
Rat c_norm2(const CRat& a) { return a.re * a.re + a.im * a.im; }

CRat c_eval(const IPoly& f, const CRat& z) {
  CRat acc{Rat(0), Rat(0)};
  for (Eigen::Index i = f.size(); i-- > 0;)
    acc = c_add(c_mul(acc, z), CRat{Rat(f(i)), Rat(0)});
  return acc;
}

Rat round_dyadic(const Rat& x, unsigned bits) {
  Int scale = pow_int(2, bits);
  Int n = num(x) * scale;
  Int q = floor_div(n + den(x) / 2, den(x));
  Rat r(q, scale);
  r.canonicalize();
  return r;
}

CRat c_round(const CRat& z, unsigned bits) {
  return {round_dyadic(z.re, bits), round_dyadic(z.im, bits)};
}

struct CertifiedDisk {
  CRat center;
  Rat radius;  // exactly one root of f in the closed disk; center.im > radius
};

// Rouche test against the linearization: sum_{j>=2} |f^(j)(c)|/j! r^j + |f(c)|
// < |f'(c)| r certifies exactly one root in the closed disk of radius r.
bool certify_disk(const IPoly& f, const CRat& c, const Rat& r) {
  const int n = poly::deg(f);
  // Taylor coefficients of f at c: t_j = f^(j)(c)/j!, via repeated synthetic
  // division by (x - c) in Gaussian rationals.
  std::vector<CRat> w(n + 1);
  for (int i = 0; i <= n; ++i) w[i] = CRat{Rat(f(i)), Rat(0)};
  std::vector<CRat> taylor(n + 1);
  for (int j = 0; j <= n; ++j) {
    // divide w by (x - c): remainder is the next Taylor coefficient
    for (int i = n - j - 1; i >= 0; --i) w[i] = c_add(w[i], c_mul(c, w[i + 1]));
    taylor[j] = w[0];
    // shift: quotient coefficients are w[1..]
    for (int i = 0; i + 1 <= n - j; ++i) w[i] = w[i + 1];
  }
  auto ub_abs = [](const CRat& z) { return sqrt_enclosure(c_norm2(z), 24).second; };
  auto lb_abs = [](const CRat& z) { return sqrt_enclosure(c_norm2(z), 24).first; };
  Rat lhs = ub_abs(taylor[0]);
  Rat rp = r;
  for (int j = 2; j <= n; ++j) {
    rp = rp * r;
    lhs += ub_abs(taylor[j]) * rp;
  }
  Rat rhs = lb_abs(taylor[1]) * r;
  return lhs < rhs;
}

std::vector<CertifiedDisk> isolate_upper_pairs(const IPoly& f, int expected_pairs) {
  const int n = poly::deg(f);
  // double-precision seeds from the companion matrix
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  double lcv = f(n).get_d();
  for (int i = 0; i < n; ++i) {
    comp(i, n - 1) = -f(i).get_d() / lcv;
    if (i > 0) comp(i, i - 1) = 1.0;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  std::vector<std::complex<double>> seeds;
  for (int i = 0; i < n; ++i) {
    std::complex<double> z = es.eigenvalues()(i);
    if (z.imag() > 1e-12) seeds.push_back(z);
  }
  if (static_cast<int>(seeds.size()) != expected_pairs)
    throw Error("ComplexRootsUnsupported",
                "floating seeds disagree with exact signature");
  std::vector<CertifiedDisk> disks;
  for (auto z : seeds) {
    CRat c{Rat(z.real()), Rat(z.imag())};
    c.re.canonicalize();
    c.im.canonicalize();
    unsigned bits = 64;
    bool ok = false;
    for (int attempt = 0; attempt < 24 && !ok; ++attempt) {
      // Newton polish in exact arithmetic, rounded to dyadics
      CRat fz = c_eval(f, c);
      CRat dz = c_eval(poly::derivative(f), c);
      if (sign(c_norm2(dz)) != 0) c = c_round(c_sub(c, c_div(fz, dz)), bits);
      Rat radius(Int(1), pow_int(2, bits / 2));
      if (c.im > radius && certify_disk(f, c, radius)) {
        disks.push_back({c, radius});
        ok = true;
      }
      bits += 16;
    }
    if (!ok)
      throw Error("ComplexRootsUnsupported",
                  "could not certify complex root disk");
  }
  // pairwise disjoint (their conjugate mirrors are disjoint by im > radius)
  for (size_t i = 0; i < disks.size(); ++i)
    for (size_t j = i + 1; j < disks.size(); ++j) {
      Rat d2 = c_norm2(c_sub(disks[i].center, disks[j].center));
      Rat rsum = disks[i].radius + disks[j].radius;
      if (!(d2 > rsum * rsum))
        throw Error("ComplexRootsUnsupported", "complex root disks collide");
    }
  return disks;
}

void tighten_disk(const IPoly& f, CertifiedDisk& d, unsigned extra_bits) {
  unsigned bits = 0;
  {
    // current denominator scale
    bits = static_cast<unsigned>(mpz_sizeinbase(den(d.center.re).get_mpz_t(), 2));
  }
  unsigned nb = bits + extra_bits;
  CRat c = d.center;
  CRat fz = c_eval(f, c);
  CRat dz = c_eval(poly::derivative(f), c);
  if (sign(c_norm2(dz)) == 0) return;
  CRat nc = c_round(c_sub(c, c_div(fz, dz)), nb);
  Rat nr(Int(1), pow_int(2, nb / 2));
  if (nc.im > nr && certify_disk(f, nc, nr)) {
    d.center = nc;
    d.radius = nr;
  }
}

QInterval modulus_sq_enclosure(const CertifiedDisk& d) {
  auto [lb, ub] = sqrt_enclosure(c_norm2(d.center), 48);
  Rat lo = lb > d.radius ? (lb - d.radius) * (lb - d.radius) : Rat(0);
  Rat hi = (ub + d.radius) * (ub + d.radius);
  return {lo, hi};
}

QInterval trace_enclosure(const CertifiedDisk& d) {
  return {2 * (d.center.re - d.radius), 2 * (d.center.re + d.radius)};
}

// Pattern shortcut: f(x) = g(x^k). Complex pairs of such f with g totally
// real come from multiplying real k-th roots by roots of unity.
std::optional<int> power_pattern(const IPoly& f) {
  const int n = poly::deg(f);
  for (int k = n; k >= 2; --k) {
    if (n % k != 0) continue;
    bool ok = true;
    for (int i = 0; i <= n && ok; ++i)
      if (i % k != 0 && sign(f(i)) != 0) ok = false;
    if (ok) return k;
  }
  return std::nullopt;
}

std::vector<PairData> pairs_via_disks(const IPoly& f) {
  // real roots and count of pairs
  auto rts = poly::isolate_real_roots(f);
  const int n = poly::deg(f);
  const int c = (n - static_cast<int>(rts.size())) / 2;
  std::vector<PairData> out;
  if (c == 0) return out;
  auto disks = isolate_upper_pairs(f, c);
  // vanishing polynomials: all-pairs products / sums of roots
  IPoly prod_poly = poly::resultant_y(f, poly::homogenize_x_over_y(f));
  IPoly sum_poly = poly::resultant_y(f, poly::subst_x_minus_y(f));
  for (auto& d : disks) {
    CertifiedDisk* dp = &d;
    AlgebraicReal m = select_algebraic_root(
        prod_poly, [&] { return modulus_sq_enclosure(*dp); },
        [&] { tighten_disk(f, *dp, 24); });
    AlgebraicReal t = select_algebraic_root(
        sum_poly, [&] { return trace_enclosure(*dp); },
        [&] { tighten_disk(f, *dp, 24); });
    out.push_back({m, t});
  }
  return out;
}

}  // namespace

std::vector<PairData> complex_pair_data(const IPoly& f) {
  const int n = poly::deg(f);
  std::vector<PairData> out;
  if (n <= 1) return out;
  auto rts = poly::isolate_real_roots(f);
  const int c = (n - static_cast<int>(rts.size())) / 2;
  if (c == 0) return out;
  if (n == 2) {
    Rat m(f(0), f(2));
    Rat t(-f(1), f(2));
    m.canonicalize();
    t.canonicalize();
    out.push_back({AlgebraicReal(m), AlgebraicReal(t)});
    return out;
  }
  if (n == 3) {
    // one real root b; pair satisfies m*b = -a0/a3, t = -a2/a3 - b
    AlgebraicReal b = real_roots(f)[0];
    Rat pr(-f(0), f(3)), sr(-f(2), f(3));
    pr.canonicalize();
    sr.canonicalize();
    AlgebraicReal m = AlgebraicReal(pr) / b;
    AlgebraicReal t = AlgebraicReal(sr) - b;
    out.push_back({m, t});
    return out;
  }
  if (auto k = power_pattern(f); k && *k == 3) {
    // f(x) = g(x^3) with g totally real: each root nu of g contributes the
    // real cube root theta and one pair zeta*theta, zeta^2*theta with
    // modulus^2 = theta^2 and pair trace (zeta + zeta^2) theta = -theta.
    IPoly g(n / 3 + 1);
    for (int i = 0; 3 * i <= n; ++i) g(i) = f(3 * i);
    auto greal = poly::isolate_real_roots(g);
    if (static_cast<int>(greal.size()) == poly::deg(g)) {
      std::vector<PairData> res;
      for (const AlgebraicReal& th : real_roots(f))
        res.push_back({th * th, -th});
      if (static_cast<int>(res.size()) == c) return res;
    }
  }
  return pairs_via_disks(f);
}

int EigenDecomposition::multiplicity_sum() const {
  int s = 0;
  for (const auto& r : reals) s += r.multiplicity;
  for (const auto& p : pairs) s += 2 * p.multiplicity;
  return s;
}

EigenDecomposition eigen_decomposition(const IMat& a) {
  EigenDecomposition out;
  out.dimension = static_cast<int>(a.rows());
  out.charpoly = char_poly(a);
  for (const auto& [h, mult] : poly::factor(out.charpoly)) {
    for (const AlgebraicReal& root : real_roots(h)) {
      RealEigenvalue re;
      re.value = root;
      re.multiplicity = mult;
      re.factor = h;
      re.field = make_field(root);
      // kernel of (A - root I) over Q(root)
      const Eigen::Index n = a.rows();
      FMat m(n, n);
      NFE th = NFE::theta(re.field);
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
          m(i, j) = NFE::from_rat(re.field, Rat(a(i, j)));
          if (i == j) m(i, j) = m(i, j) - th;
        }
      for (const FVec& v : kernel_field(m)) re.eigenvectors.push_back(v);
      out.reals.push_back(re);
    }
    for (const PairData& pd : complex_pair_data(h)) {
      out.pairs.push_back({h, mult, pd.modulus_sq, pd.trace_re2});
    }
  }
  std::sort(out.reals.begin(), out.reals.end(),
            [](const RealEigenvalue& x, const RealEigenvalue& y) {
              return compare(x.value, y.value) < 0;
            });
  std::sort(out.pairs.begin(), out.pairs.end(),
            [](const ComplexPairEigenvalue& x, const ComplexPairEigenvalue& y) {
              return compare(x.modulus_sq, y.modulus_sq) < 0;
            });
  return out;
}

}  // namespace sailkit
