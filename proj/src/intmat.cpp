#include "sailkit/intmat.hpp"

namespace sailkit {

Int det_bareiss(const IMat& min) {
  const Eigen::Index n = min.rows();
  if (n != min.cols()) throw Error("NonSquare", "determinant of non-square");
  if (n == 0) return 1;
  IMat m = min;
  Int prev = 1;
  int flip = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (sign(m(k, k)) == 0) {
      Eigen::Index p = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (sign(m(i, k)) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      m.row(p).swap(m.row(k));
      flip = -flip;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  Int d = m(n - 1, n - 1);
  return flip < 0 ? Int(-d) : d;
}

HnfResult hnf(const IMat& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  HnfResult res;
  res.h = m;
  res.u = identity_imat(static_cast<int>(rows));
  IMat& h = res.h;
  IMat& u = res.u;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    // gcd-reduce column c below row r to a single nonzero entry
    while (true) {
      Eigen::Index p = -1;
      for (Eigen::Index i = r; i < rows; ++i)
        if (sign(h(i, c)) != 0) {
          p = i;
          break;
        }
      if (p < 0) break;
      // move the (absolutely) smallest nonzero entry to row r
      for (Eigen::Index i = p + 1; i < rows; ++i)
        if (sign(h(i, c)) != 0 && abs(h(i, c)) < abs(h(p, c))) p = i;
      if (p != r) {
        h.row(p).swap(h.row(r));
        u.row(p).swap(u.row(r));
      }
      bool done = true;
      for (Eigen::Index i = r + 1; i < rows; ++i) {
        if (sign(h(i, c)) == 0) continue;
        Int q = floor_div(h(i, c), h(r, c));
        if (sign(q) != 0) {
          h.row(i) -= q * h.row(r);
          u.row(i) -= q * u.row(r);
        }
        if (sign(h(i, c)) != 0) done = false;
      }
      if (done) break;
    }
    if (r < rows && sign(h(r, c)) != 0) {
      if (sign(h(r, c)) < 0) {
        h.row(r) = -h.row(r);
        u.row(r) = -u.row(r);
      }
      // reduce entries above the pivot into [0, pivot)
      for (Eigen::Index i = 0; i < r; ++i) {
        Int q = floor_div(h(i, c), h(r, c));
        if (sign(q) != 0) {
          h.row(i) -= q * h.row(r);
          u.row(i) -= q * u.row(r);
        }
      }
      res.pivot_cols.push_back(static_cast<int>(c));
      ++r;
    }
  }
  res.rank = static_cast<int>(r);
  return res;
}

IMat kernel_lattice(const IMat& m) {
  IMat t = m.transpose();
  HnfResult res = hnf(t);
  const Eigen::Index total = t.rows();
  const Eigen::Index null_dim = total - res.rank;
  IMat basis(null_dim, total);
  for (Eigen::Index i = 0; i < null_dim; ++i)
    basis.row(i) = res.u.row(res.rank + i);
  return basis;
}

std::optional<Int> sublattice_index(const IMat& generators) {
  const Eigen::Index n = generators.cols();
  HnfResult res = hnf(generators);
  if (res.rank < n) return std::nullopt;
  Int idx = 1;
  for (int i = 0; i < res.rank; ++i) idx *= res.h(i, res.pivot_cols[i]);
  return idx;
}

poly::IPoly char_poly(const IMat& a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw Error("NonSquare", "char_poly of non-square");
  poly::IPoly c(n + 1);
  c(n) = 1;
  IMat m = a;
  for (Eigen::Index k = 1; k <= n; ++k) {
    if (k > 1) {
      IMat t = m;
      for (Eigen::Index i = 0; i < n; ++i) t(i, i) += c(n - k + 1);
      m = a * t;
    }
    Int tr = 0;
    for (Eigen::Index i = 0; i < n; ++i) tr += m(i, i);
    Int ck = -tr;
    if (ck % Int(static_cast<long>(k)) != 0)
      throw Error("Internal", "Faddeev-LeVerrier division not exact");
    c(n - k) = ck / Int(static_cast<long>(k));
  }
  return c;
}

Int gcd_vec(const IVec& v) {
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  return g;
}

IVec primitive(const IVec& v) {
  Int g = gcd_vec(v);
  if (sign(g) == 0) throw Error("ZeroVector", "primitive of zero vector");
  IVec r = v;
  for (Eigen::Index i = 0; i < r.size(); ++i) r(i) /= g;
  return r;
}

QMat to_q(const IMat& m) {
  QMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

QVec to_q(const IVec& v) {
  QVec r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = Rat(v(i));
  return r;
}

FVec to_field(const IVec& v, const NumberFieldPtr& K) {
  FVec r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    r(i) = NFE::from_rat(K, Rat(v(i)));
  return r;
}

}  // namespace sailkit
