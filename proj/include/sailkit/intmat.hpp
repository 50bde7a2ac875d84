// Exact integer-matrix algorithms (Bareiss determinants, canonical Hermite
// normal form, integer kernels, characteristic polynomials) plus generic
// Gaussian elimination over any exact field scalar (Rat, NFE).
#ifndef SAILKIT_INTMAT_HPP
#define SAILKIT_INTMAT_HPP

#include "sailkit/numberfield.hpp"
#include "sailkit/poly.hpp"

#include <optional>
#include <vector>

namespace sailkit {

// ---- scalar traits for generic elimination ----

template <class S>
struct FieldOps;

template <>
struct FieldOps<Rat> {
  static bool is_zero(const Rat& x) { return sign(x) == 0; }
};

template <>
struct FieldOps<NFE> {
  static bool is_zero(const NFE& x) { return x.is_zero(); }
};

// ---- integer matrices ----

Int det_bareiss(const IMat& m);

struct HnfResult {
  IMat h;  // canonical row HNF: pivots positive, entries above in [0, pivot)
  IMat u;  // unimodular, u * m == h
  int rank = 0;
  std::vector<int> pivot_cols;
};

HnfResult hnf(const IMat& m);

/// Basis of { x in Z^cols : m x = 0 } (rows of the returned matrix).
IMat kernel_lattice(const IMat& m);

/// Index of the subgroup of Z^n generated by the rows; nullopt when the rank
/// is deficient (infinite index).
std::optional<Int> sublattice_index(const IMat& generators);

/// Monic characteristic polynomial det(xI - A), Faddeev-LeVerrier.
poly::IPoly char_poly(const IMat& a);

IVec primitive(const IVec& v);  // v / gcd(coords); error on zero vector
Int gcd_vec(const IVec& v);

inline IMat identity_imat(int n) {
  IMat m = IMat::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMat to_q(const IMat& m);
QVec to_q(const IVec& v);
FVec to_field(const IVec& v, const NumberFieldPtr& K);

// ---- generic elimination over a field scalar ----

template <class S>
S det_field(MatX<S> m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw Error("NonSquare", "determinant of non-square");
  S d = S(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = -1;
    for (Eigen::Index i = k; i < n; ++i)
      if (!FieldOps<S>::is_zero(m(i, k))) {
        p = i;
        break;
      }
    if (p < 0) return S(0);
    if (p != k) {
      m.row(p).swap(m.row(k));
      d = S(-1) * d;
    }
    d = d * m(k, k);
    S inv = S(1) / m(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (FieldOps<S>::is_zero(m(i, k))) continue;
      S f = m(i, k) * inv;
      for (Eigen::Index j = k; j < n; ++j) m(i, j) = m(i, j) - f * m(k, j);
    }
  }
  return d;
}

/// Reduced row echelon form in place; returns pivot columns.
template <class S>
std::vector<Eigen::Index> rref(MatX<S>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = -1;
    for (Eigen::Index i = row; i < m.rows(); ++i)
      if (!FieldOps<S>::is_zero(m(i, col))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row) m.row(p).swap(m.row(row));
    S inv = S(1) / m(row, col);
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || FieldOps<S>::is_zero(m(i, col))) continue;
      S f = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j)
        m(i, j) = m(i, j) - f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class S>
int rank_field(MatX<S> m) {
  return static_cast<int>(rref(m).size());
}

/// Kernel basis of m x = 0 over the scalar field.
template <class S>
std::vector<VecX<S>> kernel_field(MatX<S> m) {
  auto pivots = rref(m);
  std::vector<VecX<S>> basis;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    VecX<S> v(m.cols());
    for (Eigen::Index i = 0; i < m.cols(); ++i) v(i) = S(0);
    v(free) = S(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      v(pivots[r]) = S(0) - m(static_cast<Eigen::Index>(r), free);
    basis.push_back(v);
  }
  return basis;
}

/// One solution of m x = b, if any.
template <class S>
std::optional<VecX<S>> solve_field(const MatX<S>& m, const VecX<S>& b) {
  MatX<S> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  VecX<S> x(m.cols());
  for (Eigen::Index i = 0; i < m.cols(); ++i) x(i) = S(0);
  for (size_t r = 0; r < pivots.size(); ++r)
    x(pivots[r]) = aug(static_cast<Eigen::Index>(r), m.cols());
  return x;
}

template <class S>
std::optional<MatX<S>> inverse_field(const MatX<S>& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw Error("NonSquare", "inverse of non-square");
  MatX<S> aug(n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < 2 * n; ++j)
      aug(i, j) = j < n ? m(i, j) : S(j - n == i ? 1 : 0);
  auto pivots = rref(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || pivots.back() >= n)
    return std::nullopt;
  MatX<S> inv = aug.rightCols(n);
  return inv;
}

}  // namespace sailkit

#endif  // SAILKIT_INTMAT_HPP
