// Shared test helpers: deterministic RNG, random lattice data, and the
// independent brute-force oracles the unit suites check against.
#ifndef SAILKIT_TEST_UTIL_HPP
#define SAILKIT_TEST_UTIL_HPP

#include "sailkit/cone.hpp"
#include "sailkit/hull.hpp"
#include "sailkit/intmat.hpp"

#include <random>
#include <set>
#include <vector>

namespace testutil {

using namespace sailkit;

inline IVec ivec(std::initializer_list<long> xs) {
  IVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = Int(x);
  return v;
}

inline IMat imat(int r, int c, std::initializer_list<long> xs) {
  IMat m(r, c);
  auto it = xs.begin();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = Int(*it++);
  return m;
}

inline IVec random_ivec(std::mt19937_64& rng, int n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IVec v(n);
  for (int i = 0; i < n; ++i) v(i) = Int(d(rng));
  return v;
}

/// Random unimodular matrix: product of elementary shears and permutations.
inline IMat random_unimodular(std::mt19937_64& rng, int n, int steps = 8) {
  IMat m = identity_imat(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<long> coef(-3, 3);
  std::uniform_int_distribution<int> kind(0, 3);
  for (int s = 0; s < steps; ++s) {
    int i = pick(rng), j = pick(rng);
    switch (kind(rng)) {
      case 0:
        if (i != j) m.row(i) += Int(coef(rng)) * m.row(j);
        break;
      case 1:
        if (i != j) m.col(i) += Int(coef(rng)) * m.col(j);
        break;
      case 2:
        if (i != j) m.row(i).swap(m.row(j));
        break;
      default:
        m.row(i) = -m.row(i);
        break;
    }
  }
  return m;
}

/// Oracle: lattice points of the cone with height <= H by scanning the box
/// computed from the cone's own enclosures (independent of the pruning path).
inline std::vector<IVec> box_scan_cone(const cone::ConeSpec& c, const Rat& h) {
  using cone::Where;
  const int n = c.dimension;
  std::vector<long> lo(n), hi(n);
  for (int k = 0; k < n; ++k) {
    Rat l(0), r(0);
    for (int i = 0; i < n; ++i) {
      QInterval e = c.ray_coord_enclosure(i, k, Rat(1, 4096));
      Rat el = h * e.lo, eh = h * e.hi;
      if (el < l) l = el;
      if (eh > r) r = eh;
    }
    lo[k] = floor_rat(l).get_si();
    hi[k] = ceil_rat(r).get_si();
  }
  std::vector<IVec> out;
  IVec x(n);
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      if (sign(gcd_vec(x)) == 0) return;
      if (c.classify(x) == Where::Exterior) return;
      if (c.height_compare(x, h) > 0) return;
      out.push_back(x);
      return;
    }
    for (long v = lo[k]; v <= hi[k]; ++v) {
      x(k) = Int(v);
      rec(k + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const IVec& a, const IVec& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i)
      if (a(i) != b(i)) return a(i) < b(i);
    return false;
  });
  return out;
}

/// Oracle hull: every supporting plane through d points (d = dimension) with
/// all points on one side contributes a facet; face vertex sets collected by
/// plane. O(N^(d+1)), tiny inputs only.
struct OracleFace {
  IVec normal;  // inward
  Int level;
  std::set<std::vector<long>> vertex_set;  // extreme points on the plane
};

inline std::vector<OracleFace> oracle_hull_faces(const std::vector<IVec>& pts) {
  const int n = static_cast<int>(pts[0].size());
  std::vector<OracleFace> out;
  auto record = [&](const IVec& u_in, const Int& lvl) {
    IVec u = primitive(u_in);
    Int l = lvl;
    // gather points on the plane and check side
    std::vector<int> on;
    for (size_t p = 0; p < pts.size(); ++p) {
      Int s = u.dot(pts[p]) - l;
      if (sign(s) < 0) return;
      if (sign(s) == 0) on.push_back(static_cast<int>(p));
    }
    if (static_cast<int>(on.size()) < n) return;
    // extreme points of the face via Caratheodory: within the face's plane a
    // point is non-extreme iff it lies in a segment (n=2) or triangle (n=3)
    // of other on-plane points.
    auto in_segment = [&](const IVec& p, const IVec& a, const IVec& b) {
      IVec d1 = p - a, d2 = b - p;
      // collinear and same direction
      for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index s2 = r + 1; s2 < n; ++s2)
          if (d1(r) * d2(s2) != d1(s2) * d2(r)) return false;
      Int dot = d1.dot(d2);
      return sign(dot) >= 0;
    };
    auto in_triangle = [&](const IVec& p, const IVec& a, const IVec& b,
                           const IVec& c) {
      // p = a + s(b-a) + t(c-a), s,t >= 0, s+t <= 1: solve exactly over Q
      QMat m(n, 2);
      for (Eigen::Index r = 0; r < n; ++r) {
        m(r, 0) = Rat(b(r) - a(r));
        m(r, 1) = Rat(c(r) - a(r));
      }
      QVec rhs(n);
      for (Eigen::Index r = 0; r < n; ++r) rhs(r) = Rat(p(r) - a(r));
      auto sol = solve_field(m, rhs);
      if (!sol) return false;
      // verify (solve_field returns any solution of the consistent system)
      for (Eigen::Index r = 0; r < n; ++r)
        if (m(r, 0) * (*sol)(0) + m(r, 1) * (*sol)(1) != rhs(r)) return false;
      return sign((*sol)(0)) >= 0 && sign((*sol)(1)) >= 0 &&
             (*sol)(0) + (*sol)(1) <= Rat(1);
    };
    std::set<std::vector<long>> vs;
    for (int p : on) {
      bool interior = false;
      for (int a : on) {
        if (a == p) continue;
        for (int b : on) {
          if (b == p || b <= a) continue;
          if (n == 2 && in_segment(pts[p], pts[a], pts[b])) interior = true;
          if (n == 3)
            for (int c2 : on) {
              if (c2 == p || c2 <= b) continue;
              if (in_triangle(pts[p], pts[a], pts[b], pts[c2])) interior = true;
              if (interior) break;
            }
          if (n == 3 && in_segment(pts[p], pts[a], pts[b])) interior = true;
          if (interior) break;
        }
        if (interior) break;
      }
      if (!interior) {
        std::vector<long> key;
        for (Eigen::Index i = 0; i < n; ++i) key.push_back(pts[p](i).get_si());
        vs.insert(key);
      }
    }
    for (const auto& f : out)
      if (f.normal == u && f.level == l) return;
    out.push_back({u, l, vs});
  };
  if (n == 2) {
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j) {
        IVec d = pts[j] - pts[i];
        if (sign(gcd_vec(d)) == 0) continue;
        IVec u(2);
        u(0) = -d(1);
        u(1) = d(0);
        for (int s = 0; s < 2; ++s) {
          IVec uu = s ? IVec(-u) : u;
          record(uu, uu.dot(pts[i]));
        }
      }
  } else {
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j)
        for (size_t k = j + 1; k < pts.size(); ++k) {
          IVec e1 = pts[j] - pts[i], e2 = pts[k] - pts[i];
          IVec u(3);
          u(0) = e1(1) * e2(2) - e1(2) * e2(1);
          u(1) = e1(2) * e2(0) - e1(0) * e2(2);
          u(2) = e1(0) * e2(1) - e1(1) * e2(0);
          if (sign(gcd_vec(u)) == 0) continue;
          for (int s = 0; s < 2; ++s) {
            IVec uu = s ? IVec(-u) : u;
            record(uu, uu.dot(pts[i]));
          }
        }
  }
  return out;
}

}  // namespace testutil

#endif  // SAILKIT_TEST_UTIL_HPP
