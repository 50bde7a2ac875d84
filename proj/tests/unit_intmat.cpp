#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace sailkit;
using namespace testutil;

TEST_CASE("hnf canonical form and determinant invariance") {
  IMat m = imat(2, 2, {2, 4, 0, 3});
  HnfResult r = hnf(m);
  CHECK(r.rank == 2);
  CHECK(r.u * m == r.h);
  Int dh = 1;
  for (int i = 0; i < r.rank; ++i) dh *= r.h(i, r.pivot_cols[i]);
  CHECK(dh == 6);

  // identity maps to itself
  HnfResult ri = hnf(identity_imat(3));
  CHECK(ri.h == identity_imat(3));

  // rank-deficient
  HnfResult rd = hnf(imat(2, 2, {1, 2, 2, 4}));
  CHECK(rd.rank == 1);

  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    int n = 2 + t % 3;
    IMat a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = random_ivec(rng, 1, -9, 9)(0);
    HnfResult h = hnf(a);
    CHECK(h.u * a == h.h);
    CHECK(abs(det_bareiss(h.u)) == 1);
    if (h.rank == n) {
      Int dp = 1;
      for (int i = 0; i < n; ++i) dp *= h.h(i, h.pivot_cols[i]);
      CHECK(dp == abs(det_bareiss(a)));
      // canonical: pivots positive, entries above in [0, pivot)
      for (int i = 0; i < n; ++i) {
        Int piv = h.h(i, h.pivot_cols[i]);
        CHECK(sign(piv) > 0);
        for (int r2 = 0; r2 < i; ++r2) {
          CHECK(sign(h.h(r2, h.pivot_cols[i])) >= 0);
          CHECK(h.h(r2, h.pivot_cols[i]) < piv);
        }
      }
    }
  }
}

TEST_CASE("sublattice_index examples and unimodular invariance") {
  // standard basis of Z^3 -> 1
  CHECK(sublattice_index(identity_imat(3)) == Int(1));
  // {(2,0),(0,3)} -> 6
  CHECK(sublattice_index(imat(2, 2, {2, 0, 0, 3})) == Int(6));
  // {(1,0)} in Z^2 -> infinite
  CHECK(!sublattice_index(imat(1, 2, {1, 0})).has_value());

  std::mt19937_64 rng(99);
  int done = 0;
  for (int t = 0; t < 1200 && done < 1000; ++t) {
    int n = 2 + t % 3;
    IMat g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = random_ivec(rng, 1, -6, 6)(0);
    auto idx = sublattice_index(g);
    if (!idx) continue;
    IMat u = random_unimodular(rng, n);
    auto idx2 = sublattice_index(IMat(g * u));  // transformed generators
    REQUIRE(idx2.has_value());
    CHECK(*idx2 == *idx);
    ++done;
  }
  CHECK(done >= 1000);
}

TEST_CASE("char_poly examples and conjugation invariance") {
  // identity: (x-1)^3
  CHECK(char_poly(identity_imat(3)) == poly::ipoly({-1, 3, -3, 1}));
  // [[2,1],[1,1]]: x^2 - 3x + 1
  CHECK(char_poly(imat(2, 2, {2, 1, 1, 1})) == poly::ipoly({1, -3, 1}));
  // 4x4 block matrix: (x^2-3x+1)^2
  IMat b4 = imat(4, 4, {2, 1, 0, 0, 1, 1, 0, 0, 0, 0, 2, 1, 0, 0, 1, 1});
  poly::IPoly q = poly::ipoly({1, -3, 1});
  CHECK(char_poly(b4) == poly::mul(q, q));

  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + t % 3;
    IMat a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = random_ivec(rng, 1, -5, 5)(0);
    IMat u = random_unimodular(rng, n);
    IMat ui = sail::unimodular_inverse(u);
    CHECK(char_poly(IMat(u * a * ui)) == char_poly(a));
  }
}

TEST_CASE("kernel_lattice") {
  IMat m = imat(1, 3, {1, 1, 1});
  IMat k = kernel_lattice(m);
  CHECK(k.rows() == 2);
  for (int i = 0; i < 2; ++i) CHECK(m * IVec(k.row(i).transpose()) == IVec::Zero(1));
  // saturation: the kernel basis generates all integer solutions
  auto idx = sublattice_index(k);  // as a rank-2 lattice in Z^3: infinite
  CHECK(!idx.has_value());
}

TEST_CASE("field elimination over NFE") {
  // kernel of (A - phi I) for the Fibonacci matrix over Q(phi')
  auto roots = real_roots(poly::ipoly({1, -3, 1}));
  REQUIRE(roots.size() == 2);
  auto k = make_field(roots[1]);  // larger root (3+sqrt5)/2
  FMat m(2, 2);
  IMat a = imat(2, 2, {2, 1, 1, 1});
  NFE th = NFE::theta(k);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      m(i, j) = NFE::from_rat(k, Rat(a(i, j)));
      if (i == j) m(i, j) = m(i, j) - th;
    }
  auto ker = kernel_field(m);
  REQUIRE(ker.size() == 1);
  // eigenvector proportional to (1, lambda - 2)
  NFE ratio = ker[0](1) / ker[0](0);
  NFE expect = th - NFE::from_rat(k, Rat(2));
  CHECK((ratio - expect).is_zero());
}
