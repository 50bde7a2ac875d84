#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sailkit/eigen_decomp.hpp"
#include "test_util.hpp"

using namespace sailkit;
using namespace testutil;

TEST_CASE("identity decomposition") {
  EigenDecomposition ed = eigen_decomposition(identity_imat(3));
  REQUIRE(ed.reals.size() == 1);
  CHECK(ed.reals[0].value.rational_value() == Rat(1));
  CHECK(ed.reals[0].multiplicity == 3);
  CHECK(ed.pairs.empty());
  CHECK(ed.multiplicity_sum() == 3);
  CHECK(ed.reals[0].eigenvectors.size() == 3);
}

TEST_CASE("fibonacci matrix: two real quadratic eigenvalues") {
  EigenDecomposition ed = eigen_decomposition(imat(2, 2, {2, 1, 1, 1}));
  REQUIRE(ed.reals.size() == 2);
  CHECK(ed.pairs.empty());
  for (const auto& re : ed.reals) {
    CHECK(re.factor == poly::ipoly({1, -3, 1}));
    REQUIRE(re.eigenvectors.size() == 1);
    // eigenvector proportional to (1, lambda - 2)
    const FVec& v = re.eigenvectors[0];
    NFE lam = NFE::theta(re.field);
    NFE lhs = v(1) * NFE::from_rat(re.field, Rat(1));
    NFE rhs = (lam - NFE::from_rat(re.field, Rat(2))) * v(0);
    CHECK((lhs - rhs).is_zero());
  }
  CHECK(compare(ed.reals[0].value, ed.reals[1].value) < 0);
}

TEST_CASE("rotation matrix: complex pair with modulus 1") {
  EigenDecomposition ed = eigen_decomposition(imat(2, 2, {0, -1, 1, 0}));
  CHECK(ed.reals.empty());
  REQUIRE(ed.pairs.size() == 1);
  CHECK(ed.pairs[0].modulus_sq.rational_value() == Rat(1));
  CHECK(ed.pairs[0].trace_re2.rational_value() == Rat(0));
}

TEST_CASE("degree-6 companion of x^6 - 3x^3 + 1") {
  IMat c = IMat::Zero(6, 6);
  for (int i = 1; i < 6; ++i) c(i, i - 1) = 1;
  // companion of monic p(x) = x^6 - 3x^3 + 1: last column = -coefficients
  c(0, 5) = -1;
  c(3, 5) = 3;
  poly::IPoly chi = char_poly(c);
  CHECK(chi == poly::ipoly({1, 0, 0, -3, 0, 0, 1}));
  EigenDecomposition ed = eigen_decomposition(c);
  REQUIRE(ed.reals.size() == 2);
  REQUIRE(ed.pairs.size() == 2);
  // both real roots positive
  for (const auto& re : ed.reals) CHECK(re.value.sign() == 1);
  // each pair's modulus^2 equals the square of one real root (cube-root family)
  for (const auto& pe : ed.pairs) {
    bool matched = false;
    for (const auto& re : ed.reals)
      if (compare(pe.modulus_sq, re.value * re.value) == 0) matched = true;
    CHECK(matched);
  }
  // pair trace is -theta for the matching real root
  for (const auto& pe : ed.pairs) {
    bool matched = false;
    for (const auto& re : ed.reals)
      if (compare(pe.trace_re2, -re.value) == 0) matched = true;
    CHECK(matched);
  }
}

TEST_CASE("determinant reproduced by eigenvalue contributions") {
  std::mt19937_64 rng(31);
  int done = 0;
  for (int t = 0; t < 60 && done < 25; ++t) {
    int n = 2 + t % 2;
    IMat a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = random_ivec(rng, 1, -3, 3)(0);
    EigenDecomposition ed = eigen_decomposition(a);
    if (ed.multiplicity_sum() != n) continue;  // only full decompositions
    ++done;
    // |det| = prod |real|^mult * prod (modulus^2)^mult
    AlgebraicReal acc(Rat(1));
    for (const auto& re : ed.reals)
      acc = acc * re.value.abs().pow(static_cast<unsigned>(re.multiplicity));
    for (const auto& pe : ed.pairs)
      acc = acc * pe.modulus_sq.pow(static_cast<unsigned>(pe.multiplicity));
    AlgebraicReal target{Rat(abs(det_bareiss(a)))};
    CHECK(compare(acc, target) == 0);
  }
  CHECK(done >= 20);
}

TEST_CASE("quartic with two complex pairs via certified disks") {
  // x^4 + 1: roots e^(i pi/4) etc., both pairs have modulus^2 = 1,
  // traces +-sqrt2
  IMat c = IMat::Zero(4, 4);
  for (int i = 1; i < 4; ++i) c(i, i - 1) = 1;
  c(0, 3) = -1;
  EigenDecomposition ed = eigen_decomposition(c);
  CHECK(ed.reals.empty());
  REQUIRE(ed.pairs.size() == 2);
  for (const auto& pe : ed.pairs) {
    CHECK(pe.modulus_sq.is_rational());
    CHECK(pe.modulus_sq.rational_value() == Rat(1));
    CHECK(pe.trace_re2.min_poly() == poly::ipoly({-2, 0, 1}));
  }
  CHECK(compare(ed.pairs[0].trace_re2, ed.pairs[1].trace_re2) != 0);
}
