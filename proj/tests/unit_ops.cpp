#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sailkit/operators.hpp"
#include "sailkit/sail.hpp"
#include "test_util.hpp"

using namespace sailkit;
using namespace sailkit::ops;
using namespace testutil;

namespace {
IMat block4() {
  return imat(4, 4, {2, 1, 0, 0, 1, 1, 0, 0, 0, 0, 2, 1, 0, 0, 1, 1});
}
IMat companion6() {
  IMat c = IMat::Zero(6, 6);
  for (int i = 1; i < 6; ++i) c(i, i - 1) = 1;
  c(0, 5) = -1;
  c(3, 5) = 3;
  return c;
}
}  // namespace

TEST_CASE("check_properties: paper classifications") {
  PropertyFlags id = check_properties(identity_imat(3));
  CHECK(!id.p1);

  PropertyFlags fib = check_properties(imat(2, 2, {2, 1, 1, 1}));
  CHECK(fib.p1);
  CHECK(fib.p2);
  CHECK(fib.distinct);
  CHECK(fib.in_a0);
  CHECK(fib.in_a1);

  PropertyFlags b4 = check_properties(block4());
  CHECK(b4.p1);
  CHECK(b4.p2);
  CHECK(!b4.distinct);
  CHECK(b4.in_a0);
  CHECK(!b4.in_a1);

  // degree-6 example: the complex pairs share their moduli with the real
  // eigenvalues (cube-root family), so (P2) fails while P1 holds and all six
  // eigenvalues are distinct
  PropertyFlags c6 = check_properties(companion6());
  CHECK(c6.p1);
  CHECK(!c6.p2);
  CHECK(c6.distinct);

  // conjugation invariance
  std::mt19937_64 rng(13);
  for (int t = 0; t < 10; ++t) {
    IMat u = random_unimodular(rng, 4);
    IMat conj = u * block4() * sail::unimodular_inverse(u);
    PropertyFlags f2 = check_properties(conj);
    CHECK(f2.p1 == b4.p1);
    CHECK(f2.p2 == b4.p2);
    CHECK(f2.distinct == b4.distinct);
  }
}

TEST_CASE("is_hyperbolic") {
  CHECK(is_hyperbolic(imat(2, 2, {2, 1, 1, 1})));
  CHECK(!is_hyperbolic(block4()));             // reducible square
  CHECK(!is_hyperbolic(imat(2, 2, {0, -1, 1, 0})));  // complex roots
  CHECK(!is_hyperbolic(companion6()));         // not all roots real
  CHECK(is_hyperbolic(imat(3, 3, {1, 1, 1, 1, 2, 2, 1, 2, 3})));
  // hyperbolic implies P1, P2, distinct
  IMat a = imat(3, 3, {1, 1, 1, 1, 2, 2, 1, 2, 3});
  PropertyFlags f = check_properties(a);
  CHECK((f.p1 && f.p2 && f.distinct));
}

TEST_CASE("linearize_affine") {
  // a = 0 -> b = 0
  AffineMap m0{imat(2, 2, {2, 1, 1, 1}), ivec({0, 0})};
  auto [b0, l0] = linearize_affine(m0);
  CHECK(b0 == ivec({0, 0}));
  // A = [[2,1],[1,1]], a = (1,0): solve (E-A) b = a
  AffineMap m1{imat(2, 2, {2, 1, 1, 1}), ivec({1, 0})};
  auto [b1, l1] = linearize_affine(m1);
  IMat ema = identity_imat(2) - m1.linear;
  CHECK(ema * b1 == m1.translation);
  // conjugation identity on sampled x: A(b + x) + a - b = A x
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    IVec x = random_ivec(rng, 2, -9, 9);
    IVec lhs = m1.linear * (b1 + x) + m1.translation - b1;
    IVec rhs = m1.linear * x;
    CHECK(lhs == rhs);
  }
  // eigenvalue 1: P1 violated
  AffineMap bad{identity_imat(2), ivec({1, 0})};
  CHECK_THROWS_AS(linearize_affine(bad), Error);
}

TEST_CASE("spectral_filtration dimensions") {
  SpectralFiltration f1 = spectral_filtration(imat(2, 2, {2, 1, 1, 1}));
  REQUIRE(f1.components.size() == 2);
  CHECK(f1.components[0].dimension == 1);
  CHECK(f1.components[1].dimension == 1);
  CHECK(f1.components[0].basis_available);

  SpectralFiltration f2 = spectral_filtration(block4());
  REQUIRE(f2.components.size() == 2);
  CHECK(f2.components[0].dimension == 2);
  CHECK(f2.components[1].dimension == 2);

  SpectralFiltration f3 = spectral_filtration(identity_imat(4));
  REQUIRE(f3.components.size() == 1);
  CHECK(f3.components[0].dimension == 4);
  REQUIRE(f3.components[0].rational_basis.has_value());
  CHECK(f3.components[0].rational_basis->size() == 4);

  // rotation: single modulus-1 pair with a rational plane basis
  SpectralFiltration f4 = spectral_filtration(imat(2, 2, {0, -1, 1, 0}));
  REQUIRE(f4.components.size() == 1);
  CHECK(f4.components[0].dimension == 2);
  CHECK(f4.components[0].basis_available);
}

TEST_CASE("edge_count_in_subspaces") {
  IMat fib = imat(2, 2, {2, 1, 1, 1});
  auto cf = cone::cone_from_matrix(fib, {0, 1});
  auto filt = spectral_filtration(fib);
  auto rep = edge_count_in_subspaces(fib, filt, cf);
  CHECK(rep.counts == std::vector<int>{1, 1});
  CHECK(rep.matches_dimensions);

  IMat a3 = imat(3, 3, {1, 1, 1, 1, 2, 2, 1, 2, 3});
  auto c3 = cone::cone_from_matrix(a3, {0, 1, 2});
  auto filt3 = spectral_filtration(a3);
  auto rep3 = edge_count_in_subspaces(a3, filt3, c3);
  CHECK(rep3.counts == std::vector<int>{1, 1, 1});
  CHECK(rep3.matches_dimensions);

  // coordinate swap on the quadrant: all moduli 1, one component
  IMat sw = imat(2, 2, {0, 1, 1, 0});
  auto q = cone::cone_from_rational({ivec({1, 0}), ivec({0, 1})});
  auto fsw = spectral_filtration(sw);
  REQUIRE(fsw.components.size() == 1);
  auto rsw = edge_count_in_subspaces(sw, fsw, q);
  CHECK(rsw.counts == std::vector<int>{2});
  CHECK(rsw.matches_dimensions);

  // non-invariant cone rejected
  CHECK_THROWS_AS(edge_count_in_subspaces(fib, filt, q), Error);
}

TEST_CASE("jordan_growth_probe") {
  // 1x1 cell lambda = 2: ratio exactly 1
  IMat c1 = imat(1, 1, {2});
  QVec h1(1);
  h1(0) = Rat(1);
  auto r1 = jordan_growth_probe(c1, h1, 0, 1, 20, 5);
  CHECK(r1.bounded_positive);
  CHECK(r1.min_ratio == Rat(1));
  CHECK(r1.max_ratio == Rat(1));

  // 2x2 cell lambda = 2, e = first basis vector: <A^m h, e1> ~ 2^m m
  IMat c2 = imat(2, 2, {2, 1, 0, 2});
  QVec h2(2);
  h2(0) = Rat(3);
  h2(1) = Rat(-1, 2);
  auto r2 = jordan_growth_probe(c2, h2, 0, 10, 60, 20);
  CHECK(r2.bounded_positive);
  CHECK(r2.max_ratio < Rat(10));

  // 3x3 cell lambda = 3, top coordinate: growth 3^m m^2 within fixed bounds
  IMat c3 = IMat::Zero(3, 3);
  for (int i = 0; i < 3; ++i) c3(i, i) = 3;
  c3(0, 1) = 1;
  c3(1, 2) = 1;
  QVec h3(3);
  h3(0) = Rat(1);
  h3(1) = Rat(2);
  h3(2) = Rat(1);
  auto r3 = jordan_growth_probe(c3, h3, 0, 10, 60, 10);
  CHECK(r3.bounded_positive);
  CHECK(r3.max_ratio / r3.min_ratio < Rat(4));

  QVec hz(3);
  hz(0) = Rat(1);
  hz(1) = Rat(0);
  hz(2) = Rat(1);
  CHECK_THROWS_AS(jordan_growth_probe(c3, hz, 0, 1, 10, 2), Error);
}

TEST_CASE("classify_unimodular_3d: all seven forms") {
  using F = UnimodularForm3;
  auto form_of = [&](const IMat& a) { return classify_unimodular_3d(a).form; };

  CHECK(form_of(identity_imat(3)) == F::Identity);
  CHECK(form_of(imat(3, 3, {1, 0, 0, 0, 1, 1, 0, 0, 1})) == F::Unipotent2);
  CHECK(form_of(imat(3, 3, {1, 1, 0, 0, 1, 1, 0, 0, 1})) == F::Unipotent3);
  CHECK(form_of(imat(3, 3, {1, 0, 0, 0, -1, 1, 0, 0, -1})) == F::MinusPair);
  CHECK(form_of(imat(3, 3, {1, 0, 0, 0, 2, 1, 0, 1, 1})) == F::DiagHyperbolic);
  auto c6 = classify_unimodular_3d(imat(3, 3, {1, 0, 0, 0, 0, -1, 0, 1, 0}));
  CHECK(c6.form == F::RotationFix);
  CHECK(c6.rotation_2cos == Rat(0));  // angle pi/2
  auto c7 = classify_unimodular_3d(imat(3, 3, {-1, 0, 0, 0, 0, -1, 0, 1, 0}));
  CHECK(c7.form == F::RotationFlip);
  CHECK(c7.rotation_2cos == Rat(0));
  // diag(1,-1,-1): rotation by pi
  auto cpi = classify_unimodular_3d(imat(3, 3, {1, 0, 0, 0, -1, 0, 0, 0, -1}));
  CHECK(cpi.form == F::RotationFix);
  CHECK(cpi.rotation_2cos == Rat(-2));

  // hyperbolic cubic: none of the forms
  CHECK(!form_of(imat(3, 3, {1, 1, 1, 1, 2, 2, 1, 2, 3})).has_value());

  // conjugation stability
  std::mt19937_64 rng(77);
  std::vector<IMat> reps = {
      identity_imat(3),
      imat(3, 3, {1, 0, 0, 0, 1, 1, 0, 0, 1}),
      imat(3, 3, {1, 1, 0, 0, 1, 1, 0, 0, 1}),
      imat(3, 3, {1, 0, 0, 0, -1, 1, 0, 0, -1}),
      imat(3, 3, {1, 0, 0, 0, 2, 1, 0, 1, 1}),
      imat(3, 3, {1, 0, 0, 0, 0, -1, 0, 1, 0}),
      imat(3, 3, {-1, 0, 0, 0, 0, -1, 0, 1, 0}),
  };
  for (const IMat& r : reps) {
    auto base = classify_unimodular_3d(r);
    for (int t = 0; t < 5; ++t) {
      IMat u = random_unimodular(rng, 3);
      auto conj = classify_unimodular_3d(IMat(u * r * sail::unimodular_inverse(u)));
      CHECK(conj.form == base.form);
      if (base.rotation_2cos) CHECK(conj.rotation_2cos == base.rotation_2cos);
    }
  }
}

TEST_CASE("preserves_cone composition closure") {
  IMat a = imat(2, 2, {2, 1, 1, 1});
  auto c = cone::cone_from_matrix(a, {0, 1});
  IMat a2 = a * a;
  CHECK(sail::preserves_cone(a, c));
  CHECK(sail::preserves_cone(a2, c));
  CHECK(sail::preserves_cone(IMat(a * a2), c));
}
