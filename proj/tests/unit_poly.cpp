#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sailkit/factor.hpp"
#include "sailkit/poly.hpp"

#include <random>

using namespace sailkit;
using namespace sailkit::poly;

namespace {

IPoly random_poly(std::mt19937_64& rng, int degree, int coef_range) {
  std::uniform_int_distribution<long> d(-coef_range, coef_range);
  IPoly p(degree + 1);
  for (int i = 0; i <= degree; ++i) p(i) = Int(d(rng));
  while (sign(p(degree)) == 0) p(degree) = Int(d(rng));
  return trim(p);
}

}  // namespace

TEST_CASE("arithmetic and division basics") {
  IPoly a = ipoly({1, 2, 1});       // (x+1)^2
  IPoly b = ipoly({1, 1});          // x+1
  CHECK(exact_div(a, b) == ipoly({1, 1}));
  CHECK(to_string(a) == "x^2 + 2x + 1");
  IPoly prod = mul(b, ipoly({-1, 1}));
  CHECK(prod == ipoly({-1, 0, 1}));
  CHECK(eval(a, Rat(2)) == Rat(9));
}

TEST_CASE("gcd and squarefree") {
  IPoly f = mul(ipoly({-1, 1}), mul(ipoly({-1, 1}), ipoly({1, 1})));
  CHECK(gcd(f, derivative(f)) == ipoly({-1, 1}));
  CHECK(squarefree_part(f) == ipoly({-1, 0, 1}));
  auto parts = squarefree_decomposition(f);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == ipoly({1, 1}));
  CHECK(parts[0].second == 1);
  CHECK(parts[1].first == ipoly({-1, 1}));
  CHECK(parts[1].second == 2);
}

TEST_CASE("resultant matches product over roots") {
  // res(x^2-2, x^2-3) = (2-3)^2 = 1... computed pairwise: prod (a_i - b_j)
  // with roots +-sqrt2, +-sqrt3: (s2-s3)(s2+s3)(-s2-s3)(-s2+s3) = ((2-3))^2=1
  CHECK(resultant(ipoly({-2, 0, 1}), ipoly({-3, 0, 1})) == Int(1));
  // res(x-2, x-3) = 2-3... convention: res(f,g) = lc(f)^deg g * prod g(roots f)
  CHECK(resultant(ipoly({-2, 1}), ipoly({-3, 1})) == Int(-1));
  // a shared root makes it vanish
  CHECK(resultant(ipoly({-1, 1}), ipoly({-1, 0, 0, 1})) == Int(0));
}

TEST_CASE("sturm counting and isolation") {
  // (x^2-2)(x^2-3)(x-1): five real roots
  IPoly f = mul(mul(ipoly({-2, 0, 1}), ipoly({-3, 0, 1})), ipoly({-1, 1}));
  SturmSeq s = sturm(f);
  CHECK(count_real_roots(s) == 5);
  CHECK(count_roots(s, Rat(0), Rat(2)) == 3);  // 1, sqrt2, sqrt3 <= 2? sqrt3~1.73
  auto ivs = isolate_real_roots(f);
  REQUIRE(ivs.size() == 5);
  for (size_t i = 0; i + 1 < ivs.size(); ++i) CHECK(ivs[i].hi <= ivs[i + 1].lo);
}

TEST_CASE("rational roots isolate correctly") {
  IPoly f = mul(ipoly({-1, 2}), ipoly({-7, 0, 1}));  // (2x-1)(x^2-7)
  auto ivs = isolate_real_roots(f);
  REQUIRE(ivs.size() == 3);
  bool found_half = false;
  for (auto& iv : ivs)
    if (iv.contains(Rat(1, 2))) found_half = true;
  CHECK(found_half);
  SturmSeq s = sturm(f);
  for (auto& iv : ivs)
    if (!iv.is_point()) CHECK(count_roots(s, iv.lo, iv.hi) == 1);
}

TEST_CASE("argument transforms") {
  IPoly f = ipoly({-2, 0, 1});  // x^2 - 2
  // roots of compose_shift(f, -1) are sqrt2 + 1 and -sqrt2 + 1
  IPoly g = compose_shift(f, Rat(-1));
  CHECK(sign(eval(to_q(g), Rat(241, 100))) != 0);
  SturmSeq s = sturm(g);
  CHECK(count_roots(s, Rat(2), Rat(3)) == 1);
  IPoly h = compose_scale_arg(f, Rat(2));  // roots 2*(+-sqrt2)
  SturmSeq sh = sturm(h);
  CHECK(count_roots(sh, Rat(2), Rat(3)) == 1);
  CHECK(reverse(ipoly({-2, 0, 1})) == ipoly({-1, 0, 2}));
}

TEST_CASE("factor: known factorizations") {
  // (x^2-3x+1)^2
  IPoly q = ipoly({1, -3, 1});
  auto f1 = factor(mul(q, q));
  REQUIRE(f1.size() == 1);
  CHECK(f1[0].first == q);
  CHECK(f1[0].second == 2);

  // x^6 - 3x^3 + 1 irreducible
  IPoly sext = ipoly({1, 0, 0, -3, 0, 0, 1});
  CHECK(is_irreducible(sext));

  // x^4 + 1 irreducible but splits mod every prime (recombination test)
  CHECK(is_irreducible(ipoly({1, 0, 0, 0, 1})));

  // x^4 + 4 = (x^2-2x+2)(x^2+2x+2)
  auto f2 = factor(ipoly({4, 0, 0, 0, 1}));
  REQUIRE(f2.size() == 2);
  CHECK(f2[0].first == ipoly({2, -2, 1}));
  CHECK(f2[1].first == ipoly({2, 2, 1}));

  // mixed product with multiplicity
  IPoly m = mul(mul(ipoly({-1, 1}), ipoly({1, 1})), mul(ipoly({1, 0, 1}), ipoly({1, 1, 1})));
  auto f3 = factor(m);
  CHECK(f3.size() == 4);

  // non-monic: (2x-1)(3x+5)
  auto f4 = factor(mul(ipoly({-1, 2}), ipoly({5, 3})));
  REQUIRE(f4.size() == 2);
}

TEST_CASE("factor: random products recombine") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 30; ++trial) {
    IPoly a = random_poly(rng, 2 + trial % 3, 6);
    IPoly b = random_poly(rng, 1 + trial % 4, 6);
    IPoly prod = mul(a, b);
    if (deg(prod) < 2) continue;
    auto fs = factor(prod);
    IPoly re = ipoly({1});
    for (auto& [h, m] : fs)
      for (int i = 0; i < m; ++i) re = mul(re, h);
    CHECK(primitive_part(re) == primitive_part(prod));
    for (auto& [h, m] : fs) CHECK(is_irreducible(h));
  }
}

TEST_CASE("resultant_y composes root sums/products") {
  IPoly f = ipoly({-2, 0, 1});  // roots +-sqrt2
  IPoly g = ipoly({-3, 0, 1});  // roots +-sqrt3
  // sum: vanishing poly of sqrt2+sqrt3 has x^4-10x^2+1 as a factor
  IPoly vs = resultant_y(f, subst_x_minus_y(g));
  auto [q, r] = divmod(to_q(vs), to_q(ipoly({1, 0, -10, 0, 1})));
  CHECK(is_zero(r));
  // product: vanishing poly of sqrt6: x^2 - 6 divides
  IPoly vp = resultant_y(f, homogenize_x_over_y(g));
  auto [q2, r2] = divmod(to_q(vp), to_q(ipoly({-6, 0, 1})));
  CHECK(is_zero(r2));
}
