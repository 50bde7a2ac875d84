#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace sailkit;
using namespace sailkit::cone;
using namespace testutil;

namespace {
ConeSpec fib_cone() {
  return cone_from_matrix(imat(2, 2, {2, 1, 1, 1}), {0, 1});
}
ConeSpec cubic_cone() {
  return cone_from_matrix(imat(3, 3, {1, 1, 1, 1, 2, 2, 1, 2, 3}), {0, 1, 2});
}
ConeSpec quadrant() {
  return cone_from_rational({ivec({1, 0}), ivec({0, 1})});
}
}  // namespace

TEST_CASE("cone_from_matrix: fibonacci eigencone") {
  ConeSpec c = fib_cone();
  CHECK(c.dimension == 2);
  CHECK(c.has_rational_height());
  // slopes are lambda - 2 for the two roots of x^2-3x+1
  for (int i = 0; i < 2; ++i) {
    const auto& r = c.rays[i];
    NFE lam = NFE::theta(r.field);
    CHECK((r.direction(1) / r.direction(0) - lam +
           NFE::from_rat(r.field, Rat(2)))
              .is_zero());
  }
  // duality <L_i, w_i> = 1 in-field
  for (int i = 0; i < 2; ++i) {
    NFE dot = NFE::from_rat(c.rays[i].field, Rat(0));
    for (int k = 0; k < 2; ++k)
      dot = dot + c.rays[i].form(k) * c.rays[i].direction(k);
    CHECK((dot - NFE::from_rat(c.rays[i].field, Rat(1))).is_zero());
  }
  // cross-embedding duality <L_i, w_j> = 0 via exact expressions
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (i == j) continue;
      Expr dot = Expr::constant(Rat(0));
      for (int k = 0; k < 2; ++k)
        dot = dot + c.rays[i].form(k).to_expr() *
                        c.rays[j].direction(k).to_expr();
      CHECK(sign_of(dot) == 0);
    }
}

TEST_CASE("cone_from_matrix: cubic eigencone and errors") {
  ConeSpec c = cubic_cone();
  CHECK(c.dimension == 3);
  CHECK(c.has_rational_height());
  // all three eigenvalues real and positive
  auto evs = real_eigenvalues(imat(3, 3, {1, 1, 1, 1, 2, 2, 1, 2, 3}));
  REQUIRE(evs.size() == 3);
  for (auto& e : evs) CHECK(e.sign() == 1);
  // identity has no simple eigenray selection
  CHECK_THROWS_AS(cone_from_matrix(identity_imat(2), {0, 0}), Error);
  CHECK_THROWS_AS(cone_from_matrix(identity_imat(2), {0, 1}), Error);
}

TEST_CASE("irrationality check") {
  CHECK(!irrationality_check(quadrant()));
  CHECK(irrationality_check(fib_cone()));
  CHECK(irrationality_check(cubic_cone()));
}

TEST_CASE("classify_point") {
  ConeSpec q = quadrant();
  CHECK(q.classify(ivec({0, 0})) == Where::Boundary);
  CHECK(q.classify(ivec({-1, 0})) == Where::Exterior);
  CHECK(q.classify(ivec({2, 0})) == Where::Boundary);
  CHECK(q.classify(ivec({1, 3})) == Where::Interior);
  ConeSpec f = fib_cone();
  CHECK(f.classify(ivec({1, 1})) == Where::Interior);
  CHECK(f.classify(ivec({0, 0})) == Where::Boundary);
  CHECK(f.classify(ivec({-1, 1})) == Where::Exterior);
}

TEST_CASE("enumerate_cone_points: quadrant example") {
  ConeSpec q = quadrant();
  // h = (1,1): height <= 2 gives the five listed points
  auto pts = enumerate_cone_points(q, Rat(2));
  std::vector<IVec> expect = {ivec({0, 1}), ivec({0, 2}), ivec({1, 0}),
                              ivec({1, 1}), ivec({2, 0})};
  CHECK(pts == expect);
  CHECK_THROWS_AS(enumerate_cone_points(q, Rat(0)), Error);
}

TEST_CASE("enumerate_cone_points matches box-scan oracle") {
  ConeSpec f = fib_cone();
  for (long h : {3, 7, 12}) {
    auto got = enumerate_cone_points(f, Rat(h));
    auto oracle = box_scan_cone(f, Rat(h));
    CHECK(got == oracle);
    CHECK(!got.empty());
  }
  ConeSpec c3 = cubic_cone();
  auto got = enumerate_cone_points(c3, Rat(4));
  auto oracle = box_scan_cone(c3, Rat(4));
  CHECK(got == oracle);
}

TEST_CASE("field_trace") {
  // trace of theta over x^2 - 3x + 1 is 3; of theta^2 is 7 (p2 = 3*3 - 2*1)
  auto roots = real_roots(poly::ipoly({1, -3, 1}));
  auto k = make_field(roots[0]);
  CHECK(field_trace(NFE::theta(k)) == Rat(3));
  CHECK(field_trace(NFE::theta(k) * NFE::theta(k)) == Rat(7));
  CHECK(field_trace(NFE::from_rat(k, Rat(5))) == Rat(10));
}
