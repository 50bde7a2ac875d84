#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

#include <set>

using namespace sailkit;
using namespace testutil;

namespace {

void check_against_oracle(const std::vector<IVec>& pts) {
  hull::Polytope p = hull::convex_hull(pts);
  auto oracle = oracle_hull_faces(p.points);
  // every oracle face appears with the same vertex set, and vice versa
  REQUIRE(p.facets.size() == oracle.size());
  for (const auto& f : p.facets) {
    bool found = false;
    for (const auto& of : oracle) {
      if (of.normal == f.normal && of.level == f.level) {
        std::set<std::vector<long>> got;
        for (int v : f.cycle) {
          std::vector<long> key;
          for (Eigen::Index i = 0; i < p.points[v].size(); ++i)
            key.push_back(p.points[v](i).get_si());
          got.insert(key);
        }
        CHECK(got == of.vertex_set);
        found = true;
      }
    }
    CHECK(found);
  }
  // all points inside every facet halfspace
  for (const auto& f : p.facets)
    for (const auto& q : p.points) CHECK(f.normal.dot(q) >= f.level);
}

}  // namespace

TEST_CASE("2D hull with collinear points") {
  std::vector<IVec> pts = {ivec({0, 0}), ivec({1, 0}), ivec({2, 0}),
                           ivec({2, 2}), ivec({0, 2}), ivec({1, 1})};
  hull::Polytope p = hull::convex_hull(pts);
  CHECK(p.vertices.size() == 4);  // (1,0) lies on an edge, (1,1) inside
  CHECK(p.facets.size() == 4);
  check_against_oracle(pts);
}

TEST_CASE("3D cube with face-interior points") {
  std::vector<IVec> pts;
  for (int x = 0; x <= 2; ++x)
    for (int y = 0; y <= 2; ++y)
      for (int z = 0; z <= 2; ++z)
        if (x == 0 || x == 2 || y == 0 || y == 2 || z == 0 || z == 2)
          pts.push_back(ivec({x, y, z}));
  pts.push_back(ivec({1, 1, 1}));
  hull::Polytope p = hull::convex_hull(pts);
  CHECK(p.facets.size() == 6);  // coplanar triangles merged per cube face
  CHECK(p.vertices.size() == 8);
  for (const auto& f : p.facets) CHECK(f.cycle.size() == 4);
}

TEST_CASE("simplex orientation: cycles CCW from outside") {
  std::vector<IVec> pts = {ivec({0, 0, 0}), ivec({1, 0, 0}), ivec({0, 1, 0}),
                           ivec({0, 0, 1})};
  hull::Polytope p = hull::convex_hull(pts);
  REQUIRE(p.facets.size() == 4);
  for (const auto& f : p.facets) {
    REQUIRE(f.cycle.size() == 3);
    // area normal of the cycle must oppose the inward normal
    IVec a = p.points[f.cycle[0]], b = p.points[f.cycle[1]],
         c = p.points[f.cycle[2]];
    IVec e1 = b - a, e2 = c - a;
    IVec nv(3);
    nv(0) = e1(1) * e2(2) - e1(2) * e2(1);
    nv(1) = e1(2) * e2(0) - e1(0) * e2(2);
    nv(2) = e1(0) * e2(1) - e1(1) * e2(0);
    CHECK(sign(nv.dot(f.normal)) < 0);
  }
}

TEST_CASE("random hulls match the oracle") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 40; ++t) {
    int n = 2 + t % 2;
    std::set<std::vector<long>> used;
    std::vector<IVec> pts;
    int m = 6 + t % 7;
    for (int i = 0; i < m; ++i) {
      IVec v = random_ivec(rng, n, -4, 4);
      std::vector<long> key;
      for (Eigen::Index j = 0; j < n; ++j) key.push_back(v(j).get_si());
      if (used.insert(key).second) pts.push_back(v);
    }
    try {
      check_against_oracle(pts);
    } catch (const Error& e) {
      // degenerate (flat) samples are fine to skip
      CHECK(std::string(e.code()) == "DegenerateHull");
    }
  }
}

TEST_CASE("degenerate inputs throw") {
  CHECK_THROWS_AS(
      hull::convex_hull({ivec({0, 0}), ivec({1, 1}), ivec({2, 2})}), Error);
  CHECK_THROWS_AS(hull::convex_hull({ivec({0, 0, 0}), ivec({1, 0, 0}),
                                     ivec({0, 1, 0}), ivec({1, 1, 0})}),
                  Error);
}
