#include "sailkit/hull.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sailkit::hull {

namespace {

bool lex_less(const IVec& a, const IVec& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return a(i) < b(i);
  return false;
}

std::vector<IVec> dedupe_sorted(std::vector<IVec> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const IVec& a, const IVec& b) { return a == b; }),
            pts.end());
  return pts;
}

Int cross2(const IVec& o, const IVec& a, const IVec& b) {
  return (a(0) - o(0)) * (b(1) - o(1)) - (a(1) - o(1)) * (b(0) - o(0));
}

Polytope hull2(const std::vector<IVec>& input) {
  std::vector<IVec> pts = dedupe_sorted(input);
  const int m = static_cast<int>(pts.size());
  if (m < 3) throw Error("DegenerateHull", "need 3+ points for a 2D hull");
  // monotone chain, strict turns only (collinear points dropped)
  std::vector<int> lower, upper;
  for (int i = 0; i < m; ++i) {
    while (lower.size() >= 2 &&
           sign(cross2(pts[lower[lower.size() - 2]], pts[lower.back()],
                       pts[i])) <= 0)
      lower.pop_back();
    lower.push_back(i);
  }
  for (int i = m - 1; i >= 0; --i) {
    while (upper.size() >= 2 &&
           sign(cross2(pts[upper[upper.size() - 2]], pts[upper.back()],
                       pts[i])) <= 0)
      upper.pop_back();
    upper.push_back(i);
  }
  std::vector<int> cyc(lower.begin(), lower.end() - 1);
  cyc.insert(cyc.end(), upper.begin(), upper.end() - 1);
  if (cyc.size() < 3) throw Error("DegenerateHull", "points are collinear");
  Polytope out;
  out.points = pts;
  out.vertices = cyc;
  const int k = static_cast<int>(cyc.size());
  for (int i = 0; i < k; ++i) {
    int a = cyc[i], b = cyc[(i + 1) % k];
    IVec d = pts[b] - pts[a];
    IVec u(2);
    u(0) = -d(1);
    u(1) = d(0);  // interior is to the left of a->b in CCW order
    u = primitive(u);
    Facet f;
    f.normal = u;
    f.level = u.dot(pts[a]);
    f.cycle = {a, b};
    out.facets.push_back(f);
  }
  return out;
}

// orientation of d against the plane of (a, b, c): sign of det[b-a; c-a; d-a]
int orient3(const IVec& a, const IVec& b, const IVec& c, const IVec& d) {
  IMat m(3, 3);
  m.row(0) = (b - a).transpose();
  m.row(1) = (c - a).transpose();
  m.row(2) = (d - a).transpose();
  return sign(det_bareiss(m));
}

int orient3_rat(const IVec& a, const IVec& b, const IVec& c, const QVec& d) {
  QMat m(3, 3);
  m.row(0) = to_q(IVec(b - a)).transpose();
  m.row(1) = to_q(IVec(c - a)).transpose();
  for (int j = 0; j < 3; ++j) m(2, j) = d(j) - Rat(a(j));
  return sign(det_field(m));
}

struct Tri {
  int a, b, c;
  bool alive = true;
};

Polytope hull3(const std::vector<IVec>& input) {
  std::vector<IVec> pts = dedupe_sorted(input);
  const int m = static_cast<int>(pts.size());
  if (m < 4) throw Error("DegenerateHull", "need 4+ points for a 3D hull");
  // initial affinely independent quadruple
  int i1 = -1, i2 = -1, i3 = -1;
  for (int i = 1; i < m && i1 < 0; ++i)
    if (pts[i] != pts[0]) i1 = i;
  for (int i = 1; i < m && i2 < 0; ++i) {
    if (i == i1) continue;
    IMat d(2, 3);
    d.row(0) = (pts[i1] - pts[0]).transpose();
    d.row(1) = (pts[i] - pts[0]).transpose();
    HnfResult h = hnf(d);
    if (h.rank == 2) i2 = i;
  }
  if (i2 < 0) throw Error("DegenerateHull", "points are collinear");
  for (int i = 1; i < m && i3 < 0; ++i) {
    if (i == i1 || i == i2) continue;
    if (orient3(pts[0], pts[i1], pts[i2], pts[i]) != 0) i3 = i;
  }
  if (i3 < 0) throw Error("DegenerateHull", "points are coplanar");

  QVec centroid(3);
  for (int j = 0; j < 3; ++j)
    centroid(j) =
        Rat(pts[0](j) + pts[i1](j) + pts[i2](j) + pts[i3](j), 4);

  std::vector<Tri> tris;
  auto add_tri = [&](int a, int b, int c) {
    // orient so the centroid is on the non-positive side
    if (orient3_rat(pts[a], pts[b], pts[c], centroid) > 0)
      tris.push_back({a, c, b});
    else
      tris.push_back({a, b, c});
  };
  add_tri(0, i1, i2);
  add_tri(0, i1, i3);
  add_tri(0, i2, i3);
  add_tri(i1, i2, i3);

  std::set<int> used{0, i1, i2, i3};
  for (int p = 0; p < m; ++p) {
    if (used.count(p)) continue;
    // visible facets
    std::vector<int> vis;
    for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
      if (!tris[t].alive) continue;
      if (orient3(pts[tris[t].a], pts[tris[t].b], pts[tris[t].c], pts[p]) > 0)
        vis.push_back(t);
    }
    if (vis.empty()) continue;  // inside or on the boundary
    // horizon = directed edges of visible triangles whose reverse is not
    // an edge of a visible triangle
    std::set<std::pair<int, int>> vis_edges;
    for (int t : vis) {
      const Tri& tr = tris[t];
      vis_edges.insert({tr.a, tr.b});
      vis_edges.insert({tr.b, tr.c});
      vis_edges.insert({tr.c, tr.a});
    }
    std::vector<std::pair<int, int>> horizon;
    for (const auto& e : vis_edges)
      if (!vis_edges.count({e.second, e.first})) horizon.push_back(e);
    for (int t : vis) tris[t].alive = false;
    for (const auto& [u, v] : horizon) add_tri(u, v, p);
  }

  // merge coplanar triangles into maximal faces
  struct Key {
    std::vector<std::string> k;
    bool operator<(const Key& o) const { return k < o.k; }
  };
  std::map<Key, std::vector<int>> groups;  // plane -> triangle list
  auto plane_of = [&](const Tri& t) {
    IVec e1 = pts[t.b] - pts[t.a], e2 = pts[t.c] - pts[t.a];
    IVec n(3);
    n(0) = e1(1) * e2(2) - e1(2) * e2(1);
    n(1) = e1(2) * e2(0) - e1(0) * e2(2);
    n(2) = e1(0) * e2(1) - e1(1) * e2(0);
    // cross(b-a, c-a) points outward; inward normal is the negation
    IVec u = primitive(IVec(-n));
    return std::make_pair(u, Int(u.dot(pts[t.a])));
  };
  std::map<std::vector<std::string>, std::pair<IVec, Int>> plane_data;
  for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
    if (!tris[t].alive) continue;
    auto [u, lvl] = plane_of(tris[t]);
    Key key;
    for (int j = 0; j < 3; ++j) key.k.push_back(u(j).get_str());
    key.k.push_back(lvl.get_str());
    groups[key].push_back(t);
    plane_data[key.k] = {u, lvl};
  }

  Polytope out;
  out.points = pts;
  std::set<int> vertex_set;
  for (auto& [key, tlist] : groups) {
    auto [u, lvl] = plane_data[key.k];
    // all points of the group
    std::set<int> fp;
    for (int t : tlist) {
      fp.insert(tris[t].a);
      fp.insert(tris[t].b);
      fp.insert(tris[t].c);
    }
    // 2D hull within the plane: drop the coordinate with the largest |u|
    int drop = 0;
    for (int j = 1; j < 3; ++j)
      if (abs(u(j)) > abs(u(drop))) drop = j;
    int c0 = (drop + 1) % 3, c1 = (drop + 2) % 3;
    std::vector<std::pair<IVec, int>> proj;
    for (int idx : fp) {
      IVec q(2);
      q(0) = pts[idx](c0);
      q(1) = pts[idx](c1);
      proj.push_back({q, idx});
    }
    std::sort(proj.begin(), proj.end(),
              [](const auto& x, const auto& y) { return lex_less(x.first, y.first); });
    auto cr = [&](int o, int a, int b) {
      return sign(cross2(proj[o].first, proj[a].first, proj[b].first));
    };
    std::vector<int> lo_i, up_i;
    const int fm = static_cast<int>(proj.size());
    for (int i = 0; i < fm; ++i) {
      while (lo_i.size() >= 2 &&
             cr(lo_i[lo_i.size() - 2], lo_i.back(), i) <= 0)
        lo_i.pop_back();
      lo_i.push_back(i);
    }
    for (int i = fm - 1; i >= 0; --i) {
      while (up_i.size() >= 2 &&
             cr(up_i[up_i.size() - 2], up_i.back(), i) <= 0)
        up_i.pop_back();
      up_i.push_back(i);
    }
    std::vector<int> cyc;
    for (size_t i = 0; i + 1 < lo_i.size(); ++i) cyc.push_back(proj[lo_i[i]].second);
    for (size_t i = 0; i + 1 < up_i.size(); ++i) cyc.push_back(proj[up_i[i]].second);
    if (cyc.size() < 3) continue;  // safety: degenerate group
    // orient the cycle CCW as seen from outside (area normal opposite to u)
    IVec nvec = IVec::Zero(3);
    for (size_t i = 1; i + 1 < cyc.size(); ++i) {
      IVec e1 = pts[cyc[i]] - pts[cyc[0]];
      IVec e2 = pts[cyc[i + 1]] - pts[cyc[0]];
      nvec(0) += e1(1) * e2(2) - e1(2) * e2(1);
      nvec(1) += e1(2) * e2(0) - e1(0) * e2(2);
      nvec(2) += e1(0) * e2(1) - e1(1) * e2(0);
    }
    if (sign(nvec.dot(u)) > 0) std::reverse(cyc.begin(), cyc.end());
    Facet f;
    f.normal = u;
    f.level = lvl;
    f.cycle = cyc;
    for (int v : cyc) vertex_set.insert(v);
    out.facets.push_back(f);
  }
  out.vertices.assign(vertex_set.begin(), vertex_set.end());
  return out;
}

}  // namespace

Polytope convex_hull(const std::vector<IVec>& pts) {
  if (pts.empty()) throw Error("EmptyPatch", "hull of no points");
  const int n = static_cast<int>(pts[0].size());
  if (n == 2) return hull2(pts);
  if (n == 3) return hull3(pts);
  throw Error("WrongDimension", "hulls available for n in {2, 3}");
}

}  // namespace sailkit::hull
