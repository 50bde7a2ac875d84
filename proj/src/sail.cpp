#include "sailkit/sail.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sailkit::sail {

using cone::ConeSpec;
using cone::Where;

int SailPatch::find_vertex(const IVec& v) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == v) return static_cast<int>(i);
  return -1;
}

std::vector<int> SailPatch::faces_at(int vertex) const {
  std::vector<int> out;
  for (size_t f = 0; f < faces.size(); ++f)
    for (int v : faces[f].cycle)
      if (v == vertex) {
        out.push_back(static_cast<int>(f));
        break;
      }
  return out;
}

std::vector<int> SailPatch::neighbors(int vertex) const {
  std::set<int> out;
  for (const auto& e : edges) {
    if (e[0] == vertex) out.insert(e[1]);
    if (e[1] == vertex) out.insert(e[0]);
  }
  return {out.begin(), out.end()};
}

IMat unimodular_inverse(const IMat& a) {
  auto inv = inverse_field(to_q(a));
  if (!inv) throw Error("NotUnimodular", "matrix not invertible");
  IMat r(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      Rat c = (*inv)(i, j);
      c.canonicalize();
      if (den(c) != 1)
        throw Error("NotUnimodular", "inverse is not integral");
      r(i, j) = num(c);
    }
  return r;
}

bool preserves_cone(const IMat& a, const ConeSpec& c) {
  const int n = c.dimension;
  std::vector<int> image(n, -1);
  for (int i = 0; i < n; ++i) {
    // w = A * omega_i over the ray's field
    const auto& ray = c.rays[i];
    FVec w(n);
    for (int r = 0; r < n; ++r) {
      NFE acc = NFE::from_rat(ray.field, Rat(0));
      for (int k = 0; k < n; ++k)
        acc = acc + Rat(a(r, k)) * ray.direction(k);
      w(r) = acc;
    }
    int found = -1;
    for (int j = 0; j < n && found < 0; ++j) {
      const auto& tgt = c.rays[j];
      bool parallel = true;
      if (same_field(ray.field, tgt.field)) {
        for (int p = 0; p < n && parallel; ++p)
          for (int q = p + 1; q < n && parallel; ++q) {
            NFE m = w(p) * NFE(ray.field, tgt.direction(q).coords()) -
                    w(q) * NFE(ray.field, tgt.direction(p).coords());
            if (!m.is_zero()) parallel = false;
          }
      } else {
        for (int p = 0; p < n && parallel; ++p)
          for (int q = p + 1; q < n && parallel; ++q) {
            Expr m = w(p).to_expr() * tgt.direction(q).to_expr() -
                     w(q).to_expr() * tgt.direction(p).to_expr();
            if (sign_of(m) != 0) parallel = false;
          }
      }
      if (!parallel) continue;
      // positive scaling: compare signs at a nonzero coordinate of the target
      int k0 = -1;
      for (int k = 0; k < n; ++k)
        if (!tgt.direction(k).is_zero()) {
          k0 = k;
          break;
        }
      if (k0 < 0) return false;
      if (w(k0).is_zero()) return false;
      if (w(k0).sign() != tgt.direction(k0).sign()) return false;
      found = j;
    }
    if (found < 0) return false;
    image[i] = found;
  }
  std::vector<bool> hit(n, false);
  for (int i = 0; i < n; ++i) {
    if (hit[image[i]]) return false;
    hit[image[i]] = true;
  }
  return true;
}

namespace {

// exact integer floor/ceil of an NFE value
Int nfe_floor(const NFE& v) {
  if (v.is_rational()) return floor_rat(v.rational_value());
  while (true) {
    QInterval e = v.enclosure();
    Int fl = floor_rat(e.lo), fh = floor_rat(e.hi);
    if (fl == fh) return fl;
    v.refine_field();
  }
}

Int nfe_ceil(const NFE& v) {
  if (v.is_rational()) return ceil_rat(v.rational_value());
  return -nfe_floor(-v);
}

// 2D enumeration by columns: for each value of coordinate 0, the admissible
// range of coordinate 1 is an exact interval; only its endpoints matter for
// the hull.
std::vector<IVec> extremal_points_2d(const ConeSpec& c, const Rat& height) {
  const int n = 2;
  Rat eps(1, 1 << 20);
  Rat xmin(0), xmax(0);
  for (int i = 0; i < n; ++i) {
    QInterval e = c.ray_coord_enclosure(i, 0, eps);
    Rat el = height * e.lo, eh = height * e.hi;
    if (el < xmin) xmin = el;
    if (eh > xmax) xmax = eh;
  }
  std::vector<IVec> out;
  for (Int x0 = floor_rat(xmin); x0 <= ceil_rat(xmax); ++x0) {
    // y-range from: form_i(x) >= 0 (i = 0, 1) and <h, x> <= H
    // each is a + b*y with a, b in the ray's field (or rational for h)
    std::optional<Int> ylo, yhi;
    bool empty = false;
    auto apply_ge = [&](const NFE& aa, const NFE& bb) {
      // a + b y >= 0
      if (empty) return;
      int sb = bb.is_zero() ? 0 : bb.sign();
      if (sb == 0) {
        if (aa.sign() < 0) empty = true;
        return;
      }
      NFE bound = (-aa) / bb;
      if (sb > 0) {
        Int m = nfe_ceil(bound);
        if (!ylo || m > *ylo) ylo = m;
      } else {
        Int m = nfe_floor(bound);
        if (!yhi || m < *yhi) yhi = m;
      }
    };
    for (int i = 0; i < n; ++i) {
      const auto& ray = c.rays[i];
      NFE aa = Rat(x0) * ray.form(0);
      NFE bb = ray.form(1);
      apply_ge(aa, bb);
    }
    // height: h0 x0 + h1 y <= H  ->  (H - h0 x0) - h1 y >= 0
    if (c.height_q) {
      Rat a = height - (*c.height_q)(0) * Rat(x0);
      Rat b = -(*c.height_q)(1);
      apply_ge(NFE(a), NFE(b));
    } else {
      NFE a = NFE::from_rat(c.common_field, height) - Rat(x0) * (*c.height_f)(0);
      NFE b = -(*c.height_f)(1);
      apply_ge(a, b);
    }
    if (empty || !ylo || !yhi || *ylo > *yhi) continue;
    auto push = [&](const Int& y) {
      IVec p(2);
      p(0) = x0;
      p(1) = y;
      if (sign(gcd_vec(p)) != 0) out.push_back(p);
    };
    if (sign(x0) == 0 && sign(*ylo) <= 0 && sign(*yhi) >= 0) {
      // the origin splits the column into two sub-ranges
      if (sign(*ylo) < 0) {
        push(*ylo);
        push(Int(-1));
      }
      if (sign(*yhi) > 0) {
        push(*yhi);
        push(Int(1));
      }
    } else {
      push(*ylo);
      push(*yhi);
    }
  }
  std::sort(out.begin(), out.end(), [](const IVec& a, const IVec& b) {
    for (int i = 0; i < 2; ++i)
      if (a(i) != b(i)) return a(i) < b(i);
    return false;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const IVec& a, const IVec& b) { return a == b; }),
            out.end());
  return out;
}

struct CertContext {
  const ConeSpec* cone;
  Rat height;
  // invariant-patch data: eigenvalues per ray and translate range
  bool invariant = false;
  int jmin = 0, jmax = 0;
};

bool certify_face(const CertContext& ctx, const IVec& u, const Int& level) {
  if (sign(level) <= 0) return false;
  const ConeSpec& c = *ctx.cone;
  const int n = c.dimension;
  std::vector<NFE> s(n);
  for (int i = 0; i < n; ++i) {
    const auto& ray = c.rays[i];
    NFE acc = NFE::from_rat(ray.field, Rat(0));
    for (int k = 0; k < n; ++k) acc = acc + Rat(u(k)) * ray.direction(k);
    if (acc.sign() <= 0) return false;
    s[i] = acc;
  }
  if (!ctx.invariant) {
    for (int i = 0; i < n; ++i) {
      NFE margin = Rat(ctx.height) * s[i] - NFE::from_rat(c.rays[i].field, Rat(level));
      if (margin.sign() < 0) return false;
    }
    return true;
  }
  // invariant patch: certified if for some translate j every generator obeys
  // H <u, w_i> >= level * lambda_i^(-j)
  for (int j = ctx.jmin; j <= ctx.jmax; ++j) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const auto& ray = c.rays[i];
      if (!ray.eigenvalue) throw Error("NotInvariant", "ray has no eigenvalue");
      NFE lam = *ray.eigenvalue;
      NFE lamp = NFE::from_rat(ray.field, Rat(1));
      int e = j >= 0 ? j : -j;
      NFE base = j >= 0 ? lam.inverse() : lam;
      for (int t = 0; t < e; ++t) lamp = lamp * base;
      NFE margin = Rat(ctx.height) * s[i] - Rat(level) * lamp;
      if (margin.sign() < 0) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

SailPatch build_patch(const ConeSpec& c, const Rat& height,
                      const std::vector<IVec>& pts, const CertContext& ctx) {
  if (pts.empty()) throw Error("EmptyPatch", "no cone points at this height");
  hull::Polytope poly = hull::convex_hull(pts);
  SailPatch patch;
  patch.cone = c;
  patch.height = height;
  // compact vertex list
  std::map<int, int> remap;
  for (int v : poly.vertices) {
    remap[v] = static_cast<int>(patch.vertices.size());
    patch.vertices.push_back(poly.points[v]);
  }
  for (const auto& f : poly.facets) {
    PatchFace pf;
    pf.normal = f.normal;
    pf.level = f.level;
    for (int v : f.cycle) pf.cycle.push_back(remap[v]);
    pf.sail_candidate = sign(f.level) > 0;
    pf.certified = pf.sail_candidate && certify_face(ctx, f.normal, f.level);
    patch.faces.push_back(pf);
  }
  // sail edges: 1-faces of certified faces
  std::set<std::array<int, 2>> es;
  for (const auto& f : patch.faces) {
    if (!f.certified) continue;
    const int k = static_cast<int>(f.cycle.size());
    for (int i = 0; i < k; ++i) {
      int a = f.cycle[i], b = f.cycle[(i + 1) % k];
      if (k == 2 && i == 1) break;  // 2D faces are single edges
      es.insert({std::min(a, b), std::max(a, b)});
    }
  }
  patch.edges.assign(es.begin(), es.end());
  // complete vertices: every incident face certified (and at least one)
  patch.vertex_complete.assign(patch.vertices.size(), false);
  for (size_t v = 0; v < patch.vertices.size(); ++v) {
    auto fs = patch.faces_at(static_cast<int>(v));
    bool all = !fs.empty();
    for (int f : fs) all = all && patch.faces[f].certified;
    patch.vertex_complete[v] = all;
  }
  return patch;
}

}  // namespace

SailPatch sail_patch(const ConeSpec& c, const Rat& height) {
  CertContext ctx{&c, height, false, 0, 0};
  std::vector<IVec> pts;
  if (c.dimension == 2) {
    pts = extremal_points_2d(c, height);
  } else {
    pts = cone::enumerate_cone_points(c, height);
  }
  return build_patch(c, height, pts, ctx);
}

SailPatch invariant_sail_patch(const IMat& a, const ConeSpec& c, int k,
                               const Rat& base_height) {
  if (!preserves_cone(a, c))
    throw Error("NotInvariant", "matrix does not preserve the cone");
  // require the operator to fix each ray (positive eigenray scaling)
  for (int i = 0; i < c.dimension; ++i)
    if (!c.rays[i].eigenvalue)
      throw Error("NotInvariant",
                  "invariant patches need eigencone ray data");
  std::vector<IVec> base = cone::enumerate_cone_points(c, base_height);
  if (base.empty()) throw Error("EmptyPatch", "empty base enumeration");
  IMat ainv = unimodular_inverse(a);
  std::set<std::vector<std::string>> seen;
  std::vector<IVec> pts;
  auto add_all = [&](const std::vector<IVec>& vs) {
    for (const IVec& v : vs) {
      std::vector<std::string> key;
      for (Eigen::Index i = 0; i < v.size(); ++i) key.push_back(v(i).get_str());
      if (seen.insert(key).second) pts.push_back(v);
    }
  };
  // j = 0 block, then forward powers, then one backward power
  add_all(base);
  std::vector<IVec> cur = base;
  for (int j = 1; j <= k + 1; ++j) {
    for (IVec& v : cur) v = a * v;
    add_all(cur);
  }
  cur = base;
  for (IVec& v : cur) v = ainv * v;
  add_all(cur);

  CertContext ctx{&c, base_height, true, -1, k + 1};
  SailPatch patch = build_patch(c, base_height, pts, ctx);
  patch.invariant = InvariantData{a, k, base_height};
  return patch;
}

}  // namespace sailkit::sail
