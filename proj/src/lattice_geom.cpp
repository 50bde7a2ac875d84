#include "sailkit/lattice_geom.hpp"

#include <algorithm>

namespace sailkit::lattice {

IVec primitive_vector(const IVec& v) { return primitive(v); }

EdgeStar make_edge_star(IVec vertex, const std::vector<IVec>& raw) {
  EdgeStar st;
  st.vertex = std::move(vertex);
  for (const IVec& d : raw) {
    IVec p = primitive(d);
    bool dup = false;
    for (const IVec& q : st.edge_vectors)
      if (q == p) {
        dup = true;
        break;
      }
    if (!dup) st.edge_vectors.push_back(p);
  }
  if (st.edge_vectors.empty())
    throw Error("TooFewEdges", "edge star needs at least one edge");
  return st;
}

FaceRecord make_face_record(std::vector<IVec> vertices) {
  if (vertices.empty()) throw Error("TooFewVertices", "empty face");
  const Eigen::Index n = vertices[0].size();
  IMat diffs(static_cast<Eigen::Index>(vertices.size()) - 1, n);
  for (size_t i = 1; i < vertices.size(); ++i)
    diffs.row(static_cast<Eigen::Index>(i - 1)) =
        (vertices[i] - vertices[0]).transpose();
  IMat ker = kernel_lattice(diffs);
  if (ker.rows() != 1)
    throw Error("DegenerateFace",
                "vertices do not affinely span a hyperplane");
  FaceRecord f;
  f.vertices = std::move(vertices);
  f.normal = primitive(IVec(ker.row(0).transpose()));
  f.level = f.normal.dot(f.vertices[0]);
  for (const IVec& v : f.vertices)
    if (f.normal.dot(v) != f.level)
      throw Error("DegenerateFace", "vertices not coplanar");
  return f;
}

Int integer_length(const Segment& s) {
  return gcd_vec(s.direction());
}

Rat integer_angle(const Segment& s1, const Segment& s2) {
  if (s1.a.size() != 2)
    throw Error("WrongDimension", "integer angle is planar only");
  bool share = (s1.a == s2.a) || (s1.a == s2.b) || (s1.b == s2.a) ||
               (s1.b == s2.b);
  if (!share) throw Error("NoCommonEndpoint", "segments do not meet");
  IVec d1 = s1.direction(), d2 = s2.direction();
  Int det = d1(0) * d2(1) - d1(1) * d2(0);
  if (sign(det) == 0)
    throw Error("ParallelSegments", "integer angle of parallel segments is 0");
  Rat r(abs(det), integer_length(s1) * integer_length(s2));
  r.canonicalize();
  return r;
}

Int integer_distance_hnf(const FaceRecord& f, const IVec& a) {
  const Eigen::Index n = a.size();
  // direction lattice of the hyperplane <normal, x> = 0
  IMat nrow(1, n);
  nrow.row(0) = f.normal.transpose();
  IMat dirs = kernel_lattice(nrow);
  // a lattice point x0 with <normal, x0> = level: Bezout coefficients come
  // from the HNF transform of the normal as a column (its gcd is 1).
  IMat ncolm(n, 1);
  for (Eigen::Index i = 0; i < n; ++i) ncolm(i, 0) = f.normal(i);
  HnfResult hz = hnf(ncolm);  // u * normal-column = e1 (primitive normal)
  IVec x0(n);
  for (Eigen::Index i = 0; i < n; ++i) x0(i) = hz.u(0, i) * f.level;
  // generated subgroup: rows = dirs plus (x0 - a)
  IMat gens(dirs.rows() + 1, n);
  gens.topRows(dirs.rows()) = dirs;
  gens.row(dirs.rows()) = (x0 - a).transpose();
  auto idx = sublattice_index(gens);
  if (!idx) throw Error("PointOnPlane", "integer distance undefined on aff(F)");
  return *idx;
}

Int integer_distance_normal(const FaceRecord& f, const IVec& a) {
  Int d = f.level - f.normal.dot(a);
  if (sign(d) == 0)
    throw Error("PointOnPlane", "integer distance undefined on aff(F)");
  return abs(d);
}

Int integer_distance(const FaceRecord& f, const IVec& a) {
  Int d1 = integer_distance_normal(f, a);
  Int d2 = integer_distance_hnf(f, a);
  if (d1 != d2)
    throw Error("Internal", "integer distance algorithms disagree");
  return d1;
}

namespace {

Int sum_abs_dets(const std::vector<IVec>& vecs, int n) {
  const int m = static_cast<int>(vecs.size());
  if (m < n) throw Error("TooFewEdges", "need at least n vectors");
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  Int total = 0;
  while (true) {
    IMat mm(n, n);
    for (int i = 0; i < n; ++i) mm.col(i) = vecs[idx[i]];
    total += abs(det_bareiss(mm));
    int pos = n - 1;
    while (pos >= 0 && idx[pos] == m - n + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int j = pos + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
  return total;
}

}  // namespace

Int det_edge_star(const EdgeStar& st) {
  const int n = st.dimension();
  if (static_cast<int>(st.edge_vectors.size()) < n)
    throw Error("TooFewEdges", "vertex has fewer than n incident edges");
  return sum_abs_dets(st.edge_vectors, n);
}

Int det_face(const FaceRecord& f) {
  const int n = static_cast<int>(f.vertices[0].size());
  if (static_cast<int>(f.vertices.size()) < n)
    throw Error("TooFewVertices", "face has fewer than n vertices");
  return sum_abs_dets(f.vertices, n);
}

}  // namespace sailkit::lattice
