// Lattice invariants of segments, edge stars and faces: integer length,
// integer angle (planar), integer distance to a rational hyperplane, and the
// mixed-volume determinants of edge stars and faces.
#ifndef SAILKIT_LATTICE_GEOM_HPP
#define SAILKIT_LATTICE_GEOM_HPP

#include "sailkit/intmat.hpp"

#include <optional>
#include <vector>

namespace sailkit::lattice {

struct Segment {
  IVec a, b;
  Segment(IVec a_, IVec b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a.size() != b.size())
      throw Error("DimensionMismatch", "segment endpoints of different size");
    if (a == b) throw Error("DegenerateSegment", "segment endpoints equal");
  }
  IVec direction() const { return b - a; }
};

struct EdgeStar {
  IVec vertex;
  std::vector<IVec> edge_vectors;  // primitive, pairwise distinct
  int dimension() const { return static_cast<int>(vertex.size()); }
};

EdgeStar make_edge_star(IVec vertex, const std::vector<IVec>& raw_directions);

struct FaceRecord {
  std::vector<IVec> vertices;
  IVec normal;  // primitive integer normal of the affine hull
  Int level;    // <normal, v> = level for every vertex
};

/// Builds the record from vertices alone; the hull must be a hyperplane
/// (vertices affinely spanning dimension n-1).
FaceRecord make_face_record(std::vector<IVec> vertices);

/// v / gcd(coordinates).
IVec primitive_vector(const IVec& v);

/// Lattice points strictly inside the segment, plus one.
Int integer_length(const Segment& s);

/// Planar integer angle |det| / (len * len) between segments sharing an
/// endpoint; errors: NoCommonEndpoint, ParallelSegments.
Rat integer_angle(const Segment& s1, const Segment& s2);

/// Index of the sublattice generated by Z^n \cap aff(F) - a. Two independent
/// algorithms (HNF index and primitive-normal evaluation) are exposed; the
/// public entry cross-checks them.
Int integer_distance(const FaceRecord& f, const IVec& a);
Int integer_distance_hnf(const FaceRecord& f, const IVec& a);
Int integer_distance_normal(const FaceRecord& f, const IVec& a);

/// Sum over n-subsets of edge vectors of |det|.
Int det_edge_star(const EdgeStar& st);

/// Sum over n-subsets of the face's vertices of |det|.
Int det_face(const FaceRecord& f);

}  // namespace sailkit::lattice

#endif  // SAILKIT_LATTICE_GEOM_HPP
