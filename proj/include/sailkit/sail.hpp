// Sail patches: the convex hull of the enumerated cone lattice points, with
// exact certification of which hull faces are genuine Klein-polyhedron faces.
//
// A hull facet (inward normal u, level c > 0, hull on <u,x> >= c, origin
// strictly outside) is certified when <u, w_i> > 0 for every generator w_i
// and H <u, w_i> >= c (with <h, w_i> = 1 normalization): no cone point above
// the enumeration height can then violate the facet.
#ifndef SAILKIT_SAIL_HPP
#define SAILKIT_SAIL_HPP

#include "sailkit/cone.hpp"
#include "sailkit/hull.hpp"

#include <array>
#include <optional>

namespace sailkit::sail {

struct PatchFace {
  IVec normal;
  Int level;
  std::vector<int> cycle;  // indices into SailPatch::vertices, CCW from outside
  bool sail_candidate = false;  // origin strictly outside the supporting plane
  bool certified = false;
};

struct InvariantData {
  IMat op;
  int translates = 0;
  Rat base_height;
};

struct SailPatch {
  cone::ConeSpec cone;
  Rat height;
  std::vector<IVec> vertices;
  std::vector<PatchFace> faces;
  std::vector<std::array<int, 2>> edges;  // sail edges (on certified faces)
  std::vector<bool> vertex_complete;
  std::optional<InvariantData> invariant;

  int find_vertex(const IVec& v) const;  // -1 if absent
  std::vector<int> faces_at(int vertex) const;
  std::vector<int> neighbors(int vertex) const;  // via sail edges
};

/// Hull-of-enumerated-points patch at the given height bound.
SailPatch sail_patch(const cone::ConeSpec& c, const Rat& height);

/// Patch built from a base enumeration and its images under powers
/// A^j, j = -1..k+1, certified with the per-translate height criterion.
SailPatch invariant_sail_patch(const IMat& a, const cone::ConeSpec& c, int k,
                               const Rat& base_height);

/// True iff a maps the set of generator rays onto itself with positive
/// scalings.
bool preserves_cone(const IMat& a, const cone::ConeSpec& c);

/// Integer inverse of a matrix with |det| = 1.
IMat unimodular_inverse(const IMat& a);

}  // namespace sailkit::sail

#endif  // SAILKIT_SAIL_HPP
