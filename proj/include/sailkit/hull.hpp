// Exact convex hulls of integer point sets in dimensions 2 and 3.
// Coplanar facets are merged into maximal polygonal faces (sails genuinely
// have non-simplicial faces); face cycles list the polygon's corners only.
#ifndef SAILKIT_HULL_HPP
#define SAILKIT_HULL_HPP

#include "sailkit/intmat.hpp"

#include <vector>

namespace sailkit::hull {

struct Facet {
  IVec normal;             // inward-pointing primitive normal
  Int level;               // <normal, x> = level on the facet, >= level on hull
  std::vector<int> cycle;  // corner indices, CCW as seen from outside
};

struct Polytope {
  std::vector<IVec> points;    // deduplicated input points
  std::vector<int> vertices;   // extreme points (indices into points)
  std::vector<Facet> facets;
};

/// Full-dimensional exact hull; throws DegenerateHull when the points do not
/// affinely span the space.
Polytope convex_hull(const std::vector<IVec>& pts);

}  // namespace sailkit::hull

#endif  // SAILKIT_HULL_HPP
