// Simplicial cones with exact predicates. A cone is given by n generators
// whose coordinates live in real number fields; the dual forms L_i satisfy
// <L_i, w_j> = delta_ij, so the height functional h = sum L_i has
// <h, w_i> = 1 for every generator. For eigencones of integer matrices the
// generators are conjugate embeddings of one symbolic eigenvector formula and
// h is exactly rational (a field trace).
#ifndef SAILKIT_CONE_HPP
#define SAILKIT_CONE_HPP

#include "sailkit/eigen_decomp.hpp"
#include "sailkit/intmat.hpp"

#include <optional>
#include <vector>

namespace sailkit::cone {

struct Ray {
  NumberFieldPtr field;
  FVec direction;           // generator coordinates over `field`
  FVec form;                // dual form over `field`, <form, direction> = 1
  std::optional<NFE> eigenvalue;  // for eigencones: A direction = eigenvalue * direction
};

struct FactorGroup {
  poly::IPoly factor;       // irreducible factor of the source char poly
  std::vector<int> ray_indices;
};

enum class Where { Interior, Boundary, Exterior };

struct ConeSpec {
  int dimension = 0;
  std::vector<Ray> rays;
  std::optional<QVec> height_q;   // rational height functional when available
  std::optional<FVec> height_f;   // single-field height otherwise
  NumberFieldPtr common_field;    // non-null when all rays share one field
  std::optional<IMat> source_matrix;
  std::vector<int> ray_selection;
  std::vector<FactorGroup> groups;

  int form_sign(int i, const IVec& x) const;
  NFE form_value(int i, const IVec& x) const;
  Where classify(const IVec& x) const;
  /// sign(<h, x> - H), exact.
  int height_compare(const IVec& x, const Rat& bound) const;
  Rat height_rational(const IVec& x) const;  // requires height_q
  bool has_rational_height() const { return height_q.has_value(); }

  /// Outer rational enclosure of generator coordinates, refined to `eps`.
  QInterval ray_coord_enclosure(int ray, int coord, const Rat& eps) const;
};

/// Eigencone of an integer matrix with |det| = 1. ray_selection indexes the
/// ascending list of real eigenvalues; each selected eigenvalue must be real
/// with a one-dimensional eigenspace.
ConeSpec cone_from_matrix(const IMat& a, const std::vector<int>& ray_selection);

/// All real eigenvalues ascending (the index space of ray_selection).
std::vector<AlgebraicReal> real_eigenvalues(const IMat& a);

/// Cone from explicit generators over a single number field.
ConeSpec cone_from_generators(const NumberFieldPtr& k,
                              const std::vector<FVec>& generators);

/// Rational cone from integer generators.
ConeSpec cone_from_rational(const std::vector<IVec>& generators);

/// True iff no facet hyperplane of the cone contains a nonzero lattice point.
bool irrationality_check(const ConeSpec& c);

/// All nonzero lattice points x in the closed cone with <h, x> <= H,
/// lexicographically sorted.
std::vector<IVec> enumerate_cone_points(const ConeSpec& c, const Rat& height);

/// Field trace of an element of Q(theta) (sum over all conjugates).
Rat field_trace(const NFE& g);

}  // namespace sailkit::cone

#endif  // SAILKIT_CONE_HPP
