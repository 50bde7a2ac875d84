// Spectral classification of integer operators: the (P1)/(P2) properties and
// the operator classes built on them, hyperbolicity, cone invariance, the
// affine-to-linear reduction, spectral filtrations by eigenvalue modulus, the
// Jordan-cell growth probe, and the seven unit-modulus forms in dimension 3.
#ifndef SAILKIT_OPERATORS_HPP
#define SAILKIT_OPERATORS_HPP

#include "sailkit/cone.hpp"
#include "sailkit/eigen_decomp.hpp"

#include <optional>

namespace sailkit::ops {

struct PropertyFlags {
  bool p1 = false;        // no eigenvalue equals 1
  bool p2 = false;        // non-real eigenvalue moduli shared only by conjugates
  bool distinct = false;  // characteristic polynomial squarefree
  bool det_one = false;
  bool in_a0 = false;     // det 1 and P1 and P2
  bool in_a1 = false;     // in_a0 and distinct eigenvalues
};

PropertyFlags check_properties(const IMat& a);

/// Characteristic polynomial irreducible over Q with all roots real positive.
bool is_hyperbolic(const IMat& a);

/// Integer affine map x -> linear x + translation.
struct AffineMap {
  IMat linear;
  IVec translation;

  IVec apply(const IVec& x) const { return linear * x + translation; }
  AffineMap compose(const AffineMap& o) const;  // this after o
  AffineMap inverse() const;
  bool operator==(const AffineMap& o) const {
    return linear == o.linear && translation == o.translation;
  }
};

AffineMap identity_affine(int n);

/// b = (E - A)^{-1} a; requires P1. Reports NonIntegralFixedData when the
/// solution is not a lattice vector.
std::pair<IVec, IMat> linearize_affine(const AffineMap& m);

struct SpectralComponent {
  AlgebraicReal modulus_sq;
  int dimension = 0;
  /// Rational basis when available (rational eigenvalues or quadratic pairs).
  std::optional<std::vector<QVec>> rational_basis;
  /// Number-field eigenlines for simple real irrational eigenvalues.
  std::vector<std::pair<NumberFieldPtr, FVec>> field_lines;
  bool basis_available = false;
};

struct SpectralFiltration {
  std::vector<SpectralComponent> components;  // ascending modulus
  int dimension = 0;
};

SpectralFiltration spectral_filtration(const IMat& a);

struct EdgeCountReport {
  std::vector<int> counts;  // generators lying in each component
  bool matches_dimensions = false;
};

/// Counts cone generators inside each modulus component; the cone must be
/// invariant under a (each generator an eigenray, or a single component).
EdgeCountReport edge_count_in_subspaces(const IMat& a,
                                        const SpectralFiltration& f,
                                        const cone::ConeSpec& c);

struct GrowthReport {
  std::vector<std::pair<long, Rat>> ratios;  // (m, <A^m h, e> / (lambda^m m^(n-i)))
  Rat min_ratio, max_ratio;                  // over m >= burn_in
  bool bounded_positive = false;
};

/// Exact <A^m h, e_index> against lambda^m m^(n-index-1)... the probe is
/// restricted to a single Jordan cell with an integer eigenvalue.
GrowthReport jordan_growth_probe(const IMat& cell, const QVec& h, int e_index,
                                 long m_lo, long m_hi, long burn_in);

enum class UnimodularForm3 {
  Identity = 1,
  Unipotent2 = 2,
  Unipotent3 = 3,
  MinusPair = 4,
  DiagHyperbolic = 5,
  RotationFix = 6,
  RotationFlip = 7,
};

struct Classification3 {
  std::optional<UnimodularForm3> form;  // nullopt = NotUnitModulus
  std::optional<Rat> rotation_2cos;     // forms 6/7
  std::optional<poly::IPoly> hyperbolic_quadratic;  // form 5's quadratic factor
  poly::IPoly charpoly;
};

/// Matches A against the seven 3x3 real Jordan shapes with unit-modulus (or
/// eigenvalue-1 paired) spectra; anything else reports NotUnitModulus.
Classification3 classify_unimodular_3d(const IMat& a);

}  // namespace sailkit::ops

#endif  // SAILKIT_OPERATORS_HPP
