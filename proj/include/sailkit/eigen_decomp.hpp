// Exact eigen-decomposition of integer matrices: eigenvalues grouped by
// irreducible factor of the characteristic polynomial. Real eigenvalues carry
// isolating intervals and eigenvectors over their number field; complex
// conjugate pairs carry exact modulus-squared and real-trace data.
#ifndef SAILKIT_EIGEN_DECOMP_HPP
#define SAILKIT_EIGEN_DECOMP_HPP

#include "sailkit/intmat.hpp"

namespace sailkit {

struct RealEigenvalue {
  AlgebraicReal value;
  int multiplicity;
  poly::IPoly factor;
  /// Kernel basis of (A - value I) over Q(value).
  std::vector<FVec> eigenvectors;
  NumberFieldPtr field;
};

struct ComplexPairEigenvalue {
  poly::IPoly factor;
  int multiplicity;
  AlgebraicReal modulus_sq;  // alpha * conj(alpha)
  AlgebraicReal trace_re2;   // alpha + conj(alpha)
};

struct EigenDecomposition {
  poly::IPoly charpoly;
  std::vector<RealEigenvalue> reals;        // ascending by value
  std::vector<ComplexPairEigenvalue> pairs; // ascending by modulus_sq
  int dimension = 0;

  int multiplicity_sum() const;
};

EigenDecomposition eigen_decomposition(const IMat& a);

/// Exact |root|^2 and root+conj(root) values for every complex-conjugate pair
/// of roots of an irreducible polynomial (one entry per pair).
struct PairData {
  AlgebraicReal modulus_sq;
  AlgebraicReal trace_re2;
};
std::vector<PairData> complex_pair_data(const poly::IPoly& irreducible);

}  // namespace sailkit

#endif  // SAILKIT_EIGEN_DECOMP_HPP
