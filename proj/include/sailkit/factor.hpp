// Factorization of integer polynomials into irreducibles over Q
// (Berlekamp mod p, quadratic Hensel lifting, subset recombination).
#ifndef SAILKIT_FACTOR_HPP
#define SAILKIT_FACTOR_HPP

#include "sailkit/poly.hpp"

#include <vector>

namespace sailkit::poly {

/// Irreducible factors with multiplicities; product of factor^mult equals the
/// input up to a positive rational constant. Factors are primitive with
/// positive leading coefficient, sorted deterministically.
std::vector<std::pair<IPoly, int>> factor(const IPoly& f);

/// Factors of a squarefree primitive polynomial (each multiplicity 1).
std::vector<IPoly> factor_squarefree(const IPoly& f);

bool is_irreducible(const IPoly& f);

}  // namespace sailkit::poly

#endif  // SAILKIT_FACTOR_HPP
