#pragma once

#include <cstddef>

#include "ifsjacobi/discrete_measure.hpp"
#include "ifsjacobi/jacobi_matrix.hpp"

namespace ifsjacobi {

// Jacobi matrix of the invariant measure of the affine family
// s -> delta*s + (1-delta)*beta, beta distributed by sigma, computed to n
// rows in a single self-consistent sweep (no fixed-point iteration).
JacobiMatrix closure(const JacobiMatrix& sigma, double delta, std::size_t n);

// Same, for an exactly-finite sigma with M atoms: coefficients past M vanish
// and the scaling triangles keep only M columns, so the sweep costs
// O(M * n^2) operations and O(M * n) memory.
JacobiMatrix closure_atoms(const DiscreteMeasure& sigma, double delta, std::size_t n);

}  // namespace ifsjacobi
