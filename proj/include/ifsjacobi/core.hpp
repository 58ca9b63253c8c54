#pragma once

#include <cstddef>
#include <limits>

#include "ifsjacobi/discrete_measure.hpp"
#include "ifsjacobi/jacobi_matrix.hpp"

namespace ifsjacobi {

// Off-diagonal entries at or below this bound are treated as vanished (the
// measure ran out of support).  scale must track the magnitude of the
// quantities that produced the candidate entry.
inline double degenerate_b_threshold(double scale) {
  return 1e3 * std::numeric_limits<double>::epsilon() * (scale < 1.0 ? 1.0 : scale);
}

// Nodes closer than this merge into one atom.
inline double node_merge_threshold(double node) {
  double m = node < 0 ? -node : node;
  return 4.0 * std::numeric_limits<double>::epsilon() * (m < 1.0 ? 1.0 : m);
}

// Jacobi matrix of the uniform measure on [-1,1]: a_j = 0,
// b_j = j / sqrt(4 j^2 - 1).
JacobiMatrix jacobi_lebesgue(std::size_t n);

// Lanczos tridiagonalization of multiplication-by-x on L2(measure), started
// from the constant function, with full reorthogonalization.  Requires
// 1 <= n <= measure.size(); an exactly n-atom measure yields b_n = 0, so
// asking for more rows than atoms raises RankExceeded.
JacobiMatrix jacobi_from_discrete(const DiscreteMeasure& measure, std::size_t n);

// Frobenius norm of the difference of two equal-size truncations (symmetric
// off-diagonal entries counted twice).
double frobenius_distance(const JacobiMatrix& x, const JacobiMatrix& y);

}  // namespace ifsjacobi
