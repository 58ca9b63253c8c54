#pragma once

#include <cstddef>
#include <vector>

#include "ifsjacobi/jacobi_matrix.hpp"

namespace ifsjacobi {

struct InverseResult {
  // Recovered second-factor Jacobi matrix, of size feasible_size.
  JacobiMatrix sigma_jacobi;
  // Number of rows recovered before the feasibility test failed (== requested
  // size when the whole solve succeeded).
  std::size_t feasible_size = 0;
  std::size_t requested_size = 0;
  // true exactly when feasible_size < requested_size.
  bool terminated_early = false;
};

// Deconvolution: recover sigma such that mu is the fixed point
// mu = convolve(sigma, mu, delta).  Step n of the solve needs rows 0..n of mu
// plus b_{n+1}(mu) when available, so mu.size() >= n is required and the last
// off-diagonal feasibility test is skipped when mu carries no b_n.  Stops at
// the first step whose recovered b^2(sigma) is not positive beyond rounding
// noise; the rows already recovered are returned unchanged.
InverseResult invert(const JacobiMatrix& mu, double delta, std::size_t n);

struct FrontierPoint {
  std::size_t n = 0;
  double delta_n = 0.0;  // midpoint of the final bracket
  double lower = 0.0;    // feasible end of the bracket
  double upper = 0.0;    // infeasible end (== lower == delta_n when capped)
};

struct FeasibilityFrontier {
  std::vector<FrontierPoint> points;
  double tol_rel = 0.0;
};

// Largest delta for which invert(mu, delta, n) completes all n steps, located
// by bisection in log(delta) down to relative bracket width tol_rel.  The
// search starts from the bracket (0, 0.999]; a target feasible at 0.999 is
// reported with delta_n = lower = upper = 0.999.  Feasibility is monotone in
// delta for the targets of interest, and each n is probed independently.
// Requires mu.size() >= max(n_values) and tol_rel in (0, 1).
FeasibilityFrontier delta_frontier(const JacobiMatrix& mu,
                                   const std::vector<std::size_t>& n_values,
                                   double tol_rel = 1e-3);

// Jacobi matrix with zero diagonal and off-diagonals read from the Fibonacci
// substitution word over {A, B} (A -> AB, B -> A, seed A): b_j = value_a when
// the j-th letter is A, value_b otherwise, j = 1..n-1.
JacobiMatrix fibonacci_jacobi(std::size_t n, double value_a = 0.4, double value_b = 0.5);

}  // namespace ifsjacobi
