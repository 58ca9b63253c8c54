#pragma once

#include <cstddef>
#include <vector>

#include "ifsjacobi/discrete_measure.hpp"
#include "ifsjacobi/jacobi_matrix.hpp"

namespace ifsjacobi {

// Jacobi matrix of the image of sigma x eta under s -> delta*s + (1-delta)*beta,
// computed to n rows through the triangular scaling recursion.  Dense inputs
// must cover n; a DiscreteMeasure argument marks an exactly-finite factor
// (its coefficients vanish past the atom count, and on the sigma side the
// triangles shrink to O(atoms) columns).
JacobiMatrix convolve(const JacobiMatrix& sigma, const JacobiMatrix& eta, double delta,
                      std::size_t n);
JacobiMatrix convolve(const DiscreteMeasure& sigma, const JacobiMatrix& eta, double delta,
                      std::size_t n);
JacobiMatrix convolve(const JacobiMatrix& sigma, const DiscreteMeasure& eta, double delta,
                      std::size_t n);
JacobiMatrix convolve(const DiscreteMeasure& sigma, const DiscreteMeasure& eta, double delta,
                      std::size_t n);

struct FixpointConfig {
  double tolerance = 0.0;  // <= 0 picks the default 1e-13 * sqrt(n)
  std::size_t max_iterations = 200;
  bool record_trajectory = false;
};

struct FixpointReport {
  std::size_t iterations = 0;
  bool converged = false;
  std::vector<double> distances;          // Frobenius distance per iteration
  std::vector<JacobiMatrix> trajectory;   // filled only when record_trajectory
};

struct FixpointResult {
  JacobiMatrix jacobi;
  FixpointReport report;
};

// Iterates J_m = convolve(sigma, J_{m-1}) from J_init until successive
// truncations are closer than the tolerance.  Non-convergence within
// max_iterations is reported, not thrown.
FixpointResult fixpoint(const JacobiMatrix& sigma, double delta, std::size_t n,
                        const JacobiMatrix& init, const FixpointConfig& config = {});
FixpointResult fixpoint(const DiscreteMeasure& sigma, double delta, std::size_t n,
                        const JacobiMatrix& init, const FixpointConfig& config = {});

double default_fixpoint_tolerance(std::size_t n);

}  // namespace ifsjacobi
