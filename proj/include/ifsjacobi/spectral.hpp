#pragma once

#include <cstddef>
#include <vector>

#include "ifsjacobi/convolution.hpp"
#include "ifsjacobi/discrete_measure.hpp"
#include "ifsjacobi/jacobi_matrix.hpp"

namespace ifsjacobi {

// n-point Gauss rule: nodes strictly increasing, weights positive, summing to
// the total mass 1.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }
};

// Nodes = eigenvalues of the leading n x n block, weights = squared first
// components of the normalized eigenvectors.  Uses an implicit-shift QL sweep
// specialized to symmetric tridiagonal matrices that tracks only the first
// eigenvector row.
GaussRule gauss_rule(const JacobiMatrix& m, std::size_t n);

// The rule of an exactly-finite measure is the measure itself.
GaussRule rule_from_atoms(const DiscreteMeasure& m);

// Quadrature for the image of sigma x eta under s -> delta*s + (1-delta)*beta:
// one atom per node pair.  The factor rules may have different orders; with
// orders (p, q) the rule integrates exactly every polynomial of degree
// <= 2*min(p, q) - 1 (and every polynomial at all in a factor whose rule is
// the exact finite measure).
DiscreteMeasure product_rule(const GaussRule& eta_rule, const GaussRule& sigma_rule,
                             double delta);

// Spectral route for the same map as convolve(): Gauss rules of order
// min(n, input size) per factor, the product rule, then Lanczos
// retridiagonalization of the resulting discrete measure.
JacobiMatrix convolve_spectral(const JacobiMatrix& sigma, const JacobiMatrix& eta,
                               double delta, std::size_t n);
JacobiMatrix convolve_spectral(const DiscreteMeasure& sigma, const JacobiMatrix& eta,
                               double delta, std::size_t n);
JacobiMatrix convolve_spectral(const JacobiMatrix& sigma, const DiscreteMeasure& eta,
                               double delta, std::size_t n);
JacobiMatrix convolve_spectral(const DiscreteMeasure& sigma, const DiscreteMeasure& eta,
                               double delta, std::size_t n);

// fixpoint() with the spectral convolution step.
FixpointResult fixpoint_spectral(const JacobiMatrix& sigma, double delta, std::size_t n,
                                 const JacobiMatrix& init, const FixpointConfig& config = {});
FixpointResult fixpoint_spectral(const DiscreteMeasure& sigma, double delta, std::size_t n,
                                 const JacobiMatrix& init, const FixpointConfig& config = {});

}  // namespace ifsjacobi
