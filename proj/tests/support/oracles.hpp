#pragma once

// Cross-check helpers for the test suite.  Everything here is computed by a
// route independent of the library kernels under test: power moments through
// matrix-vector iteration, binomial moment transport, and plain forward
// recurrences.

#include <cstddef>
#include <vector>

#include "ifsjacobi/discrete_measure.hpp"
#include "ifsjacobi/jacobi_matrix.hpp"

namespace oracles {

// Pascal-triangle row table: result[p][j] = C(p, j) as double, 0 <= j <= p <= pmax.
std::vector<std::vector<double>> binomial_table(std::size_t pmax);

// Power moments m_0..m_pmax of the measure represented by m, via repeated
// tridiagonal products (J^p e0)_0.  Exact (up to rounding) whenever
// m.size() >= pmax/2 + 1; requires m.size() >= pmax/2 + 1.
std::vector<double> moments_from_jacobi(const ifsjacobi::JacobiMatrix& m, std::size_t pmax);

// Power moments of a finite atomic measure.
std::vector<double> atom_moments(const ifsjacobi::DiscreteMeasure& m, std::size_t pmax);

// Moments of the image of sigma x eta under s -> delta*s + (1-delta)*beta,
// from the factor moments via the binomial expansion.
std::vector<double> convolved_moments(const std::vector<double>& sigma_moments,
                                      const std::vector<double>& eta_moments, double delta);

// Moments of the fixed point mu = Phi(sigma; mu) for delta in [0, 1), from the
// sigma moments alone: the degree-p binomial relation determines m_p(mu) once
// m_0..m_{p-1}(mu) are known.
std::vector<double> ifs_moments(const std::vector<double>& sigma_moments, double delta);

// Orthonormal-polynomial values p_0(x)..p_{m.size()-1}(x) by the forward
// three-term recurrence.
std::vector<double> eval_orthonormal(const ifsjacobi::JacobiMatrix& m, double x);

}  // namespace oracles
