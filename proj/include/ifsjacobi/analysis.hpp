#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ifsjacobi/jacobi_matrix.hpp"

namespace ifsjacobi {

// Least-squares fit of log(values) against log(n) over the window
// lo <= n <= hi, where values[i] belongs to abscissa n = i + 1.
struct PowerlawFit {
  double exponent = 0.0;       // slope in log-log coordinates
  double log_amplitude = 0.0;  // intercept: log(values) ~ log_amplitude + exponent*log(n)
  double rms_residual = 0.0;
  std::size_t count = 0;  // points actually used
};

// Requires 1 <= lo <= hi <= values.size() and at least two window points
// (EmptyWindow otherwise); every window value must be positive
// (InvalidArgument otherwise).
PowerlawFit powerlaw_fit(std::span<const double> values, std::size_t lo, std::size_t hi);

struct NevaiReport {
  double a_limit = 0.0;
  double b_limit = 0.0;
  // deviations[i] = |a_n - a_limit| + |b_n - b_limit| at n = i + 1, and
  // partial_sums[i] is its running sum; both have size() - 1 entries.
  std::vector<double> deviations;
  std::vector<double> partial_sums;
  // Power-law fit of the deviations over the tail window
  // [max(1, len/10), len], skipping entries that are exactly zero.  When the
  // window has fewer than two nonzero entries the exponent is reported as 0
  // and summable_trend reflects whether the window is identically zero.
  double fitted_exponent = 0.0;
  bool summable_trend = false;  // fitted_exponent < -1 when the fit ran
};

// Requires m.size() >= 2 and finite limits.
NevaiReport nevai_report(const JacobiMatrix& m, double a_limit, double b_limit);

struct CapacityReport {
  // estimates[i] = -(1/n) * sum_{j=1..n} log b_j at n = i + 1 (size() - 1
  // entries); exp(-final_estimate) estimates the logarithmic capacity of the
  // essential support.
  std::vector<double> estimates;
  double final_estimate = 0.0;
  // Filled by the two-argument overload: the same estimate for the
  // second-factor matrix and the interval it brackets for the fixed point,
  // [sigma_estimate - log(1/(1-delta)), sigma_estimate] in -log capacity.
  // The fixed-point support contains the factor support, so its capacity can
  // only grow (the estimate can only drop), and the drop is limited by the
  // norming-constant ratio, which the scaling triangles keep below
  // (1-delta)^{-n} at every order.
  bool has_bounds = false;
  double sigma_estimate = 0.0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
};

// Requires m.size() >= 2 (at least one off-diagonal entry).
CapacityReport capacity_report(const JacobiMatrix& m);
// Additionally requires sigma.size() >= 2 and delta in [0, 1).
CapacityReport capacity_report(const JacobiMatrix& m, const JacobiMatrix& sigma,
                               double delta);

}  // namespace ifsjacobi
