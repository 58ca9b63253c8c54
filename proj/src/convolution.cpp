#include "ifsjacobi/convolution.hpp"

#include <cmath>
#include <utility>

#include "ifsjacobi/core.hpp"
#include "ifsjacobi/error.hpp"
#include "ifsjacobi/scaling.hpp"

namespace ifsjacobi {

namespace {

// Finite measures enter the recursion as their full square Jacobi block plus
// the knowledge that every later coefficient vanishes.
JacobiMatrix full_block(const DiscreteMeasure& m) {
  return jacobi_from_discrete(m, m.size());
}

FixpointResult run_fixpoint(const JacobiMatrix& sigma, bool sigma_finite, double delta,
                            std::size_t n, const JacobiMatrix& init,
                            const FixpointConfig& config) {
  if (init.size() < n) {
    throw Error(ErrorKind::IndexOutOfRange, "initial truncation does not cover requested size");
  }
  const double tol = config.tolerance > 0.0 ? config.tolerance : default_fixpoint_tolerance(n);

  FixpointResult result{init.leading(n), {}};
  if (config.record_trajectory) result.report.trajectory.push_back(result.jacobi);
  for (std::size_t m = 1; m <= config.max_iterations; ++m) {
    auto rec = scaling::Recursion::for_convolve(sigma, sigma_finite, result.jacobi, false,
                                                delta, n);
    rec.run();
    JacobiMatrix next = rec.output();
    const double d = frobenius_distance(next, result.jacobi);
    result.jacobi = std::move(next);
    result.report.distances.push_back(d);
    result.report.iterations = m;
    if (config.record_trajectory) result.report.trajectory.push_back(result.jacobi);
    if (d <= tol) {
      result.report.converged = true;
      break;
    }
  }
  return result;
}

}  // namespace

double default_fixpoint_tolerance(std::size_t n) {
  return 1e-13 * std::sqrt(static_cast<double>(n));
}

JacobiMatrix convolve(const JacobiMatrix& sigma, const JacobiMatrix& eta, double delta,
                      std::size_t n) {
  auto rec = scaling::Recursion::for_convolve(sigma, false, eta, false, delta, n);
  rec.run();
  return rec.output();
}

JacobiMatrix convolve(const DiscreteMeasure& sigma, const JacobiMatrix& eta, double delta,
                      std::size_t n) {
  auto rec = scaling::Recursion::for_convolve(full_block(sigma), true, eta, false, delta, n);
  rec.run();
  return rec.output();
}

JacobiMatrix convolve(const JacobiMatrix& sigma, const DiscreteMeasure& eta, double delta,
                      std::size_t n) {
  auto rec = scaling::Recursion::for_convolve(sigma, false, full_block(eta), true, delta, n);
  rec.run();
  return rec.output();
}

JacobiMatrix convolve(const DiscreteMeasure& sigma, const DiscreteMeasure& eta, double delta,
                      std::size_t n) {
  auto rec =
      scaling::Recursion::for_convolve(full_block(sigma), true, full_block(eta), true, delta, n);
  rec.run();
  return rec.output();
}

FixpointResult fixpoint(const JacobiMatrix& sigma, double delta, std::size_t n,
                        const JacobiMatrix& init, const FixpointConfig& config) {
  return run_fixpoint(sigma, false, delta, n, init, config);
}

FixpointResult fixpoint(const DiscreteMeasure& sigma, double delta, std::size_t n,
                        const JacobiMatrix& init, const FixpointConfig& config) {
  return run_fixpoint(full_block(sigma), true, delta, n, init, config);
}

}  // namespace ifsjacobi
