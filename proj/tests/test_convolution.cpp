#include <doctest.h>

#include <cmath>
#include <cstddef>

#include "ifsjacobi/closure.hpp"
#include "ifsjacobi/convolution.hpp"
#include "ifsjacobi/core.hpp"
#include "ifsjacobi/discrete_measure.hpp"
#include "ifsjacobi/error.hpp"
#include "ifsjacobi/jacobi_matrix.hpp"
#include "support/oracles.hpp"

using ifsjacobi::DiscreteMeasure;
using ifsjacobi::Error;
using ifsjacobi::ErrorKind;
using ifsjacobi::FixpointConfig;
using ifsjacobi::JacobiMatrix;

namespace {

DiscreteMeasure two_atom() {
  return DiscreteMeasure({{-1.0, 0.5}, {1.0, 0.5}});
}

}  // namespace

TEST_CASE("ratio zero returns the sigma factor") {
  const JacobiMatrix leb = ifsjacobi::jacobi_lebesgue(10);
  const JacobiMatrix out = ifsjacobi::convolve(leb, two_atom(), 0.0, 10);
  CHECK(ifsjacobi::frobenius_distance(out, leb) < 1e-15);
}

TEST_CASE("two finite factors produce the exact three-atom image") {
  // (sigma x eta)/2 + /2 of two symmetric unit atoms lives on {-1, 0, 1} with
  // weights {1/4, 1/2, 1/4}: both off-diagonals are 1/sqrt(2).
  const JacobiMatrix out = ifsjacobi::convolve(two_atom(), two_atom(), 0.5, 3);
  CHECK(std::abs(out.a(0)) < 1e-15);
  CHECK(std::abs(out.a(1)) < 1e-15);
  CHECK(std::abs(out.a(2)) < 1e-15);
  CHECK(out.b(1) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(out.b(2) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));

  // The image has rank three, so a fourth row cannot exist.
  CHECK_THROWS_AS(ifsjacobi::convolve(two_atom(), two_atom(), 0.5, 4), Error);
  try {
    ifsjacobi::convolve(two_atom(), two_atom(), 0.5, 4);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateStep);
  }
}

TEST_CASE("convolution moments match the binomial transport oracle") {
  const std::size_t pmax = 8;
  const DiscreteMeasure sigma = two_atom();
  const JacobiMatrix eta = ifsjacobi::jacobi_lebesgue(12);
  const JacobiMatrix out = ifsjacobi::convolve(sigma, eta, 0.3, 8);

  const auto sig_m = oracles::atom_moments(sigma, pmax);
  const auto eta_m = oracles::moments_from_jacobi(eta, pmax);
  const auto expect = oracles::convolved_moments(sig_m, eta_m, 0.3);
  const auto got = oracles::moments_from_jacobi(out, pmax);
  for (std::size_t p = 0; p <= pmax; ++p) {
    CHECK(std::abs(got[p] - expect[p]) < 1e-12);
  }
}

TEST_CASE("swapping factors and mirroring the ratio agree") {
  const JacobiMatrix leb = ifsjacobi::jacobi_lebesgue(12);
  const JacobiMatrix lhs = ifsjacobi::convolve(two_atom(), leb, 0.3, 10);
  const JacobiMatrix rhs = ifsjacobi::convolve(leb, two_atom(), 0.7, 10);
  CHECK(ifsjacobi::frobenius_distance(lhs, rhs) < 1e-12);
}

TEST_CASE("fixpoint iteration converges to the one-sweep invariant matrix") {
  // Start from the uniform measure, converge to the delta = 0.3 Cantor
  // matrix (the uniform matrix is itself the fixed point at delta = 1/2, so
  // that ratio would converge in a single sweep).
  const std::size_t n = 16;
  FixpointConfig config;
  config.record_trajectory = true;
  const auto result =
      ifsjacobi::fixpoint(two_atom(), 0.3, n, ifsjacobi::jacobi_lebesgue(n), config);
  CHECK(result.report.converged);
  CHECK(result.report.trajectory.size() == result.report.iterations + 1);

  const JacobiMatrix direct = ifsjacobi::closure_atoms(two_atom(), 0.3, n);
  CHECK(ifsjacobi::frobenius_distance(result.jacobi, direct) < 1e-11);

  // Geometric decay: once the transient is over, each iteration shrinks the
  // update by at least a fixed factor.
  const auto& d = result.report.distances;
  REQUIRE(d.size() >= 6);
  for (std::size_t m = 3; m + 1 < d.size(); ++m) {
    CHECK(d[m + 1] <= 0.9 * d[m] + 1e-14);
  }
}

TEST_CASE("fixpoint non-convergence is reported rather than thrown") {
  FixpointConfig config;
  config.max_iterations = 2;
  config.tolerance = 1e-300;
  const auto result =
      ifsjacobi::fixpoint(two_atom(), 0.3, 8, ifsjacobi::jacobi_lebesgue(8), config);
  CHECK(!result.report.converged);
  CHECK(result.report.iterations == 2);
  CHECK(result.report.distances.size() == 2);
}

TEST_CASE("undersized inputs are rejected") {
  const JacobiMatrix leb = ifsjacobi::jacobi_lebesgue(4);
  CHECK_THROWS_AS(ifsjacobi::convolve(leb, leb, 0.5, 6), Error);
  CHECK_THROWS_AS(ifsjacobi::fixpoint(two_atom(), 0.5, 6, leb), Error);
  CHECK(ifsjacobi::default_fixpoint_tolerance(4) == doctest::Approx(2e-13));
}
