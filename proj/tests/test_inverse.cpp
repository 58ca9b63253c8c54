#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <vector>

#include "ifsjacobi/closure.hpp"
#include "ifsjacobi/core.hpp"
#include "ifsjacobi/discrete_measure.hpp"
#include "ifsjacobi/error.hpp"
#include "ifsjacobi/inverse.hpp"
#include "ifsjacobi/jacobi_matrix.hpp"

using ifsjacobi::Error;
using ifsjacobi::InverseResult;
using ifsjacobi::JacobiMatrix;

TEST_CASE("ratio zero deconvolution returns the target itself") {
  const JacobiMatrix leb = ifsjacobi::jacobi_lebesgue(10);
  const InverseResult result = ifsjacobi::invert(leb, 0.0, 10);
  CHECK(result.feasible_size == 10);
  CHECK(!result.terminated_early);
  CHECK(ifsjacobi::frobenius_distance(result.sigma_jacobi, leb) < 1e-13);
}

TEST_CASE("deconvolution undoes the invariant-measure construction") {
  const std::size_t n = 12;
  const JacobiMatrix sigma = ifsjacobi::jacobi_lebesgue(n);
  const JacobiMatrix mu = ifsjacobi::closure(sigma, 0.2, n);
  const InverseResult result = ifsjacobi::invert(mu, 0.2, n);
  CHECK(result.feasible_size == n);
  CHECK(result.requested_size == n);
  CHECK(!result.terminated_early);
  CHECK(ifsjacobi::frobenius_distance(result.sigma_jacobi, sigma) < 1e-10);
}

TEST_CASE("an exactly finite factor is recovered when the target stops at its size") {
  // Uniform measure on [-1,1] is the invariant measure of the two symmetric
  // unit atoms at ratio 1/2.  A two-row target carries no b_2, so the solve
  // recovers the complete two-atom block.
  const JacobiMatrix mu2 = ifsjacobi::jacobi_lebesgue(2);
  const InverseResult full = ifsjacobi::invert(mu2, 0.5, 2);
  CHECK(full.feasible_size == 2);
  CHECK(!full.terminated_early);
  CHECK(std::abs(full.sigma_jacobi.a(0)) < 1e-14);
  CHECK(std::abs(full.sigma_jacobi.a(1)) < 1e-14);
  CHECK(full.sigma_jacobi.b(1) == doctest::Approx(1.0).epsilon(1e-13));

  // With a deeper target the rank-two factor fails the b_2 feasibility test,
  // which is reported as an early stop at step 1.
  const InverseResult stopped = ifsjacobi::invert(ifsjacobi::jacobi_lebesgue(10), 0.5, 6);
  CHECK(stopped.terminated_early);
  CHECK(stopped.feasible_size == 1);
  CHECK(stopped.sigma_jacobi.size() == 1);
}

TEST_CASE("early stops are prefix consistent") {
  const JacobiMatrix mu = ifsjacobi::fibonacci_jacobi(60);
  const double delta = 0.2;
  const InverseResult big = ifsjacobi::invert(mu, delta, 59);
  REQUIRE(big.terminated_early);
  REQUIRE(big.feasible_size >= 1);
  const std::size_t nhat = big.feasible_size;

  const InverseResult again = ifsjacobi::invert(mu, delta, nhat);
  CHECK(!again.terminated_early);
  CHECK(again.feasible_size == nhat);
  CHECK(again.sigma_jacobi == big.sigma_jacobi);
}

TEST_CASE("fibonacci matrix follows the substitution word") {
  const JacobiMatrix m = ifsjacobi::fibonacci_jacobi(9);
  const std::vector<double> expect = {0.4, 0.5, 0.4, 0.4, 0.5, 0.4, 0.5, 0.4};
  REQUIRE(m.size() == 9);
  for (std::size_t j = 0; j < 9; ++j) CHECK(m.a(j) == 0.0);
  for (std::size_t j = 1; j < 9; ++j) CHECK(m.b(j) == expect[j - 1]);
  CHECK_THROWS_AS(ifsjacobi::fibonacci_jacobi(0), Error);
  CHECK(ifsjacobi::fibonacci_jacobi(2, 0.25, 0.75).b(1) == 0.25);
}

TEST_CASE("frontier brackets are feasible below and infeasible above") {
  const JacobiMatrix mu = ifsjacobi::fibonacci_jacobi(41);
  const std::vector<std::size_t> rows = {8, 16, 32};
  const auto frontier = ifsjacobi::delta_frontier(mu, rows, 1e-2);
  REQUIRE(frontier.points.size() == 3);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& pt = frontier.points[i];
    CHECK(pt.n == rows[i]);
    CHECK(pt.lower <= pt.delta_n);
    CHECK(pt.delta_n <= pt.upper);
    if (pt.lower < pt.upper) {
      CHECK(ifsjacobi::invert(mu, pt.lower, pt.n).feasible_size == pt.n);
      CHECK(ifsjacobi::invert(mu, pt.upper, pt.n).feasible_size < pt.n);
      CHECK(pt.upper - pt.lower <= 1e-2 * pt.lower * 1.0001);
    }
  }
  // Feasibility at a deeper truncation implies feasibility of its prefix, so
  // the frontier cannot increase with n.
  CHECK(frontier.points[0].delta_n >= frontier.points[1].delta_n * (1.0 - 2e-2));
  CHECK(frontier.points[1].delta_n >= frontier.points[2].delta_n * (1.0 - 2e-2));
}

TEST_CASE("inverse argument validation") {
  const JacobiMatrix leb = ifsjacobi::jacobi_lebesgue(5);
  CHECK_THROWS_AS(ifsjacobi::invert(leb, 0.5, 6), Error);
  CHECK_THROWS_AS(ifsjacobi::invert(leb, 1.0, 5), Error);
  CHECK_THROWS_AS(ifsjacobi::delta_frontier(leb, {}, 1e-2), Error);
  CHECK_THROWS_AS(ifsjacobi::delta_frontier(leb, {6}, 1e-2), Error);
  CHECK_THROWS_AS(ifsjacobi::delta_frontier(leb, {4}, 0.0), Error);
}
