#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

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
using ifsjacobi::JacobiMatrix;

namespace {

DiscreteMeasure two_atom() {
  return DiscreteMeasure({{-1.0, 0.5}, {1.0, 0.5}});
}

DiscreteMeasure refinable_four_atom() {
  return DiscreteMeasure({{0.0, 0.125}, {1.0, 0.375}, {2.0, 0.375}, {3.0, 0.125}});
}

}  // namespace

TEST_CASE("two symmetric atoms at ratio 1/2 close to the uniform measure") {
  const JacobiMatrix out = ifsjacobi::closure_atoms(two_atom(), 0.5, 32);
  CHECK(ifsjacobi::frobenius_distance(out, ifsjacobi::jacobi_lebesgue(32)) < 1e-12);
}

TEST_CASE("invariant-measure moments match the binomial fixed-point oracle") {
  const std::size_t pmax = 10;
  const JacobiMatrix out = ifsjacobi::closure_atoms(two_atom(), 0.3, 10);
  const auto expect = oracles::ifs_moments(oracles::atom_moments(two_atom(), pmax), 0.3);
  const auto got = oracles::moments_from_jacobi(out, pmax);
  for (std::size_t p = 0; p <= pmax; ++p) {
    CHECK(std::abs(got[p] - expect[p]) < 1e-12);
  }
}

TEST_CASE("symmetric sigma forces an exactly zero diagonal") {
  const JacobiMatrix out = ifsjacobi::closure_atoms(two_atom(), 0.6, 128);
  for (std::size_t j = 0; j < out.size(); ++j) {
    CHECK(out.a(j) == 0.0);
  }
}

TEST_CASE("four-atom refinable family keeps its center and limit width") {
  const JacobiMatrix out = ifsjacobi::closure_atoms(refinable_four_atom(), 0.5, 48);
  for (std::size_t j = 0; j < out.size(); ++j) {
    CHECK(out.a(j) == doctest::Approx(1.5).epsilon(1e-12));
  }
  // Support is [0, 3], so the off-diagonals settle near 3/4.
  CHECK(out.b(47) == doctest::Approx(0.75).epsilon(2e-2));
}

TEST_CASE("off-diagonals respect the support half-width") {
  const JacobiMatrix out = ifsjacobi::closure_atoms(two_atom(), 0.75, 200);
  for (std::size_t j = 1; j < out.size(); ++j) {
    CHECK(out.b(j) <= 1.0 + 4.0 * std::numeric_limits<double>::epsilon());
  }
}

TEST_CASE("closure output is a fixed point of the convolution") {
  const std::size_t n = 256;
  const JacobiMatrix mu = ifsjacobi::closure_atoms(two_atom(), 0.75, n);
  const JacobiMatrix back = ifsjacobi::convolve(two_atom(), mu, 0.75, n);
  CHECK(ifsjacobi::frobenius_distance(back, mu) < 1e-10);
}

TEST_CASE("single atom degenerates at step zero") {
  const DiscreteMeasure point({{0.7, 1.0}});
  CHECK_THROWS_AS(ifsjacobi::closure_atoms(point, 0.4, 3), Error);
  try {
    ifsjacobi::closure_atoms(point, 0.4, 3);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateStep);
    CHECK(std::string(e.what()).find("n=0") != std::string::npos);
  }
}

TEST_CASE("atom overload defers to the dense path when atoms cover the size") {
  const DiscreteMeasure sigma = refinable_four_atom();
  const JacobiMatrix direct =
      ifsjacobi::closure(ifsjacobi::jacobi_from_discrete(sigma, 4), 0.35, 4);
  CHECK(ifsjacobi::closure_atoms(sigma, 0.35, 4) == direct);
}

TEST_CASE("undersized sigma truncations are rejected") {
  CHECK_THROWS_AS(ifsjacobi::closure(ifsjacobi::jacobi_lebesgue(5), 0.5, 10), Error);
}

TEST_CASE("finite-sigma cost grows quadratically, not cubically") {
  using clock = std::chrono::steady_clock;
  const DiscreteMeasure sigma = two_atom();
  const auto t0 = clock::now();
  ifsjacobi::closure_atoms(sigma, 0.75, 2000);
  const auto t1 = clock::now();
  ifsjacobi::closure_atoms(sigma, 0.75, 4000);
  const auto t2 = clock::now();
  const double small = std::chrono::duration<double>(t1 - t0).count();
  const double large = std::chrono::duration<double>(t2 - t1).count();
  // Quadratic scaling predicts a factor of 4; allow generous scheduling slack
  // but rule out the factor-8 cubic regime on the high side.
  CHECK(large < 7.0 * small + 0.25);
}
