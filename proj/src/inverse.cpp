#include "ifsjacobi/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "ifsjacobi/error.hpp"
#include "ifsjacobi/scaling.hpp"

namespace ifsjacobi {

namespace {

bool fully_feasible(const JacobiMatrix& mu, double delta, std::size_t n) {
  scaling::Recursion rec = scaling::Recursion::for_inverse(mu, delta, n);
  rec.run();
  return rec.feasible_size() == n;
}

}  // namespace

InverseResult invert(const JacobiMatrix& mu, double delta, std::size_t n) {
  scaling::Recursion rec = scaling::Recursion::for_inverse(mu, delta, n);
  rec.run();
  InverseResult result{rec.output(), rec.feasible_size(), n, rec.terminated_early()};
  return result;
}

FeasibilityFrontier delta_frontier(const JacobiMatrix& mu,
                                   const std::vector<std::size_t>& n_values,
                                   double tol_rel) {
  if (n_values.empty()) {
    throw Error(ErrorKind::InvalidArgument, "frontier needs at least one row count");
  }
  if (!(tol_rel > 0.0 && tol_rel < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "relative tolerance must lie in (0, 1)");
  }
  const std::size_t n_max = *std::max_element(n_values.begin(), n_values.end());
  if (n_max == 0) {
    throw Error(ErrorKind::InvalidArgument, "row counts must be positive");
  }
  if (mu.size() < n_max) {
    throw Error(ErrorKind::IndexOutOfRange,
                "target has size " + std::to_string(mu.size()) +
                    " but the frontier probes " + std::to_string(n_max) + " rows");
  }

  FeasibilityFrontier frontier;
  frontier.tol_rel = tol_rel;
  frontier.points.reserve(n_values.size());
  constexpr double kDeltaCap = 0.999;
  for (const std::size_t n : n_values) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "row counts must be positive");
    FrontierPoint point;
    point.n = n;
    if (fully_feasible(mu, kDeltaCap, n)) {
      point.delta_n = point.lower = point.upper = kDeltaCap;
      frontier.points.push_back(point);
      continue;
    }
    double hi = kDeltaCap;  // infeasible
    double lo = kDeltaCap;
    do {
      lo *= 0.1;
      if (lo < 1e-300) {
        throw Error(ErrorKind::InvalidTarget,
                    "no feasible contraction ratio found for " + std::to_string(n) +
                        " rows");
      }
    } while (!fully_feasible(mu, lo, n));
    while (hi - lo > tol_rel * lo) {
      const double mid = std::sqrt(lo * hi);
      if (fully_feasible(mu, mid, n)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    point.lower = lo;
    point.upper = hi;
    point.delta_n = 0.5 * (lo + hi);
    frontier.points.push_back(point);
  }
  return frontier;
}

JacobiMatrix fibonacci_jacobi(std::size_t n, double value_a, double value_b) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "requested size must be positive");
  if (!(value_a > 0.0) || !(value_b > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "off-diagonal letter values must be positive");
  }
  std::vector<char> word{'A'};
  while (word.size() < n) {  // need letters 1..n-1
    std::vector<char> next;
    next.reserve(2 * word.size());
    for (const char c : word) {
      if (c == 'A') {
        next.push_back('A');
        next.push_back('B');
      } else {
        next.push_back('A');
      }
    }
    word = std::move(next);
  }
  std::vector<double> diag(n, 0.0);
  std::vector<double> offdiag(n - 1, 0.0);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    offdiag[j] = word[j] == 'A' ? value_a : value_b;
  }
  return JacobiMatrix(std::move(diag), std::move(offdiag));
}

}  // namespace ifsjacobi
