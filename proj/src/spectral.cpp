#include "ifsjacobi/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ifsjacobi/core.hpp"
#include "ifsjacobi/error.hpp"

namespace ifsjacobi {

namespace {

// Implicit-shift QL for a symmetric tridiagonal matrix, accumulating only the
// first row of the eigenvector matrix.  d[0..n) is the diagonal, e[i] couples
// rows i and i+1 (entries 0..n-2), z starts as the first unit vector.  On
// return d holds the (unordered) eigenvalues and z the first components of the
// corresponding normalized eigenvectors.
void ql_first_components(std::vector<double>& d, std::vector<double>& e,
                         std::vector<double>& z) {
  const std::size_t n = d.size();
  if (n == 0) return;
  constexpr int kMaxSweeps = 50;
  const double eps = std::numeric_limits<double>::epsilon();
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m = l;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (iter++ == kMaxSweeps) {
        throw Error(ErrorKind::EigenFailure,
                    "tridiagonal QL did not converge within " +
                        std::to_string(kMaxSweeps) + " sweeps at row " + std::to_string(l));
      }
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool underflow = false;
      for (std::size_t ii = m; ii-- > l;) {
        double f = s * e[ii];
        const double b = c * e[ii];
        r = std::hypot(f, g);
        e[ii + 1] = r;
        if (r == 0.0) {
          d[ii + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[ii + 1] - p;
        r = (d[ii] - g) * s + 2.0 * c * b;
        p = s * r;
        d[ii + 1] = g + p;
        g = c * r - b;
        f = z[ii + 1];
        z[ii + 1] = s * z[ii] + c * f;
        z[ii] = c * z[ii] - s * f;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
}

DiscreteMeasure product_of_rules(const GaussRule& eta_rule, const GaussRule& sigma_rule,
                                 double delta) {
  if (eta_rule.size() == 0 || sigma_rule.size() == 0) {
    throw Error(ErrorKind::InvalidArgument, "product rule needs nonempty factor rules");
  }
  if (!(delta >= 0.0 && delta < 1.0)) {
    throw Error(ErrorKind::InvalidArgument,
                "contraction ratio must lie in [0, 1), got " + std::to_string(delta));
  }
  const double dbar = 1.0 - delta;
  std::vector<Atom> atoms;
  atoms.reserve(eta_rule.size() * sigma_rule.size());
  for (std::size_t j = 0; j < eta_rule.size(); ++j) {
    for (std::size_t k = 0; k < sigma_rule.size(); ++k) {
      atoms.push_back({delta * eta_rule.nodes[j] + dbar * sigma_rule.nodes[k],
                       eta_rule.weights[j] * sigma_rule.weights[k]});
    }
  }
  return DiscreteMeasure(std::move(atoms));
}

JacobiMatrix convolve_rules(const GaussRule& sigma_rule, const GaussRule& eta_rule,
                            double delta, std::size_t n) {
  return jacobi_from_discrete(product_of_rules(eta_rule, sigma_rule, delta), n);
}

GaussRule capped_rule(const JacobiMatrix& m, std::size_t n) {
  return gauss_rule(m, std::min(n, m.size()));
}

template <typename Sigma>
FixpointResult run_fixpoint_spectral(const Sigma& sigma, double delta, std::size_t n,
                                     const JacobiMatrix& init, const FixpointConfig& config) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "requested size must be positive");
  if (init.size() < n) {
    throw Error(ErrorKind::IndexOutOfRange,
                "initial matrix has size " + std::to_string(init.size()) +
                    " but the iteration needs " + std::to_string(n));
  }
  const double tol =
      config.tolerance > 0.0 ? config.tolerance : default_fixpoint_tolerance(n);
  FixpointResult result{init.leading(n), {}};
  if (config.record_trajectory) result.report.trajectory.push_back(result.jacobi);
  for (std::size_t m = 1; m <= config.max_iterations; ++m) {
    JacobiMatrix next = convolve_spectral(sigma, result.jacobi, delta, n);
    const double dist = frobenius_distance(next, result.jacobi);
    result.jacobi = std::move(next);
    result.report.iterations = m;
    result.report.distances.push_back(dist);
    if (config.record_trajectory) result.report.trajectory.push_back(result.jacobi);
    if (dist <= tol) {
      result.report.converged = true;
      break;
    }
  }
  return result;
}

}  // namespace

GaussRule gauss_rule(const JacobiMatrix& m, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "rule order must be positive");
  if (n > m.size()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "rule order " + std::to_string(n) + " exceeds matrix size " +
                    std::to_string(m.size()));
  }
  std::vector<double> d(m.diag().begin(), m.diag().begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<double> e(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) e[i] = m.b(i + 1);
  std::vector<double> z(n, 0.0);
  z[0] = 1.0;
  ql_first_components(d, e, z);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&d](std::size_t i, std::size_t j) { return d[i] < d[j]; });
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    rule.nodes[i] = d[order[i]];
    rule.weights[i] = z[order[i]] * z[order[i]];
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(rule.nodes[i] < rule.nodes[i + 1])) {
      throw Error(ErrorKind::EigenFailure,
                  "rule nodes failed to separate at index " + std::to_string(i));
    }
  }
  return rule;
}

GaussRule rule_from_atoms(const DiscreteMeasure& m) {
  GaussRule rule;
  rule.nodes.reserve(m.size());
  rule.weights.reserve(m.size());
  for (const auto& atom : m.atoms()) {
    rule.nodes.push_back(atom.node);
    rule.weights.push_back(atom.weight);
  }
  return rule;
}

DiscreteMeasure product_rule(const GaussRule& eta_rule, const GaussRule& sigma_rule,
                             double delta) {
  return product_of_rules(eta_rule, sigma_rule, delta);
}

JacobiMatrix convolve_spectral(const JacobiMatrix& sigma, const JacobiMatrix& eta,
                               double delta, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "requested size must be positive");
  return convolve_rules(capped_rule(sigma, n), capped_rule(eta, n), delta, n);
}

JacobiMatrix convolve_spectral(const DiscreteMeasure& sigma, const JacobiMatrix& eta,
                               double delta, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "requested size must be positive");
  return convolve_rules(rule_from_atoms(sigma), capped_rule(eta, n), delta, n);
}

JacobiMatrix convolve_spectral(const JacobiMatrix& sigma, const DiscreteMeasure& eta,
                               double delta, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "requested size must be positive");
  return convolve_rules(capped_rule(sigma, n), rule_from_atoms(eta), delta, n);
}

JacobiMatrix convolve_spectral(const DiscreteMeasure& sigma, const DiscreteMeasure& eta,
                               double delta, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "requested size must be positive");
  return convolve_rules(rule_from_atoms(sigma), rule_from_atoms(eta), delta, n);
}

FixpointResult fixpoint_spectral(const JacobiMatrix& sigma, double delta, std::size_t n,
                                 const JacobiMatrix& init, const FixpointConfig& config) {
  return run_fixpoint_spectral(sigma, delta, n, init, config);
}

FixpointResult fixpoint_spectral(const DiscreteMeasure& sigma, double delta, std::size_t n,
                                 const JacobiMatrix& init, const FixpointConfig& config) {
  return run_fixpoint_spectral(sigma, delta, n, init, config);
}

}  // namespace ifsjacobi
