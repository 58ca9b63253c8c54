#include "ifsjacobi/core.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "ifsjacobi/error.hpp"

namespace ifsjacobi {

JacobiMatrix jacobi_lebesgue(std::size_t n) {
  if (n < 1) {
    throw Error(ErrorKind::InvalidArgument, "truncation size must be >= 1");
  }
  std::vector<double> a(n, 0.0);
  std::vector<double> b(n - 1);
  for (std::size_t j = 1; j < n; ++j) {
    double dj = static_cast<double>(j);
    b[j - 1] = dj / std::sqrt(4.0 * dj * dj - 1.0);
  }
  return JacobiMatrix(std::move(a), std::move(b));
}

JacobiMatrix jacobi_from_discrete(const DiscreteMeasure& measure, std::size_t n) {
  std::size_t m = measure.size();
  if (n < 1) {
    throw Error(ErrorKind::InvalidArgument, "truncation size must be >= 1");
  }
  if (n > m) {
    throw Error(ErrorKind::RankExceeded, "requested " + std::to_string(n) + " rows from " +
                                             std::to_string(m) + " atoms (b_" +
                                             std::to_string(m) + " = 0)");
  }

  std::vector<double> nodes(m), q(m);
  double node_scale = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    nodes[i] = measure.node(i);
    q[i] = std::sqrt(measure.weight(i));
    node_scale = std::max(node_scale, std::abs(nodes[i]));
  }

  std::vector<double> basis;  // rows q_0..q_j, kept for reorthogonalization
  basis.reserve(n * m);
  std::vector<double> a(n), b(n - 1), v(m);

  for (std::size_t j = 0; j < n; ++j) {
    basis.insert(basis.end(), q.begin(), q.end());

    for (std::size_t i = 0; i < m; ++i) v[i] = nodes[i] * q[i];
    double aj = 0.0;
    for (std::size_t i = 0; i < m; ++i) aj += q[i] * v[i];
    a[j] = aj;
    if (j + 1 == n) break;

    // Two reorthogonalization passes keep the basis orthogonal to roundoff
    // even when eigenvalues cluster.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t r = 0; r <= j; ++r) {
        const double* qr = basis.data() + r * m;
        double c = 0.0;
        for (std::size_t i = 0; i < m; ++i) c += qr[i] * v[i];
        for (std::size_t i = 0; i < m; ++i) v[i] -= c * qr[i];
      }
    }

    double norm = 0.0;
    for (std::size_t i = 0; i < m; ++i) norm += v[i] * v[i];
    norm = std::sqrt(norm);
    if (norm <= degenerate_b_threshold(node_scale)) {
      throw Error(ErrorKind::RankExceeded,
                  "measure exhausted at b_" + std::to_string(j + 1) + " (" +
                      std::to_string(norm) + ")");
    }
    b[j] = norm;
    for (std::size_t i = 0; i < m; ++i) q[i] = v[i] / norm;
  }
  return JacobiMatrix(std::move(a), std::move(b));
}

double frobenius_distance(const JacobiMatrix& x, const JacobiMatrix& y) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::SizeMismatch, "distance between truncations of size " +
                                             std::to_string(x.size()) + " and " +
                                             std::to_string(y.size()));
  }
  auto xa = x.diag(), ya = y.diag();
  auto xb = x.offdiag(), yb = y.offdiag();
  double sum = 0.0;
  for (std::size_t j = 0; j < xa.size(); ++j) {
    double d = xa[j] - ya[j];
    sum += d * d;
  }
  for (std::size_t j = 0; j < xb.size(); ++j) {
    double d = xb[j] - yb[j];
    sum += 2.0 * d * d;
  }
  return std::sqrt(sum);
}

}  // namespace ifsjacobi
