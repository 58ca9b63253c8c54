#include "ifsjacobi/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ifsjacobi/error.hpp"

namespace ifsjacobi {

namespace {

void require_finite_limit(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be finite");
  }
}

// Core OLS in log-log coordinates over pairs (n, values[n-1]) restricted to
// positive values; the caller chooses how strict to be about skipped points.
PowerlawFit loglog_fit(std::span<const double> values, std::size_t lo, std::size_t hi,
                       bool skip_nonpositive) {
  std::vector<double> xs;
  std::vector<double> ys;
  xs.reserve(hi - lo + 1);
  ys.reserve(hi - lo + 1);
  for (std::size_t n = lo; n <= hi; ++n) {
    const double v = values[n - 1];
    if (!(v > 0.0)) {
      if (skip_nonpositive) continue;
      throw Error(ErrorKind::InvalidArgument,
                  "fit window value at n=" + std::to_string(n) + " is not positive");
    }
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(v));
  }
  if (xs.size() < 2) {
    throw Error(ErrorKind::EmptyWindow,
                "fit window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                    "] holds " + std::to_string(xs.size()) + " usable points; need 2");
  }
  const std::size_t count = xs.size();
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= static_cast<double>(count);
  mean_y /= static_cast<double>(count);
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
  }
  if (!(sxx > 0.0)) {
    throw Error(ErrorKind::EmptyWindow, "fit window abscissas are all identical");
  }
  PowerlawFit fit;
  fit.exponent = sxy / sxx;
  fit.log_amplitude = mean_y - fit.exponent * mean_x;
  double ss = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double r = ys[i] - (fit.log_amplitude + fit.exponent * xs[i]);
    ss += r * r;
  }
  fit.rms_residual = std::sqrt(ss / static_cast<double>(count));
  fit.count = count;
  return fit;
}

std::vector<double> capacity_estimates(const JacobiMatrix& m) {
  if (m.size() < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "capacity estimate needs at least one off-diagonal entry");
  }
  std::vector<double> estimates(m.size() - 1, 0.0);
  double log_sum = 0.0;
  for (std::size_t n = 1; n < m.size(); ++n) {
    log_sum += std::log(m.b(n));
    estimates[n - 1] = -log_sum / static_cast<double>(n);
  }
  return estimates;
}

}  // namespace

PowerlawFit powerlaw_fit(std::span<const double> values, std::size_t lo, std::size_t hi) {
  if (lo < 1 || hi < lo || hi > values.size()) {
    throw Error(ErrorKind::EmptyWindow,
                "fit window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                    "] does not fit a series of length " + std::to_string(values.size()));
  }
  return loglog_fit(values, lo, hi, /*skip_nonpositive=*/false);
}

NevaiReport nevai_report(const JacobiMatrix& m, double a_limit, double b_limit) {
  if (m.size() < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "deviation report needs at least one off-diagonal entry");
  }
  require_finite_limit(a_limit, "diagonal limit");
  require_finite_limit(b_limit, "off-diagonal limit");
  NevaiReport report;
  report.a_limit = a_limit;
  report.b_limit = b_limit;
  const std::size_t len = m.size() - 1;
  report.deviations.resize(len, 0.0);
  report.partial_sums.resize(len, 0.0);
  double sum = 0.0;
  for (std::size_t n = 1; n <= len; ++n) {
    const double dev = std::abs(m.a(n) - a_limit) + std::abs(m.b(n) - b_limit);
    report.deviations[n - 1] = dev;
    sum += dev;
    report.partial_sums[n - 1] = sum;
  }
  const std::size_t lo = std::max<std::size_t>(1, len / 10);
  bool window_zero = true;
  for (std::size_t n = lo; n <= len; ++n) {
    if (report.deviations[n - 1] != 0.0) {
      window_zero = false;
      break;
    }
  }
  try {
    const PowerlawFit fit = loglog_fit(report.deviations, lo, len, /*skip_nonpositive=*/true);
    report.fitted_exponent = fit.exponent;
    report.summable_trend = fit.exponent < -1.0;
  } catch (const Error&) {
    report.fitted_exponent = 0.0;
    report.summable_trend = window_zero;
  }
  return report;
}

CapacityReport capacity_report(const JacobiMatrix& m) {
  CapacityReport report;
  report.estimates = capacity_estimates(m);
  report.final_estimate = report.estimates.back();
  return report;
}

CapacityReport capacity_report(const JacobiMatrix& m, const JacobiMatrix& sigma,
                               double delta) {
  if (!(delta >= 0.0 && delta < 1.0)) {
    throw Error(ErrorKind::InvalidArgument,
                "contraction ratio must lie in [0, 1), got " + std::to_string(delta));
  }
  CapacityReport report = capacity_report(m);
  const CapacityReport sigma_report = capacity_report(sigma);
  report.has_bounds = true;
  report.sigma_estimate = sigma_report.final_estimate;
  report.lower_bound = sigma_report.final_estimate + std::log(1.0 - delta);
  report.upper_bound = sigma_report.final_estimate;
  return report;
}

}  // namespace ifsjacobi
