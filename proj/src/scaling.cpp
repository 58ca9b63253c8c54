#include "ifsjacobi/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "ifsjacobi/core.hpp"
#include "ifsjacobi/error.hpp"

namespace ifsjacobi::scaling {

Triangle::Triangle(std::size_t max_order, std::size_t cap) {
  std::size_t rows = max_order + 2;  // kernels read one row past the order
  offsets_.resize(rows + 1);
  offsets_[0] = 0;
  for (std::size_t k = 0; k < rows; ++k) {
    std::size_t live = k > max_order ? 0 : std::min(max_order - k + 1, cap);
    offsets_[k + 1] = offsets_[k] + live + kPad;
  }
  data_.assign(offsets_.back(), 0.0);
}

void Triangle::clear() { std::fill(data_.begin(), data_.end(), 0.0); }

namespace {

double checked_delta(double delta) {
  if (!(delta >= 0.0) || delta >= 1.0) {
    throw Error(ErrorKind::InvalidArgument,
                "delta must lie in [0,1), got " + std::to_string(delta));
  }
  return delta;
}

void require_covers(const JacobiMatrix& m, std::size_t n, const char* role) {
  if (m.size() < n) {
    throw Error(ErrorKind::IndexOutOfRange,
                std::string(role) + " truncation of size " + std::to_string(m.size()) +
                    " does not cover requested size " + std::to_string(n));
  }
}

}  // namespace

Recursion::Recursion(Mode mode, double delta, std::size_t out_size, std::size_t cap)
    : mode_(mode),
      delta_(delta),
      dbar_(1.0 - delta),
      out_size_(out_size),
      cap_(cap),
      max_order_(out_size),
      out_a_(out_size + 2, 0.0),
      out_b_(out_size + 2, 0.0),
      curr_(max_order_, cap),
      prev_(max_order_, cap),
      next_(max_order_, cap),
      feasible_(out_size) {
  if (out_size < 1) {
    throw Error(ErrorKind::InvalidArgument, "output size must be >= 1");
  }
  zero_row_.assign(std::min(max_order_ + 1, cap) + 2, 0.0);
  curr_.row(0)[0] = 1.0;  // triangle of order 0
}

void Recursion::load_side(std::vector<double>& a_store, std::vector<double>& b_store,
                          const JacobiMatrix& m) const {
  std::size_t len = std::max(m.size(), out_size_) + 2;
  a_store.assign(len, 0.0);
  b_store.assign(len, 0.0);
  for (std::size_t j = 0; j < m.size(); ++j) {
    a_store[j] = m.diag()[j];
    b_store[j] = j == 0 ? 0.0 : m.offdiag()[j - 1];
  }
}

Recursion Recursion::for_convolve(const JacobiMatrix& sigma, bool sigma_finite,
                                  const JacobiMatrix& eta, bool eta_finite, double delta,
                                  std::size_t out_size, bool use_column_cap) {
  checked_delta(delta);
  if (!sigma_finite) require_covers(sigma, out_size, "sigma");
  if (!eta_finite) require_covers(eta, out_size, "eta");
  std::size_t cap = (sigma_finite && use_column_cap) ? sigma.size() : SIZE_MAX;
  Recursion r(Mode::Convolve, delta, out_size, cap);
  r.load_side(r.in_eta_a_, r.in_eta_b_, eta);
  r.load_side(r.in_sig_a_, r.in_sig_b_, sigma);
  r.ea_ = r.in_eta_a_.data();
  r.eb_ = r.in_eta_b_.data();
  r.sa_ = r.in_sig_a_.data();
  r.sb_ = r.in_sig_b_.data();
  return r;
}

Recursion Recursion::for_closure(const JacobiMatrix& sigma, bool sigma_finite, double delta,
                                 std::size_t out_size, bool use_column_cap) {
  checked_delta(delta);
  if (!sigma_finite) require_covers(sigma, out_size, "sigma");
  std::size_t cap = (sigma_finite && use_column_cap) ? sigma.size() : SIZE_MAX;
  Recursion r(Mode::Closure, delta, out_size, cap);
  r.load_side(r.in_sig_a_, r.in_sig_b_, sigma);
  r.ea_ = r.out_a_.data();  // eta coefficients alias the output being built
  r.eb_ = r.out_b_.data();
  r.sa_ = r.in_sig_a_.data();
  r.sb_ = r.in_sig_b_.data();
  return r;
}

Recursion Recursion::for_inverse(const JacobiMatrix& mu, double delta, std::size_t out_size) {
  checked_delta(delta);
  require_covers(mu, out_size, "mu");
  Recursion r(Mode::Inverse, delta, out_size, SIZE_MAX);
  r.load_side(r.in_eta_a_, r.in_eta_b_, mu);
  r.mu_size_ = mu.size();
  r.ea_ = r.in_eta_a_.data();
  r.eb_ = r.in_eta_b_.data();
  r.sa_ = r.out_a_.data();  // sigma coefficients alias the output
  r.sb_ = r.out_b_.data();
  return r;
}

// Full sum of Omega_{k,r} * (d[a_k(eta) Omega_{k,r} + 2 b_k(eta) Omega_{k-1,r}]
//                          + (1-d)[a_r(sig) Omega_{k,r} + 2 b_r(sig) Omega_{k,r-1}])
// over the current triangle, ascending k then r.  The not-yet-known entry of
// the mode's unknown side reads as zero, so the caller can solve for it.
double Recursion::diagonal_sum() const {
  const std::size_t n = n_;
  double total = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    const double* self = curr_.row(k);
    const double* down = k > 0 ? curr_.row(k - 1) : zero_row_.data();
    const std::size_t rmax = std::min(n - k, cap_ - 1);
    double s_self = self[0] * self[0];
    double s_down = down[0] * self[0];
    double s_sig = sa_[0] * self[0] * self[0];
    double s_shift = 0.0;
    for (std::size_t r = 1; r <= rmax; ++r) {
      s_self += self[r] * self[r];
      s_down += down[r] * self[r];
      s_sig += sa_[r] * self[r] * self[r];
      s_shift += sb_[r] * self[r] * self[r - 1];
    }
    total += delta_ * (ea_[k] * s_self + 2.0 * eb_[k] * s_down) +
             dbar_ * (s_sig + 2.0 * s_shift);
  }
  return total;
}

// Writes the unnormalized triangle of order n+1 into next_ and returns the
// sum of squares over every entry except the two extremal slots (n+1,0) and
// (0,n+1).  Entries at the extremal slots are whatever the shared recurrence
// yields with the coefficients known so far; the mode-specific code fixes
// them up after b_{n+1} exists.
double Recursion::fill_omega_tilde() {
  const std::size_t n = n_;
  const std::size_t jmax = n + 1;
  const double abar = mode_ == Mode::Inverse ? ea_[n] : out_a_[n];
  const double bbar = mode_ == Mode::Inverse ? eb_[n] : out_b_[n];
  double sum_sq = 0.0;
  for (std::size_t j = 0; j <= jmax; ++j) {
    const double* self = curr_.row(j);
    const double* up = curr_.row(j + 1);
    const double* down = j > 0 ? curr_.row(j - 1) : zero_row_.data();
    const double* prev = prev_.row(j);
    double* dst = next_.row(j);
    const std::size_t lmax = std::min(jmax - j, cap_ - 1);
    const double daj = delta_ * ea_[j];
    const double dbj1 = delta_ * eb_[j + 1];
    const double dbj = delta_ * eb_[j];

    dst[0] = daj * self[0] + dbj1 * up[0] + dbj * down[0] +
             dbar_ * (sa_[0] * self[0] + sb_[1] * self[1]) - abar * self[0] - bbar * prev[0];
    for (std::size_t l = 1; l <= lmax; ++l) {
      dst[l] = daj * self[l] + dbj1 * up[l] + dbj * down[l] +
               dbar_ * (sa_[l] * self[l] + sb_[l + 1] * self[l + 1] + sb_[l] * self[l - 1]) -
               abar * self[l] - bbar * prev[l];
    }

    const std::size_t lo = j == jmax ? 1 : 0;
    const std::size_t hi = (j == 0 && lmax == jmax) ? lmax - 1 : lmax;
    double s = 0.0;
    for (std::size_t l = lo; l <= hi; ++l) s += dst[l] * dst[l];
    sum_sq += s;
  }
  return sum_sq;
}

void Recursion::finalize_triangle(double divisor, double total_sq) {
  const std::size_t jmax = n_ + 1;
  const double inv = 1.0 / divisor;
  for (std::size_t j = 0; j <= jmax; ++j) {
    double* dst = next_.row(j);
    const std::size_t lmax = std::min(jmax - j, cap_ - 1);
    for (std::size_t l = 0; l <= lmax; ++l) dst[l] *= inv;
  }
  norm_dev_ = std::max(norm_dev_, std::abs(total_sq * inv * inv - 1.0));
  std::swap(prev_, curr_);  // prev <- Omega^n
  std::swap(curr_, next_);  // curr <- Omega^{n+1}, next <- old prev storage
  order_ = jmax;
}

bool Recursion::step() {
  if (done_) return false;
  const std::size_t n = n_;
  const double dsq_next = delta_pow_sq_ * delta_ * delta_;  // delta^{2(n+1)}

  // Diagonal entry.
  if (mode_ == Mode::Inverse) {
    const double w0n = curr_.at(0, n);
    const double denom = dbar_ * w0n * w0n;
    if (!std::isfinite(denom) || denom <= 0.0) {
      // The scaling coefficient underflowed; feasibility can no longer be
      // certified, which is reported as an early stop, not a guess.
      terminated_ = true;
      feasible_ = n;
      done_ = true;
      return false;
    }
    out_a_[n] = (ea_[n] - diagonal_sum()) / denom;
  } else if (mode_ == Mode::Closure) {
    const double wn0 = curr_.at(n, 0);
    out_a_[n] = diagonal_sum() / (1.0 - delta_ * wn0 * wn0);
  } else {
    out_a_[n] = diagonal_sum();
  }
  out_scale_ = std::max(out_scale_, std::abs(out_a_[n]));

  const bool last = n + 1 == out_size_;
  // The off-diagonal step produces b_{n+1}; on the last pass it is pure
  // feasibility checking and only possible in Inverse mode when the target
  // still covers b_{n+1}(mu).
  const bool do_offdiag = !last || (mode_ == Mode::Inverse && n + 1 < mu_size_);

  if (do_offdiag) {
    const double sum_sq = fill_omega_tilde();
    const double w0n = curr_.at(0, n);
    const double wn0 = curr_.at(n, 0);

    if (mode_ == Mode::Convolve) {
      const double e1 = delta_ * eb_[n + 1] * wn0;
      const double e2 = dbar_ * sb_[n + 1] * w0n;
      const double bsq = e1 * e1 + e2 * e2 + sum_sq;
      const double b = std::sqrt(bsq);
      if (b <= degenerate_b_threshold(out_scale_)) {
        throw Error(ErrorKind::DegenerateStep,
                    "output measure ran out of support at step n=" + std::to_string(n) +
                        " (b_" + std::to_string(n + 1) + " vanishes)");
      }
      out_b_[n + 1] = b;
      out_scale_ = std::max(out_scale_, b);
      finalize_triangle(b, bsq);
    } else if (mode_ == Mode::Closure) {
      const double e2 = dbar_ * sb_[n + 1] * w0n;
      const double bsq = (e2 * e2 + sum_sq) / (1.0 - dsq_next);
      const double b = std::sqrt(bsq);
      if (b <= degenerate_b_threshold(out_scale_)) {
        throw Error(ErrorKind::DegenerateStep,
                    "invariant measure ran out of support at step n=" + std::to_string(n) +
                        " (b_" + std::to_string(n + 1) + " vanishes)");
      }
      out_b_[n + 1] = b;
      out_scale_ = std::max(out_scale_, b);
      const double e1 = delta_ * b * wn0;
      finalize_triangle(b, sum_sq + e1 * e1 + e2 * e2);
      // In closure mode the extremal entry collapses to delta * Omega^n_{n,0}
      // (exactly delta^{n+1}); writing it directly keeps the chain exact.
      curr_.row(n + 1)[0] = delta_ * wn0;
    } else {
      const double term1 = (1.0 - dsq_next) * eb_[n + 1] * eb_[n + 1];
      const double denom = dbar_ * dbar_ * w0n * w0n;
      const double noise =
          1e3 * std::numeric_limits<double>::epsilon() * (term1 + sum_sq);
      if (!std::isfinite(denom) || denom <= 0.0 || term1 - sum_sq <= noise) {
        terminated_ = true;
        feasible_ = n;
        done_ = true;
        return false;
      }
      const double b_sig = std::sqrt((term1 - sum_sq) / denom);
      if (!last) {
        out_b_[n + 1] = b_sig;
        const double e1 = next_.row(n + 1)[0];  // delta * b_{n+1}(mu) * Omega^n_{n,0}
        const double e2 = dbar_ * b_sig * w0n;
        next_.row(0)[n + 1] = e2;
        finalize_triangle(eb_[n + 1], sum_sq + e1 * e1 + e2 * e2);
      }
    }
  }

  delta_pow_sq_ = dsq_next;
  ++n_;
  if (last) done_ = true;
  return !done_;
}

void Recursion::run() {
  while (step()) {
  }
}

JacobiMatrix Recursion::output() const {
  std::size_t sz = mode_ == Mode::Inverse ? feasible_ : n_;
  if (sz < 1) {
    throw Error(ErrorKind::DegenerateStep, "no feasible truncation was produced");
  }
  std::vector<double> a(out_a_.begin(), out_a_.begin() + sz);
  std::vector<double> b(out_b_.begin() + 1, out_b_.begin() + sz);
  return JacobiMatrix(std::move(a), std::move(b));
}

double Recursion::omega_norm_squared() const {
  double sum = 0.0;
  for (std::size_t k = 0; k <= order_; ++k) {
    const double* row = curr_.row(k);
    const std::size_t rmax = std::min(order_ - k, cap_ - 1);
    for (std::size_t r = 0; r <= rmax; ++r) sum += row[r] * row[r];
  }
  return sum;
}

}  // namespace ifsjacobi::scaling
