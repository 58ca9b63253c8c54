#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "ifsjacobi/jacobi_matrix.hpp"

namespace ifsjacobi::scaling {

// Packed triangular array over index pairs (k, r) with k + r <= order.
// An optional column cap marks measures with exactly `cap` atoms on the
// second index: entries with r >= cap vanish identically and are not stored.
// Every row carries two zeroed padding slots and entries beyond the current
// order stay zero, so kernels may read one slot past the live range without
// branching.
class Triangle {
 public:
  Triangle(std::size_t max_order, std::size_t cap);

  // Total accessor: zero outside the stored region.
  double at(std::size_t k, std::size_t r) const {
    if (k >= offsets_.size() - 1) return 0.0;
    std::size_t len = offsets_[k + 1] - offsets_[k] - kPad;
    return r < len ? data_[offsets_[k] + r] : 0.0;
  }

  double* row(std::size_t k) { return data_.data() + offsets_[k]; }
  const double* row(std::size_t k) const { return data_.data() + offsets_[k]; }
  std::size_t rows() const { return offsets_.size() - 1; }

  void clear();

 private:
  static constexpr std::size_t kPad = 2;
  std::vector<double> data_;
  std::vector<std::size_t> offsets_;
};

enum class Mode : std::uint8_t { Convolve, Closure, Inverse };

// Coupled recursion producing, for n = 0, 1, ..., the diagonal entry a_n of
// the output measure, the rescaled triangle of order n+1, and the
// off-diagonal entry b_{n+1}.  The three modes share the same kernels:
//   Convolve: output = image measure of (sigma x eta) under s -> d*s + (1-d)*beta
//   Closure:  output = invariant measure (eta coefficients alias the output)
//   Inverse:  output = sigma recovered from the invariant measure mu
class Recursion {
 public:
  static Recursion for_convolve(const JacobiMatrix& sigma, bool sigma_finite,
                                const JacobiMatrix& eta, bool eta_finite, double delta,
                                std::size_t out_size, bool use_column_cap = true);
  static Recursion for_closure(const JacobiMatrix& sigma, bool sigma_finite, double delta,
                               std::size_t out_size, bool use_column_cap = true);
  static Recursion for_inverse(const JacobiMatrix& mu, double delta, std::size_t out_size);

  // Runs one step; returns false once the run is over (all steps done, or an
  // Inverse-mode feasibility stop).  Convolve/Closure throw DegenerateStep
  // when the output measure runs out of support.
  bool step();
  void run();

  std::size_t next_step() const noexcept { return n_; }
  std::size_t out_size() const noexcept { return out_size_; }

  // Inverse mode: truncation size certified so far; == out_size when the run
  // completed without an early stop.
  std::size_t feasible_size() const noexcept { return feasible_; }
  bool terminated_early() const noexcept { return terminated_; }

  JacobiMatrix output() const;

  // Observers for tests and debug dumps.
  std::size_t omega_order() const noexcept { return order_; }
  double omega(std::size_t k, std::size_t r) const { return curr_.at(k, r); }
  double max_normalization_deviation() const noexcept { return norm_dev_; }
  double omega_norm_squared() const;

 private:
  Recursion(Mode mode, double delta, std::size_t out_size, std::size_t cap);

  void load_side(std::vector<double>& a_store, std::vector<double>& b_store,
                 const JacobiMatrix& m) const;
  double diagonal_sum() const;
  double fill_omega_tilde();  // returns sum of squares over non-extremal entries
  void solve_diagonal();
  bool solve_offdiagonal();   // false: Inverse-mode infeasible stop
  void finalize_triangle(double divisor, double sum_sq);

  Mode mode_;
  double delta_, dbar_;
  std::size_t out_size_;
  std::size_t cap_;        // column cap on the sigma index (SIZE_MAX if none)
  std::size_t max_order_;

  std::vector<double> out_a_, out_b_;                  // out_b_[0] == 0
  std::vector<double> in_eta_a_, in_eta_b_, in_sig_a_, in_sig_b_;
  const double* ea_ = nullptr;  // eta-side coefficients seen by the kernels
  const double* eb_ = nullptr;
  const double* sa_ = nullptr;  // sigma-side coefficients
  const double* sb_ = nullptr;
  std::size_t mu_size_ = 0;     // Inverse mode: extent of usable mu entries

  Triangle curr_, prev_, next_;
  std::vector<double> zero_row_;
  std::size_t n_ = 0;       // next step index
  std::size_t order_ = 0;   // order of curr_
  double delta_pow_sq_ = 1.0;  // delta^{2n}
  std::size_t feasible_;
  bool terminated_ = false;
  bool done_ = false;
  double norm_dev_ = 0.0;
  double out_scale_ = 1.0;  // running magnitude of the produced entries
};

}  // namespace ifsjacobi::scaling
