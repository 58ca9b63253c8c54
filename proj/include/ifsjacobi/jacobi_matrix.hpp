#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ifsjacobi {

// Leading n x n block of the Jacobi matrix of a probability measure:
// diagonal a_0..a_{n-1}, off-diagonal b_1..b_{n-1} (strictly positive).
// b(0) is identically zero.
class JacobiMatrix {
 public:
  // offdiag holds b_1..b_{n-1}, so offdiag.size() == diag.size() - 1.
  JacobiMatrix(std::vector<double> diag, std::vector<double> offdiag);

  std::size_t size() const noexcept { return a_.size(); }

  double a(std::size_t j) const;
  double b(std::size_t j) const;  // b(0) == 0

  std::span<const double> diag() const noexcept { return a_; }
  std::span<const double> offdiag() const noexcept {
    return {b_.data() + 1, b_.size() - 1};
  }

  // Leading m x m block, 1 <= m <= size().
  JacobiMatrix leading(std::size_t m) const;

  bool operator==(const JacobiMatrix& other) const noexcept = default;

 private:
  std::vector<double> a_;
  std::vector<double> b_;  // b_[0] == 0 sentinel, b_[j] == b_j
};

}  // namespace ifsjacobi
