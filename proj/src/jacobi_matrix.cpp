#include "ifsjacobi/jacobi_matrix.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "ifsjacobi/error.hpp"

namespace ifsjacobi {

JacobiMatrix::JacobiMatrix(std::vector<double> diag, std::vector<double> offdiag) {
  if (diag.empty()) {
    throw Error(ErrorKind::InvalidArgument, "jacobi matrix needs at least one diagonal entry");
  }
  if (offdiag.size() + 1 != diag.size()) {
    throw Error(ErrorKind::SizeMismatch,
                "offdiag must hold size-1 entries, got " + std::to_string(offdiag.size()) +
                    " for size " + std::to_string(diag.size()));
  }
  for (std::size_t j = 0; j < diag.size(); ++j) {
    if (!std::isfinite(diag[j])) {
      throw Error(ErrorKind::InvalidArgument, "non-finite diagonal entry a_" + std::to_string(j));
    }
  }
  for (std::size_t j = 0; j < offdiag.size(); ++j) {
    if (!std::isfinite(offdiag[j]) || offdiag[j] <= 0.0) {
      throw Error(ErrorKind::InvalidArgument,
                  "off-diagonal entry b_" + std::to_string(j + 1) + " must be finite and > 0");
    }
  }
  a_ = std::move(diag);
  b_.reserve(a_.size());
  b_.push_back(0.0);
  b_.insert(b_.end(), offdiag.begin(), offdiag.end());
}

double JacobiMatrix::a(std::size_t j) const {
  if (j >= a_.size()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "a_" + std::to_string(j) + " outside truncation of size " + std::to_string(a_.size()));
  }
  return a_[j];
}

double JacobiMatrix::b(std::size_t j) const {
  if (j >= b_.size()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "b_" + std::to_string(j) + " outside truncation of size " + std::to_string(b_.size()));
  }
  return b_[j];
}

JacobiMatrix JacobiMatrix::leading(std::size_t m) const {
  if (m < 1 || m > size()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "leading block of size " + std::to_string(m) + " from truncation of size " +
                    std::to_string(size()));
  }
  return JacobiMatrix(std::vector<double>(a_.begin(), a_.begin() + m),
                      std::vector<double>(b_.begin() + 1, b_.begin() + m));
}

}  // namespace ifsjacobi
