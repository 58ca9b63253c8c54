#include "ifsjacobi/closure.hpp"

#include "ifsjacobi/core.hpp"
#include "ifsjacobi/scaling.hpp"

namespace ifsjacobi {

JacobiMatrix closure(const JacobiMatrix& sigma, double delta, std::size_t n) {
  auto rec = scaling::Recursion::for_closure(sigma, false, delta, n);
  rec.run();
  return rec.output();
}

JacobiMatrix closure_atoms(const DiscreteMeasure& sigma, double delta, std::size_t n) {
  const std::size_t m = sigma.size();
  if (m >= n) {
    // Enough atoms to back a dense run; no padding or cap required.
    return closure(jacobi_from_discrete(sigma, n), delta, n);
  }
  auto rec = scaling::Recursion::for_closure(jacobi_from_discrete(sigma, m), true, delta, n);
  rec.run();
  return rec.output();
}

}  // namespace ifsjacobi
