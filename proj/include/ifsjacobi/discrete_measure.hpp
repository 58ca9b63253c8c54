#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ifsjacobi {

struct Atom {
  double node = 0.0;
  double weight = 0.0;

  bool operator==(const Atom&) const noexcept = default;
};

// Finitely supported probability measure.  Construction sorts the atoms,
// merges nodes closer than 4*eps*max(1,|node|), rejects nonpositive weights,
// and requires the weights to sum to 1 within 8*eps*count (the stored sum is
// then rescaled to exactly 1).
class DiscreteMeasure {
 public:
  explicit DiscreteMeasure(std::vector<Atom> atoms);

  std::size_t size() const noexcept { return atoms_.size(); }
  double node(std::size_t i) const;
  double weight(std::size_t i) const;
  std::span<const Atom> atoms() const noexcept { return atoms_; }

 private:
  std::vector<Atom> atoms_;  // sorted by node, nodes strictly increasing
};

}  // namespace ifsjacobi
