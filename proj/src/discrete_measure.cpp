#include "ifsjacobi/discrete_measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "ifsjacobi/core.hpp"
#include "ifsjacobi/error.hpp"

namespace ifsjacobi {

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms) {
  if (atoms.empty()) {
    throw Error(ErrorKind::DegenerateMeasure, "measure needs at least one atom");
  }
  for (const Atom& atom : atoms) {
    if (!std::isfinite(atom.node)) {
      throw Error(ErrorKind::DegenerateMeasure, "non-finite node");
    }
    if (!std::isfinite(atom.weight) || atom.weight <= 0.0) {
      throw Error(ErrorKind::DegenerateMeasure, "weights must be finite and > 0");
    }
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& x, const Atom& y) { return x.node < y.node; });

  // Coincident nodes merge into one atom carrying the summed weight.
  atoms_.reserve(atoms.size());
  for (const Atom& atom : atoms) {
    if (!atoms_.empty() && atom.node - atoms_.back().node <= node_merge_threshold(atom.node)) {
      atoms_.back().weight += atom.weight;
    } else {
      atoms_.push_back(atom);
    }
  }

  double sum = 0.0;
  for (const Atom& atom : atoms_) sum += atom.weight;
  double tol = 8.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(atoms_.size());
  if (std::abs(sum - 1.0) > tol) {
    throw Error(ErrorKind::DegenerateMeasure,
                "weights sum to " + std::to_string(sum) + ", expected 1");
  }
  for (Atom& atom : atoms_) atom.weight /= sum;
}

double DiscreteMeasure::node(std::size_t i) const {
  if (i >= atoms_.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "atom " + std::to_string(i) + " of " +
                                                std::to_string(atoms_.size()));
  }
  return atoms_[i].node;
}

double DiscreteMeasure::weight(std::size_t i) const {
  if (i >= atoms_.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "atom " + std::to_string(i) + " of " +
                                                std::to_string(atoms_.size()));
  }
  return atoms_[i].weight;
}

}  // namespace ifsjacobi
