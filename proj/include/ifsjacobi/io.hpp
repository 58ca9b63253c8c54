#pragma once

#include <iosfwd>
#include <string>

#include "ifsjacobi/discrete_measure.hpp"
#include "ifsjacobi/jacobi_matrix.hpp"

namespace ifsjacobi::io {

// Text formats.  Jacobi:
//   jacobi v1 <n>
//   <j> <a_j> <b_j>        (n rows, j = 0..n-1; b_0 written as 0, ignored on read)
// Atoms:
//   atoms v1 <M>
//   <node> <weight>        (M rows)
// JSON variants: {"size": n, "a": [...], "b": [...]} with b[0] == 0, and
// {"size": M, "nodes": [...], "weights": [...]}.  All numbers are written
// with 17 significant digits, so read/write round-trips are bit-exact.

// Stream readers sniff the format: a leading '{' selects JSON.
JacobiMatrix read_jacobi(std::istream& in);
DiscreteMeasure read_atoms(std::istream& in);

void write_jacobi_text(std::ostream& out, const JacobiMatrix& m);
void write_jacobi_json(std::ostream& out, const JacobiMatrix& m);
void write_atoms_text(std::ostream& out, const DiscreteMeasure& m);
void write_atoms_json(std::ostream& out, const DiscreteMeasure& m);

// File wrappers; writers pick JSON when the path ends in ".json".
JacobiMatrix read_jacobi_file(const std::string& path);
DiscreteMeasure read_atoms_file(const std::string& path);
void write_jacobi_file(const std::string& path, const JacobiMatrix& m);
void write_atoms_file(const std::string& path, const DiscreteMeasure& m);

// 17-significant-digit decimal form, shared by every emitter.
std::string format17(double value);

}  // namespace ifsjacobi::io
