#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "ifsjacobi/core.hpp"
#include "ifsjacobi/discrete_measure.hpp"
#include "ifsjacobi/error.hpp"
#include "ifsjacobi/io.hpp"
#include "ifsjacobi/jacobi_matrix.hpp"

using ifsjacobi::DiscreteMeasure;
using ifsjacobi::Error;
using ifsjacobi::ErrorKind;
using ifsjacobi::JacobiMatrix;
namespace io = ifsjacobi::io;
namespace fs = std::filesystem;

namespace {

JacobiMatrix sample_jacobi() {
  return JacobiMatrix({0.1, -2.0 / 3.0, 1e-30}, {1.0 / 3.0, 0.57735026918962576});
}

DiscreteMeasure sample_atoms() {
  return DiscreteMeasure({{-1.0, 1.0 / 3.0}, {0.25, 1.0 / 6.0}, {2.0, 0.5}});
}

ErrorKind kind_of_jacobi_parse(const std::string& text) {
  std::istringstream in(text);
  try {
    io::read_jacobi(in);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;  // not reached in the failure tests
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / "ifsjacobi-io-test") {
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("jacobi text round trip is bit exact") {
  const JacobiMatrix m = sample_jacobi();
  std::ostringstream out;
  io::write_jacobi_text(out, m);
  std::istringstream in(out.str());
  CHECK(io::read_jacobi(in) == m);
}

TEST_CASE("jacobi json round trip is bit exact") {
  const JacobiMatrix m = sample_jacobi();
  std::ostringstream out;
  io::write_jacobi_json(out, m);
  std::istringstream in(out.str());
  CHECK(io::read_jacobi(in) == m);
}

TEST_CASE("atoms text and json round trips are bit exact") {
  const DiscreteMeasure m = sample_atoms();
  {
    std::ostringstream out;
    io::write_atoms_text(out, m);
    std::istringstream in(out.str());
    const DiscreteMeasure back = io::read_atoms(in);
    REQUIRE(back.size() == m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      CHECK(back.node(i) == m.node(i));
      CHECK(back.weight(i) == m.weight(i));
    }
  }
  {
    std::ostringstream out;
    io::write_atoms_json(out, m);
    std::istringstream in(out.str());
    const DiscreteMeasure back = io::read_atoms(in);
    REQUIRE(back.size() == m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      CHECK(back.node(i) == m.node(i));
      CHECK(back.weight(i) == m.weight(i));
    }
  }
}

TEST_CASE("jacobi text writer emits the documented layout") {
  const JacobiMatrix m({0.5, 1.5}, {0.25});
  std::ostringstream out;
  io::write_jacobi_text(out, m);
  CHECK(out.str() == "jacobi v1 2\n0 0.5 0\n1 1.5 0.25\n");
}

TEST_CASE("jacobi parse failures carry ParseError") {
  CHECK(kind_of_jacobi_parse("") == ErrorKind::ParseError);
  CHECK(kind_of_jacobi_parse("atoms v1 1\n0.5 1\n") == ErrorKind::ParseError);
  CHECK(kind_of_jacobi_parse("jacobi v2 1\n0 0 0\n") == ErrorKind::ParseError);
  // header promises three rows, only two present
  CHECK(kind_of_jacobi_parse("jacobi v1 3\n0 0 0\n1 0 0.5\n") == ErrorKind::ParseError);
  // extra row beyond the promised count
  CHECK(kind_of_jacobi_parse("jacobi v1 1\n0 0 0\n1 0 0.5\n") == ErrorKind::ParseError);
  // wrong row index
  CHECK(kind_of_jacobi_parse("jacobi v1 2\n0 0 0\n2 0 0.5\n") == ErrorKind::ParseError);
  // malformed number
  CHECK(kind_of_jacobi_parse("jacobi v1 1\n0 zero 0\n") == ErrorKind::ParseError);
  // non-finite entry
  CHECK(kind_of_jacobi_parse("jacobi v1 1\n0 inf 0\n") == ErrorKind::ParseError);
  // b_0 must be zero
  CHECK(kind_of_jacobi_parse("jacobi v1 2\n0 0 0.5\n1 0 0.5\n") == ErrorKind::ParseError);
  // off-diagonals must be positive
  CHECK(kind_of_jacobi_parse("jacobi v1 2\n0 0 0\n1 0 -0.5\n") == ErrorKind::ParseError);
  CHECK(kind_of_jacobi_parse("jacobi v1 2\n0 0 0\n1 0 0\n") == ErrorKind::ParseError);
  // JSON variants
  CHECK(kind_of_jacobi_parse("{\"size\": 1, \"a\": [0]}") == ErrorKind::ParseError);
  CHECK(kind_of_jacobi_parse("{\"size\": 2, \"a\": [0, 0], \"b\": [0]}") ==
        ErrorKind::ParseError);
  CHECK(kind_of_jacobi_parse("{\"size\": 2, \"a\": [0, 0], \"b\": [0.1, 0.5]}") ==
        ErrorKind::ParseError);
  CHECK(kind_of_jacobi_parse("{\"size\": 2, \"a\": [0, \"x\"], \"b\": [0, 0.5]}") ==
        ErrorKind::ParseError);
  CHECK(kind_of_jacobi_parse("{not json") == ErrorKind::ParseError);
}

TEST_CASE("atoms parse failures carry ParseError") {
  std::istringstream bad_header("nodes v1 1\n0.5 1\n");
  CHECK_THROWS_AS(io::read_atoms(bad_header), Error);
  std::istringstream short_rows("atoms v1 2\n0.5 1\n");
  CHECK_THROWS_AS(io::read_atoms(short_rows), Error);
  std::istringstream bad_row("atoms v1 1\n0.5 1 7\n");
  CHECK_THROWS_AS(io::read_atoms(bad_row), Error);
}

TEST_CASE("file helpers pick the format from the extension") {
  TempDir tmp;
  const JacobiMatrix m = sample_jacobi();
  const DiscreteMeasure atoms = sample_atoms();

  const std::string text_path = (tmp.path / "m.jac").string();
  const std::string json_path = (tmp.path / "m.json").string();
  io::write_jacobi_file(text_path, m);
  io::write_jacobi_file(json_path, m);
  CHECK(io::read_jacobi_file(text_path) == m);
  CHECK(io::read_jacobi_file(json_path) == m);

  {
    std::ifstream in(json_path);
    std::string first;
    in >> first;
    CHECK(first.front() == '{');
  }

  const std::string atoms_path = (tmp.path / "m.atoms").string();
  io::write_atoms_file(atoms_path, atoms);
  const DiscreteMeasure back = io::read_atoms_file(atoms_path);
  REQUIRE(back.size() == atoms.size());
  CHECK(back.node(2) == atoms.node(2));

  CHECK_THROWS_AS(io::read_jacobi_file((tmp.path / "missing.jac").string()), Error);
  try {
    io::read_jacobi_file((tmp.path / "missing.jac").string());
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IoError);
  }
}

TEST_CASE("parse errors from files name the path") {
  TempDir tmp;
  const std::string path = (tmp.path / "broken.jac").string();
  {
    std::ofstream out(path);
    out << "jacobi v1 2\n0 0 0\n";
  }
  try {
    io::read_jacobi_file(path);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("broken.jac") != std::string::npos);
  }
}
