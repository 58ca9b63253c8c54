#include "ifsjacobi/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ifsjacobi/error.hpp"

namespace ifsjacobi::io {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

// Reads one line and splits it into tokens; returns false at end of input.
bool next_line(std::istream& in, std::size_t& line_no, std::vector<std::string>& tokens) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    tokens.clear();
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok) tokens.push_back(tok);
    if (!tokens.empty()) return true;  // whitespace-only lines are ignored
  }
  return false;
}

double parse_number(const std::string& tok, std::size_t line_no) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(tok, &used);
  } catch (const std::exception&) {
    parse_fail(line_no, "expected a number, got '" + tok + "'");
  }
  if (used != tok.size() || !std::isfinite(value)) {
    parse_fail(line_no, "expected a finite number, got '" + tok + "'");
  }
  return value;
}

std::size_t parse_index(const std::string& tok, std::size_t line_no) {
  if (tok.empty()) parse_fail(line_no, "expected an index");
  for (char c : tok) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      parse_fail(line_no, "expected an index, got '" + tok + "'");
    }
  }
  unsigned long long value = 0;
  try {
    value = std::stoull(tok);
  } catch (const std::exception&) {
    parse_fail(line_no, "expected an index, got '" + tok + "'");
  }
  return static_cast<std::size_t>(value);
}

std::size_t parse_count(const std::string& tok, std::size_t line_no) {
  std::size_t value = parse_index(tok, line_no);
  if (value < 1) parse_fail(line_no, "count must be >= 1");
  return value;
}

bool looks_like_json(std::istream& in) {
  int c;
  while ((c = in.peek()) != EOF && std::isspace(c)) in.get();
  return c == '{';
}

json parse_json(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

std::vector<double> number_array(const json& doc, const char* key, std::size_t expected) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw Error(ErrorKind::ParseError, std::string("missing array field '") + key + "'");
  }
  const json& arr = doc[key];
  if (arr.size() != expected) {
    throw Error(ErrorKind::ParseError, std::string("field '") + key + "' has " +
                                           std::to_string(arr.size()) + " entries, expected " +
                                           std::to_string(expected));
  }
  std::vector<double> out;
  out.reserve(arr.size());
  for (const json& v : arr) {
    if (!v.is_number()) {
      throw Error(ErrorKind::ParseError, std::string("non-numeric entry in '") + key + "'");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

std::size_t json_size_field(const json& doc) {
  if (!doc.is_object() || !doc.contains("size") || !doc["size"].is_number_unsigned()) {
    throw Error(ErrorKind::ParseError, "expected an object with an unsigned 'size' field");
  }
  auto n = doc["size"].get<std::size_t>();
  if (n < 1) throw Error(ErrorKind::ParseError, "size must be >= 1");
  return n;
}

JacobiMatrix jacobi_from_rows(std::vector<double> a, std::vector<double> b_with_zero) {
  if (b_with_zero[0] != 0.0) {
    throw Error(ErrorKind::ParseError, "b_0 must be written as 0");
  }
  for (std::size_t j = 1; j < b_with_zero.size(); ++j) {
    if (b_with_zero[j] <= 0.0) {
      throw Error(ErrorKind::ParseError, "off-diagonal b_" + std::to_string(j) + " must be > 0");
    }
  }
  return JacobiMatrix(std::move(a),
                      std::vector<double>(b_with_zero.begin() + 1, b_with_zero.end()));
}

}  // namespace

std::string format17(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

JacobiMatrix read_jacobi(std::istream& in) {
  if (looks_like_json(in)) {
    json doc = parse_json(in);
    std::size_t n = json_size_field(doc);
    return jacobi_from_rows(number_array(doc, "a", n), number_array(doc, "b", n));
  }

  std::size_t line_no = 0;
  std::vector<std::string> tok;
  if (!next_line(in, line_no, tok)) parse_fail(1, "empty input");
  if (tok.size() != 3 || tok[0] != "jacobi" || tok[1] != "v1") {
    parse_fail(line_no, "expected header 'jacobi v1 <n>'");
  }
  std::size_t n = parse_count(tok[2], line_no);

  std::vector<double> a(n), b(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    if (!next_line(in, line_no, tok)) {
      parse_fail(line_no + 1, "expected " + std::to_string(n) + " rows, got " + std::to_string(j));
    }
    if (tok.size() != 3) parse_fail(line_no, "expected '<j> <a_j> <b_j>'");
    if (parse_index(tok[0], line_no) != j) {
      parse_fail(line_no, "row index " + tok[0] + ", expected " + std::to_string(j));
    }
    a[j] = parse_number(tok[1], line_no);
    b[j] = parse_number(tok[2], line_no);
  }
  if (next_line(in, line_no, tok)) parse_fail(line_no, "unexpected extra row");
  try {
    return jacobi_from_rows(std::move(a), std::move(b));
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

DiscreteMeasure read_atoms(std::istream& in) {
  if (looks_like_json(in)) {
    json doc = parse_json(in);
    std::size_t n = json_size_field(doc);
    std::vector<double> nodes = number_array(doc, "nodes", n);
    std::vector<double> weights = number_array(doc, "weights", n);
    std::vector<Atom> atoms(n);
    for (std::size_t i = 0; i < n; ++i) atoms[i] = {nodes[i], weights[i]};
    return DiscreteMeasure(std::move(atoms));
  }

  std::size_t line_no = 0;
  std::vector<std::string> tok;
  if (!next_line(in, line_no, tok)) parse_fail(1, "empty input");
  if (tok.size() != 3 || tok[0] != "atoms" || tok[1] != "v1") {
    parse_fail(line_no, "expected header 'atoms v1 <count>'");
  }
  std::size_t n = parse_count(tok[2], line_no);

  std::vector<Atom> atoms(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!next_line(in, line_no, tok)) {
      parse_fail(line_no + 1, "expected " + std::to_string(n) + " rows, got " + std::to_string(i));
    }
    if (tok.size() != 2) parse_fail(line_no, "expected '<node> <weight>'");
    atoms[i] = {parse_number(tok[0], line_no), parse_number(tok[1], line_no)};
  }
  if (next_line(in, line_no, tok)) parse_fail(line_no, "unexpected extra row");
  return DiscreteMeasure(std::move(atoms));
}

void write_jacobi_text(std::ostream& out, const JacobiMatrix& m) {
  out << "jacobi v1 " << m.size() << "\n";
  for (std::size_t j = 0; j < m.size(); ++j) {
    out << j << ' ' << format17(m.a(j)) << ' ' << format17(m.b(j)) << "\n";
  }
}

void write_jacobi_json(std::ostream& out, const JacobiMatrix& m) {
  out << "{\"size\": " << m.size() << ", \"a\": [";
  for (std::size_t j = 0; j < m.size(); ++j) {
    out << (j ? ", " : "") << format17(m.a(j));
  }
  out << "], \"b\": [";
  for (std::size_t j = 0; j < m.size(); ++j) {
    out << (j ? ", " : "") << format17(m.b(j));
  }
  out << "]}\n";
}

void write_atoms_text(std::ostream& out, const DiscreteMeasure& m) {
  out << "atoms v1 " << m.size() << "\n";
  for (const Atom& atom : m.atoms()) {
    out << format17(atom.node) << ' ' << format17(atom.weight) << "\n";
  }
}

void write_atoms_json(std::ostream& out, const DiscreteMeasure& m) {
  out << "{\"size\": " << m.size() << ", \"nodes\": [";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << (i ? ", " : "") << format17(m.node(i));
  }
  out << "], \"weights\": [";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << (i ? ", " : "") << format17(m.weight(i));
  }
  out << "]}\n";
}

namespace {

bool json_path(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "' for reading");
  return in;
}

template <class WriteFn>
void to_file(const std::string& path, WriteFn&& fn) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IoError, "cannot open '" + path + "' for writing");
  fn(out);
  out.flush();
  if (!out) throw Error(ErrorKind::IoError, "failed writing '" + path + "'");
}

}  // namespace

JacobiMatrix read_jacobi_file(const std::string& path) {
  auto in = open_in(path);
  try {
    return read_jacobi(in);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ParseError) throw;
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

DiscreteMeasure read_atoms_file(const std::string& path) {
  auto in = open_in(path);
  try {
    return read_atoms(in);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ParseError) throw;
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

void write_jacobi_file(const std::string& path, const JacobiMatrix& m) {
  to_file(path, [&](std::ostream& out) {
    json_path(path) ? write_jacobi_json(out, m) : write_jacobi_text(out, m);
  });
}

void write_atoms_file(const std::string& path, const DiscreteMeasure& m) {
  to_file(path, [&](std::ostream& out) {
    json_path(path) ? write_atoms_json(out, m) : write_atoms_text(out, m);
  });
}

}  // namespace ifsjacobi::io
