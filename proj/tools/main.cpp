// Command-line front end for the IFS Jacobi-matrix library.
//
// Subcommands:
//   closure    invariant-measure Jacobi matrix of a homogeneous affine IFS
//   convolve   IFS convolution of two measures (direct or spectral method)
//   fixpoint   iterated convolution until the invariant matrix is reached
//   invert     recover the convolved measure from an invariant target
//   frontier   feasibility frontier of the inverse problem over truncation sizes
//   gauss      Gaussian quadrature rule of a measure
//   analyze    asymptotic diagnostics of a Jacobi matrix
//   fixtures   write the bundled example measures to a directory
//
// Exit codes: 0 success, 1 numerical failure (diagnostic on stderr),
// 2 usage error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ifsjacobi/analysis.hpp"
#include "ifsjacobi/closure.hpp"
#include "ifsjacobi/convolution.hpp"
#include "ifsjacobi/core.hpp"
#include "ifsjacobi/discrete_measure.hpp"
#include "ifsjacobi/error.hpp"
#include "ifsjacobi/inverse.hpp"
#include "ifsjacobi/io.hpp"
#include "ifsjacobi/jacobi_matrix.hpp"
#include "ifsjacobi/scaling.hpp"
#include "ifsjacobi/spectral.hpp"

namespace {

using ifsjacobi::DiscreteMeasure;
using ifsjacobi::Error;
using ifsjacobi::ErrorKind;
using ifsjacobi::JacobiMatrix;

std::string fmt17(double value) { return ifsjacobi::io::format17(value); }

// ---------------------------------------------------------------------------
// Measure input: a file holds either a Jacobi matrix or an atomic measure.
// Text files declare themselves in the header token; JSON files are told
// apart by their field names ("a" vs "nodes").
// ---------------------------------------------------------------------------

struct MeasureInput {
  std::optional<JacobiMatrix> jacobi;
  std::optional<DiscreteMeasure> atoms;

  bool is_atoms() const { return atoms.has_value(); }
  std::size_t size() const {
    return is_atoms() ? atoms->size() : jacobi->size();
  }
};

MeasureInput load_measure(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::IoError, "cannot open '" + path + "' for reading");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    throw Error(ErrorKind::ParseError, path + ": empty input");
  }

  bool atoms_kind = false;
  if (text[first] == '{') {
    atoms_kind = text.find("\"nodes\"") != std::string::npos;
  } else if (text.compare(first, 5, "atoms") == 0) {
    atoms_kind = true;
  } else if (text.compare(first, 6, "jacobi") != 0) {
    throw Error(ErrorKind::ParseError,
                path + ": unrecognized format (expected a 'jacobi' or "
                       "'atoms' header, or a JSON object)");
  }

  MeasureInput result;
  try {
    std::istringstream stream(text);
    if (atoms_kind) {
      result.atoms = ifsjacobi::io::read_atoms(stream);
    } else {
      result.jacobi = ifsjacobi::io::read_jacobi(stream);
    }
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
  return result;
}

JacobiMatrix as_jacobi(const MeasureInput& m, std::size_t order) {
  if (m.is_atoms()) {
    return ifsjacobi::jacobi_from_discrete(
        *m.atoms, std::min<std::size_t>(order, m.atoms->size()));
  }
  return *m.jacobi;
}

// ---------------------------------------------------------------------------
// Small manual JSON emitter so every floating-point value goes through the
// same 17-significant-digit formatting as the measure files.
// ---------------------------------------------------------------------------

std::string json_doubles(const std::vector<double>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += fmt17(values[i]);
  }
  out += "]";
  return out;
}

void write_text_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorKind::IoError, "cannot open '" + path + "' for writing");
  }
  out << body;
  if (!out) {
    throw Error(ErrorKind::IoError, "failed while writing '" + path + "'");
  }
}

void write_series_file(const std::string& path,
                       const std::vector<double>& values,
                       std::size_t first_index) {
  std::string body;
  for (std::size_t i = 0; i < values.size(); ++i) {
    body += std::to_string(first_index + i);
    body += ' ';
    body += fmt17(values[i]);
    body += '\n';
  }
  write_text_file(path, body);
}

// ---------------------------------------------------------------------------
// closure
// ---------------------------------------------------------------------------

ifsjacobi::scaling::Recursion make_closure_recursion(const MeasureInput& sigma,
                                                     double delta,
                                                     std::size_t size) {
  using ifsjacobi::scaling::Recursion;
  if (sigma.is_atoms()) {
    const std::size_t rank = sigma.atoms->size();
    if (rank >= size) {
      return Recursion::for_closure(
          ifsjacobi::jacobi_from_discrete(*sigma.atoms, size), false, delta,
          size);
    }
    return Recursion::for_closure(
        ifsjacobi::jacobi_from_discrete(*sigma.atoms, rank), true, delta,
        size);
  }
  return Recursion::for_closure(*sigma.jacobi, false, delta, size);
}

void dump_omega_blocks(const std::string& path,
                       ifsjacobi::scaling::Recursion& recursion) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorKind::IoError, "cannot open '" + path + "' for writing");
  }
  const auto write_block = [&out](const ifsjacobi::scaling::Recursion& r) {
    const std::size_t order = r.omega_order();
    out << "omega v1 " << order << "\n";
    for (std::size_t k = 0; k <= order; ++k) {
      for (std::size_t l = 0; l + k <= order; ++l) {
        if (l > 0) out << ' ';
        out << ifsjacobi::io::format17(r.omega(k, l));
      }
      out << "\n";
    }
  };
  write_block(recursion);
  while (recursion.step()) {
    write_block(recursion);
  }
  if (!out) {
    throw Error(ErrorKind::IoError, "failed while writing '" + path + "'");
  }
}

// ---------------------------------------------------------------------------
// Subcommand actions. Each returns the process exit code.
// ---------------------------------------------------------------------------

struct ClosureArgs {
  std::string sigma_path;
  double delta = 0.0;
  std::size_t size = 0;
  std::string output;
  std::string omega_dump;
};

int run_closure(const ClosureArgs& args) {
  MeasureInput sigma = load_measure(args.sigma_path);
  auto recursion = make_closure_recursion(sigma, args.delta, args.size);
  if (!args.omega_dump.empty()) {
    dump_omega_blocks(args.omega_dump, recursion);
  } else {
    recursion.run();
  }
  ifsjacobi::io::write_jacobi_file(args.output, recursion.output());
  return 0;
}

struct ConvolveArgs {
  std::string sigma_path;
  std::string eta_path;
  double delta = 0.0;
  std::size_t size = 0;
  std::string method = "direct";
  std::string output;
};

int run_convolve(const ConvolveArgs& args) {
  MeasureInput sigma = load_measure(args.sigma_path);
  MeasureInput eta = load_measure(args.eta_path);
  JacobiMatrix result = [&] {
    if (args.method == "spectral") {
      if (sigma.is_atoms() && eta.is_atoms()) {
        return ifsjacobi::convolve_spectral(*sigma.atoms, *eta.atoms,
                                            args.delta, args.size);
      }
      if (sigma.is_atoms()) {
        return ifsjacobi::convolve_spectral(*sigma.atoms, *eta.jacobi,
                                            args.delta, args.size);
      }
      if (eta.is_atoms()) {
        return ifsjacobi::convolve_spectral(*sigma.jacobi, *eta.atoms,
                                            args.delta, args.size);
      }
      return ifsjacobi::convolve_spectral(*sigma.jacobi, *eta.jacobi,
                                          args.delta, args.size);
    }
    if (sigma.is_atoms() && eta.is_atoms()) {
      return ifsjacobi::convolve(*sigma.atoms, *eta.atoms, args.delta,
                                 args.size);
    }
    if (sigma.is_atoms()) {
      return ifsjacobi::convolve(*sigma.atoms, *eta.jacobi, args.delta,
                                 args.size);
    }
    if (eta.is_atoms()) {
      return ifsjacobi::convolve(*sigma.jacobi, *eta.atoms, args.delta,
                                 args.size);
    }
    return ifsjacobi::convolve(*sigma.jacobi, *eta.jacobi, args.delta,
                               args.size);
  }();
  ifsjacobi::io::write_jacobi_file(args.output, result);
  return 0;
}

struct FixpointArgs {
  std::string sigma_path;
  double delta = 0.0;
  std::size_t size = 0;
  std::string init_path;
  std::string method = "direct";
  double tolerance = 0.0;
  std::size_t max_iterations = 200;
  std::string output;
  std::string report_path;
  std::string trajectory_prefix;
};

int run_fixpoint(const FixpointArgs& args) {
  MeasureInput sigma = load_measure(args.sigma_path);
  JacobiMatrix init = args.init_path.empty()
                          ? ifsjacobi::jacobi_lebesgue(args.size)
                          : as_jacobi(load_measure(args.init_path), args.size);

  ifsjacobi::FixpointConfig config;
  config.tolerance = args.tolerance;
  config.max_iterations = args.max_iterations;
  config.record_trajectory = !args.trajectory_prefix.empty();

  ifsjacobi::FixpointResult result = [&] {
    if (args.method == "spectral") {
      if (sigma.is_atoms()) {
        return ifsjacobi::fixpoint_spectral(*sigma.atoms, args.delta,
                                            args.size, init, config);
      }
      return ifsjacobi::fixpoint_spectral(*sigma.jacobi, args.delta, args.size,
                                          init, config);
    }
    if (sigma.is_atoms()) {
      return ifsjacobi::fixpoint(*sigma.atoms, args.delta, args.size, init,
                                 config);
    }
    return ifsjacobi::fixpoint(*sigma.jacobi, args.delta, args.size, init,
                               config);
  }();

  ifsjacobi::io::write_jacobi_file(args.output, result.jacobi);

  if (!args.report_path.empty()) {
    std::string body = "{\n";
    body += "  \"iterations\": " + std::to_string(result.report.iterations) +
            ",\n";
    body += std::string("  \"converged\": ") +
            (result.report.converged ? "true" : "false") + ",\n";
    body += "  \"distances\": " + json_doubles(result.report.distances) + "\n";
    body += "}\n";
    write_text_file(args.report_path, body);
  }

  if (config.record_trajectory) {
    for (std::size_t i = 0; i < result.report.trajectory.size(); ++i) {
      ifsjacobi::io::write_jacobi_file(
          args.trajectory_prefix + std::to_string(i) + ".jac",
          result.report.trajectory[i]);
    }
  }

  if (!result.report.converged) {
    std::cerr << "note: fixed-point iteration stopped after "
              << result.report.iterations
              << " iterations without reaching the requested tolerance\n";
  }
  return 0;
}

struct InvertArgs {
  std::string mu_path;
  double delta = 0.0;
  std::size_t size = 0;
  std::string output;
  std::string report_path;
};

int run_invert(const InvertArgs& args) {
  MeasureInput mu = load_measure(args.mu_path);
  if (mu.is_atoms()) {
    throw Error(ErrorKind::InvalidArgument,
                "invert expects a Jacobi-matrix target (--mu), not an atomic "
                "measure");
  }
  ifsjacobi::InverseResult result =
      ifsjacobi::invert(*mu.jacobi, args.delta, args.size);
  ifsjacobi::io::write_jacobi_file(args.output, result.sigma_jacobi);

  if (!args.report_path.empty()) {
    std::string body = "{\n";
    body += "  \"requested_size\": " + std::to_string(result.requested_size) +
            ",\n";
    body += "  \"feasible_size\": " + std::to_string(result.feasible_size) +
            ",\n";
    body += std::string("  \"terminated_early\": ") +
            (result.terminated_early ? "true" : "false") + "\n";
    body += "}\n";
    write_text_file(args.report_path, body);
  }

  if (result.terminated_early) {
    std::cerr << "note: inverse recursion infeasible beyond step "
              << result.feasible_size << " of the requested "
              << result.requested_size << "\n";
  }
  return 0;
}

struct FrontierArgs {
  std::string mu_path;
  std::vector<std::size_t> sizes;
  double tol_rel = 1e-3;
  std::string output;
};

int run_frontier(const FrontierArgs& args) {
  MeasureInput mu = load_measure(args.mu_path);
  if (mu.is_atoms()) {
    throw Error(ErrorKind::InvalidArgument,
                "frontier expects a Jacobi-matrix target (--mu), not an "
                "atomic measure");
  }
  ifsjacobi::FeasibilityFrontier frontier =
      ifsjacobi::delta_frontier(*mu.jacobi, args.sizes, args.tol_rel);

  std::string body =
      "frontier v1 " + std::to_string(frontier.points.size()) + "\n";
  for (const auto& point : frontier.points) {
    body += std::to_string(point.n) + " " + fmt17(point.delta_n) + " " +
            fmt17(point.lower) + " " + fmt17(point.upper) + "\n";
  }
  write_text_file(args.output, body);
  return 0;
}

struct GaussArgs {
  std::string input_path;
  std::size_t points = 0;
  std::string output;
};

int run_gauss(const GaussArgs& args) {
  MeasureInput input = load_measure(args.input_path);
  JacobiMatrix jacobi = input.is_atoms()
                            ? ifsjacobi::jacobi_from_discrete(*input.atoms,
                                                              args.points)
                            : *input.jacobi;
  ifsjacobi::GaussRule rule = ifsjacobi::gauss_rule(jacobi, args.points);
  std::vector<ifsjacobi::Atom> atoms(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    atoms[i] = {rule.nodes[i], rule.weights[i]};
  }
  ifsjacobi::io::write_atoms_file(args.output, DiscreteMeasure(atoms));
  return 0;
}

struct AnalyzeArgs {
  std::string jacobi_path;
  double a_limit = 0.0;
  double b_limit = 0.0;
  bool have_a_limit = false;
  bool have_b_limit = false;
  std::string sigma_path;
  double delta = 0.0;
  bool have_delta = false;
  std::size_t fit_lo = 0;
  std::size_t fit_hi = 0;
  std::string output;
  std::string series_prefix;
};

int run_analyze(const AnalyzeArgs& args) {
  MeasureInput input = load_measure(args.jacobi_path);
  if (input.is_atoms()) {
    throw Error(ErrorKind::InvalidArgument,
                "analyze expects a Jacobi-matrix input, not an atomic "
                "measure");
  }
  const JacobiMatrix& jacobi = *input.jacobi;
  const std::size_t n = jacobi.size();

  // Recurrence limits: taken from the command line when supplied, otherwise
  // estimated as the mean over the final tenth of each coefficient sequence.
  const bool limits_estimated = !(args.have_a_limit && args.have_b_limit);
  double a_limit = args.a_limit;
  double b_limit = args.b_limit;
  if (!args.have_a_limit) {
    const std::size_t lo = n - std::max<std::size_t>(1, n / 10);
    double sum = 0.0;
    for (std::size_t j = lo; j < n; ++j) sum += jacobi.a(j);
    a_limit = sum / static_cast<double>(n - lo);
  }
  if (!args.have_b_limit) {
    const std::size_t count = std::max<std::size_t>(1, (n - 1) / 10);
    double sum = 0.0;
    for (std::size_t j = n - count; j < n; ++j) sum += jacobi.b(j);
    b_limit = sum / static_cast<double>(count);
  }

  ifsjacobi::NevaiReport nevai =
      ifsjacobi::nevai_report(jacobi, a_limit, b_limit);

  // Capacity, with bracketing bounds when the IFS data is supplied.
  ifsjacobi::CapacityReport capacity = [&] {
    if (!args.sigma_path.empty()) {
      if (!args.have_delta) {
        throw Error(ErrorKind::InvalidArgument,
                    "--sigma requires --delta for capacity bounds");
      }
      MeasureInput sigma = load_measure(args.sigma_path);
      return ifsjacobi::capacity_report(jacobi, as_jacobi(sigma, n),
                                        args.delta);
    }
    return ifsjacobi::capacity_report(jacobi);
  }();

  // Optional explicit power-law fit of the deviation sequence.
  std::optional<ifsjacobi::PowerlawFit> window_fit;
  if (args.fit_lo > 0 && args.fit_hi > 0) {
    window_fit = ifsjacobi::powerlaw_fit(nevai.deviations, args.fit_lo,
                                         args.fit_hi);
  }

  std::string body = "{\n";
  body += "  \"size\": " + std::to_string(n) + ",\n";
  body += "  \"nevai\": {\n";
  body += "    \"a_limit\": " + fmt17(nevai.a_limit) + ",\n";
  body += "    \"b_limit\": " + fmt17(nevai.b_limit) + ",\n";
  body += std::string("    \"limits_estimated\": ") +
          (limits_estimated ? "true" : "false") + ",\n";
  body += "    \"fitted_exponent\": " + fmt17(nevai.fitted_exponent) + ",\n";
  body += std::string("    \"summable_trend\": ") +
          (nevai.summable_trend ? "true" : "false") + ",\n";
  body += "    \"final_partial_sum\": " +
          fmt17(nevai.partial_sums.empty() ? 0.0
                                           : nevai.partial_sums.back()) +
          "\n  },\n";
  body += "  \"capacity\": {\n";
  body += "    \"final\": " + fmt17(capacity.final_estimate);
  if (capacity.has_bounds) {
    body += ",\n    \"sigma_estimate\": " + fmt17(capacity.sigma_estimate);
    body += ",\n    \"lower_bound\": " + fmt17(capacity.lower_bound);
    body += ",\n    \"upper_bound\": " + fmt17(capacity.upper_bound);
  }
  body += "\n  }";
  if (window_fit) {
    body += ",\n  \"window_fit\": {\n";
    body += "    \"window\": [" + std::to_string(args.fit_lo) + ", " +
            std::to_string(args.fit_hi) + "],\n";
    body += "    \"exponent\": " + fmt17(window_fit->exponent) + ",\n";
    body += "    \"log_amplitude\": " + fmt17(window_fit->log_amplitude) +
            ",\n";
    body += "    \"rms_residual\": " + fmt17(window_fit->rms_residual) +
            ",\n";
    body += "    \"count\": " + std::to_string(window_fit->count) + "\n  }";
  }
  body += "\n}\n";
  write_text_file(args.output, body);

  if (!args.series_prefix.empty()) {
    write_series_file(args.series_prefix + "deviations.txt", nevai.deviations,
                      1);
    write_series_file(args.series_prefix + "partial-sums.txt",
                      nevai.partial_sums, 1);
    write_series_file(args.series_prefix + "capacity.txt", capacity.estimates,
                      1);
  }
  return 0;
}

struct FixturesArgs {
  std::string directory;
  std::size_t size = 64;
};

int run_fixtures(const FixturesArgs& args) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(args.directory, ec);
  if (ec) {
    throw Error(ErrorKind::IoError,
                "cannot create directory '" + args.directory +
                    "': " + ec.message());
  }
  const fs::path dir(args.directory);

  const DiscreteMeasure two_atom({{-1.0, 0.5}, {1.0, 0.5}});
  const DiscreteMeasure refinable(
      {{0.0, 0.125}, {1.0, 0.375}, {2.0, 0.375}, {3.0, 0.125}});
  const double delta_sqrt2 = std::sqrt(0.5);
  const double delta_3q4 = 0.75;
  // Reciprocal of the real root of x^3 = x + 1 (the plastic number).
  const double delta_pisot = 0.75487766624669276;

  ifsjacobi::io::write_atoms_file((dir / "two-atom.atoms").string(), two_atom);
  ifsjacobi::io::write_atoms_file((dir / "bernoulli-sqrt2.atoms").string(),
                                  two_atom);
  ifsjacobi::io::write_atoms_file((dir / "bernoulli-3q4.atoms").string(),
                                  two_atom);
  ifsjacobi::io::write_atoms_file((dir / "bernoulli-pisot.atoms").string(),
                                  two_atom);
  ifsjacobi::io::write_atoms_file((dir / "refinable-1.atoms").string(),
                                  refinable);
  ifsjacobi::io::write_jacobi_file((dir / "lebesgue.jac").string(),
                                   ifsjacobi::jacobi_lebesgue(args.size));
  ifsjacobi::io::write_jacobi_file((dir / "fibonacci.jac").string(),
                                   ifsjacobi::fibonacci_jacobi(args.size));

  std::string manifest = "{\n  \"version\": 1,\n";
  manifest += "  \"size\": " + std::to_string(args.size) + ",\n";
  manifest += "  \"fixtures\": [\n";
  const auto entry = [](const std::string& name, const std::string& file,
                        const std::string& kind, const std::string& extra) {
    std::string line = "    {\"name\": \"" + name + "\", \"file\": \"" + file +
                       "\", \"kind\": \"" + kind + "\"";
    if (!extra.empty()) line += ", " + extra;
    line += "}";
    return line;
  };
  manifest += entry("lebesgue", "lebesgue.jac", "jacobi", "") + ",\n";
  manifest +=
      entry("two-atom", "two-atom.atoms", "atoms",
            "\"note\": \"delta 0.5 closes to the uniform measure on [-1,1]\"") +
      ",\n";
  manifest += entry("bernoulli-sqrt2", "bernoulli-sqrt2.atoms", "atoms",
                    "\"delta\": " + fmt17(delta_sqrt2)) +
              ",\n";
  manifest += entry("bernoulli-3q4", "bernoulli-3q4.atoms", "atoms",
                    "\"delta\": " + fmt17(delta_3q4)) +
              ",\n";
  manifest += entry("bernoulli-pisot", "bernoulli-pisot.atoms", "atoms",
                    "\"delta\": " + fmt17(delta_pisot)) +
              ",\n";
  manifest += entry("refinable-1", "refinable-1.atoms", "atoms",
                    "\"delta\": " + fmt17(0.5)) +
              ",\n";
  manifest += entry("fibonacci", "fibonacci.jac", "jacobi",
                    "\"role\": \"inverse target\"") +
              "\n";
  manifest += "  ]\n}\n";
  write_text_file((dir / "manifest.json").string(), manifest);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Jacobi matrices of invariant measures of homogeneous affine "
      "iterated function systems"};
  app.set_version_flag("--version", "ifsjacobi 0.1.0");
  app.set_config("--config")->envname("IFSJACOBI_CONFIG");
  app.require_subcommand(1);

  const auto check_method = CLI::IsMember({"direct", "spectral"});

  ClosureArgs closure_args;
  auto* closure = app.add_subcommand(
      "closure", "Jacobi matrix of the IFS invariant measure");
  closure->add_option("--sigma", closure_args.sigma_path,
                      "convolved measure (atoms or Jacobi file)")
      ->required();
  closure->add_option("--delta", closure_args.delta,
                      "contraction ratio in [0,1)")
      ->required();
  closure->add_option("--size", closure_args.size, "number of rows to compute")
      ->required();
  closure->add_option("-o,--output", closure_args.output, "output Jacobi file")
      ->required();
  closure->add_option("--dump-omega", closure_args.omega_dump,
                      "write every scaling-coefficient triangle to this file");

  ConvolveArgs convolve_args;
  auto* convolve =
      app.add_subcommand("convolve", "IFS convolution of two measures");
  convolve->add_option("--sigma", convolve_args.sigma_path,
                       "first measure (atoms or Jacobi file)")
      ->required();
  convolve->add_option("--eta", convolve_args.eta_path,
                       "second measure (atoms or Jacobi file)")
      ->required();
  convolve->add_option("--delta", convolve_args.delta,
                       "contraction ratio in [0,1)")
      ->required();
  convolve->add_option("--size", convolve_args.size,
                       "number of rows to compute")
      ->required();
  convolve->add_option("--method", convolve_args.method,
                       "direct (default) or spectral")
      ->check(check_method);
  convolve->add_option("-o,--output", convolve_args.output,
                       "output Jacobi file")
      ->required();

  FixpointArgs fixpoint_args;
  auto* fixpoint = app.add_subcommand(
      "fixpoint", "iterate the convolution map to its fixed point");
  fixpoint->add_option("--sigma", fixpoint_args.sigma_path,
                       "convolved measure (atoms or Jacobi file)")
      ->required();
  fixpoint->add_option("--delta", fixpoint_args.delta,
                       "contraction ratio in [0,1)")
      ->required();
  fixpoint->add_option("--size", fixpoint_args.size,
                       "number of rows to compute")
      ->required();
  fixpoint->add_option("--init", fixpoint_args.init_path,
                       "initial Jacobi matrix (default: uniform measure on "
                       "[-1,1])");
  fixpoint->add_option("--method", fixpoint_args.method,
                       "direct (default) or spectral")
      ->check(check_method);
  fixpoint->add_option("--tol", fixpoint_args.tolerance,
                       "convergence tolerance (default scales with size)");
  fixpoint->add_option("--max-iter", fixpoint_args.max_iterations,
                       "iteration cap (default 200)");
  fixpoint->add_option("-o,--output", fixpoint_args.output,
                       "output Jacobi file")
      ->required();
  fixpoint->add_option("--report", fixpoint_args.report_path,
                       "write a JSON convergence report to this file");
  fixpoint->add_option("--trajectory", fixpoint_args.trajectory_prefix,
                       "write every iterate to <prefix><i>.jac");

  InvertArgs invert_args;
  auto* invert = app.add_subcommand(
      "invert", "recover the convolved measure from an invariant target");
  invert->add_option("--mu", invert_args.mu_path,
                     "target invariant measure (Jacobi file)")
      ->required();
  invert->add_option("--delta", invert_args.delta,
                     "contraction ratio in [0,1)")
      ->required();
  invert->add_option("--size", invert_args.size, "number of rows requested")
      ->required();
  invert->add_option("-o,--output", invert_args.output,
                     "output Jacobi file (feasible prefix)")
      ->required();
  invert->add_option("--report", invert_args.report_path,
                     "write a JSON feasibility report to this file");

  FrontierArgs frontier_args;
  auto* frontier = app.add_subcommand(
      "frontier", "largest feasible contraction ratio per truncation size");
  frontier->add_option("--mu", frontier_args.mu_path,
                       "target invariant measure (Jacobi file)")
      ->required();
  frontier->add_option("--n", frontier_args.sizes,
                       "truncation sizes to probe (repeatable)")
      ->required();
  frontier->add_option("--tol-rel", frontier_args.tol_rel,
                       "relative bracket width (default 1e-3)");
  frontier->add_option("-o,--output", frontier_args.output,
                       "output table file")
      ->required();

  GaussArgs gauss_args;
  auto* gauss =
      app.add_subcommand("gauss", "Gaussian quadrature rule of a measure");
  gauss->add_option("--input", gauss_args.input_path,
                    "measure (atoms or Jacobi file)")
      ->required();
  gauss->add_option("-n,--points", gauss_args.points,
                    "number of quadrature nodes")
      ->required();
  gauss->add_option("-o,--output", gauss_args.output,
                    "output atoms file (nodes and weights)")
      ->required();

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand(
      "analyze", "asymptotic diagnostics of a Jacobi matrix");
  analyze->add_option("--input", analyze_args.jacobi_path,
                      "Jacobi matrix to analyze")
      ->required();
  auto* a_opt = analyze->add_option("--a-limit", analyze_args.a_limit,
                                    "limit of the diagonal entries");
  auto* b_opt = analyze->add_option("--b-limit", analyze_args.b_limit,
                                    "limit of the off-diagonal entries");
  analyze->add_option("--sigma", analyze_args.sigma_path,
                      "convolved measure, enables capacity bounds");
  auto* d_opt = analyze->add_option("--delta", analyze_args.delta,
                                    "contraction ratio for capacity bounds");
  analyze->add_option("--fit-lo", analyze_args.fit_lo,
                      "first index of an explicit power-law fit window");
  analyze->add_option("--fit-hi", analyze_args.fit_hi,
                      "last index of an explicit power-law fit window");
  analyze->add_option("-o,--output", analyze_args.output,
                      "output JSON report")
      ->required();
  analyze->add_option("--series", analyze_args.series_prefix,
                      "write (index, value) series files with this prefix");

  FixturesArgs fixtures_args;
  auto* fixtures = app.add_subcommand(
      "fixtures", "write the bundled example measures to a directory");
  fixtures->add_option("--dir", fixtures_args.directory, "target directory")
      ->required();
  fixtures->add_option("--size", fixtures_args.size,
                       "rows for the Jacobi-matrix fixtures (default 64)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  analyze_args.have_a_limit = a_opt->count() > 0;
  analyze_args.have_b_limit = b_opt->count() > 0;
  analyze_args.have_delta = d_opt->count() > 0;

  try {
    if (app.got_subcommand(closure)) return run_closure(closure_args);
    if (app.got_subcommand(convolve)) return run_convolve(convolve_args);
    if (app.got_subcommand(fixpoint)) return run_fixpoint(fixpoint_args);
    if (app.got_subcommand(invert)) return run_invert(invert_args);
    if (app.got_subcommand(frontier)) return run_frontier(frontier_args);
    if (app.got_subcommand(gauss)) return run_gauss(gauss_args);
    if (app.got_subcommand(analyze)) return run_analyze(analyze_args);
    if (app.got_subcommand(fixtures)) return run_fixtures(fixtures_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
