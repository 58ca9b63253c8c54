// Python bindings for the main library operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "ifsjacobi/analysis.hpp"
#include "ifsjacobi/closure.hpp"
#include "ifsjacobi/convolution.hpp"
#include "ifsjacobi/core.hpp"
#include "ifsjacobi/discrete_measure.hpp"
#include "ifsjacobi/error.hpp"
#include "ifsjacobi/inverse.hpp"
#include "ifsjacobi/io.hpp"
#include "ifsjacobi/jacobi_matrix.hpp"
#include "ifsjacobi/spectral.hpp"

namespace py = pybind11;

using ifsjacobi::DiscreteMeasure;
using ifsjacobi::JacobiMatrix;

namespace {

DiscreteMeasure measure_from_lists(const std::vector<double>& nodes,
                                   const std::vector<double>& weights) {
  if (nodes.size() != weights.size()) {
    throw ifsjacobi::Error(ifsjacobi::ErrorKind::InvalidArgument,
                           "nodes and weights must have the same length");
  }
  std::vector<ifsjacobi::Atom> atoms(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    atoms[i] = {nodes[i], weights[i]};
  }
  return DiscreteMeasure(std::move(atoms));
}

ifsjacobi::FixpointConfig make_config(double tolerance,
                                      std::size_t max_iterations,
                                      bool record_trajectory) {
  ifsjacobi::FixpointConfig config;
  config.tolerance = tolerance;
  config.max_iterations = max_iterations;
  config.record_trajectory = record_trajectory;
  return config;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Jacobi matrices of invariant measures of homogeneous affine iterated "
      "function systems";

  py::register_exception<ifsjacobi::Error>(m, "Error");

  py::class_<JacobiMatrix>(m, "JacobiMatrix")
      .def(py::init<std::vector<double>, std::vector<double>>(),
           py::arg("diag"), py::arg("offdiag"),
           "Create from the diagonal a_0..a_{n-1} and off-diagonal "
           "b_1..b_{n-1}.")
      .def("__len__", &JacobiMatrix::size)
      .def("size", &JacobiMatrix::size)
      .def("a", &JacobiMatrix::a, py::arg("j"))
      .def("b", &JacobiMatrix::b, py::arg("j"))
      .def("diag",
           [](const JacobiMatrix& self) {
             return std::vector<double>(self.diag().begin(), self.diag().end());
           })
      .def("offdiag",
           [](const JacobiMatrix& self) {
             return std::vector<double>(self.offdiag().begin(),
                                        self.offdiag().end());
           })
      .def("leading", &JacobiMatrix::leading, py::arg("m"))
      .def("__eq__",
           [](const JacobiMatrix& self, const JacobiMatrix& other) {
             return self == other;
           })
      .def("__repr__", [](const JacobiMatrix& self) {
        return "JacobiMatrix(size=" + std::to_string(self.size()) + ")";
      });

  py::class_<DiscreteMeasure>(m, "DiscreteMeasure")
      .def(py::init(&measure_from_lists), py::arg("nodes"), py::arg("weights"),
           "Create a finite atomic probability measure; weights are "
           "normalized to total one.")
      .def("__len__", &DiscreteMeasure::size)
      .def("size", &DiscreteMeasure::size)
      .def("node", &DiscreteMeasure::node, py::arg("i"))
      .def("weight", &DiscreteMeasure::weight, py::arg("i"))
      .def("nodes",
           [](const DiscreteMeasure& self) {
             std::vector<double> out(self.size());
             for (std::size_t i = 0; i < self.size(); ++i) out[i] = self.node(i);
             return out;
           })
      .def("weights",
           [](const DiscreteMeasure& self) {
             std::vector<double> out(self.size());
             for (std::size_t i = 0; i < self.size(); ++i) {
               out[i] = self.weight(i);
             }
             return out;
           })
      .def("__repr__", [](const DiscreteMeasure& self) {
        return "DiscreteMeasure(size=" + std::to_string(self.size()) + ")";
      });

  py::class_<ifsjacobi::FixpointReport>(m, "FixpointReport")
      .def_readonly("iterations", &ifsjacobi::FixpointReport::iterations)
      .def_readonly("converged", &ifsjacobi::FixpointReport::converged)
      .def_readonly("distances", &ifsjacobi::FixpointReport::distances)
      .def_readonly("trajectory", &ifsjacobi::FixpointReport::trajectory);

  py::class_<ifsjacobi::FixpointResult>(m, "FixpointResult")
      .def_readonly("jacobi", &ifsjacobi::FixpointResult::jacobi)
      .def_readonly("report", &ifsjacobi::FixpointResult::report);

  py::class_<ifsjacobi::GaussRule>(m, "GaussRule")
      .def_readonly("nodes", &ifsjacobi::GaussRule::nodes)
      .def_readonly("weights", &ifsjacobi::GaussRule::weights)
      .def("__len__", &ifsjacobi::GaussRule::size);

  py::class_<ifsjacobi::InverseResult>(m, "InverseResult")
      .def_readonly("sigma_jacobi", &ifsjacobi::InverseResult::sigma_jacobi)
      .def_readonly("feasible_size", &ifsjacobi::InverseResult::feasible_size)
      .def_readonly("requested_size", &ifsjacobi::InverseResult::requested_size)
      .def_readonly("terminated_early",
                    &ifsjacobi::InverseResult::terminated_early);

  py::class_<ifsjacobi::FrontierPoint>(m, "FrontierPoint")
      .def_readonly("n", &ifsjacobi::FrontierPoint::n)
      .def_readonly("delta_n", &ifsjacobi::FrontierPoint::delta_n)
      .def_readonly("lower", &ifsjacobi::FrontierPoint::lower)
      .def_readonly("upper", &ifsjacobi::FrontierPoint::upper);

  py::class_<ifsjacobi::FeasibilityFrontier>(m, "FeasibilityFrontier")
      .def_readonly("points", &ifsjacobi::FeasibilityFrontier::points)
      .def_readonly("tol_rel", &ifsjacobi::FeasibilityFrontier::tol_rel);

  py::class_<ifsjacobi::PowerlawFit>(m, "PowerlawFit")
      .def_readonly("exponent", &ifsjacobi::PowerlawFit::exponent)
      .def_readonly("log_amplitude", &ifsjacobi::PowerlawFit::log_amplitude)
      .def_readonly("rms_residual", &ifsjacobi::PowerlawFit::rms_residual)
      .def_readonly("count", &ifsjacobi::PowerlawFit::count);

  py::class_<ifsjacobi::NevaiReport>(m, "NevaiReport")
      .def_readonly("a_limit", &ifsjacobi::NevaiReport::a_limit)
      .def_readonly("b_limit", &ifsjacobi::NevaiReport::b_limit)
      .def_readonly("deviations", &ifsjacobi::NevaiReport::deviations)
      .def_readonly("partial_sums", &ifsjacobi::NevaiReport::partial_sums)
      .def_readonly("fitted_exponent", &ifsjacobi::NevaiReport::fitted_exponent)
      .def_readonly("summable_trend", &ifsjacobi::NevaiReport::summable_trend);

  py::class_<ifsjacobi::CapacityReport>(m, "CapacityReport")
      .def_readonly("estimates", &ifsjacobi::CapacityReport::estimates)
      .def_readonly("final_estimate", &ifsjacobi::CapacityReport::final_estimate)
      .def_readonly("has_bounds", &ifsjacobi::CapacityReport::has_bounds)
      .def_readonly("sigma_estimate", &ifsjacobi::CapacityReport::sigma_estimate)
      .def_readonly("lower_bound", &ifsjacobi::CapacityReport::lower_bound)
      .def_readonly("upper_bound", &ifsjacobi::CapacityReport::upper_bound);

  m.def("jacobi_lebesgue", &ifsjacobi::jacobi_lebesgue, py::arg("n"),
        "Jacobi matrix of the uniform measure on [-1, 1].");
  m.def("jacobi_from_discrete", &ifsjacobi::jacobi_from_discrete,
        py::arg("measure"), py::arg("n"),
        "Jacobi matrix of a finite atomic measure, up to its rank.");
  m.def("frobenius_distance", &ifsjacobi::frobenius_distance, py::arg("x"),
        py::arg("y"));
  m.def("fibonacci_jacobi", &ifsjacobi::fibonacci_jacobi, py::arg("n"),
        py::arg("value_a") = 0.4, py::arg("value_b") = 0.5,
        "Zero-diagonal Jacobi matrix with off-diagonals arranged by the "
        "substitution word A -> AB, B -> A.");

  m.def("closure",
        py::overload_cast<const JacobiMatrix&, double, std::size_t>(
            &ifsjacobi::closure),
        py::arg("sigma"), py::arg("delta"), py::arg("size"),
        "Jacobi matrix of the IFS invariant measure.");
  m.def("closure",
        [](const DiscreteMeasure& sigma, double delta, std::size_t size) {
          return ifsjacobi::closure_atoms(sigma, delta, size);
        },
        py::arg("sigma"), py::arg("delta"), py::arg("size"));

  m.def("convolve",
        py::overload_cast<const JacobiMatrix&, const JacobiMatrix&, double,
                          std::size_t>(&ifsjacobi::convolve),
        py::arg("sigma"), py::arg("eta"), py::arg("delta"), py::arg("size"));
  m.def("convolve",
        py::overload_cast<const DiscreteMeasure&, const JacobiMatrix&, double,
                          std::size_t>(&ifsjacobi::convolve),
        py::arg("sigma"), py::arg("eta"), py::arg("delta"), py::arg("size"));
  m.def("convolve",
        py::overload_cast<const JacobiMatrix&, const DiscreteMeasure&, double,
                          std::size_t>(&ifsjacobi::convolve),
        py::arg("sigma"), py::arg("eta"), py::arg("delta"), py::arg("size"));
  m.def("convolve",
        py::overload_cast<const DiscreteMeasure&, const DiscreteMeasure&,
                          double, std::size_t>(&ifsjacobi::convolve),
        py::arg("sigma"), py::arg("eta"), py::arg("delta"), py::arg("size"));

  m.def("convolve_spectral",
        py::overload_cast<const JacobiMatrix&, const JacobiMatrix&, double,
                          std::size_t>(&ifsjacobi::convolve_spectral),
        py::arg("sigma"), py::arg("eta"), py::arg("delta"), py::arg("size"));
  m.def("convolve_spectral",
        py::overload_cast<const DiscreteMeasure&, const JacobiMatrix&, double,
                          std::size_t>(&ifsjacobi::convolve_spectral),
        py::arg("sigma"), py::arg("eta"), py::arg("delta"), py::arg("size"));

  const auto fixpoint_j = [](const JacobiMatrix& sigma, double delta,
                             std::size_t size, const JacobiMatrix* init,
                             double tolerance, std::size_t max_iterations,
                             bool record_trajectory, bool spectral) {
    const JacobiMatrix start =
        init != nullptr ? *init : ifsjacobi::jacobi_lebesgue(size);
    const auto config =
        make_config(tolerance, max_iterations, record_trajectory);
    return spectral
               ? ifsjacobi::fixpoint_spectral(sigma, delta, size, start, config)
               : ifsjacobi::fixpoint(sigma, delta, size, start, config);
  };
  const auto fixpoint_m = [](const DiscreteMeasure& sigma, double delta,
                             std::size_t size, const JacobiMatrix* init,
                             double tolerance, std::size_t max_iterations,
                             bool record_trajectory, bool spectral) {
    const JacobiMatrix start =
        init != nullptr ? *init : ifsjacobi::jacobi_lebesgue(size);
    const auto config =
        make_config(tolerance, max_iterations, record_trajectory);
    return spectral
               ? ifsjacobi::fixpoint_spectral(sigma, delta, size, start, config)
               : ifsjacobi::fixpoint(sigma, delta, size, start, config);
  };
  m.def("fixpoint", fixpoint_j, py::arg("sigma"), py::arg("delta"),
        py::arg("size"), py::arg("init") = nullptr, py::arg("tolerance") = 0.0,
        py::arg("max_iterations") = 200, py::arg("record_trajectory") = false,
        py::arg("spectral") = false,
        "Iterate the convolution map from init (default: uniform measure) "
        "until the Frobenius step distance drops below tolerance.");
  m.def("fixpoint", fixpoint_m, py::arg("sigma"), py::arg("delta"),
        py::arg("size"), py::arg("init") = nullptr, py::arg("tolerance") = 0.0,
        py::arg("max_iterations") = 200, py::arg("record_trajectory") = false,
        py::arg("spectral") = false);

  m.def("gauss_rule", &ifsjacobi::gauss_rule, py::arg("jacobi"), py::arg("n"),
        "Gaussian quadrature nodes and weights of orders 1..n.");
  m.def("invert", &ifsjacobi::invert, py::arg("mu"), py::arg("delta"),
        py::arg("size"),
        "Recover the convolved measure from an invariant target; stops at "
        "the feasibility boundary.");
  m.def("delta_frontier", &ifsjacobi::delta_frontier, py::arg("mu"),
        py::arg("sizes"), py::arg("tol_rel") = 1e-3,
        "Bracket the largest feasible contraction ratio per truncation "
        "size.");

  m.def("powerlaw_fit",
        [](const std::vector<double>& values, std::size_t lo, std::size_t hi) {
          return ifsjacobi::powerlaw_fit(values, lo, hi);
        },
        py::arg("values"), py::arg("lo"), py::arg("hi"),
        "Least-squares power-law fit of values[n-1] ~ C * n^exponent over "
        "the index window [lo, hi].");
  m.def("nevai_report", &ifsjacobi::nevai_report, py::arg("jacobi"),
        py::arg("a_limit"), py::arg("b_limit"));
  m.def("capacity_report",
        py::overload_cast<const JacobiMatrix&>(&ifsjacobi::capacity_report),
        py::arg("jacobi"));
  m.def("capacity_report",
        py::overload_cast<const JacobiMatrix&, const JacobiMatrix&, double>(
            &ifsjacobi::capacity_report),
        py::arg("jacobi"), py::arg("sigma"), py::arg("delta"));

  m.def("read_jacobi_file", &ifsjacobi::io::read_jacobi_file, py::arg("path"));
  m.def("read_atoms_file", &ifsjacobi::io::read_atoms_file, py::arg("path"));
  m.def("write_jacobi_file", &ifsjacobi::io::write_jacobi_file,
        py::arg("path"), py::arg("jacobi"));
  m.def("write_atoms_file", &ifsjacobi::io::write_atoms_file, py::arg("path"),
        py::arg("measure"));
}
