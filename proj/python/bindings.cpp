#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "imagewell/analysis.hpp"
#include "imagewell/potential.hpp"
#include "imagewell/solver.hpp"
#include "imagewell/special_functions.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace pybind11::literals;
using namespace imagewell;

namespace {

AssembleOptions make_options(Construction construction, const std::string& potential) {
  AssembleOptions options;
  options.construction = construction;
  if (potential == "first-image") {
    options.potential = potential_first_image;
  } else if (potential == "zero") {
    options.potential = zero_potential;
  } else if (potential != "closed") {
    throw std::invalid_argument("potential must be 'closed', 'first-image' or 'zero'");
  }
  return options;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Chebyshev collocation solver for an electron between grounded planes";

  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);

  m.attr("EULER_GAMMA") = kEulerGamma;
  m.def("digamma", py::vectorize(&digamma), "x"_a);

  m.def("potential_closed", py::vectorize(&potential_closed), "x"_a, "L"_a);
  m.def("potential_series", &potential_series, "x"_a, "L"_a, "n_terms"_a);
  m.def("potential_first_image", py::vectorize(&potential_first_image), "x"_a, "L"_a);
  m.def(
      "convergence_table",
      [](double x, double length, const std::vector<int>& terms) {
        const auto t = convergence_table(x, length, terms);
        py::list rows;
        for (const auto& r : t.rows) rows.append(py::make_tuple(r.terms, r.potential));
        return py::dict("rows"_a = rows, "closed_form"_a = t.closed_form);
      },
      "x"_a = 0.5, "L"_a = 1.0, "terms"_a = std::vector<int>{20, 200, 2000});

  py::enum_<Construction>(m, "Construction")
      .value("Direct", Construction::Direct)
      .value("SquaredFirst", Construction::SquaredFirst)
      .value("ExplicitSecond", Construction::ExplicitSecond);

  py::class_<ChebyshevGrid>(m, "ChebyshevGrid")
      .def_readonly("order", &ChebyshevGrid::order)
      .def_readonly("length", &ChebyshevGrid::length)
      .def_readonly("nodes", &ChebyshevGrid::nodes)
      .def_readonly("scaled_nodes", &ChebyshevGrid::scaled_nodes);
  m.def("build_grid", &build_grid, "M"_a, "L"_a);
  m.def(
      "first_derivative_matrix",
      [](int order, double length) {
        return first_derivative_matrix(build_grid(order, length)).matrix;
      },
      "M"_a, "L"_a);
  m.def(
      "second_derivative_interior",
      [](int order, double length, Construction construction) {
        return second_derivative_interior(build_grid(order, length), construction).matrix;
      },
      "M"_a, "L"_a, "construction"_a = Construction::SquaredFirst);
  m.def(
      "clenshaw_curtis_weights",
      [](int order, double length) { return clenshaw_curtis_weights(build_grid(order, length)); },
      "M"_a, "L"_a);

  m.def(
      "assemble",
      [](int order, double length, Construction construction, const std::string& potential) {
        return assemble(order, length, make_options(construction, potential)).matrix;
      },
      "M"_a, "L"_a, "construction"_a = Construction::SquaredFirst,
      "potential"_a = "closed");

  py::enum_<Parity>(m, "Parity")
      .value("Even", Parity::Even)
      .value("Odd", Parity::Odd)
      .value("Mixed", Parity::Mixed);

  py::class_<EigenSolution>(m, "EigenSolution")
      .def_readonly("L", &EigenSolution::length)
      .def_readonly("M", &EigenSolution::order)
      .def_readonly("energies", &EigenSolution::energies)
      .def_readonly("states", &EigenSolution::states)
      .def_readonly("parities", &EigenSolution::parities)
      .def_readonly("x", &EigenSolution::positions)
      .def_readonly("weights", &EigenSolution::weights)
      .def_readonly("max_imag", &EigenSolution::max_imag)
      .def_readonly("imag_warning", &EigenSolution::imag_warning)
      .def_readonly("trusted_count", &EigenSolution::trusted_count)
      .def("__repr__", [](const EigenSolution& s) {
        return "<EigenSolution L=" + std::to_string(s.length) +
               " M=" + std::to_string(s.order) +
               " states=" + std::to_string(s.state_count()) + ">";
      });

  m.def(
      "solve",
      [](int order, double length, int n_states, bool states, Construction construction,
         const std::string& potential) {
        EigensolveOptions options;
        options.compute_states = states;
        py::gil_scoped_release release;
        return solve(order, length, n_states, make_options(construction, potential), options);
      },
      "M"_a, "L"_a, "n_states"_a = 10, "states"_a = true,
      "construction"_a = Construction::SquaredFirst, "potential"_a = "closed");
  m.def(
      "eigensolve",
      [](const Eigen::MatrixXd& matrix, int order, double length, int n_states) {
        SpectralHamiltonian h;
        h.matrix = matrix;
        h.order = order;
        h.length = length;
        h.grid = build_grid(order, length);
        if (matrix.rows() != order - 1 || matrix.cols() != order - 1) {
          throw std::invalid_argument("matrix must be (M-1) x (M-1)");
        }
        return eigensolve(h, n_states);
      },
      "H"_a, "M"_a, "L"_a, "n_states"_a);

  m.def("overlap_matrix", &overlap_matrix, "solution"_a,
        "Gram matrix of the states under the order-2M product quadrature.");

  m.def("pib_energy", &pib_energy, "N"_a, "L"_a);
  m.def("image_state_energy", &image_state_energy, "n"_a);
  m.def("quantum_defect", &quantum_defect, "energy"_a, "N"_a, "L"_a);
  m.def("single_plane_ground", py::vectorize(&single_plane_ground), "x"_a);
  m.def("analytic_splitting", &analytic_splitting, "L"_a);
  m.def(
      "defect_table",
      [](double length, int order, int n_max) {
        py::list out;
        for (const auto& d : defect_table(length, order, n_max)) {
          out.append(py::make_tuple(d.n, d.energy,
                                    d.defect ? py::cast(*d.defect) : py::none()));
        }
        return out;
      },
      "L"_a, "M"_a, "N_max"_a);
  m.def(
      "energy_sweep",
      [](const std::vector<double>& lengths, int n_states, std::optional<int> order) {
        py::list out;
        for (const auto& r : energy_sweep(lengths, n_states, order)) {
          out.append(py::make_tuple(r.length, r.order, r.energies));
        }
        return out;
      },
      "L"_a, "n_states"_a = 10, "M"_a = py::none());
  m.def(
      "splitting_sweep",
      [](const std::vector<double>& lengths, std::optional<int> order) {
        py::list out;
        for (const auto& r : splitting_sweep(lengths, order)) {
          out.append(py::dict("L"_a = r.length, "M"_a = r.order, "dE_numeric"_a = r.numeric,
                              "dE_analytic"_a = r.analytic, "resolved"_a = r.resolved));
        }
        return out;
      },
      "L"_a, "M"_a = py::none());

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
