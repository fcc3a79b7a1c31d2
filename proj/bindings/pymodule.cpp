#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "guplab/eigenstates.hpp"
#include "guplab/operators.hpp"
#include "guplab/oracle.hpp"
#include "guplab/oscillator.hpp"

namespace py = pybind11;
using namespace guplab;

PYBIND11_MODULE(_core, m) {
  m.doc() = "bounded-momentum deformed quantum mechanics";

  py::class_<ModelParameters>(m, "ModelParameters")
      .def(py::init([](double beta, double hbar, double mass, double omega) {
             ModelParameters p{beta, hbar, mass, omega};
             p.validate();
             return p;
           }),
           py::arg("beta") = 0.1, py::arg("hbar") = 1.0, py::arg("mass") = 1.0,
           py::arg("omega") = 1.0)
      .def_readonly("beta", &ModelParameters::beta)
      .def_readonly("hbar", &ModelParameters::hbar)
      .def_readonly("mass", &ModelParameters::mass)
      .def_readonly("omega", &ModelParameters::omega)
      .def_property_readonly("g", &ModelParameters::g)
      .def_property_readonly("p_max", &ModelParameters::p_max)
      .def_property_readonly("min_length", &ModelParameters::min_length)
      .def("__repr__", [](const ModelParameters& p) {
        return "ModelParameters(beta=" + std::to_string(p.beta) + ")";
      });

  py::class_<ChebyshevGrid>(m, "ChebyshevGrid")
      .def_readonly("nodes", &ChebyshevGrid::nodes)
      .def_readonly("weights", &ChebyshevGrid::weights)
      .def("__len__", &ChebyshevGrid::size);
  m.def("build_grid", &build_grid, py::arg("params"), py::arg("n"));

  py::class_<AnalyticState>(m, "State")
      .def_readonly("order", &AnalyticState::order)
      .def("value", [](const AnalyticState& s, double p) { return s.at(p).f; }, py::arg("p"))
      .def("derivative", [](const AnalyticState& s, double p) { return s.at(p).d1; },
           py::arg("p"));

  m.def("apply_P", &apply_P, py::arg("state"));
  m.def("apply_X", &apply_X, py::arg("state"));
  m.def("commutator_residual", &commutator_residual, py::arg("state"), py::arg("probes"));
  m.def("inner_product",
        py::overload_cast<const AnalyticState&, const AnalyticState&, const ChebyshevGrid&>(
            &inner_product),
        py::arg("a"), py::arg("b"), py::arg("grid"));

  py::class_<ExpectationReport>(m, "ExpectationReport")
      .def_readonly("norm", &ExpectationReport::norm)
      .def_readonly("mean_X", &ExpectationReport::mean_X)
      .def_readonly("mean_P", &ExpectationReport::mean_P)
      .def_readonly("var_X", &ExpectationReport::var_X)
      .def_readonly("var_P", &ExpectationReport::var_P)
      .def_readonly("mean_p2_lower", &ExpectationReport::mean_p2_lower)
      .def_readonly("mean_P2_deformed", &ExpectationReport::mean_P2_deformed)
      .def_readonly("robertson_rhs", &ExpectationReport::robertson_rhs)
      .def_readonly("deformed_moments_divergent",
                    &ExpectationReport::deformed_moments_divergent);
  m.def("expectation_report", &expectation_report, py::arg("state"), py::arg("grid"));

  m.def("position_eigenstate",
        [](const ModelParameters& p, double lam) { return position_eigenstate(p, lam).state; },
        py::arg("params"), py::arg("lam"));
  m.def("overlap_closed_form", &overlap_closed_form, py::arg("params"), py::arg("lam_a"),
        py::arg("lam_b"));
  m.def("overlap_quadrature", &overlap_quadrature, py::arg("params"), py::arg("lam_a"),
        py::arg("lam_b"), py::arg("base_n") = 1024);
  m.def("lattice_overlap_matrix", &lattice_overlap_matrix, py::arg("params"), py::arg("n_half"),
        py::arg("offset") = 0.0);

  py::class_<SqueezedStateParams>(m, "SqueezedStateParams")
      .def(py::init([](double mean_x, double mean_p, double dp2) {
             return SqueezedStateParams{mean_x, mean_p, dp2};
           }),
           py::arg("mean_x") = 0.0, py::arg("mean_p") = 0.0, py::arg("dp2") = 1.0)
      .def_readonly("mean_x", &SqueezedStateParams::mean_x)
      .def_readonly("mean_p", &SqueezedStateParams::mean_p)
      .def_readonly("dp2", &SqueezedStateParams::dp2);
  m.def("squeezed_state", &squeezed_state, py::arg("params"), py::arg("squeezed"));
  m.def("max_localization_state",
        [](const ModelParameters& p, double xi) { return max_localization_state(p, xi).state; },
        py::arg("params"), py::arg("xi") = 0.0);

  py::class_<MlUncertaintyProfile>(m, "MlUncertaintyProfile")
      .def_readonly("norm", &MlUncertaintyProfile::norm)
      .def_readonly("mean_X", &MlUncertaintyProfile::mean_X)
      .def_readonly("delta_X", &MlUncertaintyProfile::delta_X)
      .def_readonly("min_length_reference", &MlUncertaintyProfile::min_length_reference)
      .def_readonly("kinetic_lower", &MlUncertaintyProfile::kinetic_lower)
      .def_readonly("kinetic_deformed", &MlUncertaintyProfile::kinetic_deformed)
      .def_readonly("robertson_lhs", &MlUncertaintyProfile::robertson_lhs)
      .def_readonly("robertson_rhs", &MlUncertaintyProfile::robertson_rhs);
  m.def("ml_uncertainty_profile", &ml_uncertainty_profile, py::arg("params"), py::arg("xi") = 0.0,
        py::arg("grid_n") = 1024);

  m.def("alpha_exponent",
        [](const ModelParameters& p) {
          const AlphaExponent a = alpha_exponent(p);
          return py::make_tuple(a.alpha, a.g);
        },
        py::arg("params"));
  m.def("energy_level",
        [](const ModelParameters& p, int n) { return energy_level(p, n).energy; },
        py::arg("params"), py::arg("n"));
  m.def("energy_classical_limit", &energy_classical_limit, py::arg("params"), py::arg("n"));

  py::class_<BetheRootSet>(m, "BetheRootSet")
      .def_readonly("n", &BetheRootSet::n)
      .def_readonly("roots", &BetheRootSet::roots)
      .def_readonly("residuals", &BetheRootSet::residuals)
      .def_readonly("converged", &BetheRootSet::converged)
      .def_readonly("iterations", &BetheRootSet::iterations)
      .def("max_residual", &BetheRootSet::max_residual);
  m.def("bethe_solve", &bethe_solve, py::arg("params"), py::arg("n"));
  m.def("polynomial_oracle_roots", &polynomial_oracle_roots, py::arg("params"), py::arg("n"));
  m.def("oscillator_wavefunction",
        [](const ModelParameters& p, int n) { return oscillator_wavefunction(p, n); },
        py::arg("params"), py::arg("n"));

  m.def("oracle_spectrum",
        [](const ModelParameters& p, std::size_t m_nodes, std::size_t k) {
          return solve_spectrum(build_theta_problem(p, m_nodes), k, false).eigenvalues;
        },
        py::arg("params"), py::arg("m"), py::arg("k"),
        "k lowest eigenvalues of the Dirichlet grid oracle with m interior nodes");
  m.def("oracle_spectrum_extrapolated",
        [](const ModelParameters& p, std::size_t m_nodes, std::size_t k) {
          const auto coarse = solve_spectrum(build_theta_problem(p, m_nodes), k, false);
          const auto fine = solve_spectrum(build_theta_problem(p, 2 * m_nodes), k, false);
          std::vector<double> out;
          for (const auto& level : richardson_extrapolate(coarse, fine))
            out.push_back(level.extrapolated);
          return out;
        },
        py::arg("params"), py::arg("m"), py::arg("k"));
}
