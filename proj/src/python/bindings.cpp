#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "maserpairs/errors.hpp"
#include "maserpairs/fock.hpp"
#include "maserpairs/lewsan.hpp"
#include "maserpairs/oracle.hpp"
#include "maserpairs/pairstate.hpp"
#include "maserpairs/sweep.hpp"

namespace py = pybind11;

using namespace maserpairs;

namespace {

// Fixed-size vectorizable Eigen types are hazardous as by-value pybind11
// arguments (alignment of the caster storage is not guaranteed); accept a
// dynamic matrix and check the shape instead.
pairstate::TwoQubitDensity as_two_qubit(const Eigen::MatrixXcd& m) {
    if (m.rows() != 4 || m.cols() != 4)
        throw std::invalid_argument("expected a 4x4 matrix");
    return pairstate::TwoQubitDensity(m);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "One-atom maser: steady-state field, two-atom correlations and separability";

    py::register_exception<TruncationOverflow>(m, "TruncationOverflow");
    py::register_exception<InvalidState>(m, "InvalidState");
    py::register_exception<NoValidRoot>(m, "NoValidRoot");
    py::register_exception<DecompositionInvalid>(m, "DecompositionInvalid");

    // fock
    py::class_<fock::MaserParams>(m, "MaserParams")
        .def(py::init<double, double, double>(), py::arg("nex"), py::arg("nu"), py::arg("phi"))
        .def_readwrite("nex", &fock::MaserParams::nex)
        .def_readwrite("nu", &fock::MaserParams::nu)
        .def_readwrite("phi", &fock::MaserParams::phi);
    py::class_<fock::TruncationPolicy>(m, "TruncationPolicy")
        .def(py::init<double, std::size_t>(), py::arg("tail_eps") = 1e-12,
             py::arg("n_cap") = 10000)
        .def_readwrite("tail_eps", &fock::TruncationPolicy::tail_eps)
        .def_readwrite("n_cap", &fock::TruncationPolicy::n_cap);
    py::class_<fock::PhotonDistribution>(m, "PhotonDistribution")
        .def_readonly("probs", &fock::PhotonDistribution::probs)
        .def_readonly("tail_bound", &fock::PhotonDistribution::tail_bound)
        .def_property_readonly("n_max", &fock::PhotonDistribution::n_max);

    m.def(
        "rabi_coefficients",
        [](std::size_t n, double phi) {
            const auto rc = fock::rabi_coefficients(n, phi);
            return py::make_tuple(rc.c, rc.s);
        },
        py::arg("n"), py::arg("phi"));
    m.def("steady_state", &fock::steady_state, py::arg("params"),
          py::arg("trunc") = fock::TruncationPolicy{});
    m.def("apply_atom_passage", &fock::apply_atom_passage, py::arg("dist"), py::arg("phi"));
    m.def("mean_photon", &fock::mean_photon, py::arg("dist"));

    // pairstate
    py::class_<pairstate::PairCorrelations>(m, "PairCorrelations")
        .def(py::init<double, double, double, double>(), py::arg("s"), py::arg("t"), py::arg("u"),
             py::arg("v"))
        .def_readwrite("s", &pairstate::PairCorrelations::s)
        .def_readwrite("t", &pairstate::PairCorrelations::t)
        .def_readwrite("u", &pairstate::PairCorrelations::u)
        .def_readwrite("v", &pairstate::PairCorrelations::v)
        .def("__repr__", [](const pairstate::PairCorrelations& c) {
            return "PairCorrelations(s=" + std::to_string(c.s) + ", t=" + std::to_string(c.t) +
                   ", u=" + std::to_string(c.u) + ", v=" + std::to_string(c.v) + ")";
        });
    py::class_<pairstate::ValidityReport>(m, "ValidityReport")
        .def_readonly("transverse_residual", &pairstate::ValidityReport::transverse_residual)
        .def_readonly("longitudinal_residual", &pairstate::ValidityReport::longitudinal_residual)
        .def_readonly("passed", &pairstate::ValidityReport::passed);

    m.def("correlations", &pairstate::correlations, py::arg("dist"), py::arg("phi"));
    m.def("validate", &pairstate::validate, py::arg("corr"));
    m.def("delta_trace_norm", &pairstate::delta_trace_norm, py::arg("corr"));
    m.def("degree_of_correlation", &pairstate::degree_of_correlation, py::arg("corr"));
    m.def("to_density_matrix", &pairstate::to_density_matrix, py::arg("corr"));
    m.def("is_separable", &pairstate::is_separable, py::arg("corr"));
    m.def(
        "partial_transpose",
        [](const Eigen::MatrixXcd& rho) { return pairstate::partial_transpose(as_two_qubit(rho)); },
        py::arg("rho"));

    // lewsan
    py::class_<lewsan::LsResult>(m, "LsResult")
        .def_readonly("sep_degree", &lewsan::LsResult::sep_degree)
        .def_readonly("lambda_cap", &lewsan::LsResult::lambda_cap)
        .def_readonly("p", &lewsan::LsResult::p)
        .def_readonly("q", &lewsan::LsResult::q)
        .def_readonly("rho_pure", &lewsan::LsResult::rho_pure)
        .def_readonly("rho_sep", &lewsan::LsResult::rho_sep);
    m.def("lambda_cap", &lewsan::lambda_cap, py::arg("corr"));
    m.def("solve_p", &lewsan::solve_p, py::arg("corr"), py::arg("lambda_cap"));
    m.def("ls_decompose", &lewsan::ls_decompose, py::arg("corr"));

    // oracle
    py::class_<oracle::LsSearchOptions>(m, "LsSearchOptions")
        .def(py::init<>())
        .def_readwrite("grid", &oracle::LsSearchOptions::grid)
        .def_readwrite("probes", &oracle::LsSearchOptions::probes)
        .def_readwrite("bisect_tol", &oracle::LsSearchOptions::bisect_tol)
        .def_readwrite("seed", &oracle::LsSearchOptions::seed);
    m.def("matrix_correlations", &oracle::matrix_correlations, py::arg("dist"), py::arg("phi"));
    m.def(
        "spectrum_4x4",
        [](const Eigen::MatrixXcd& rho) { return oracle::spectrum_4x4(as_two_qubit(rho)); },
        py::arg("rho"));
    m.def("numeric_trace_norm", &oracle::numeric_trace_norm, py::arg("corr"));
    m.def("numeric_ls_search", &oracle::numeric_ls_search, py::arg("corr"),
          py::arg("opts") = oracle::LsSearchOptions{});

    // sweep
    py::class_<sweep::SweepConfig>(m, "SweepConfig")
        .def(py::init<>())
        .def_readwrite("nex", &sweep::SweepConfig::nex)
        .def_readwrite("nu", &sweep::SweepConfig::nu)
        .def_readwrite("theta_min", &sweep::SweepConfig::theta_min)
        .def_readwrite("theta_max", &sweep::SweepConfig::theta_max)
        .def_readwrite("steps", &sweep::SweepConfig::steps)
        .def_readwrite("tail_eps", &sweep::SweepConfig::tail_eps)
        .def_readwrite("verify", &sweep::SweepConfig::verify);
    py::class_<sweep::SweepRecord>(m, "SweepRecord")
        .def_readonly("theta_over_pi", &sweep::SweepRecord::theta_over_pi)
        .def_readonly("phi_over_pi", &sweep::SweepRecord::phi_over_pi)
        .def_readonly("s", &sweep::SweepRecord::s)
        .def_readonly("t", &sweep::SweepRecord::t)
        .def_readonly("u", &sweep::SweepRecord::u)
        .def_readonly("v", &sweep::SweepRecord::v)
        .def_readonly("trace_norm", &sweep::SweepRecord::trace_norm)
        .def_readonly("deg_corr", &sweep::SweepRecord::deg_corr)
        .def_readonly("separable", &sweep::SweepRecord::separable)
        .def_readonly("sep_degree", &sweep::SweepRecord::sep_degree)
        .def_readonly("one_minus_S", &sweep::SweepRecord::one_minus_S)
        .def_readonly("p", &sweep::SweepRecord::p)
        .def_readonly("nbar", &sweep::SweepRecord::nbar)
        .def_readonly("n_max", &sweep::SweepRecord::n_max);
    py::class_<sweep::Peak>(m, "Peak")
        .def_readonly("phi_over_pi", &sweep::Peak::phi_over_pi)
        .def_readonly("value", &sweep::Peak::value);
    m.def("run_sweep", &sweep::run_sweep, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("evaluate_point", &sweep::evaluate_point, py::arg("nex"), py::arg("nu"), py::arg("phi"),
          py::arg("tail_eps") = 1e-12);
    m.def("find_peaks", &sweep::find_peaks, py::arg("records"));
    m.def("emit_csv", &sweep::emit_csv, py::arg("records"), py::arg("path"));
    m.def("emit_plot_data", &sweep::emit_plot_data, py::arg("records"), py::arg("path"));
}
