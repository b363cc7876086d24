#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ldmax/cli_io.hpp"
#include "ldmax/diagnostics.hpp"
#include "ldmax/ldp.hpp"
#include "ldmax/mc.hpp"
#include "ldmax/ruin.hpp"

namespace py = pybind11;
using namespace ldmax;

PYBIND11_MODULE(_ldmax, m) {
    m.doc() = "Exact and Monte Carlo tail asymptotics for heavy-tailed maxima";

    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<degenerate_data_error>(m, "DegenerateDataError",
                                                  PyExc_ArithmeticError);

    py::class_<TailModel>(m, "TailModel")
        .def_static("pareto", &TailModel::pareto, py::arg("alpha"), py::arg("xm"))
        .def_static("burr", &TailModel::burr, py::arg("c"), py::arg("k"))
        .def_static("log_pareto", &TailModel::log_pareto,
                    py::arg("alpha"), py::arg("gamma"), py::arg("x0"))
        .def_property_readonly("alpha", &TailModel::alpha)
        .def_property_readonly("support_low", &TailModel::support_low)
        .def("survival", &TailModel::survival)
        .def("density", &TailModel::density)
        .def("quantile", &TailModel::quantile)
        .def("slowly_varying_part", &TailModel::slowly_varying_part)
        .def("sample_one", &TailModel::sample_one)
        .def("__repr__", &TailModel::describe);

    py::class_<Interval>(m, "Interval")
        .def(py::init([](double low, double high, bool low_closed, bool high_closed) {
                 return Interval{low, high, low_closed, high_closed};
             }),
             py::arg("low"), py::arg("high"),
             py::arg("low_closed") = false, py::arg("high_closed") = false)
        .def_readonly("low", &Interval::low)
        .def_readonly("high", &Interval::high)
        .def_readonly("low_closed", &Interval::low_closed)
        .def_readonly("high_closed", &Interval::high_closed);

    py::class_<BorelSubset>(m, "BorelSubset")
        .def(py::init<std::vector<Interval>>())
        .def_property_readonly("intervals", &BorelSubset::intervals)
        .def("is_null", &BorelSubset::is_null)
        .def("contains", &BorelSubset::contains);

    py::class_<RatePoint>(m, "RatePoint")
        .def_readonly("n", &RatePoint::n)
        .def_readonly("prob", &RatePoint::prob)
        .def_readonly("r_n", &RatePoint::r_n)
        .def_readonly("target", &RatePoint::target)
        .def_readonly("gap", &RatePoint::gap);

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init([](std::int64_t samples, std::uint64_t seed, std::int64_t chunk) {
                 return SimConfig{samples, seed, chunk};
             }),
             py::arg("samples"), py::arg("seed") = 0, py::arg("chunk_size") = 4096)
        .def_readonly("samples", &SimConfig::samples)
        .def_readonly("seed", &SimConfig::seed)
        .def_readonly("chunk_size", &SimConfig::chunk_size);

    py::class_<Estimate>(m, "Estimate")
        .def_readonly("p_hat", &Estimate::p_hat)
        .def_readonly("samples", &Estimate::samples)
        .def_readonly("stderr", &Estimate::stderr_)
        .def_readonly("ci_low", &Estimate::ci_low)
        .def_readonly("ci_high", &Estimate::ci_high);

    py::class_<DecayFit>(m, "DecayFit")
        .def_readonly("slope", &DecayFit::slope)
        .def_readonly("intercept", &DecayFit::intercept)
        .def_readonly("target", &DecayFit::target)
        .def_readonly("residual_max", &DecayFit::residual_max);

    py::class_<Violation>(m, "Violation")
        .def_readonly("point", &Violation::point)
        .def_readonly("value", &Violation::value)
        .def_readonly("bound", &Violation::bound);

    py::class_<DiagnosticReport>(m, "DiagnosticReport")
        .def_readonly("check_name", &DiagnosticReport::check_name)
        .def_readonly("grid", &DiagnosticReport::grid)
        .def_readonly("values", &DiagnosticReport::values)
        .def_readonly("violations", &DiagnosticReport::violations)
        .def_readonly("pass_", &DiagnosticReport::pass)
        .def_readonly("supremum", &DiagnosticReport::supremum)
        .def_readonly("empirical_t0", &DiagnosticReport::empirical_t0);

    m.def("parse_model_spec", &parse_model_spec);
    m.def("parse_set_spec", &parse_set_spec);
    m.def("parse_n_grid", &parse_n_grid);
    m.def("essential_infimum", &essential_infimum);

    m.def("scaling_constant", &scaling_constant);
    m.def("threshold", &threshold);
    m.def("z_value", &z_value);
    m.def("exact_exceed_prob", &exact_exceed_prob);
    m.def("log_exceed_prob", &log_exceed_prob);
    m.def("exact_set_prob", &exact_set_prob);
    m.def("log_set_prob", &log_set_prob);
    m.def("log_density_zn", &log_density_zn);
    m.def("rate_function", &rate_function);
    m.def("normalized_log_prob", &normalized_log_prob);

    m.def("sample_max", &sample_max);
    m.def("brute_force_max",
          [](const TailModel& model, std::int64_t n, const std::vector<double>& u) {
              return brute_force_max(model, n, u);
          });
    m.def("estimate_set_prob", &estimate_set_prob, py::arg("model"), py::arg("n"),
          py::arg("a"), py::arg("cfg"), py::arg("threads") = 1);

    m.def("potter_check", &potter_check);
    m.def("von_mises_ratio", &von_mises_ratio);
    m.def("scaling_exponent_table", &scaling_exponent_table);
    m.def("frechet_limit_error", &frechet_limit_error);
    m.def("density_rate_error", &density_rate_error);
    m.def("default_potter_t_grid", &default_potter_t_grid);
    m.def("default_potter_x_grid", &default_potter_x_grid);
    m.def("default_frechet_y_grid", &default_frechet_y_grid);

    m.def("premium", &premium);
    m.def("ruin_prob_exact", &ruin_prob_exact);
    m.def("log_ruin_prob", &log_ruin_prob);
    m.def("ruin_prob_mc", &ruin_prob_mc, py::arg("model"), py::arg("n"),
          py::arg("beta"), py::arg("cfg"), py::arg("threads") = 1);
    m.def("decay_slope",
          [](const TailModel& model, double beta, const std::vector<std::int64_t>& grid) {
              return decay_slope({model, beta, grid});
          },
          py::arg("model"), py::arg("beta"), py::arg("n_grid"));
}
