#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stratavol/cli.hpp"
#include "stratavol/pnum.hpp"
#include "stratavol/ribbon.hpp"
#include "stratavol/sts.hpp"
#include "stratavol/verify.hpp"
#include "stratavol/volumes.hpp"

#include <sstream>

namespace py = pybind11;
using namespace stratavol;

// Exact values cross the boundary as "p/q" strings; the Python package turns
// them into Fraction objects.

namespace {

py::tuple pi_scaled(const exact::PiScaled& v) { return py::make_tuple(v.coefficient().str(), v.pi_exponent()); }

ribbon::PerimeterPair perimeters(const std::vector<std::int64_t>& black, const std::vector<std::int64_t>& white) {
    return ribbon::PerimeterPair::of_integers(black, white);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact volume computations for minimal strata of Abelian differentials";

    m.def("a_gn", [](int g, int n) { return volumes::a_gn(g, n).str(); }, py::arg("g"), py::arg("n"));
    m.def("vol_n", [](int g, int n) { return pi_scaled(volumes::vol_n(g, n)); }, py::arg("g"), py::arg("n"));
    m.def("total_volume", [](int g) { return pi_scaled(volumes::total_volume(g)); }, py::arg("g"));
    m.def(
        "c_series",
        [](int order, const std::string& route) {
            const auto c = route == "lagrange" ? volumes::c_series_inverse_route(order) : volumes::c_series(order);
            std::vector<std::vector<std::string>> out;
            for (int t = 0; t <= order; ++t) {
                std::vector<std::string> row;
                for (const auto& x : c.coeff(t).coefficients()) row.push_back(x.str());
                out.push_back(std::move(row));
            }
            return out;
        },
        py::arg("order"), py::arg("route") = "table");
    m.def("p_value", [](const std::vector<int>& parts) { return pnum::p_value(parts).get_str(); }, py::arg("parts"));
    m.def(
        "counting_function",
        [](int g, const std::vector<std::int64_t>& black, const std::vector<std::int64_t>& white) {
            return ribbon::counting_function(g, static_cast<int>(black.size()), static_cast<int>(white.size()),
                                             perimeters(black, white))
                .str();
        },
        py::arg("g"), py::arg("black"), py::arg("white"));
    m.def(
        "count_positive_trees",
        [](const std::vector<std::int64_t>& black, const std::vector<std::int64_t>& white) {
            return ribbon::count_positive_trees(static_cast<int>(black.size()), static_cast<int>(white.size()),
                                                perimeters(black, white));
        },
        py::arg("black"), py::arg("white"));
    m.def(
        "census",
        [](int g, int max_squares) {
            std::vector<py::tuple> rows;
            for (const auto& [key, e] : sts::census(g, max_squares)) {
                rows.push_back(py::make_tuple(key.first, key.second, e.count, e.weighted_count.str()));
            }
            return rows;
        },
        py::arg("g"), py::arg("max_squares"));
    m.def("verify_cylinder_formula", &sts::verify_cylinder_formula, py::arg("g"), py::arg("max_squares"));
    m.def(
        "verify",
        [](const std::string& suite, std::uint64_t seed) {
            std::vector<py::tuple> out;
            for (const auto& c : verify::run_suite(suite, seed)) out.push_back(py::make_tuple(c.suite, c.name, c.passed, c.detail));
            return out;
        },
        py::arg("suite"), py::arg("seed") = 0);
    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
