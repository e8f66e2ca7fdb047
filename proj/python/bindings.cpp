#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "latdisc/chord_geometry.hpp"
#include "latdisc/diophantine_search.hpp"
#include "latdisc/experiment.hpp"
#include "latdisc/fourier_transform.hpp"
#include "latdisc/spectral_analysis.hpp"

namespace py = pybind11;
using namespace latdisc;

namespace {

// pybind11 holders cannot be pointer-to-const
using BodyPtr = std::shared_ptr<ConvexBody>;

SamplingMode sampling(std::size_t samples, std::uint64_t seed, int grid)
{
    if (grid > 0) return UniformGrid{grid};
    return MonteCarlo{samples, seed};
}

py::object from_json(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

} // namespace

PYBIND11_MODULE(_latdisc, m)
{
    m.doc() = "Lattice point discrepancy of dilated convex bodies";

    py::class_<ConvexBody, BodyPtr>(m, "Body")
        .def_property_readonly("dimension", &ConvexBody::dimension)
        .def_property_readonly("id", &ConvexBody::id)
        .def_property_readonly("volume", &ConvexBody::volume)
        .def_property_readonly("diameter", &ConvexBody::diameter)
        .def_property_readonly("point_symmetric", &ConvexBody::is_point_symmetric)
        .def("contains", [](const ConvexBody& b, std::vector<double> y) { return b.contains_point(y); })
        .def("support", [](const ConvexBody& b, std::vector<double> u) { return b.support(Direction(std::move(u))); })
        .def("__repr__", [](const ConvexBody& b) { return "<Body " + b.id() + ">"; });

    m.def("load_body", [](const std::string& s) { return std::const_pointer_cast<ConvexBody>(load_body(s)); },
          py::arg("json_or_path"), "Body from JSON text or a JSON file path.");
    m.def("disc", [] { return BodyPtr(std::make_shared<Ellipsoid>(Ellipsoid::unit_ball(2))); });
    m.def("unit_ball", [](int d) { return BodyPtr(std::make_shared<Ellipsoid>(Ellipsoid::unit_ball(d))); },
          py::arg("d"));
    m.def("ellipsoid", [](std::vector<double> axes) { return BodyPtr(std::make_shared<Ellipsoid>(std::move(axes))); },
          py::arg("semi_axes"));
    m.def("asymmetric_body", [] { return BodyPtr(std::make_shared<PlanarSupportBody>(reference_asymmetric_body())); });

    m.def("count", [](const ConvexBody& b, double R, std::vector<double> x) { return count_points(b, R, x); },
          py::arg("body"), py::arg("R"), py::arg("x"));
    m.def("discrepancy", [](const ConvexBody& b, double R, std::vector<double> x) { return discrepancy(b, R, x); },
          py::arg("body"), py::arg("R"), py::arg("x"));

    m.def(
        "field",
        [](const ConvexBody& b, double R, std::size_t samples, std::uint64_t seed, int grid) {
            py::gil_scoped_release release;
            const auto f = discrepancy_field(b, R, sampling(samples, seed, grid));
            return std::make_pair(f.points, f.values);
        },
        py::arg("body"), py::arg("R"), py::arg("samples") = 1000, py::arg("seed") = 0, py::arg("grid") = 0,
        "Returns (points, values); points are row-major with dimension entries per sample.");

    py::class_<NormReport>(m, "NormReport")
        .def_readonly("p", &NormReport::p)
        .def_readonly("strong", &NormReport::strong)
        .def_readonly("weak", &NormReport::weak)
        .def_readonly("sup", &NormReport::sup)
        .def_readonly("samples", &NormReport::samples)
        .def_property_readonly("stderr", &NormReport::strong_stderr);
    m.def("norm_report", [](std::vector<double> values, double p) { return norm_report(values, p); },
          py::arg("values"), py::arg("p"));

    m.def("chi_hat", [](const ConvexBody& b, std::vector<double> xi) { return chi_hat(b, xi); }, py::arg("body"),
          py::arg("xi"));
    m.def("chi_hat_leading", [](const ConvexBody& b, std::vector<double> xi) { return chi_hat_leading(b, xi); },
          py::arg("body"), py::arg("xi"));
    m.def(
        "spectral_sequence",
        [](const ConvexBody& b, double R, int shell) {
            const auto s = spectral_sequence(b, R, shell);
            py::dict out;
            out["frequencies"] = s.frequencies;
            out["values"] = s.values;
            out["decay_constant"] = s.decay_constant;
            out["tail_l2"] = std::sqrt(s.tail_power_sum(2.0));
            return out;
        },
        py::arg("body"), py::arg("R"), py::arg("shell"));

    m.def(
        "key_lemma",
        [](std::vector<double> values, double p, double s) {
            const auto r = check_key_lemma(values, p, s);
            return std::make_pair(r.first_holds(), r.second_holds());
        },
        py::arg("values"), py::arg("p"), py::arg("s"));

    m.def("chord_length",
          [](const ConvexBody& b, double depth, double theta) { return chord_length(b, depth, Direction::planar(theta)); },
          py::arg("body"), py::arg("depth"), py::arg("theta"));
    m.def("podkorytov_bound",
          [](const ConvexBody& b, double rho, double theta) { return podkorytov_bound(b, rho, Direction::planar(theta)); },
          py::arg("body"), py::arg("rho"), py::arg("theta"));

    m.def("dirichlet_search", [](std::vector<double> alphas, std::uint64_t j) { return from_json(to_json(dirichlet_search(alphas, j))); },
          py::arg("alphas"), py::arg("j"));
    m.def(
        "exceptional_radii",
        [](const ConvexBody& b, double p, std::uint64_t j, bool any_dimension) {
            return from_json(to_json(exceptional_radii(b, p, j, any_dimension)));
        },
        py::arg("body"), py::arg("p"), py::arg("j"), py::arg("any_dimension") = false);

    m.def(
        "sweep_csv",
        [](BodyPtr b, std::vector<double> radii, std::vector<double> exponents, std::size_t samples,
           std::uint64_t seed) {
            SweepConfig c;
            c.body = std::move(b);
            c.radii = std::move(radii);
            c.exponents = std::move(exponents);
            c.samples = samples;
            c.seed = seed;
            std::ostringstream s;
            {
                py::gil_scoped_release release;
                write_csv(s, run_sweep(c));
            }
            return s.str();
        },
        py::arg("body"), py::arg("radii"), py::arg("exponents"), py::arg("samples") = 1000, py::arg("seed") = 0);
    m.def(
        "fit_exponent",
        [](std::vector<std::pair<double, double>> points, double gamma, double r_min) {
            const auto f = fit_exponent(points, gamma, r_min);
            py::dict out;
            out["slope"] = f.slope;
            out["intercept"] = f.intercept;
            out["residual_rms"] = f.residual_rms;
            out["points"] = f.points;
            return out;
        },
        py::arg("points"), py::arg("gamma") = 0.0, py::arg("r_min") = 0.0);
}
