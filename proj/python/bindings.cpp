#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <vector>

#include "hyperfront/estimators.hpp"
#include "hyperfront/exact_speeds.hpp"
#include "hyperfront/experiment.hpp"
#include "hyperfront/schemes.hpp"
#include "hyperfront/shooting.hpp"

namespace py = pybind11;
namespace hf = hyperfront;

namespace {

py::array_t<double> to_array(const std::vector<double>& v) {
    py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

std::vector<double> to_vector(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 1) throw py::value_error("expected a 1-d array");
    return {a.data(), a.data() + a.size()};
}

hf::ExperimentConfig config_from(const py::dict& settings) {
    hf::ExperimentConfig cfg;
    for (const auto& [key, value] : settings)
        hf::apply_setting(cfg, py::str(key), py::str(value));
    return cfg;
}

py::dict row_to_dict(const hf::ErrorRow& r) {
    py::dict d;
    d["alpha"] = r.alpha;
    d["c_ex"] = r.c_ex;
    d["scheme"] = hf::to_string(r.scheme);
    d["c_ss"] = r.c_ss;
    d["E_ss"] = r.E_ss;
    d["c_ly"] = r.c_ly;
    d["E_ly"] = r.E_ly;
    d["ly_stddev"] = r.ly_stddev;
    d["ss_quanta"] = r.ss_quanta;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Front speeds of hyperbolic bistable reaction-diffusion equations";

    auto base = py::register_exception<hf::Error>(m, "HyperfrontError", PyExc_RuntimeError);
    auto validation = py::register_exception<hf::ValidationError>(m, "ValidationError", base.ptr());
    auto numerical = py::register_exception<hf::NumericalError>(m, "NumericalError", base.ptr());
    py::register_exception<hf::WrongRegime>(m, "WrongRegime", validation.ptr());
    py::register_exception<hf::EvaluationAtJump>(m, "EvaluationAtJump", validation.ptr());
    py::register_exception<hf::NonConvergence>(m, "NonConvergence", numerical.ptr());
    py::register_exception<hf::BlowUp>(m, "BlowUp", numerical.ptr());
    py::register_exception<hf::NoCrossing>(m, "NoCrossing", numerical.ptr());

    py::class_<hf::ReactionModel>(m, "ReactionModel")
        .def_static("cubic", &hf::ReactionModel::cubic, py::arg("kappa"), py::arg("alpha"))
        .def_static("piecewise_affine", &hf::ReactionModel::piecewise_affine, py::arg("m"), py::arg("alpha"))
        .def("f", py::overload_cast<double>(&hf::ReactionModel::f, py::const_), py::arg("u"))
        .def("df", &hf::ReactionModel::df, py::arg("u"))
        .def("W", &hf::ReactionModel::W, py::arg("u"))
        .def_property_readonly("alpha", &hf::ReactionModel::alpha)
        .def_property_readonly("is_cubic", &hf::ReactionModel::is_cubic)
        .def("__repr__", &hf::ReactionModel::describe);

    py::class_<hf::ModelParams>(m, "ModelParams")
        .def(py::init([](double tau, double sigma, double a) {
                 hf::ModelParams p{tau, sigma, a};
                 p.validate();
                 return p;
             }),
             py::arg("tau") = 1.0, py::arg("sigma") = 0.0, py::arg("a") = 1.0)
        .def_readwrite("tau", &hf::ModelParams::tau)
        .def_readwrite("sigma", &hf::ModelParams::sigma)
        .def_readwrite("a", &hf::ModelParams::a);

    m.def("parabolic_cubic_speed", &hf::parabolic_cubic_speed, py::arg("a"), py::arg("kappa"), py::arg("alpha"));
    m.def("damped_cubic_speed", &hf::damped_cubic_speed, py::arg("a"), py::arg("kappa"), py::arg("alpha"),
          py::arg("tau"));
    m.def("pwl_speed", &hf::pwl_speed, py::arg("a"), py::arg("m"), py::arg("alpha"), py::arg("sigma"),
          py::arg("tau"));
    m.def(
        "closed_form_speed",
        [](const hf::ReactionModel& model, const hf::ModelParams& params) -> std::optional<double> {
            double c = 0.0;
            if (hf::closed_form_speed(model, params, c)) return c;
            return std::nullopt;
        },
        py::arg("model"), py::arg("params"));
    m.def(
        "equal_depth_profile",
        [](const hf::ReactionModel& model, double a, const py::array_t<double, py::array::c_style | py::array::forcecast>& xi) {
            return to_array(hf::equal_depth_profile(model, a, to_vector(xi)));
        },
        py::arg("model"), py::arg("a"), py::arg("xi"));

    py::enum_<hf::ManifoldIntegrator>(m, "ManifoldIntegrator")
        .value("ForwardEuler", hf::ManifoldIntegrator::ForwardEuler)
        .value("RungeKutta4", hf::ManifoldIntegrator::RungeKutta4);

    py::class_<hf::ShootingConfig>(m, "ShootingConfig")
        .def(py::init<>())
        .def_readwrite("du", &hf::ShootingConfig::du)
        .def_readwrite("epsilon", &hf::ShootingConfig::epsilon)
        .def_readwrite("bracket_margin", &hf::ShootingConfig::bracket_margin)
        .def_readwrite("c_tol", &hf::ShootingConfig::c_tol)
        .def_readwrite("max_iter", &hf::ShootingConfig::max_iter)
        .def_readwrite("integrator", &hf::ShootingConfig::integrator);

    py::class_<hf::ShootingResult>(m, "ShootingResult")
        .def_readonly("c_star", &hf::ShootingResult::c_star)
        .def_readonly("iterations", &hf::ShootingResult::iterations)
        .def_readonly("final_mismatch", &hf::ShootingResult::final_mismatch)
        .def_readonly("bracket_history", &hf::ShootingResult::bracket_history);

    m.def(
        "eigenvalues",
        [](const hf::ReactionModel& model, const hf::ModelParams& params, double ubar, double c) {
            const auto e = hf::eigenvalues(model, params, ubar, c);
            return py::make_tuple(e.lambda_minus, e.lambda_plus);
        },
        py::arg("model"), py::arg("params"), py::arg("ubar"), py::arg("c"));
    m.def("mismatch", &hf::mismatch, py::arg("model"), py::arg("params"), py::arg("c"),
          py::arg("config") = hf::ShootingConfig{});
    m.def("speed_bracket", &hf::speed_bracket, py::arg("model"), py::arg("params"),
          py::arg("config") = hf::ShootingConfig{});
    m.def("find_speed", &hf::find_speed, py::arg("model"), py::arg("params"),
          py::arg("config") = hf::ShootingConfig{}, py::call_guard<py::gil_scoped_release>());

    py::enum_<hf::SchemeKind>(m, "SchemeKind")
        .value("FirstOrder", hf::SchemeKind::FirstOrder)
        .value("Lienard", hf::SchemeKind::Lienard)
        .value("Kinetic", hf::SchemeKind::Kinetic);

    py::class_<hf::Grid>(m, "Grid")
        .def(py::init([](double dx, double dt, double L, double T) {
                 hf::Grid g{dx, dt, L, T};
                 g.validate();
                 return g;
             }),
             py::arg("dx") = 0.1, py::arg("dt") = 1e-3, py::arg("L") = 50.0, py::arg("T") = 20.0)
        .def_readwrite("dx", &hf::Grid::dx)
        .def_readwrite("dt", &hf::Grid::dt)
        .def_readwrite("L", &hf::Grid::L)
        .def_readwrite("T", &hf::Grid::T)
        .def_property_readonly("J", &hf::Grid::J)
        .def_property_readonly("N", &hf::Grid::N)
        .def_property_readonly("x", [](const hf::Grid& g) {
            std::vector<double> x(static_cast<std::size_t>(g.J()));
            for (int j = 0; j < g.J(); ++j) x[static_cast<std::size_t>(j)] = g.x(j);
            return to_array(x);
        });

    m.def(
        "run",
        [](hf::SchemeKind kind, const hf::ReactionModel& model, const hf::ModelParams& params,
           const hf::Grid& grid, std::optional<long> frame_stride) {
            hf::RunResult r;
            {
                py::gil_scoped_release release;
                r = hf::run(kind, model, params, grid, frame_stride.value_or(hf::default_frame_stride(grid)));
            }
            const auto rows = static_cast<py::ssize_t>(r.frames.size());
            const auto cols = static_cast<py::ssize_t>(grid.J());
            py::array_t<double> u({rows, cols});
            std::vector<double> t, steps;
            auto view = u.mutable_unchecked<2>();
            for (py::ssize_t i = 0; i < rows; ++i) {
                const auto& f = r.frames[static_cast<std::size_t>(i)];
                for (py::ssize_t j = 0; j < cols; ++j) view(i, j) = f.u[static_cast<std::size_t>(j)];
                t.push_back(f.t);
                steps.push_back(static_cast<double>(f.step));
            }
            py::dict out;
            out["t"] = to_array(t);
            out["step"] = to_array(steps);
            out["u"] = u;
            return out;
        },
        py::arg("kind"), py::arg("model"), py::arg("params"), py::arg("grid"),
        py::arg("frame_stride") = py::none(),
        "Evolve from the Riemann datum; returns dict with t, step and u (frames x J).");

    m.def(
        "scout_and_spot",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a,
           const py::array_t<double, py::array::c_style | py::array::forcecast>& b, double theta, double dx,
           double dt, long p) { return hf::scout_and_spot(to_vector(a), to_vector(b), theta, dx, dt, p).value; },
        py::arg("frame_a"), py::arg("frame_b"), py::arg("theta"), py::arg("dx"), py::arg("dt"), py::arg("p"));
    m.def(
        "leveque_yee_step",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a,
           const py::array_t<double, py::array::c_style | py::array::forcecast>& b, double jump, double dx,
           double dt) { return hf::leveque_yee_step(to_vector(a), to_vector(b), jump, dx, dt); },
        py::arg("u_n"), py::arg("u_np1"), py::arg("jump"), py::arg("dx"), py::arg("dt"));

    m.def(
        "run_table",
        [](const std::string& which, const py::dict& settings) {
            const auto cfg = hf::table_preset(hf::table_from_string(which), config_from(settings));
            std::vector<hf::ErrorRow> rows;
            {
                py::gil_scoped_release release;
                rows = hf::run_table(cfg);
            }
            py::list out;
            for (const auto& r : rows) out.append(row_to_dict(r));
            return out;
        },
        py::arg("which"), py::arg("settings") = py::dict(),
        "Run a preset comparison table; settings use the CLI keys (e.g. {'T': 10}).");
    m.def(
        "exact_csv", [](const py::dict& settings) { return hf::csv_exact(config_from(settings)); },
        py::arg("settings") = py::dict());
}
