#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <cstring>
#include <string>

#include "msim/error.hpp"
#include "msim/hausdorff.hpp"
#include "msim/image_io.hpp"
#include "msim/misiurewicz.hpp"
#include "msim/poincare.hpp"
#include "msim/render.hpp"
#include "msim/rescale.hpp"
#include "msim/tricorn.hpp"

namespace py = pybind11;
using namespace msim;

namespace {

// bits are stored with j growing upward; the array keeps that layout, indexed [j, i]
py::array_t<std::uint8_t> to_array(const MembershipGrid& g) {
    const auto res = static_cast<py::ssize_t>(g.resolution());
    py::array_t<std::uint8_t> out({res, res});
    std::memcpy(out.mutable_data(), g.bits.data(), g.bits.size());
    return out;
}

MembershipGrid from_array(const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& a,
                          const Window& window) {
    if (a.ndim() != 2 || a.shape(0) != a.shape(1) || a.shape(0) != window.resolution) {
        throw Error(ErrorKind::InvalidArgument, "grid must be a square array matching the window resolution");
    }
    MembershipGrid g;
    g.window = window;
    g.bits.resize(static_cast<std::size_t>(a.size()));
    const auto* p = a.data();
    for (std::size_t n = 0; n < g.bits.size(); ++n) g.bits[n] = p[n] ? 1 : 0;
    return g;
}

ClassifyOptions classify_options(int budget, bool distance_estimate) {
    ClassifyOptions o;
    o.budget = budget;
    o.coverage = distance_estimate ? Coverage::DistanceEstimate : Coverage::PixelCenter;
    return o;
}

TableOptions table_options(double r, int resolution, int budget) {
    TableOptions o;
    o.r = r;
    o.resolution = resolution;
    o.budget = budget;
    return o;
}

py::list rows_to_list(const std::vector<ConvergenceRow>& rows) {
    py::list out;
    for (const auto& r : rows) {
        py::dict d;
        d["k"] = r.k;
        d["rho_abs"] = r.rho_abs;
        d["d_julia"] = r.d_julia;
        d["d_param"] = r.d_param;
        out.append(d);
    }
    return out;
}

py::list lemma_to_list(const std::vector<LemmaRow>& rows) {
    py::list out;
    for (const auto& r : rows) {
        py::dict d;
        d["k"] = r.k;
        d["sup_phik_phi"] = r.sup_phik_phi;
        d["sup_Phik_phi"] = r.sup_Phik_phi;
        d["sup_Phik_phik"] = r.sup_Phik_phik;
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Misiurewicz-point self-similarity toolkit";

    static py::exception<Error> error_type(m, "MsimError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::handle(error_type.ptr())(e.what());
            exc.attr("kind") = std::string(to_string(e.kind()));
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    py::class_<MisiurewiczData>(m, "MisiurewiczData")
        .def_readonly("c0", &MisiurewiczData::c0)
        .def_readonly("l", &MisiurewiczData::l)
        .def_readonly("p", &MisiurewiczData::p)
        .def_readonly("a0", &MisiurewiczData::a0)
        .def_readonly("lambda0", &MisiurewiczData::lambda0)
        .def_readonly("residual", &MisiurewiczData::residual);

    py::class_<RescaleData>(m, "RescaleData")
        .def_readonly("base", &RescaleData::base)
        .def_readonly("A0", &RescaleData::A0)
        .def_readonly("B0", &RescaleData::B0)
        .def_readonly("Q", &RescaleData::Q)
        .def_readonly("q", &RescaleData::q);

    py::class_<TricornData>(m, "TricornData")
        .def_readonly("c0", &TricornData::c0)
        .def_readonly("l", &TricornData::l)
        .def_readonly("p", &TricornData::p)
        .def_readonly("a0", &TricornData::a0)
        .def_readonly("lambda0", &TricornData::lambda0)
        .def_readonly("A0", &TricornData::A0)
        .def_readonly("B0", &TricornData::B0)
        .def_readonly("B0p", &TricornData::B0p)
        .def_readonly("Q", &TricornData::Q)
        .def_readonly("Qp", &TricornData::Qp)
        .def_readonly("residual", &TricornData::residual);

    py::class_<Window>(m, "Window")
        .def(py::init([](Complex center, double width, int resolution) { return Window{center, width, resolution}; }),
             py::arg("center") = Complex{}, py::arg("width") = 4.0, py::arg("resolution") = 512)
        .def_readwrite("center", &Window::center)
        .def_readwrite("width", &Window::width)
        .def_readwrite("resolution", &Window::resolution)
        .def("pixel", &Window::pixel)
        .def("pitch", &Window::pitch);

    // dynamics
    m.def("iterate", [](Complex c, Complex z, int n, bool anti) { return anti ? iterate_g(c, z, n) : iterate_f(c, z, n); },
          py::arg("c"), py::arg("z"), py::arg("n"), py::arg("anti") = false);
    m.def("escape_time",
          [](Complex c, Complex z, int n_max, bool anti) {
              return anti ? escape_time_anti(c, z, n_max) : escape_time(c, z, n_max);
          },
          py::arg("c"), py::arg("z"), py::arg("n_max") = kDefaultBudget, py::arg("anti") = false);

    // solver and constants
    m.def("solve", [](int l, int p, Complex seed) { return solve_misiurewicz(l, p, seed); }, py::arg("l"),
          py::arg("p"), py::arg("seed"));
    m.def("certify", [](Complex seed) { return certify_near(seed); }, py::arg("seed"),
          "Smallest (l, p) Misiurewicz root near the seed.");
    m.def("rescale_constants", &compute_Q, py::arg("data"));
    m.def("relation_residual", &relation_residual, py::arg("c"), py::arg("l"), py::arg("p"));
    m.def("rho_k", py::overload_cast<Complex, Complex, int>(&rho_k), py::arg("A0"), py::arg("lambda0"), py::arg("k"));

    m.def("solve_tricorn", [](int l, int p, Complex seed) { return solve_tricorn_misiurewicz(l, p, seed); },
          py::arg("l"), py::arg("p"), py::arg("seed"));
    m.def("certify_tricorn", [](Complex seed) { return certify_tricorn_near(seed); }, py::arg("seed"));
    m.def("apply_H", [](const TricornData& d, Complex w) { return apply_H(d.H(), w); }, py::arg("data"), py::arg("w"));
    m.def("apply_h", [](const TricornData& d, Complex w) { return apply_h(d.H(), w); }, py::arg("data"), py::arg("W"));

    // Poincare function
    m.def("phi", [](const MisiurewiczData& d, Complex w) { return phi(make_evaluator(d), w); }, py::arg("data"),
          py::arg("w"));
    m.def("phi_tricorn", [](const TricornData& d, Complex w) { return phi(make_evaluator(d), w); }, py::arg("data"),
          py::arg("w"));
    m.def("functional_equation_residual",
          [](const MisiurewiczData& d, Complex w) { return functional_equation_residual(make_evaluator(d), w); },
          py::arg("data"), py::arg("w"));
    m.def("phi_k", &phi_k, py::arg("data"), py::arg("k"), py::arg("w"));
    m.def("Phi_k", &Phi_k, py::arg("data"), py::arg("k"), py::arg("w"));
    m.def("convergence_table",
          [](const RescaleData& d, int k_from, int k_to) { return lemma_to_list(lemma_convergence(d, k_from, k_to)); },
          py::arg("data"), py::arg("k_from"), py::arg("k_to"));

    // rendering
    m.def("julia_grid",
          [](Complex c, const Window& w, int budget, bool anti) { return to_array(classify_julia(c, w, budget, anti)); },
          py::arg("c"), py::arg("window"), py::arg("budget") = kDefaultBudget, py::arg("anti") = false,
          "Filled Julia set membership as a uint8 array indexed [j, i], row 0 at the bottom.");
    m.def("mandelbrot_grid", [](const Window& w, int budget) { return to_array(classify_mandelbrot(w, budget)); },
          py::arg("window"), py::arg("budget") = kDefaultBudget);
    m.def("tricorn_grid", [](const Window& w, int budget) { return to_array(classify_tricorn(w, budget)); },
          py::arg("window"), py::arg("budget") = kDefaultBudget);
    m.def("rescaled_grid",
          [](const RescaleData& d, int k, bool parameter, double r, int resolution, int budget, bool de) {
              const auto rw = parameter ? rescaled_param_window(d, k, r, resolution)
                                        : rescaled_julia_window(d, k, r, resolution);
              return to_array(classify_rescaled(rw, classify_options(budget, de)));
          },
          py::arg("data"), py::arg("k"), py::arg("parameter") = false, py::arg("r") = 2.0,
          py::arg("resolution") = 512, py::arg("budget") = kDefaultBudget, py::arg("distance_estimate") = true);
    m.def("rescaled_tricorn_grid",
          [](const TricornData& d, int k, bool parameter, double r, int resolution, int budget, bool de) {
              const auto rw = parameter ? rescaled_param_window(d, k, r, resolution)
                                        : rescaled_julia_window(d, k, r, resolution);
              return to_array(classify_rescaled(rw, classify_options(budget, de)));
          },
          py::arg("data"), py::arg("k"), py::arg("parameter") = false, py::arg("r") = 2.0,
          py::arg("resolution") = 512, py::arg("budget") = kDefaultBudget, py::arg("distance_estimate") = true);
    m.def("boundary_points",
          [](const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& a, const Window& w) {
              return extract_boundary(from_array(a, w)).points;
          },
          py::arg("grid"), py::arg("window"));

    // images
    m.def("encode_pgm",
          [](const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& a) {
              const auto res = static_cast<int>(a.shape(0));
              return py::bytes(encode_pgm(to_image(from_array(a, Window{{}, 1.0, res}))));
          },
          py::arg("grid"));
    m.def("write_pgm",
          [](const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& a,
             const std::filesystem::path& path) {
              const auto res = static_cast<int>(a.shape(0));
              write_pgm(from_array(a, Window{{}, 1.0, res}), path);
          },
          py::arg("grid"), py::arg("path"));
    m.def("write_png",
          [](const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& a,
             const std::filesystem::path& path) {
              const auto res = static_cast<int>(a.shape(0));
              write_png(to_image(from_array(a, Window{{}, 1.0, res})), path);
          },
          py::arg("grid"), py::arg("path"));

    // Hausdorff distance and tables
    m.def("hausdorff",
          [](const std::vector<Complex>& a, const std::vector<Complex>& b) {
              return hausdorff_distance(std::span<const Complex>(a), std::span<const Complex>(b));
          },
          py::arg("a"), py::arg("b"));
    m.def("similarity_table",
          [](const RescaleData& d, int k_from, int k_to, double r, int resolution, int budget) {
              std::vector<ConvergenceRow> rows;
              {
                  py::gil_scoped_release release;
                  rows = similarity_table(d, k_from, k_to, table_options(r, resolution, budget));
              }
              return rows_to_list(rows);
          },
          py::arg("data"), py::arg("k_from"), py::arg("k_to"), py::arg("r") = 2.0, py::arg("resolution") = 512,
          py::arg("budget") = kDefaultBudget);
    m.def("similarity_table_tricorn",
          [](const TricornData& d, int k_from, int k_to, double r, int resolution, int budget) {
              std::vector<ConvergenceRow> rows;
              {
                  py::gil_scoped_release release;
                  rows = similarity_table_tricorn(d, k_from, k_to, table_options(r, resolution, budget));
              }
              return rows_to_list(rows);
          },
          py::arg("data"), py::arg("k_from"), py::arg("k_to"), py::arg("r") = 2.0, py::arg("resolution") = 512,
          py::arg("budget") = kDefaultBudget);
}
