#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "moduli/characters.hpp"
#include "moduli/dynamics.hpp"
#include "moduli/error.hpp"
#include "moduli/families.hpp"
#include "moduli/io.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace moduli;

namespace {

// Structured results cross the boundary as plain dicts via the JSON schema.
py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Config make_config(double tol, int p_max, int max_iter, int search_depth, double zero_eps, int threads) {
    Config c;
    c.tol = tol;
    c.p_max = p_max;
    c.max_iter = max_iter;
    c.search_depth = search_depth;
    c.zero_eps = zero_eps;
    c.threads = threads;
    c.validate();
    return c;
}

py::tuple as_tuple(const PrincipalCharacter& c) { return py::make_tuple(c.gamma, c.beta, c.beta_tilde); }

}  // namespace

PYBIND11_MODULE(_moduli, m) {
    m.doc() = "Principal characters of two-generator Moebius groups";

    static py::exception<Error> moduli_error(m, "ModuliError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(moduli_error, e.what());
        }
    });

    py::class_<MoebiusMap>(m, "MoebiusMap")
        .def(py::init<>())
        .def(py::init<Complex, Complex, Complex, Complex>(), "a"_a, "b"_a, "c"_a, "d"_a)
        .def_property_readonly("entries", [](const MoebiusMap& f) {
            return py::make_tuple(f.a(), f.b(), f.c(), f.d());
        })
        .def("trace", &MoebiusMap::trace)
        .def("det", &MoebiusMap::det)
        .def("negated", &MoebiusMap::negated)
        .def("apply", &MoebiusMap::apply, "z"_a)
        .def("inverse", [](const MoebiusMap& f) { return inverse(f); })
        .def("__mul__", [](const MoebiusMap& f, const MoebiusMap& g) { return f * g; })
        .def("__eq__", [](const MoebiusMap& f, const MoebiusMap& g) { return f == g; })
        .def("__repr__", [](const MoebiusMap& f) {
            return "MoebiusMap(" + format_complex_short(f.a()) + ", " + format_complex_short(f.b()) + ", " +
                   format_complex_short(f.c()) + ", " + format_complex_short(f.d()) + ")";
        });

    m.def("normalize", [](Complex a, Complex b, Complex c, Complex d) { return normalize({a, b, c, d}); });
    m.def("conjugate", &conjugate, "f"_a, "h"_a);
    m.def("commutator", &commutator, "f"_a, "g"_a);
    m.def("beta", [](const MoebiusMap& f) { return moduli::beta(f); }, "f"_a);
    m.def("gamma", [](const MoebiusMap& f, const MoebiusMap& g) { return moduli::gamma(f, g); }, "f"_a, "g"_a);
    m.def("fricke_gamma", &fricke_gamma, "f"_a, "g"_a);
    m.def("character_of", [](const MoebiusMap& f, const MoebiusMap& g) { return as_tuple(character_of(f, g)); });
    m.def(
        "classify",
        [](const MoebiusMap& f, double tol, int p_max) {
            nlohmann::json j;
            to_json(j, classify(f, tol, p_max));
            return to_python(j);
        },
        "f"_a, "tol"_a = kDefaultTol, "p_max"_a = kDefaultPMax);
    m.def(
        "elliptic_order",
        [](Complex b, int p_max, double tol) -> std::optional<std::pair<int, int>> {
            if (auto o = elliptic_order(b, p_max, tol)) return std::pair{o->k, o->p};
            return std::nullopt;
        },
        "beta"_a, "p_max"_a = kDefaultPMax, "tol"_a = kDefaultTol);
    m.def(
        "complex_distance",
        [](Complex g, Complex b, Complex bt, double tol) {
            const AxisDistance d = complex_distance({g, b, bt}, tol);
            return py::make_tuple(d.delta, d.theta);
        },
        "gamma"_a, "beta"_a, "beta_tilde"_a, "tol"_a = kDefaultTol);

    m.def("zext_characters", [](Complex g, Complex b) {
        const auto [phi, psi] = zext_characters({g, b});
        return py::make_tuple(as_tuple(phi), as_tuple(psi));
    }, "gamma"_a, "beta"_a);
    m.def("subgroup_character", [](Complex g, Complex b) { return as_tuple(subgroup_character({g, b})); },
          "gamma"_a, "beta"_a);
    m.def(
        "exceptional_tables",
        [](int p_max, bool rows_only) { return to_python(rows_only ? table_rows() : exceptional_tables(p_max)); },
        "p_max"_a = kDefaultPMax, "rows_only"_a = false);
    m.def(
        "match_exceptional",
        [](Complex g, Complex b, Complex bt, double tol) -> py::object {
            if (auto e = match_exceptional({g, b, bt}, tol)) return to_python(*e);
            return py::none();
        },
        "gamma"_a, "beta"_a, "beta_tilde"_a = Complex{-4.0}, "tol"_a = kDefaultTol);
    m.def(
        "discreteness_filter",
        [](Complex g, Complex b, Complex bt, bool with_dynamics, double tol, int p_max, int max_iter,
           int search_depth, double zero_eps) {
            const Config c = make_config(tol, p_max, max_iter, search_depth, zero_eps, 1);
            return to_python(discreteness_filter({g, b, bt}, c, with_dynamics));
        },
        "gamma"_a, "beta"_a, "beta_tilde"_a = Complex{-4.0}, "with_dynamics"_a = true, "tol"_a = kDefaultTol,
        "p_max"_a = kDefaultPMax, "max_iter"_a = 1000, "search_depth"_a = 8, "zero_eps"_a = 1e-6);

    m.def("p_apply", &p_apply, "beta"_a, "z"_a);
    m.def("q_apply", &q_apply, "beta"_a, "z"_a);
    m.def(
        "iterate",
        [](Complex b, Complex g, const std::string& word, int max_iter, double zero_eps) {
            OrbitOptions opt;
            opt.max_iter = max_iter;
            opt.zero_eps = zero_eps;
            return to_python(iterate(b, g, word, opt));
        },
        "beta"_a, "gamma"_a, "word"_a, "max_iter"_a = 1000, "zero_eps"_a = 1e-6);
    m.def(
        "semigroup_search",
        [](Complex b, Complex g, int depth) -> py::object {
            if (auto c = semigroup_search(b, g, depth)) return to_python(*c);
            return py::none();
        },
        "beta"_a, "gamma"_a, "max_depth"_a = 8);
    m.def(
        "scan_slice",
        [](Complex b, std::tuple<double, double, double, double> window, int width, int height, int threads) {
            Config c;
            c.threads = threads;
            const auto [x0, x1, y0, y1] = window;
            Raster r;
            {
                py::gil_scoped_release release;
                r = scan_slice(b, {x0, x1, y0, y1}, width, height, c);
            }
            std::string bytes(r.cells.size(), '\0');
            for (std::size_t i = 0; i < r.cells.size(); ++i) bytes[i] = static_cast<char>(r.cells[i]);
            return py::bytes(bytes);
        },
        "beta"_a, "window"_a, "width"_a, "height"_a, "threads"_a = 0,
        "Row-major pixel codes (0, 85, 170, 255), row 0 at the top edge.");

    m.def(
        "realize",
        [](Complex g, Complex b, double tol) {
            const RealizedPair r = realize({g, b}, tol);
            py::dict d;
            d["f"] = r.f;
            d["g"] = r.g;
            d["lambda"] = r.lambda;
            d["a"] = r.a;
            d["notes"] = to_python(r.notes);
            return d;
        },
        "gamma"_a, "beta"_a, "tol"_a = kDefaultTol);
    m.def("figure_eight_generators", &figure_eight_generators);
    m.def("relator_residual", &relator_residual, "f"_a, "h"_a);
    m.def("dehn_gamma_limit", &dehn_gamma_limit);
    m.def("dehn_surgery_point", [](int p) {
        const DehnFamilyPoint pt = dehn_surgery_point(p);
        py::dict d = to_python(pt);
        d["f_p"] = pt.f_p;
        d["h_p"] = pt.h_p;
        return d;
    }, "p"_a);
}
