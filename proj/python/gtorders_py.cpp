// Python bindings. Structured values cross the boundary as JSON text; the
// package wrapper turns them into dicts and lists.

#include "gtorders/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace gtorders;
using io::json;

namespace {

ConventionProfile profile_or_default(const std::optional<std::string>& profile) {
    return profile ? io::profile_from_json(json::parse(*profile)) : default_profile();
}

Tableau tableau(const std::string& text) { return io::tableau_from_json(json::parse(text)); }

GeneratorId generator(const std::string& label, int n) {
    auto g = GeneratorId::parse(label);
    g.check(n);
    return g;
}

}  // namespace

PYBIND11_MODULE(_gtorders, m) {
    m.doc() = "Galois orders and Gelfand-Tsetlin modules of gl_n";

    py::register_exception<DenominatorVanishes>(m, "DenominatorVanishes", PyExc_ZeroDivisionError);
    py::register_exception<BoundaryLeak>(m, "BoundaryLeak", PyExc_RuntimeError);
    py::register_exception<NotDominant>(m, "NotDominant", PyExc_ValueError);
    py::register_exception<ZeroShift>(m, "ZeroShift", PyExc_ValueError);
    py::register_exception<StabilizerTooLarge>(m, "StabilizerTooLarge", PyExc_RuntimeError);

    m.def("calibrate", [](int lo, int hi, unsigned jobs) { return io::to_json(calibrate_conventions(lo, hi, jobs)).dump(); },
          py::arg("offset_min") = -3, py::arg("offset_max") = 3, py::arg("jobs") = 1);
    m.def("default_profile", [] { return io::to_json(default_profile()).dump(); });

    m.def("verify_relations",
          [](int n, std::optional<std::string> profile, unsigned jobs) {
              Realization r(n, profile_or_default(profile));
              return io::to_json(r.verify_relations({false, jobs})).dump();
          },
          py::arg("n"), py::arg("profile") = py::none(), py::arg("jobs") = 1);
    m.def("verify_center",
          [](int n, std::optional<std::string> profile) {
              Realization r(n, profile_or_default(profile));
              return io::to_json(r.verify_center()).dump();
          },
          py::arg("n"), py::arg("profile") = py::none());

    m.def("eigenvalue_gamma", [](int mm, int k) { return Realization::eigenvalue_gamma(mm, k).to_string(); });
    m.def("evaluate_gamma", [](int mm, int k, const std::string& t) {
        return rational_to_string(evaluate(Realization::eigenvalue_gamma(mm, k), tableau(t)));
    });
    m.def("generator_image",
          [](const std::string& label, int n, std::optional<std::string> profile) {
              Realization r(n, profile_or_default(profile));
              return io::to_json(r.image(generator(label, n))).dump();
          },
          py::arg("generator"), py::arg("n"), py::arg("profile") = py::none());

    m.def("act",
          [](const std::string& label, const std::string& vector, std::optional<std::vector<long>> top,
             std::optional<std::string> profile) {
              json in = json::parse(vector);
              ModuleVector v = in.is_array() ? io::module_vector_from_json(in) : ModuleVector(io::tableau_from_json(in));
              if (v.is_zero()) return io::to_json(v).dump();
              int n = v.terms().begin()->first.n();
              Realization r(n, profile_or_default(profile));
              auto g = generator(label, n);
              if (top) return io::to_json(PatternModule(r, *top).act(g, v)).dump();
              return io::to_json(act(r, g, v)).dump();
          },
          py::arg("generator"), py::arg("vector"), py::arg("top") = py::none(), py::arg("profile") = py::none());
    m.def("act_c",
          [](int mm, int k, const std::string& t, std::optional<std::string> profile) {
              Tableau x = tableau(t);
              Realization r(x.n(), profile_or_default(profile));
              return io::to_json(act_c(r, mm, k, ModuleVector(x))).dump();
          },
          py::arg("m"), py::arg("k"), py::arg("tableau"), py::arg("profile") = py::none());

    m.def("gt_pattern_count", &gt_pattern_count);
    m.def("weyl_dimension", [](const std::vector<long>& top) { return weyl_dimension(top).get_str(); });
    m.def("gt_patterns", [](const std::vector<long>& top) {
        json a = json::array();
        for (const auto& p : gt_patterns(top)) a.push_back(io::to_json(p));
        return a.dump();
    });

    m.def("reachability",
          [](const std::string& t, int radius, const std::string& mode, std::optional<std::string> profile) {
              if (mode != "lattice" && mode != "pattern") throw std::invalid_argument("mode must be lattice|pattern");
              Tableau x = tableau(t);
              Realization r(x.n(), profile_or_default(profile));
              return io::to_json(reachability(r, x, radius, mode == "pattern" ? ReachMode::Pattern : ReachMode::Lattice))
                  .dump();
          },
          py::arg("tableau"), py::arg("radius"), py::arg("mode") = "lattice", py::arg("profile") = py::none());

    m.def("s_set", [](const std::string& s, const std::string& t) { return io::to_json(s_set(tableau(s), tableau(t))).dump(); });
    m.def("x_set",
          [](const std::string& label, const std::string& t, std::optional<std::string> profile) {
              Tableau x = tableau(t);
              Realization r(x.n(), profile_or_default(profile));
              json a = json::array();
              for (const auto& c : x_set(r.image(generator(label, x.n())), x, r.profile().shift_direction))
                  a.push_back(io::to_json(c));
              return a.dump();
          },
          py::arg("generator"), py::arg("tableau"), py::arg("profile") = py::none());
    m.def("block_graph",
          [](const std::vector<std::string>& seeds, int radius, std::optional<std::string> profile) {
              if (seeds.empty()) throw std::invalid_argument("need at least one seed");
              std::vector<Tableau> ts;
              for (const auto& s : seeds) ts.push_back(tableau(s));
              Realization r(ts.front().n(), profile_or_default(profile));
              return io::to_json(block_graph(r, ts, radius)).dump();
          },
          py::arg("seeds"), py::arg("radius"), py::arg("profile") = py::none());
    m.def("q_bound", [](int n) { return q_bound(n).get_str(); });

    m.def("mackey", [](const std::string& spec) {
        return io::to_json(mackey_simple_modules(io::semidirect_from_json(json::parse(spec)))).dump();
    });
    m.def("example_spec", [](const std::string& name) {
        if (name == "s3") return io::to_json(SemidirectSpec::s3()).dump();
        if (name == "a4") return io::to_json(SemidirectSpec::a4()).dump();
        throw std::invalid_argument("unknown example " + name);
    });
    m.def("skew_orbit", [](const std::string& base, const std::string& shift, int steps) {
        return io::to_json(skew_orbit_block(parse_rational(base), parse_rational(shift), steps)).dump();
    });
}
