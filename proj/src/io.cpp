#include "gtorders/io.hpp"

namespace gtorders::io {

namespace {

json identity_list(const std::vector<IdentityCheck>& checks) {
    json a = json::array();
    for (const auto& c : checks) {
        json e{{"identity", c.label}, {"status", c.passed ? "pass" : "fail"}};
        if (!c.passed) e["witness"] = c.witness;
        a.push_back(std::move(e));
    }
    return a;
}

Rational rational_from(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    return parse_rational(j.get<std::string>());
}

}  // namespace

json to_json(const Tableau& t) {
    json rows = json::array();
    for (int i = t.n(); i >= 1; --i) {
        json row = json::array();
        for (const auto& q : t.row(i)) row.push_back(rational_to_string(q));
        rows.push_back(std::move(row));
    }
    return {{"n", t.n()}, {"rows", rows}};
}

Tableau tableau_from_json(const json& j) {
    int n = j.at("n").get<int>();
    const auto& rows = j.at("rows");
    if (n < 1 || n > kMaxRank || static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("tableau JSON needs n in [1,4] and n rows");
    std::vector<std::vector<Rational>> r(n);
    for (int k = 0; k < n; ++k) {
        int row = n - k;
        if (static_cast<int>(rows[k].size()) != row)
            throw std::invalid_argument("tableau row " + std::to_string(row) + " must have " + std::to_string(row) +
                                        " entries");
        for (const auto& e : rows[k]) r[row - 1].push_back(rational_from(e));
    }
    return Tableau::from_rows(r);
}

json to_json(const ShiftVector& z) {
    json o = json::object();
    for (int v = 0; v < kMaxVars; ++v)
        if (z[v] != 0) {
            auto id = VariableId::from_index(v);
            o[std::to_string(id.row) + "," + std::to_string(id.col)] = z[v];
        }
    return o;
}

ShiftVector shift_from_json(const json& j) {
    ShiftVector z;
    for (const auto& [key, val] : j.items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("shift key must be \"i,j\": " + key);
        int i = std::stoi(key.substr(0, comma)), c = std::stoi(key.substr(comma + 1));
        if (i < 1 || c < 1 || c > i || i >= kMaxRank) throw std::invalid_argument("shift key out of range: " + key);
        z.set({i, c}, val.get<int>());
    }
    return z;
}

json to_json(const SkewElement& x) {
    json a = json::array();
    for (const auto& [z, c] : x.terms()) a.push_back({{"shift", to_json(z)}, {"coeff", c.to_string()}});
    return a;
}

SkewElement skew_from_json(const json& j) {
    SkewElement x;
    for (const auto& e : j) x.add_term(shift_from_json(e.at("shift")), parse_rational_function(e.at("coeff").get<std::string>()));
    return x;
}

json to_json(const ModuleVector& v) {
    json a = json::array();
    for (const auto& [t, c] : v.terms()) a.push_back({{"tableau", to_json(t)}, {"coeff", rational_to_string(c)}});
    return a;
}

ModuleVector module_vector_from_json(const json& j) {
    ModuleVector v;
    for (const auto& e : j) v.add(tableau_from_json(e.at("tableau")), rational_from(e.at("coeff")));
    return v;
}

json to_json(const ConventionProfile& p) {
    return {{"shift_direction", sign_of(p.shift_direction)},
            {"raising_sign", p.raising_sign},
            {"lowering_sign", p.lowering_sign},
            {"diagonal_base", p.diagonal_base().to_string()},
            {"diagonal_offset", p.diagonal_offset},
            {"coefficient_evaluation", p.coefficient_evaluation == CoefficientEvaluation::Source ? "source" : "target"}};
}

ConventionProfile profile_from_json(const json& j) {
    ConventionProfile p;
    int s = j.at("shift_direction").get<int>();
    if (s != 1 && s != -1) throw std::invalid_argument("shift_direction must be +1 or -1");
    p.shift_direction = s > 0 ? ShiftDirection::Plus : ShiftDirection::Minus;
    p.raising_sign = j.at("raising_sign").get<int>();
    p.lowering_sign = j.at("lowering_sign").get<int>();
    p.diagonal_offset = j.at("diagonal_offset").get<int>();
    auto ev = j.at("coefficient_evaluation").get<std::string>();
    if (ev != "source" && ev != "target") throw std::invalid_argument("coefficient_evaluation must be source|target");
    p.coefficient_evaluation = ev == "source" ? CoefficientEvaluation::Source : CoefficientEvaluation::Target;
    for (int sign : {p.raising_sign, p.lowering_sign})
        if (sign != 1 && sign != -1) throw std::invalid_argument("signs must be +1 or -1");
    return p;
}

json to_json(const RelationReport& r) {
    return {{"n", r.n},
            {"status", r.all_passed() ? "pass" : "fail"},
            {"checked", r.identities.size()},
            {"failures", r.failures()},
            {"identities", identity_list(r.identities)}};
}

json to_json(const CenterReport& r) {
    return {{"n", r.n},
            {"status", r.all_passed() ? "pass" : "fail"},
            {"eigenvalues", identity_list(r.eigenvalue_checks)},
            {"centrality", identity_list(r.centrality_checks)}};
}

json to_json(const CalibrationResult& r) {
    json cands = json::array();
    for (const auto& c : r.candidates)
        cands.push_back({{"profile", to_json(c.profile)},
                         {"relations_2", c.relations2},
                         {"center_3", c.center3},
                         {"relations_3", c.relations3},
                         {"valid", c.valid()},
                         {"failure", c.failure}});
    return {{"profile", to_json(r.profile)},
            {"valid_count", r.valid_count},
            {"searched", r.candidates.size()},
            {"candidates", cands}};
}

json to_json(const ReachabilityReport& r) {
    json reached = json::array();
    for (const auto& t : r.reached) reached.push_back(to_json(t));
    json j{{"start", to_json(r.start)},
           {"radius", r.radius},
           {"mode", r.mode == ReachMode::Lattice ? "lattice" : "pattern"},
           {"window_size", r.window_size},
           {"reached_count", r.reached.size()},
           {"all_reached", r.all_reached()},
           {"leaving_steps", r.leaving_steps},
           {"reached", reached}};
    if (r.mode == ReachMode::Pattern) {
        j["truncated_steps"] = r.truncated_steps;
        j["module_verified"] = r.module_verified;
    }
    return j;
}

json to_json(const OrbitReport& r) {
    json s = json::array();
    for (const auto& z : r.s_set) s.push_back(to_json(z));
    return {{"source", to_json(r.source)},
            {"target", to_json(r.target)},
            {"s_set", s},
            {"s_set_size", r.s_set.size()},
            {"s_set_mod_G", r.s_set_mod_G},
            {"group_order", r.group_order},
            {"g_stab_source", r.g_stab_source},
            {"g_stab_target", r.g_stab_target},
            {"shift_stab", r.shift_stab},
            {"bound", rational_to_string(r.bound)},
            {"bound_holds", r.bound_holds}};
}

json to_json(const BlockGraph& g) {
    json nodes = json::array(), edges = json::array();
    for (std::size_t k = 0; k < g.nodes.size(); ++k)
        nodes.push_back({{"id", k}, {"character", to_json(g.nodes[k])}, {"component", g.component[k]}});
    for (const auto& [a, b] : g.edges) edges.push_back({a, b});
    return {{"radius", g.radius},
            {"nodes", nodes},
            {"edges", edges},
            {"component_count", g.component_count},
            {"components_are_lower_bounds", true}};
}

json to_json(const MackeyReport& r) {
    json blocks = json::array();
    for (const auto& b : r.blocks)
        blocks.push_back({{"orbit", b.orbit},
                          {"stabilizer_order", b.stabilizer_order},
                          {"simple_count", b.simple_count},
                          {"dims", b.dims}});
    return {{"group_order", r.group_order},
            {"blocks", blocks},
            {"dims", r.all_dims()},
            {"sum_of_squares", r.sum_of_squares},
            {"burnside_holds", r.burnside_holds},
            {"brute_force_classes", r.brute_force_classes},
            {"class_count_matches", r.class_count_matches}};
}

json to_json(const BlockSummary& s) {
    json pts = json::array();
    for (const auto& p : s.points) pts.push_back(rational_to_string(p));
    return {{"base", rational_to_string(s.base)},
            {"shift", rational_to_string(s.shift)},
            {"steps", s.steps},
            {"points", pts},
            {"free_action", s.free_action},
            {"within_orbit_singleton", s.within_orbit_singleton},
            {"statement", s.statement}};
}

SemidirectSpec semidirect_from_json(const json& j) {
    FiniteAbelianGroup n(j.at("cyclic_orders").get<std::vector<int>>());
    TableGroup h(j.at("h_table").get<std::vector<std::vector<int>>>());
    auto action = j.at("action").get<std::vector<std::vector<GroupVector>>>();
    return SemidirectSpec(std::move(n), std::move(h), std::move(action));
}

json to_json(const SemidirectSpec& s) {
    return {{"cyclic_orders", s.n_part().cyclic_orders()}, {"h_table", s.h().table()}, {"action", s.action()}};
}

}  // namespace gtorders::io
