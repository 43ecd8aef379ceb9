#include "gtorders/orbits.hpp"

#include <map>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>

namespace gtorders {

namespace {

const std::vector<PermutationTuple>& group_of(int n) {
    static const std::vector<std::vector<PermutationTuple>> groups = [] {
        std::vector<std::vector<PermutationTuple>> g(kMaxRank + 1);
        for (int k = 1; k <= kMaxRank; ++k) g[k] = enumerate_group(k);
        return g;
    }();
    if (n < 1 || n > kMaxRank) throw std::invalid_argument("rank must be in [1, 4]");
    return groups[n];
}

/// target - source as a shift, if it vanishes on row n and is integral elsewhere.
std::optional<ShiftVector> integral_difference(const Tableau& target, const Tableau& source) {
    const int n = source.n();
    for (int j = 1; j <= n; ++j)
        if (target.at(n, j) != source.at(n, j)) return std::nullopt;
    ShiftVector z;
    for (int i = 1; i < n; ++i)
        for (int j = 1; j <= i; ++j) {
            Rational d = target.at(i, j) - source.at(i, j);
            if (d.get_den() != 1 || !d.get_num().fits_sint_p()) return std::nullopt;
            z.set({i, j}, static_cast<int>(d.get_num().get_si()));
        }
    return z;
}

std::size_t conjugation_orbits(const std::set<ShiftVector>& S, int n) {
    std::set<ShiftVector> seen;
    std::size_t count = 0;
    for (const auto& z : S) {
        if (seen.contains(z)) continue;
        ++count;
        for (const auto& g : group_of(n)) seen.insert(g.act(z));
    }
    return count;
}

}  // namespace

std::size_t g_stabilizer_order(const Tableau& t) {
    std::size_t k = 0;
    for (const auto& g : group_of(t.n())) k += g.act(t) == t ? 1 : 0;
    return k;
}

std::set<ShiftVector> shift_stabilizer(const Tableau& t) {
    (void)t;
    return {ShiftVector{}};
}

OrbitReport s_set(const Tableau& source, const Tableau& target) {
    if (source.n() != target.n()) throw std::invalid_argument("source and target ranks differ");
    const int n = source.n();
    const auto& G = group_of(n);
    OrbitReport rep;
    rep.source = source;
    rep.target = target;
    rep.group_order = G.size();
    std::vector<Tableau> gs, gt;
    for (const auto& g : G) {
        gs.push_back(g.act(source));
        gt.push_back(g.act(target));
    }
    for (const auto& a : gs)
        for (const auto& b : gt)
            if (auto z = integral_difference(b, a)) rep.s_set.insert(*z);
    rep.s_set_mod_G = conjugation_orbits(rep.s_set, n);
    rep.g_stab_source = g_stabilizer_order(source);
    rep.g_stab_target = g_stabilizer_order(target);
    rep.shift_stab = shift_stabilizer(source).size();
    rep.bound = Rational(static_cast<long>(rep.group_order * rep.group_order * rep.shift_stab),
                         static_cast<long>(rep.g_stab_source * rep.g_stab_target));
    rep.bound.canonicalize();
    rep.bound_holds = Rational(static_cast<long>(rep.s_set.size())) <= rep.bound;
    return rep;
}

std::set<Character> x_set(const SkewElement& u, const Tableau& source, ShiftDirection s) {
    std::set<Tableau> lifts;
    for (const auto& g : group_of(source.n())) lifts.insert(g.act(source));
    std::set<Character> out;
    for (const auto& [z, a] : u.terms()) {
        ShiftVector step = sign_of(s) > 0 ? -z : z;
        for (const auto& l : lifts) out.insert(character_of(l.shifted(step)));
    }
    return out;
}

std::size_t BlockGraph::component_size(std::size_t node) const {
    std::size_t c = component.at(node), k = 0;
    for (auto x : component) k += x == c ? 1 : 0;
    return k;
}

std::string BlockGraph::edge_list() const {
    std::ostringstream os;
    os << "# window radius " << radius << "; components are lower bounds on block connectivity\n";
    for (const auto& [a, b] : edges) os << nodes[a].to_string() << " -- " << nodes[b].to_string() << "\n";
    return os.str();
}

BlockGraph block_graph(Realization& r, const std::vector<Tableau>& seeds, int radius) {
    if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
    const int n = r.n();
    BlockGraph bg;
    bg.radius = radius;
    std::map<Character, std::size_t> index;
    auto add_node = [&](const Tableau& t) {
        auto c = character_of(t);
        if (index.emplace(c, bg.nodes.size()).second) bg.nodes.push_back(c);
    };
    const int vars = variable_count(n - 1);
    for (const auto& seed : seeds) {
        if (seed.n() != n) throw std::invalid_argument("seed rank must equal the realization rank");
        std::vector<int> digits(vars, -radius);
        for (;;) {
            ShiftVector z;
            for (int v = 0; v < vars; ++v) z.set_index(v, digits[v]);
            add_node(seed.shifted(z));
            int v = 0;
            while (v < vars && digits[v] == radius) digits[v++] = -radius;
            if (v == vars) break;
            ++digits[v];
        }
    }

    // Directed moves with nonzero coefficient between window characters.
    std::set<std::pair<std::size_t, std::size_t>> moves;
    std::vector<const SkewElement*> gens;
    for (int m = 1; m < n; ++m) {
        gens.push_back(&r.raising_image(m));
        gens.push_back(&r.lowering_image(m));
    }
    for (std::size_t a = 0; a < bg.nodes.size(); ++a)
        for (const auto* x : gens)
            for (const auto& [z, coeff] : x->terms()) {
                Tableau target = bg.nodes[a].shifted(r.tableau_step(z));
                auto it = index.find(character_of(target));
                if (it == index.end() || it->second == a) continue;
                try {
                    if (evaluate(coeff, target) == 0) continue;
                } catch (const DenominatorVanishes&) {
                    continue;
                }
                moves.emplace(a, it->second);
            }

    std::vector<std::size_t> parent(bg.nodes.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& [a, b] : moves) {
        if (a > b || !moves.contains({b, a})) continue;
        if (s_set(bg.nodes[a], bg.nodes[b]).s_set.empty()) continue;
        bg.edges.emplace(a, b);
        parent[find(a)] = find(b);
    }
    std::map<std::size_t, std::size_t> label;
    for (std::size_t x = 0; x < bg.nodes.size(); ++x) {
        auto [it, inserted] = label.emplace(find(x), label.size());
        bg.component.push_back(it->second);
    }
    bg.component_count = label.size();
    return bg;
}

mpz_class q_bound(int n) {
    if (n < 1) throw std::invalid_argument("q_bound needs n >= 1");
    mpz_class q = 1, f = 1;
    for (int i = 1; i < n; ++i) {
        f *= i;
        q *= f;
    }
    return q;
}

}  // namespace gtorders
