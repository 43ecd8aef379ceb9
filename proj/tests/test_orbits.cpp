#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gtorders/orbits.hpp"
#include "gtorders/tableaux.hpp"
#include "support.hpp"

using namespace gtorders;

using testing_support::orbit_by_generators;
using testing_support::random_generic;
using testing_support::random_integral;

namespace {

Tableau rows(std::vector<std::vector<Rational>> r) { return Tableau::from_rows(r); }

}  // namespace

TEST_CASE("Q_n") {
    CHECK(q_bound(1) == 1);
    CHECK(q_bound(2) == 1);
    CHECK(q_bound(3) == 2);
    CHECK(q_bound(4) == 12);
}

TEST_CASE("S(m,n) on generic and integral tableaux") {
    std::mt19937 rng(3);
    for (int k = 0; k < 10; ++k) {
        Tableau t = random_generic(rng, 3);
        auto rep = s_set(t, t);
        CHECK(rep.s_set == std::set<ShiftVector>{ShiftVector{}});
        CHECK(rep.s_set_mod_G == 1);
    }
    auto t = rows({{0}, {1, 0}, {2, 1, 0}});
    auto rep = s_set(t, t);
    CHECK(rep.s_set_mod_G <= 2);
    CHECK(rep.s_set_mod_G == 2);
    CHECK(rep.bound_holds);
    CHECK(rep.g_stab_source == 1);
    CHECK(rep.bound == 144);
    // Row-n invariance.
    CHECK(s_set(t, rows({{0}, {1, 0}, {3, 1, 0}})).s_set.empty());
    CHECK(shift_stabilizer(t).size() == 1);
}

TEST_CASE("S(m,n) symmetry and bounds on random integral pairs") {
    std::mt19937 rng(5);
    for (int n : {2, 3}) {
        for (int k = 0; k < 25; ++k) {
            Tableau a = random_integral(rng, n), b = a;
            // Same top row up to permutation, random lower rows.
            Tableau c = random_integral(rng, n);
            for (int i = 1; i < n; ++i)
                for (int j = 1; j <= i; ++j) b.set(i, j, c.at(i, j));
            auto ab = s_set(a, b), ba = s_set(b, a);
            CHECK(ab.bound_holds);
            CHECK(ab.s_set.size() == ba.s_set.size());
            for (const auto& z : ab.s_set) CHECK(ba.s_set.contains(-z));
            CHECK(s_set(a, a).s_set_mod_G <= q_bound(n));
        }
    }
    for (int k = 0; k < 3; ++k) {
        Tableau t = random_integral(rng, 4);
        CHECK(s_set(t, t).s_set_mod_G <= q_bound(4));
    }
}

TEST_CASE("X-sets") {
    Realization r(2, default_profile());
    auto t = rows({{Rational(1, 3)}, {Rational(1, 5), 0}});
    CHECK(x_set(SkewElement::scalar(1L), t) == std::set<Character>{character_of(t)});
    auto xs = x_set(r.raising_image(1), t);
    CHECK(xs == std::set<Character>{character_of(rows({{Rational(4, 3)}, {Rational(1, 5), 0}}))});

    Realization r3(3, default_profile());
    std::mt19937 rng(9);
    for (int k = 0; k < 5; ++k) {
        Tableau s = testing_support::random_tableau(rng, 3);
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                const auto& u = r3.general_image(i, j);
                // Characters compared as whole orbits.
                std::set<std::set<Tableau>> oracle, seen;
                for (const auto& l : orbit_by_generators(s))
                    for (const auto& z : u.support()) oracle.insert(orbit_by_generators(l.shifted(r3.tableau_step(z))));
                auto got = x_set(u, s);
                for (const auto& c : got) seen.insert(orbit_by_generators(c));
                CHECK(seen == oracle);
                CHECK(got.size() == oracle.size());
                CHECK(got.size() <= u.support().size() * 12);
            }
    }
}

TEST_CASE("block graph") {
    Realization r(2, default_profile());
    std::mt19937 rng(13);
    Tableau g = random_generic(rng, 2);
    auto bg = block_graph(r, {g}, 2);
    CHECK(bg.nodes.size() == 5);
    CHECK(bg.edges.size() == 4);
    CHECK(bg.component_count == 1);

    Tableau other = g;
    other.set(2, 1, g.at(2, 1) + Rational(1, 2));
    auto two = block_graph(r, {g, other}, 1);
    for (const auto& [a, b] : two.edges) CHECK(two.nodes[a].row(2) == two.nodes[b].row(2));
    CHECK(two.component_count == 2);

    Tableau top = pattern_to_tableau(rows({{1}, {1, 0}}));
    auto ib = block_graph(r, {top}, 2);
    std::size_t seed = 0;
    for (std::size_t k = 0; k < ib.nodes.size(); ++k)
        if (ib.nodes[k] == character_of(top)) seed = k;
    CHECK(ib.component_size(seed) == gt_patterns({1, 0}).size());
    CHECK(ib.edge_list().find(" -- ") != std::string::npos);
}
