#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gtorders/mackey.hpp"

#include <algorithm>
#include <array>

using namespace gtorders;

namespace {

// S3 as permutations of {0,1,2}, multiplication table by composition.
std::vector<std::array<int, 3>> s3_perms() {
    std::vector<std::array<int, 3>> p;
    std::array<int, 3> a{0, 1, 2};
    do p.push_back(a);
    while (std::next_permutation(a.begin(), a.end()));
    return p;
}

TableGroup s3_table() {
    auto p = s3_perms();
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            std::array<int, 3> c{p[i][p[j][0]], p[i][p[j][1]], p[i][p[j][2]]};
            t[i][j] = static_cast<int>(std::find(p.begin(), p.end(), c) - p.begin());
        }
    return TableGroup(t);
}

// S3 permuting the three nonzero vectors e1, e2, e1+e2 of Z2 x Z2.
SemidirectSpec s4_spec() {
    auto p = s3_perms();
    const std::vector<GroupVector> nonzero = {{1, 0}, {0, 1}, {1, 1}};
    std::vector<std::vector<GroupVector>> action;
    for (const auto& s : p) action.push_back({nonzero[s[0]], nonzero[s[1]]});
    return SemidirectSpec(FiniteAbelianGroup({2, 2}), s3_table(), action);
}

std::vector<long> sorted(std::vector<long> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("character orbits") {
    CHECK(character_orbits(SemidirectSpec::s3()).size() == 2);
    CHECK(character_orbits(SemidirectSpec::a4()).size() == 2);
    CHECK(character_orbits(SemidirectSpec::a4())[1].size() == 3);
    SemidirectSpec trivial(FiniteAbelianGroup({2, 3}), TableGroup::trivial(), {{{1, 0}, {0, 1}}});
    CHECK(character_orbits(trivial).size() == 6);
}

TEST_CASE("S3 and A4") {
    auto s3 = mackey_simple_modules(SemidirectSpec::s3());
    CHECK(s3.blocks.size() == 2);
    CHECK(s3.all_dims() == std::vector<long>{1, 1, 2});
    CHECK(s3.burnside_holds);
    CHECK(s3.class_count_matches);
    CHECK(s3.brute_force_classes == 3);

    auto a4 = mackey_simple_modules(SemidirectSpec::a4());
    CHECK(a4.blocks.size() == 2);
    CHECK(a4.all_dims() == std::vector<long>{1, 1, 1, 3});
    CHECK(a4.sum_of_squares == 12);
    CHECK(a4.class_count_matches);
    CHECK(a4.brute_force_classes == 4);
}

TEST_CASE("larger examples") {
    // D4 = Z4 x| Z2 by inversion.
    SemidirectSpec d4(FiniteAbelianGroup({4}), TableGroup::cyclic(2), {{{1}}, {{3}}});
    auto r = mackey_simple_modules(d4);
    CHECK(r.all_dims() == std::vector<long>{1, 1, 1, 1, 2});
    CHECK(r.class_count_matches);

    auto s4 = mackey_simple_modules(s4_spec());
    CHECK(s4.blocks.size() == 2);
    CHECK(s4.all_dims() == std::vector<long>{1, 1, 2, 3, 3});
    CHECK(s4.burnside_holds);
    CHECK(s4.class_count_matches);
    for (const auto& b : s4.blocks) CHECK(b.orbit.size() * b.stabilizer_order == 6);

    SemidirectSpec trivial(FiniteAbelianGroup({2, 3}), TableGroup::trivial(), {{{1, 0}, {0, 1}}});
    auto t = mackey_simple_modules(trivial);
    CHECK(t.blocks.size() == 6);
    CHECK(t.all_dims() == std::vector<long>(6, 1));
    CHECK_THROWS_AS((void)mackey_simple_modules(s4_spec(), 4), StabilizerTooLarge);
}

TEST_CASE("irreducible dimensions") {
    CHECK(sorted(irreducible_dimensions(24, 5, 2)) == std::vector<long>{1, 1, 2, 3, 3});
    CHECK(sorted(irreducible_dimensions(24, 7, 3)) == std::vector<long>{1, 1, 1, 2, 2, 2, 3});
    CHECK(sorted(irreducible_dimensions(8, 5, 4)) == std::vector<long>{1, 1, 1, 1, 2});
}

TEST_CASE("invalid specs") {
    CHECK_THROWS_AS(SemidirectSpec(FiniteAbelianGroup({3}), TableGroup::cyclic(2), {{{1}}, {{1}}, {{2}}}),
                    std::invalid_argument);
    // x -> 2x on Z4 is not an automorphism.
    CHECK_THROWS_AS(SemidirectSpec(FiniteAbelianGroup({4}), TableGroup::cyclic(2), {{{1}}, {{2}}}),
                    std::invalid_argument);
    // Z3 by a generator of order 2 cannot come from Z3.
    CHECK_THROWS_AS(SemidirectSpec(FiniteAbelianGroup({3}), TableGroup::cyclic(3), {{{1}}, {{2}}, {{1}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(TableGroup({{0, 1}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("skew orbit blocks") {
    auto b = skew_orbit_block(0, 1, 5);
    CHECK(b.points.size() == 5);
    CHECK(b.free_action);
    CHECK(b.within_orbit_singleton);
    CHECK(translation_hom_count(0, Rational(1, 2), 1) == 0);
    CHECK(translation_hom_count(Rational(1, 3), Rational(7, 3), 1) == 1);
    CHECK_THROWS_AS((void)skew_orbit_block(0, 0, 3), ZeroShift);
}
