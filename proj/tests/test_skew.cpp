#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gtorders/skew.hpp"
#include "support.hpp"

using namespace gtorders;
using namespace testing_support;

namespace {
RationalFunction l(int i, int j) { return RationalFunction::variable({i, j}); }
ShiftVector d(int i, int j, int k = 1) { return ShiftVector::delta({i, j}, k); }
}  // namespace

TEST_CASE("products follow the shift rule") {
    for (auto s : {ShiftDirection::Minus, ShiftDirection::Plus}) {
        SkewRing R(2, s);
        SkewElement a(d(1, 1), RationalFunction(1L)), b(d(1, 1, -1), RationalFunction(1L));
        CHECK(R.multiply(a, b) == SkewElement::scalar(1L));
        auto x = SkewElement::scalar(l(1, 1));
        // (l e)(1 d) = l d; (1 d)(l e) = (l + s) d.
        CHECK(R.multiply(x, a) == SkewElement(d(1, 1), l(1, 1)));
        CHECK(R.multiply(a, x) == SkewElement(d(1, 1), l(1, 1) + sign_of(s)));
        CHECK_FALSE(R.multiply(x, a) == R.multiply(a, x));
    }
}

TEST_CASE("associativity and identity on random triples") {
    std::mt19937 rng(1);
    SkewRing R(3, ShiftDirection::Minus);
    auto e = SkewElement::scalar(1L);
    for (int k = 0; k < 60; ++k) {
        auto x = random_skew(rng, 3), y = random_skew(rng, 3), z = random_skew(rng, 3);
        CHECK(R.multiply(x, R.multiply(y, z)) == R.multiply(R.multiply(x, y), z));
        CHECK(R.multiply(x, y + z) == R.multiply(x, y) + R.multiply(x, z));
        CHECK(R.multiply(e, x) == x);
        CHECK(R.multiply(x, e) == x);
    }
}

TEST_CASE("group action on the skew ring") {
    std::mt19937 rng(2);
    SkewRing R(3, ShiftDirection::Plus);
    for (int k = 0; k < 60; ++k) {
        auto x = random_skew(rng, 3), y = random_skew(rng, 3);
        auto g = random_group_element(rng, 3);
        CHECK(R.g_act(x, PermutationTuple::identity(3)) == x);
        CHECK(R.g_act(R.g_act(x, g), g.inverse()) == x);
        CHECK(R.g_act(R.multiply(x, y), g) == R.multiply(R.g_act(x, g), R.g_act(y, g)));
    }
}

TEST_CASE("symmetrized elements") {
    SkewRing R2(2, ShiftDirection::Minus);
    CHECK(R2.symmetrize_term(1L, ShiftVector{}) == SkewElement::scalar(1L));
    auto A = -(l(2, 1) - l(1, 1)) * (l(2, 2) - l(1, 1));
    auto x = R2.symmetrize_term(A, d(1, 1));
    CHECK(x == SkewElement(d(1, 1), A));

    SkewRing R3(3, ShiftDirection::Minus);
    auto y = R3.symmetrize_term(l(2, 1), d(2, 1));
    CHECK(y.support() == std::set<ShiftVector>{d(2, 1), d(2, 2)});
    CHECK(y.coefficient(d(2, 1)) == l(2, 1));
    CHECK(y.coefficient(d(2, 2)) == l(2, 2));
    CHECK(R3.is_invariant(y));
    CHECK_THROWS_AS((void)R3.symmetrize_term(l(2, 1), ShiftVector{}), StabilizerViolation);

    std::mt19937 rng(4);
    for (int k = 0; k < 40; ++k) {
        auto phi = random_shift(rng, 3);
        // Average over the stabilizer to obtain an admissible coefficient.
        auto a0 = random_rational_function(rng, 3);
        RationalFunction a;
        for (const auto& h : R3.stabilizer(phi)) a += apply_permutation(a0, h);
        auto s = R3.symmetrize_term(a, phi);
        for (const auto& g : R3.group()) CHECK(R3.g_act(s, g) == s);
    }
}

TEST_CASE("support restriction and dimension") {
    SkewRing R3(3, ShiftDirection::Minus);
    auto x = R3.symmetrize_term(l(2, 1), d(2, 1)) + R3.symmetrize_term(l(1, 1), d(1, 1));
    GOrbitOfShifts all(x.support(), 3);
    CHECK(SkewRing::restrict_support(x, all) == x);
    CHECK(SkewRing::restrict_support(x, GOrbitOfShifts{}).is_zero());
    CHECK(SkewRing::restrict_support(x, R3.orbit(d(2, 1))) == R3.symmetrize_term(l(2, 1), d(2, 1)));

    CHECK(R3.invariant_support_dimension(R3.closure({ShiftVector{}})) == 1);
    CHECK(R3.invariant_support_dimension(R3.orbit(d(2, 1))) == 1);
    CHECK(R3.orbit(d(2, 1)).size() == 2);
    CHECK(R3.invariant_support_dimension(GOrbitOfShifts({d(2, 1), d(2, 2), d(1, 1)}, 3)) == 2);
    CHECK_THROWS_AS(GOrbitOfShifts({d(2, 1)}, 3), std::invalid_argument);

    // |S/G| equals the rank of the symmetrized generators: orbit sums of
    // distinct orbits have disjoint supports, and each is nonzero.
    auto S = R3.closure({d(1, 1), d(2, 1), d(2, 1) + d(1, 1), d(2, 1) - d(2, 2)});
    auto orbits = R3.orbits_of(S);
    CHECK(orbits.size() == R3.invariant_support_dimension(S));
    std::set<ShiftVector> seen;
    for (const auto& o : orbits) {
        auto phi = *o.begin();
        auto gen = R3.symmetrize_term(1L, phi);
        CHECK(gen.support() == o);
        for (const auto& z : o) CHECK(seen.insert(z).second);
    }
}

TEST_CASE("separators") {
    for (auto s : {ShiftDirection::Minus, ShiftDirection::Plus}) {
        SkewRing R(2, s);
        auto f = l(1, 1) + 1;
        auto out = R.separator_apply(f, {d(1, 1)}, SkewElement::scalar(1L));
        CHECK(out == SkewElement::scalar(RationalFunction(static_cast<long>(sign_of(s)))));
        CHECK(out == R.separator_apply_by_products(f, {d(1, 1)}, SkewElement::scalar(1L)));
        SkewElement u(d(1, 1), l(2, 1));
        CHECK(R.separator_apply(f, {d(1, 1)}, u).is_zero());
        CHECK(R.separator_apply(f, {}, u) == u);
    }
}
