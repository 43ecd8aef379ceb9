#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gtorders/realization.hpp"

using namespace gtorders;

namespace {
RationalFunction l(int i, int j) { return RationalFunction::variable({i, j}); }
ShiftVector d(int i, int j, int k = 1) { return ShiftVector::delta({i, j}, k); }
}  // namespace

TEST_CASE("coefficients") {
    Realization r(3, default_profile());
    CHECK(r.coefficient_A(1, 1, +1) == -(l(2, 1) - l(1, 1)) * (l(2, 2) - l(1, 1)));
    CHECK(r.coefficient_A(1, 1, -1) == RationalFunction(1L));
    auto a = r.coefficient_A(2, 1, +1);
    REQUIRE(a.denominator_factors().size() == 1);
    CHECK(a.denominator_factors()[0].poly == Polynomial::variable({2, 1}) - Polynomial::variable({2, 2}));
    CHECK(a * (l(2, 2) - l(2, 1)) ==
          -(l(3, 1) - l(2, 1)) * (l(3, 2) - l(2, 1)) * (l(3, 3) - l(2, 1)));
}

TEST_CASE("generator images") {
    Realization r2(2, default_profile());
    CHECK(r2.raising_image(1).support() == std::set<ShiftVector>{d(1, 1)});
    CHECK(r2.lowering_image(1).support() == std::set<ShiftVector>{d(1, 1, -1)});
    CHECK(r2.diagonal_image(1) == SkewElement::scalar(l(1, 1) + 1));
    CHECK(r2.general_image(1, 2) == r2.raising_image(1));

    Realization r3(3, default_profile());
    CHECK(r3.raising_image(2).support() == std::set<ShiftVector>{d(2, 1), d(2, 2)});
    for (int m = 1; m <= 3; ++m) {
        CHECK(r3.diagonal_image(m).support() == std::set<ShiftVector>{ShiftVector{}});
        CHECK(r3.ring().is_invariant(r3.diagonal_image(m)));
    }
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) CHECK(r3.ring().is_invariant(r3.general_image(i, j)));
    CHECK(r3.general_image(1, 3) == r3.ring().commutator(r3.general_image(1, 2), r3.general_image(2, 3)));
    CHECK(r3.ring().commutator(r3.general_image(1, 3), r3.general_image(3, 1)) ==
          r3.diagonal_image(1) - r3.diagonal_image(3));
    // Independence of the bracketing chain.
    CHECK(r3.bracket_via(3, 2, 1) == r3.general_image(3, 1));
    SkewElement sum;
    for (int m = 1; m <= 3; ++m) sum += r3.diagonal_image(m);
    CHECK(sum.coefficient(ShiftVector{}) == Realization::eigenvalue_gamma(3, 1));
}

TEST_CASE("eigenvalue map") {
    CHECK(Realization::eigenvalue_gamma(1, 1) == l(1, 1) + 1);
    CHECK(Realization::eigenvalue_gamma(2, 1) == l(2, 1) + l(2, 2) + 3);
    for (int m = 1; m <= 3; ++m)
        for (int k = 1; k <= 3; ++k) CHECK(is_g_invariant(Realization::eigenvalue_gamma(m, k), 3));
}

TEST_CASE("relations and center under the default profile") {
    Realization r2(2, default_profile());
    auto rel2 = r2.verify_relations();
    CHECK(rel2.identities.size() == 6);
    CHECK(rel2.all_passed());
    CHECK(r2.verify_center().all_passed());
    CHECK(r2.c_image(2, 2).coefficient(ShiftVector{}) == Realization::eigenvalue_gamma(2, 2));

    Realization r3(3, default_profile());
    auto rel3 = r3.verify_relations({false, 2});
    CHECK(rel3.identities.size() == 36);
    CHECK(rel3.all_passed());
    auto center = r3.verify_center();
    CHECK(center.eigenvalue_checks.size() == 6);
    CHECK(center.centrality_checks.size() == 27);
    CHECK(center.all_passed());
    CHECK(r3.c_image(1, 1) == r3.diagonal_image(1));
}

TEST_CASE("negative controls") {
    Realization flipped(2, ConventionProfile{ShiftDirection::Plus, 1, 1, 1, CoefficientEvaluation::Source});
    CHECK_FALSE(flipped.verify_relations().all_passed());
    for (auto kind : {GeneratorId::Kind::Raising, GeneratorId::Kind::Lowering}) {
        Realization bad(2, default_profile(), Corruption{kind, 1, 1});
        auto rep = bad.verify_relations();
        CHECK(rep.failures() >= 1);
        for (const auto& c : rep.identities)
            if (!c.passed) CHECK_FALSE(c.witness.empty());
    }
}

TEST_CASE("generator labels") {
    CHECK(GeneratorId::parse("e12") == GeneratorId::raising(1));
    CHECK(GeneratorId::parse("e3,1").label() == "e31");
    CHECK(GeneratorId::e(2, 1).kind == GeneratorId::Kind::Lowering);
    CHECK_THROWS_AS(GeneratorId::parse("x"), std::invalid_argument);
}
