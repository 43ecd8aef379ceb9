#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gtorders/io.hpp"
#include "support.hpp"

using namespace gtorders;
using namespace gtorders::io;

TEST_CASE("tableau and shift round trips") {
    std::mt19937 rng(12);
    for (int n = 1; n <= 4; ++n) {
        auto t = testing_support::random_tableau(rng, n);
        CHECK(tableau_from_json(to_json(t)) == t);
        CHECK(tableau_from_json(json::parse(to_json(t).dump())) == t);
    }
    auto t = tableau_from_json(json::parse(R"({"n":2,"rows":[[1,"-1/2"],["3/4"]]})"));
    CHECK(t.at(2, 1) == 1);
    CHECK(t.at(2, 2) == Rational(-1, 2));
    CHECK(t.at(1, 1) == Rational(3, 4));
    CHECK_THROWS_AS((void)tableau_from_json(json::parse(R"({"n":2,"rows":[[1],[2]]})")), std::invalid_argument);

    for (int k = 0; k < 20; ++k) {
        auto z = testing_support::random_shift(rng, 3, 2);
        CHECK(shift_from_json(to_json(z)) == z);
    }
    CHECK_THROWS_AS((void)shift_from_json(json::parse(R"({"4,1":1})")), std::invalid_argument);
}

TEST_CASE("skew elements, vectors and profiles") {
    std::mt19937 rng(13);
    for (int k = 0; k < 20; ++k) {
        auto x = testing_support::random_skew(rng, 3);
        CHECK(skew_from_json(json::parse(to_json(x).dump())) == x);
    }
    ModuleVector v(testing_support::random_tableau(rng, 3), Rational(2, 3));
    v.add(testing_support::random_tableau(rng, 3), -1);
    CHECK(module_vector_from_json(to_json(v)) == v);

    auto p = default_profile();
    CHECK(profile_from_json(to_json(p)) == p);
    auto bad = to_json(p);
    bad["raising_sign"] = 2;
    CHECK_THROWS_AS((void)profile_from_json(bad), std::invalid_argument);
}

TEST_CASE("semidirect specs and reports") {
    auto spec = SemidirectSpec::a4();
    auto again = semidirect_from_json(json::parse(to_json(spec).dump()));
    CHECK(mackey_simple_modules(again).all_dims() == std::vector<long>{1, 1, 1, 3});
    // A non-homomorphic action is rejected.
    auto j = to_json(SemidirectSpec::s3());
    j["action"][1][0][0] = 1;
    j["action"][0][0][0] = 2;
    CHECK_THROWS_AS((void)semidirect_from_json(j), std::invalid_argument);

    // Reports are byte-stable.
    Realization r(2, default_profile());
    CHECK(to_json(r.verify_relations()).dump() == to_json(r.verify_relations()).dump());
    auto cal = calibrate_conventions();
    CHECK(to_json(cal).dump() == to_json(calibrate_conventions()).dump());
    CHECK(to_json(cal)["valid_count"] == 1);
}
