#pragma once

#include "gtorders/ratfun.hpp"
#include "gtorders/skew.hpp"
#include "gtorders/tableaux.hpp"

#include <random>
#include <set>

namespace testing_support {

using namespace gtorders;

inline Polynomial random_polynomial(std::mt19937& rng, int n, int max_terms = 3, int max_deg = 2) {
    std::uniform_int_distribution<int> nterms(1, max_terms), coeff(-4, 4), deg(0, max_deg),
        var(0, variable_count(n) - 1);
    Polynomial p;
    int t = nterms(rng);
    for (int k = 0; k < t; ++k) {
        Polynomial m(static_cast<long>(coeff(rng)));
        int d = deg(rng);
        for (int e = 0; e < d; ++e) m = m * Polynomial::variable(VariableId::from_index(var(rng)));
        p += m;
    }
    return p;
}

inline RationalFunction random_rational_function(std::mt19937& rng, int n) {
    Polynomial num = random_polynomial(rng, n);
    Polynomial den;
    do {
        den = random_polynomial(rng, n, 2, 1);
    } while (den.is_zero());
    return RationalFunction(num) / RationalFunction(den);
}

inline ShiftVector random_shift(std::mt19937& rng, int n, int radius = 1) {
    std::uniform_int_distribution<int> d(-radius, radius);
    ShiftVector z;
    for (int i = 1; i < n; ++i)
        for (int j = 1; j <= i; ++j) z.set({i, j}, d(rng));
    return z;
}

inline SkewElement random_skew(std::mt19937& rng, int n, int max_terms = 2) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    SkewElement x;
    int t = nterms(rng);
    for (int k = 0; k < t; ++k) x.add_term(random_shift(rng, n), random_rational_function(rng, n));
    return x;
}

inline PermutationTuple random_group_element(std::mt19937& rng, int n) {
    auto g = enumerate_group(n);
    std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
    return g[pick(rng)];
}

inline Rational random_generic_rational(std::mt19937& rng) {
    // Denominators from a few primes keep differences away from integers
    // with overwhelming probability; callers still check is_generic.
    std::uniform_int_distribution<int> num(-40, 40), den(0, 3);
    static const int dens[] = {7, 11, 13, 17};
    Rational q(num(rng), dens[den(rng)]);
    q.canonicalize();
    return q;
}

inline Tableau random_tableau(std::mt19937& rng, int n) {
    Tableau t(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) t.set(i, j, random_generic_rational(rng));
    return t;
}

inline Tableau random_generic(std::mt19937& rng, int n) {
    for (;;) {
        Tableau t = random_tableau(rng, n);
        if (is_generic(t)) return t;
    }
}

inline Tableau random_integral(std::mt19937& rng, int n, int radius = 2) {
    std::uniform_int_distribution<int> d(-radius, radius);
    Tableau t(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) t.set(i, j, d(rng));
    return t;
}

// Orbit by closure under the group generators, independent of canonical().
inline std::set<Tableau> orbit_by_generators(const Tableau& t) {
    std::set<Tableau> orbit{t};
    std::vector<Tableau> todo{t};
    auto gens = group_generators(t.n());
    while (!todo.empty()) {
        Tableau x = todo.back();
        todo.pop_back();
        for (const auto& g : gens) {
            Tableau y = g.act(x);
            if (orbit.insert(y).second) todo.push_back(y);
        }
    }
    return orbit;
}

}  // namespace testing_support
