#pragma once

#include "gtorders/ratfun.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace gtorders {

/// Raised by symmetrize_term when the coefficient is not fixed by H_phi.
class StabilizerViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// x = sum_m x_m m in L*M: finitely many shifts with nonzero coefficients.
class SkewElement {
public:
    using Terms = std::map<ShiftVector, RationalFunction>;

    SkewElement() = default;
    /// Single term a*z (dropped if a == 0).
    SkewElement(const ShiftVector& z, RationalFunction a);
    /// a*e.
    static SkewElement scalar(RationalFunction a) { return {ShiftVector{}, std::move(a)}; }

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::set<ShiftVector> support() const;
    /// Coefficient x_z (zero if z is outside the support).
    [[nodiscard]] RationalFunction coefficient(const ShiftVector& z) const;

    /// Adds a*z, dropping the entry when the sum is semantically zero.
    void add_term(const ShiftVector& z, const RationalFunction& a);

    SkewElement operator-() const;
    SkewElement& operator+=(const SkewElement& o);
    SkewElement& operator-=(const SkewElement& o);
    friend SkewElement operator+(SkewElement a, const SkewElement& b) { return a += b; }
    friend SkewElement operator-(SkewElement a, const SkewElement& b) { return a -= b; }
    /// Multiplies every coefficient by c (left multiplication by c*e).
    [[nodiscard]] SkewElement scaled(const RationalFunction& c) const;

    /// Coefficient-wise semantic equality.
    friend bool operator==(const SkewElement& a, const SkewElement& b);

    [[nodiscard]] std::string to_string() const;

private:
    Terms terms_;
};

/// A finite G-invariant set of shifts.
class GOrbitOfShifts {
public:
    GOrbitOfShifts() = default;
    /// Throws std::invalid_argument if the set is not closed under G.
    GOrbitOfShifts(std::set<ShiftVector> shifts, int n);

    [[nodiscard]] const std::set<ShiftVector>& shifts() const { return shifts_; }
    [[nodiscard]] bool contains(const ShiftVector& z) const { return shifts_.contains(z); }
    [[nodiscard]] std::size_t size() const { return shifts_.size(); }

private:
    std::set<ShiftVector> shifts_;
};

/// The skew group ring L*M for gl_n with the action of G = S_1 x ... x S_n.
/// The shift direction enters products through r^m = apply_shift(r, m, s).
class SkewRing {
public:
    SkewRing(int n, ShiftDirection s);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] ShiftDirection direction() const { return s_; }
    [[nodiscard]] const std::vector<PermutationTuple>& group() const { return group_; }

    /// (r1 m1)(r2 m2) = r1 r2^{m1} (m1 m2), extended bilinearly.
    [[nodiscard]] SkewElement multiply(const SkewElement& x, const SkewElement& y) const;
    [[nodiscard]] SkewElement commutator(const SkewElement& x, const SkewElement& y) const;
    /// x * (gamma e).
    [[nodiscard]] SkewElement right_scale(const SkewElement& x, const RationalFunction& gamma) const;

    /// (l m)^g = l^g m^g.
    [[nodiscard]] SkewElement g_act(const SkewElement& x, const PermutationTuple& g) const;
    [[nodiscard]] bool is_invariant(const SkewElement& x) const;

    /// H_phi = { h in G | h.phi = phi }.
    [[nodiscard]] std::vector<PermutationTuple> stabilizer(const ShiftVector& phi) const;
    [[nodiscard]] GOrbitOfShifts orbit(const ShiftVector& phi) const;
    /// Smallest G-invariant set containing the given shifts.
    [[nodiscard]] GOrbitOfShifts closure(const std::set<ShiftVector>& shifts) const;
    /// G-orbits of S, listed by their smallest element.
    [[nodiscard]] std::vector<std::set<ShiftVector>> orbits_of(const GOrbitOfShifts& S) const;

    /// [a phi] = sum over g in G/H_phi of a^g phi^g.
    [[nodiscard]] SkewElement symmetrize_term(const RationalFunction& a, const ShiftVector& phi) const;

    [[nodiscard]] static SkewElement restrict_support(const SkewElement& x, const GOrbitOfShifts& S);
    /// |S/G|.
    [[nodiscard]] std::size_t invariant_support_dimension(const GOrbitOfShifts& S) const;

    /// f_S . x, applied term-wise: the coefficient at m is multiplied by
    /// prod_{t in S} (f - f^{m t^-1}).
    [[nodiscard]] SkewElement separator_apply(const RationalFunction& f, const std::set<ShiftVector>& S,
                                              const SkewElement& x) const;
    /// Same bimodule element applied through ring products:
    /// prod_{t in S} (f (x) 1 - 1 (x) f^{t^-1}) acting by (a (x) b).x = a x b.
    [[nodiscard]] SkewElement separator_apply_by_products(const RationalFunction& f,
                                                          const std::set<ShiftVector>& S,
                                                          const SkewElement& x) const;

private:
    int n_;
    ShiftDirection s_;
    std::vector<PermutationTuple> group_;
    std::vector<PermutationTuple> generators_;
};

}  // namespace gtorders
