#pragma once

#include "gtorders/polynomial.hpp"
#include "gtorders/tableau.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gtorders {

/// Thrown by evaluate() when a denominator factor vanishes at the point.
class DenominatorVanishes : public std::runtime_error {
public:
    explicit DenominatorVanishes(std::string factor)
        : std::runtime_error("denominator factor vanishes: " + factor), factor_(std::move(factor)) {}
    [[nodiscard]] const std::string& factor() const { return factor_; }

private:
    std::string factor_;
};

/// Sign s in the shift action l[i,j] -> l[i,j] + s*z[i,j].
enum class ShiftDirection : int { Minus = -1, Plus = 1 };

[[nodiscard]] inline int sign_of(ShiftDirection s) { return static_cast<int>(s); }

/// Element of the field L = Q(l[i,j]). The denominator is kept as a product of
/// monic (glex leading coefficient 1) polynomial factors, so it is sign
/// normalized by construction. Factors that divide the numerator are
/// cancelled eagerly; no further gcd reduction is attempted, and equality is
/// decided by cross-multiplication.
class RationalFunction {
public:
    struct Factor {
        Polynomial poly;
        int multiplicity = 1;
    };

    RationalFunction() = default;
    RationalFunction(Polynomial numerator);  // NOLINT(google-explicit-constructor)
    RationalFunction(const Rational& c) : RationalFunction(Polynomial(c)) {}  // NOLINT
    RationalFunction(long c) : RationalFunction(Polynomial(c)) {}  // NOLINT
    static RationalFunction variable(VariableId v) { return {Polynomial::variable(v)}; }

    [[nodiscard]] const Polynomial& numerator() const { return num_; }
    [[nodiscard]] const std::vector<Factor>& denominator_factors() const { return den_; }
    /// Expanded product of the denominator factors.
    [[nodiscard]] Polynomial denominator() const;

    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    [[nodiscard]] bool is_polynomial() const { return den_.empty(); }
    [[nodiscard]] bool is_constant() const { return den_.empty() && num_.is_constant(); }
    /// Total number of numerator terms plus denominator terms.
    [[nodiscard]] std::size_t weight() const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    [[nodiscard]] RationalFunction pow(int e) const;

    /// Semantic equality: a.num * b.den == b.num * a.den.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b);

    /// Explicit-parenthesis infix form with variables l[i,j] and rationals p/q.
    [[nodiscard]] std::string to_string() const;

    /// Substitution l_v -> l_v + offsets[v] (translation of the l-space).
    [[nodiscard]] RationalFunction translate(std::span<const Rational> offsets) const;
    /// Substitution l_v -> l_{image[v]}.
    [[nodiscard]] RationalFunction rename(std::span<const int> image) const;
    /// Exact value at the point (entries indexed like the variables).
    [[nodiscard]] Rational evaluate(std::span<const Rational> point) const;

private:
    void add_factor(Polynomial p, int multiplicity);
    void cancel();
    void normalize_factors();

    Polynomial num_;
    std::vector<Factor> den_;
};

/// Parse the textual form produced by to_string (and ordinary infix with
/// + - * / ^ and parentheses). Throws std::invalid_argument on bad input.
[[nodiscard]] RationalFunction parse_rational_function(std::string_view text);
[[nodiscard]] Rational parse_rational(std::string_view text);

/// Value at a tableau; throws DenominatorVanishes naming the offending factor.
[[nodiscard]] Rational evaluate(const RationalFunction& f, const Tableau& point);

/// l[i,j] -> l[i,j] + s*z[i,j]; variables of rows not present in z are fixed.
[[nodiscard]] RationalFunction apply_shift(const RationalFunction& f, const ShiftVector& z, ShiftDirection s);

/// Element (sigma_1, ..., sigma_n) of G = S_1 x ... x S_n. sigma[i-1] permutes
/// the columns {0..i-1} of row i; the action on variables is
/// l[i,j] -> l[i, sigma_i(j)].
class PermutationTuple {
public:
    PermutationTuple() = default;
    explicit PermutationTuple(std::vector<std::vector<int>> sigma);
    static PermutationTuple identity(int n);
    /// Transposition of columns c and c+1 (1-based) in row `row`.
    static PermutationTuple adjacent_transposition(int n, int row, int c);

    [[nodiscard]] int n() const { return static_cast<int>(sigma_.size()); }
    [[nodiscard]] const std::vector<std::vector<int>>& sigma() const { return sigma_; }
    /// sigma_row applied to the 1-based column.
    [[nodiscard]] int image(int row, int col) const { return sigma_[row - 1][col - 1] + 1; }
    [[nodiscard]] bool is_identity() const;

    [[nodiscard]] PermutationTuple inverse() const;
    /// (*this o other): apply other first.
    [[nodiscard]] PermutationTuple compose(const PermutationTuple& other) const;
    /// Variable index map v -> index of l[i, sigma_i(j)].
    [[nodiscard]] std::vector<int> variable_image() const;

    /// (g.z)[i, sigma_i(j)] = z[i,j]: the conjugation g o delta^z o g^-1.
    [[nodiscard]] ShiftVector act(const ShiftVector& z) const;
    /// (g.l)[i, sigma_i(j)] = l[i,j].
    [[nodiscard]] Tableau act(const Tableau& t) const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const PermutationTuple&, const PermutationTuple&) = default;
    friend auto operator<=>(const PermutationTuple&, const PermutationTuple&) = default;

private:
    std::vector<std::vector<int>> sigma_;
};

/// All elements of S_1 x ... x S_n (|G| = prod i!).
[[nodiscard]] std::vector<PermutationTuple> enumerate_group(int n);
/// Adjacent transpositions of each row: a generating set of G.
[[nodiscard]] std::vector<PermutationTuple> group_generators(int n);

[[nodiscard]] RationalFunction apply_permutation(const RationalFunction& f, const PermutationTuple& g);

/// True iff f is fixed by every adjacent transposition of every row <= n.
[[nodiscard]] bool is_g_invariant(const RationalFunction& f, int n);

}  // namespace gtorders
