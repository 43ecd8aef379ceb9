#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gtorders {

using Rational = mpq_class;

/// Largest n for which the variables l[i,j] fit into a packed monomial.
inline constexpr int kMaxRank = 4;
inline constexpr int kMaxVars = kMaxRank * (kMaxRank + 1) / 2;

/// The variable l[row,col], 1 <= col <= row.
struct VariableId {
    int row = 1;
    int col = 1;

    /// Position in the triangular enumeration l[1,1], l[2,1], l[2,2], l[3,1], ...
    [[nodiscard]] constexpr int index() const { return row * (row - 1) / 2 + col - 1; }
    [[nodiscard]] static constexpr VariableId from_index(int idx) {
        int r = 1;
        while (r * (r + 1) / 2 <= idx) ++r;
        return {r, idx - r * (r - 1) / 2 + 1};
    }
    [[nodiscard]] std::string to_string() const;

    friend constexpr bool operator==(VariableId, VariableId) = default;
};

/// Number of variables l[i,j] with i <= n.
[[nodiscard]] constexpr int variable_count(int n) { return n * (n + 1) / 2; }

/// Exponent vector packed as 6-bit fields, variable index v at bits [6v, 6v+6).
/// Exponents are limited to 31 so that a product never carries between fields.
class Monomial {
public:
    static constexpr int kBits = 6;
    static constexpr std::uint64_t kFieldMask = (1u << kBits) - 1;
    static constexpr int kMaxExponent = 31;

    constexpr Monomial() = default;
    static Monomial variable(int index, int exponent = 1);

    [[nodiscard]] constexpr std::uint64_t key() const { return key_; }
    [[nodiscard]] constexpr int exponent(int index) const {
        return static_cast<int>((key_ >> (kBits * index)) & kFieldMask);
    }
    [[nodiscard]] int degree() const;
    [[nodiscard]] bool is_one() const { return key_ == 0; }
    [[nodiscard]] bool divides(Monomial other) const;

    Monomial operator*(Monomial other) const;
    /// Requires divides(other) of the divisor.
    Monomial operator/(Monomial other) const;

    friend constexpr bool operator==(Monomial, Monomial) = default;
    /// Lexicographic order with the highest variable index most significant.
    friend constexpr bool operator<(Monomial a, Monomial b) { return a.key_ < b.key_; }

private:
    explicit constexpr Monomial(std::uint64_t key) : key_(key) {}
    std::uint64_t key_ = 0;
};

/// Graded lexicographic comparison on (row, col): total degree first, then the
/// exponent of l[1,1], l[2,1], l[2,2], ... in that order.
[[nodiscard]] bool glex_less(Monomial a, Monomial b);

struct Term {
    Monomial monomial;
    Rational coeff;
};

/// Sparse multivariate polynomial over Q in the variables l[i,j]. Terms are
/// stored sorted by monomial key with no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
    Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    static Polynomial variable(VariableId v);
    static Polynomial from_terms(std::vector<Term> terms);

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const;
    [[nodiscard]] Rational constant_value() const;
    [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] int total_degree() const;
    /// Leading term under glex_less. Requires a nonzero polynomial.
    [[nodiscard]] const Term& glex_leading_term() const;
    /// Mask of variable indices that occur.
    [[nodiscard]] std::uint32_t variable_mask() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    [[nodiscard]] Polynomial pow(int e) const;

    /// Exact division. Returns false (and leaves quotient unspecified) when
    /// `divisor` does not divide *this.
    [[nodiscard]] bool divide_exact(const Polynomial& divisor, Polynomial& quotient) const;

    /// Substitute l_v -> l_v + offsets[v] for every variable.
    [[nodiscard]] Polynomial translate(std::span<const Rational> offsets) const;
    /// Substitute l_v -> l_{image[v]}.
    [[nodiscard]] Polynomial rename(std::span<const int> image) const;

    /// Evaluate at values[v] for every variable index v that occurs.
    [[nodiscard]] Rational evaluate(std::span<const Rational> values) const;

    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] std::size_t hash() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    std::vector<Term> terms_;
};

[[nodiscard]] std::string rational_to_string(const Rational& q);

}  // namespace gtorders
