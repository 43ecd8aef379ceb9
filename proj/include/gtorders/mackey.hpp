#pragma once

#include "gtorders/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace gtorders {

class StabilizerTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroShift : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using GroupVector = std::vector<int>;

/// Z_{d1} x ... x Z_{dk}, elements as residue vectors.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;
    explicit FiniteAbelianGroup(std::vector<int> cyclic_orders);

    [[nodiscard]] const std::vector<int>& cyclic_orders() const { return orders_; }
    [[nodiscard]] std::size_t rank() const { return orders_.size(); }
    [[nodiscard]] std::size_t order() const;
    [[nodiscard]] std::vector<GroupVector> elements() const;
    [[nodiscard]] GroupVector add(const GroupVector& a, const GroupVector& b) const;
    [[nodiscard]] GroupVector reduce(GroupVector a) const;
    [[nodiscard]] std::size_t index(const GroupVector& a) const;

private:
    std::vector<int> orders_;
};

/// A finite group given by its multiplication table.
class TableGroup {
public:
    TableGroup() = default;
    /// Checks closure, associativity, identity and inverses.
    explicit TableGroup(std::vector<std::vector<int>> table);

    [[nodiscard]] std::size_t order() const { return table_.size(); }
    [[nodiscard]] int mul(int a, int b) const { return table_[a][b]; }
    [[nodiscard]] int identity() const { return identity_; }
    [[nodiscard]] int inverse(int a) const { return inverse_[a]; }
    [[nodiscard]] const std::vector<std::vector<int>>& table() const { return table_; }

    /// Conjugacy classes of the subgroup with the given elements.
    [[nodiscard]] std::size_t class_count(const std::vector<int>& subgroup) const;
    /// Order of the commutator subgroup of the given subgroup.
    [[nodiscard]] std::size_t derived_order(const std::vector<int>& subgroup) const;

    static TableGroup cyclic(int order);
    static TableGroup trivial() { return cyclic(1); }

private:
    std::vector<std::vector<int>> table_;
    int identity_ = 0;
    std::vector<int> inverse_;
};

/// N x| H with abelian N. action[h][k] is the image of the k-th cyclic
/// generator of N under h.
class SemidirectSpec {
public:
    /// Throws std::invalid_argument unless h -> action[h] is a homomorphism
    /// H -> Aut N.
    SemidirectSpec(FiniteAbelianGroup n_part, TableGroup h, std::vector<std::vector<GroupVector>> action);

    [[nodiscard]] const FiniteAbelianGroup& n_part() const { return n_; }
    [[nodiscard]] const TableGroup& h() const { return h_; }
    [[nodiscard]] const std::vector<std::vector<GroupVector>>& action() const { return action_; }
    [[nodiscard]] std::size_t order() const { return n_.order() * h_.order(); }

    [[nodiscard]] GroupVector act(int h, const GroupVector& x) const;
    /// (h.chi)(x) = chi(h^-1 x) on exponent vectors of characters.
    [[nodiscard]] GroupVector act_on_character(int h, const GroupVector& chi) const;
    /// Conjugacy classes of N x| H by brute force over all elements.
    [[nodiscard]] std::size_t class_count() const;

    /// Z3 x| Z2 = S3 and (Z2 x Z2) x| Z3 = A4.
    static SemidirectSpec s3();
    static SemidirectSpec a4();

private:
    FiniteAbelianGroup n_;
    TableGroup h_;
    std::vector<std::vector<GroupVector>> action_;
};

/// H-orbits on the character group of N, each sorted, listed by smallest member.
[[nodiscard]] std::vector<std::vector<GroupVector>> character_orbits(const SemidirectSpec& spec);

struct MackeyBlock {
    std::vector<GroupVector> orbit;
    std::size_t stabilizer_order = 0;
    std::size_t simple_count = 0;
    std::vector<long> dims;
};

struct MackeyReport {
    std::vector<MackeyBlock> blocks;
    std::size_t group_order = 0;
    std::size_t sum_of_squares = 0;
    std::size_t brute_force_classes = 0;
    bool burnside_holds = false;
    bool class_count_matches = false;
    [[nodiscard]] std::vector<long> all_dims() const;
};

/// Irreducible dimensions of a group from its order, class count and
/// abelianization order; throws std::runtime_error when not determined.
[[nodiscard]] std::vector<long> irreducible_dimensions(std::size_t order, std::size_t classes,
                                                       std::size_t abelianization);

[[nodiscard]] MackeyReport mackey_simple_modules(const SemidirectSpec& spec, std::size_t max_stabilizer = 24);

struct BlockSummary {
    Rational base;
    Rational shift;
    int steps = 0;
    std::vector<Rational> points;
    bool free_action = false;
    /// |M(m, n)| = 1 for every pair of window points.
    bool within_orbit_singleton = false;
    std::string statement;
};

/// |{k in Z : m + k shift = n}| on the affine line.
[[nodiscard]] std::size_t translation_hom_count(const Rational& m, const Rational& n, const Rational& shift);

/// The Z-orbit {base + k shift : 0 <= k < steps} of a free translation.
[[nodiscard]] BlockSummary skew_orbit_block(const Rational& base, const Rational& shift, int steps);

}  // namespace gtorders
