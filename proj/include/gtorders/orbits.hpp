#pragma once

#include "gtorders/realization.hpp"

#include <set>
#include <string>
#include <vector>

namespace gtorders {

/// A character of Gamma, represented by the canonical tableau of its G-orbit.
using Character = Tableau;

[[nodiscard]] inline Character character_of(const Tableau& t) { return t.canonical(); }

struct OrbitReport {
    Tableau source;
    Tableau target;
    std::set<ShiftVector> s_set;
    std::size_t s_set_mod_G = 0;
    std::size_t group_order = 0;
    std::size_t g_stab_source = 0;
    std::size_t g_stab_target = 0;
    /// |M_l| (always 1: the shift action is free).
    std::size_t shift_stab = 1;
    /// |G|^2 |M_l| / (|G_source| |G_target|).
    Rational bound;
    bool bound_holds = false;
};

/// S(source, target): the shifts g2.target - g1.source over (g1, g2) in G x G
/// that vanish on row n and are integral on the other rows.
[[nodiscard]] OrbitReport s_set(const Tableau& source, const Tableau& target);

/// |G_t| for the action of G on tableaux.
[[nodiscard]] std::size_t g_stabilizer_order(const Tableau& t);
/// {z in M : t + z = t} = {0}.
[[nodiscard]] std::set<ShiftVector> shift_stabilizer(const Tableau& t);

/// X_u(source): apply every shift of supp u to every G-conjugate of the
/// source, moving points as the module action does (l -> l - s z).
[[nodiscard]] std::set<Character> x_set(const SkewElement& u, const Tableau& source,
                                        ShiftDirection s = ShiftDirection::Minus);

struct BlockGraph {
    std::vector<Character> nodes;
    /// Index pairs (a < b).
    std::set<std::pair<std::size_t, std::size_t>> edges;
    /// Component id per node, numbered by first appearance.
    std::vector<std::size_t> component;
    std::size_t component_count = 0;
    int radius = 0;

    [[nodiscard]] std::size_t component_size(std::size_t node) const;
    /// One "a -- b" line per edge, characters in textual form.
    [[nodiscard]] std::string edge_list() const;
};

/// Window approximation of the block decomposition. Nodes are the characters
/// of seed + z with |z|_inf <= radius, for every seed. Two nodes are joined
/// when raising/lowering generator terms connect them with nonzero
/// coefficients in both directions and S(m, n) is nonempty. Components are
/// lower bounds on true block connectivity.
[[nodiscard]] BlockGraph block_graph(Realization& r, const std::vector<Tableau>& seeds, int radius);

/// Q_n = prod_{i=1}^{n-1} i!.
[[nodiscard]] mpz_class q_bound(int n);

}  // namespace gtorders
