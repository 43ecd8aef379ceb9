#pragma once

#include "gtorders/realization.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace gtorders {

class NotDominant : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class BoundaryLeak : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No two entries of one row, and no entries of adjacent rows, differ by an
/// integer. Denominators and the raising/lowering numerators then never vanish
/// on the orbit l + M.
[[nodiscard]] bool is_generic(const Tableau& t);

/// Finite linear combination of basis vectors T(l).
class ModuleVector {
public:
    using Terms = std::map<Tableau, Rational>;

    ModuleVector() = default;
    explicit ModuleVector(const Tableau& t, Rational c = 1);

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Rational coefficient(const Tableau& t) const;
    void add(const Tableau& t, const Rational& c);

    ModuleVector& operator+=(const ModuleVector& o);
    ModuleVector& operator-=(const ModuleVector& o);
    friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
    friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
    [[nodiscard]] ModuleVector scaled(const Rational& c) const;

    friend bool operator==(const ModuleVector&, const ModuleVector&) = default;
    [[nodiscard]] std::string to_string() const;

private:
    Terms terms_;
};

/// Left action of L*M on tableau vectors: the term a*z sends T(l) to
/// a(l')T(l') with l' = l + tableau_step(z). Throws DenominatorVanishes when a
/// coefficient is singular at l'.
[[nodiscard]] ModuleVector act(const Realization& r, const SkewElement& x, const ModuleVector& v);
[[nodiscard]] ModuleVector act(Realization& r, const GeneratorId& g, const ModuleVector& v);

/// c_mk applied as sum_{i1..ik} e_{i1 i2} ... e_{ik i1}, composing generator
/// actions on v (the symbolic image c_image is not used).
[[nodiscard]] ModuleVector act_c(Realization& r, int m, int k, const ModuleVector& v);

/// Values of eigenvalue_gamma(m,k) at t for all 1 <= k <= m <= n.
[[nodiscard]] std::vector<Rational> central_character(const Tableau& t);

// Finite-dimensional modules --------------------------------------------------

/// Integral patterns with top row `top`: m[i+1][j] >= m[i][j] >= m[i+1][j+1].
/// Patterns are Tableau objects holding the pattern entries m (not l).
[[nodiscard]] std::vector<Tableau> gt_patterns(const std::vector<long>& top);
[[nodiscard]] std::size_t gt_pattern_count(const std::vector<long>& top);
/// prod_{i<j} (top_i - top_j + j - i) / (j - i).
[[nodiscard]] mpz_class weyl_dimension(const std::vector<long>& top);
void check_dominant(const std::vector<long>& top);

/// l[i,j] = m[i,j] - j and back.
[[nodiscard]] Tableau pattern_to_tableau(const Tableau& pattern);
[[nodiscard]] Tableau tableau_to_pattern(const Tableau& t);

struct PatternVerification {
    bool relations = false;
    bool central_character = false;
    std::size_t bracket_checks = 0;
    std::size_t central_checks = 0;
    /// Nonzero coefficients of raising/lowering steps that leave the pattern
    /// set (dropped by the truncation).
    std::size_t leaving_steps = 0;
    std::string failure;
    [[nodiscard]] bool passed() const { return relations && central_character; }
};

/// The span of the GT patterns with a given top row, with raising and lowering
/// operators truncated to the pattern set. The truncated operators are checked
/// against all gl_n brackets and the central character before use; act()
/// raises BoundaryLeak if that check fails.
class PatternModule {
public:
    using Row = std::map<int, Rational>;                 // column -> value
    using Matrix = std::vector<Row>;                      // indexed by row

    PatternModule(Realization& r, std::vector<long> top);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] std::size_t dimension() const { return basis_.size(); }
    /// Basis tableaux (l coordinates), in enumeration order.
    [[nodiscard]] const std::vector<Tableau>& basis() const { return basis_; }
    [[nodiscard]] bool contains(const Tableau& t) const { return index_.contains(t); }
    [[nodiscard]] const Matrix& matrix(int i, int j) const { return E_[i - 1][j - 1]; }

    [[nodiscard]] const PatternVerification& verification() const { return verification_; }

    /// Action on vectors supported on the basis; throws BoundaryLeak if the
    /// truncated operators failed verification, std::invalid_argument if v
    /// has a term outside the pattern set.
    [[nodiscard]] ModuleVector act(const GeneratorId& g, const ModuleVector& v) const;

private:
    void build_generators(Realization& r);
    void verify();

    int n_;
    std::vector<long> top_;
    std::vector<Tableau> basis_;
    std::map<Tableau, int> index_;
    std::vector<std::vector<Matrix>> E_;
    PatternVerification verification_;
};

// Reachability -----------------------------------------------------------------

enum class ReachMode { Lattice, Pattern };

struct ReachabilityReport {
    Tableau start;
    int radius = 0;
    ReachMode mode = ReachMode::Lattice;
    /// Window points (l + z with |z|_inf <= radius, restricted to patterns in
    /// pattern mode).
    std::size_t window_size = 0;
    std::set<Tableau> reached;
    /// Steps with nonzero coefficient that leave the window.
    std::size_t leaving_steps = 0;
    /// Pattern mode: nonzero steps off the pattern set dropped by truncation.
    std::size_t truncated_steps = 0;
    /// Pattern mode: the truncated module passed verification.
    bool module_verified = false;
    [[nodiscard]] bool all_reached() const { return reached.size() == window_size; }
};

/// Breadth-first search from T(start) along raising and lowering generator
/// terms with nonzero coefficient. In pattern mode start must be integral and
/// the search runs inside the truncated pattern module.
[[nodiscard]] ReachabilityReport reachability(Realization& r, const Tableau& start, int radius,
                                              ReachMode mode = ReachMode::Lattice);

}  // namespace gtorders
