#pragma once

#include "gtorders/skew.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gtorders {

class ConventionInvalid : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SupportLeak : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NoValidProfile : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// e_{ij} of gl_n, classified as diagonal(m), raising(m) = e_{m,m+1},
/// lowering(m) = e_{m+1,m} or general(i,j).
struct GeneratorId {
    enum class Kind { Diagonal, Raising, Lowering, General };
    Kind kind = Kind::Diagonal;
    int i = 1;
    int j = 1;

    static GeneratorId e(int i, int j);
    static GeneratorId diagonal(int m) { return {Kind::Diagonal, m, m}; }
    static GeneratorId raising(int m) { return {Kind::Raising, m, m + 1}; }
    static GeneratorId lowering(int m) { return {Kind::Lowering, m + 1, m}; }
    /// "e12", "e31", ...; parse accepts the same form (and "e1,2" for clarity).
    [[nodiscard]] std::string label() const;
    static GeneratorId parse(const std::string& text);
    void check(int n) const;

    friend bool operator==(const GeneratorId& a, const GeneratorId& b) { return a.i == b.i && a.j == b.j; }
};

/// Where the coefficient A of a term A delta sits: `Target` keeps A on the
/// left of the shift (A is evaluated at the target tableau), `Source` moves it
/// to the right, delta A = A^delta delta (A is evaluated at the source).
enum class CoefficientEvaluation { Source, Target };

struct ConventionProfile {
    ShiftDirection shift_direction = ShiftDirection::Minus;
    int raising_sign = 1;
    int lowering_sign = 1;
    /// t(e11) = l[1,1] + diagonal_offset.
    int diagonal_offset = 1;
    CoefficientEvaluation coefficient_evaluation = CoefficientEvaluation::Source;

    [[nodiscard]] RationalFunction diagonal_base() const;
    [[nodiscard]] std::string to_string() const;
    friend bool operator==(const ConventionProfile&, const ConventionProfile&) = default;
};

/// Flip the sign of a single term of one raising or lowering image:
/// a negative control for the relation checks.
struct Corruption {
    GeneratorId::Kind kind = GeneratorId::Kind::Raising;
    int m = 1;
    int term = 1;
};

struct IdentityCheck {
    std::string label;
    bool passed = false;
    /// First nonzero term of the difference, empty on success.
    std::string witness;
};

struct RelationReport {
    int n = 0;
    std::vector<IdentityCheck> identities;
    [[nodiscard]] bool all_passed() const;
    [[nodiscard]] std::size_t failures() const;
};

struct CenterReport {
    int n = 0;
    std::vector<IdentityCheck> eigenvalue_checks;  // c_mk image == eigenvalue_gamma(m,k)
    std::vector<IdentityCheck> centrality_checks;  // [c_nk image, t(e_ij)] == 0
    [[nodiscard]] bool all_passed() const;
};

struct VerifyOptions {
    /// Stop at the first failing identity.
    bool fail_fast = false;
    /// Worker threads for independent identities (1 = serial).
    unsigned jobs = 1;
};

/// The realization t: U(gl_n) -> (L*M)^G for one ConventionProfile.
/// Generator images are computed on demand and memoized, so a Realization
/// must not be shared across threads while images are still being built.
class Realization {
public:
    Realization(int n, ConventionProfile profile, std::optional<Corruption> corruption = std::nullopt);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] const ConventionProfile& profile() const { return profile_; }
    [[nodiscard]] const SkewRing& ring() const { return ring_; }
    /// Tableau displacement of a skew term at shift z: T(l) -> T(l - s z).
    [[nodiscard]] ShiftVector tableau_step(const ShiftVector& z) const;

    /// -/+ prod_j (l[m+-1,j] - l[m,i]) / prod_{j != i} (l[m,j] - l[m,i]).
    [[nodiscard]] RationalFunction coefficient_A(int m, int i, int sign) const;

    [[nodiscard]] const SkewElement& raising_image(int m);
    [[nodiscard]] const SkewElement& lowering_image(int m);
    /// t(e11) = diagonal base; t(e_{m+1,m+1}) = t(e_mm) - [t(e_{m,m+1}), t(e_{m+1,m})].
    [[nodiscard]] const SkewElement& diagonal_image(int m);
    /// e_ij by nested brackets, e_{i,j} = [e_{i,j-1}, e_{j-1,j}] above the
    /// diagonal and e_{i,j} = [e_{i,i-1}, e_{i-1,j}] below it.
    [[nodiscard]] const SkewElement& general_image(int i, int j);
    [[nodiscard]] const SkewElement& image(const GeneratorId& g);
    /// [t(e_ik), t(e_kj)] for an intermediate index k.
    [[nodiscard]] SkewElement bracket_via(int i, int k, int j);

    /// Image of c_mk = sum over (i_1..i_k) of e_{i1 i2} ... e_{ik i1}, without
    /// any support check.
    [[nodiscard]] const SkewElement& c_image_unchecked(int m, int k);
    /// As above; throws SupportLeak if a term off the identity shift survives.
    [[nodiscard]] const SkewElement& c_image(int m, int k);

    /// sum_i (l[m,i] + m)^k prod_{j != i} (1 - 1/(l[m,i] - l[m,j])).
    [[nodiscard]] static RationalFunction eigenvalue_gamma(int m, int k);

    [[nodiscard]] RelationReport verify_relations(const VerifyOptions& opts = {});
    [[nodiscard]] CenterReport verify_center(const VerifyOptions& opts = {});

private:
    SkewElement term(const RationalFunction& A, const ShiftVector& z) const;
    void check_m(int m, int upper) const;

    int n_;
    ConventionProfile profile_;
    std::optional<Corruption> corruption_;
    SkewRing ring_;
    std::map<std::pair<int, int>, SkewElement> images_;
    std::map<std::pair<int, int>, SkewElement> c_images_;
};

struct CalibrationCandidate {
    ConventionProfile profile;
    bool relations2 = false;
    bool relations3 = false;
    bool center3 = false;
    std::string failure;
    [[nodiscard]] bool valid() const { return relations2 && relations3 && center3; }
};

struct CalibrationResult {
    ConventionProfile profile;
    std::vector<CalibrationCandidate> candidates;
    std::size_t valid_count = 0;
    double seconds = 0;
};

/// Exhaustive search over shift_direction x lowering_sign x
/// coefficient_evaluation x diagonal_offset in [offset_min, offset_max], with
/// raising_sign = +1 fixing the gauge (flipping both signs is the automorphism
/// e_ij -> (-1)^(i+j) e_ij). Throws NoValidProfile unless exactly one
/// candidate passes verify_relations(2), verify_relations(3) and
/// verify_center(3).
[[nodiscard]] CalibrationResult calibrate_conventions(int offset_min = -3, int offset_max = 3, unsigned jobs = 1);

/// The profile selected by calibration (verified in the test suite).
[[nodiscard]] ConventionProfile default_profile();

}  // namespace gtorders
