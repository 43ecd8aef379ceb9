#include "gtorders/realization.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

namespace gtorders {

namespace {

RationalFunction lam(int i, int j) { return RationalFunction::variable({i, j}); }

std::string first_witness(const SkewElement& diff) {
    if (diff.is_zero()) return {};
    const auto& [z, a] = *diff.terms().begin();
    return z.to_string() + ": " + a.to_string();
}

/// Runs check(i) for i in [0, count), serially or on `jobs` threads.
void run_checks(std::size_t count, unsigned jobs, bool fail_fast, const std::function<bool(std::size_t)>& check) {
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i)
            if (!check(i) && fail_fast) return;
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (;;) {
                if (stop) return;
                std::size_t i = next++;
                if (i >= count) return;
                if (!check(i) && fail_fast) stop = true;
            }
        });
    for (auto& th : pool) th.join();
}

}  // namespace

GeneratorId GeneratorId::e(int i, int j) {
    if (i == j) return diagonal(i);
    if (j == i + 1) return raising(i);
    if (i == j + 1) return lowering(j);
    return {Kind::General, i, j};
}

std::string GeneratorId::label() const {
    if (i < 10 && j < 10) return "e" + std::to_string(i) + std::to_string(j);
    return "e" + std::to_string(i) + "," + std::to_string(j);
}

GeneratorId GeneratorId::parse(const std::string& text) {
    if (text.size() < 3 || (text[0] != 'e' && text[0] != 'E'))
        throw std::invalid_argument("generator must look like e12 or e1,2: '" + text + "'");
    std::string body = text.substr(1);
    auto comma = body.find(',');
    try {
        if (comma != std::string::npos) return e(std::stoi(body.substr(0, comma)), std::stoi(body.substr(comma + 1)));
        if (body.size() == 2) return e(body[0] - '0', body[1] - '0');
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("cannot parse generator '" + text + "'");
}

void GeneratorId::check(int n) const {
    if (i < 1 || j < 1 || i > n || j > n)
        throw std::invalid_argument("generator " + label() + " out of range for n = " + std::to_string(n));
}

RationalFunction ConventionProfile::diagonal_base() const {
    return lam(1, 1) + RationalFunction(static_cast<long>(diagonal_offset));
}

std::string ConventionProfile::to_string() const {
    std::ostringstream os;
    os << "shift_direction=" << sign_of(shift_direction) << " raising_sign=" << raising_sign
       << " lowering_sign=" << lowering_sign << " diagonal_base=" << diagonal_base().to_string()
       << " coefficient_evaluation=" << (coefficient_evaluation == CoefficientEvaluation::Source ? "source" : "target");
    return os.str();
}

bool RelationReport::all_passed() const { return failures() == 0 && !identities.empty(); }

std::size_t RelationReport::failures() const {
    std::size_t f = 0;
    for (const auto& c : identities) f += c.passed ? 0 : 1;
    return f;
}

bool CenterReport::all_passed() const {
    if (eigenvalue_checks.empty()) return false;
    for (const auto& c : eigenvalue_checks)
        if (!c.passed) return false;
    for (const auto& c : centrality_checks)
        if (!c.passed) return false;
    return true;
}

Realization::Realization(int n, ConventionProfile profile, std::optional<Corruption> corruption)
    : n_(n), profile_(profile), corruption_(corruption), ring_(n, profile.shift_direction) {
    if (n < 1 || n > kMaxRank) throw std::invalid_argument("realization rank must be in [1, 4]");
}

ShiftVector Realization::tableau_step(const ShiftVector& z) const {
    return sign_of(profile_.shift_direction) > 0 ? -z : z;
}

void Realization::check_m(int m, int upper) const {
    if (m < 1 || m > upper)
        throw std::invalid_argument("index " + std::to_string(m) + " out of range [1, " + std::to_string(upper) + "]");
}

RationalFunction Realization::coefficient_A(int m, int i, int sign) const {
    check_m(m, n_ - 1);
    check_m(i, m);
    int other = sign > 0 ? m + 1 : m - 1;
    RationalFunction num(Rational(sign > 0 ? -1 : 1));
    for (int j = 1; j <= other; ++j) num *= lam(other, j) - lam(m, i);
    RationalFunction den(Rational(1));
    for (int j = 1; j <= m; ++j)
        if (j != i) den *= lam(m, j) - lam(m, i);
    return num / den;
}

SkewElement Realization::term(const RationalFunction& A, const ShiftVector& z) const {
    if (profile_.coefficient_evaluation == CoefficientEvaluation::Target) return {z, A};
    return {z, apply_shift(A, z, profile_.shift_direction)};
}

const SkewElement& Realization::raising_image(int m) {
    check_m(m, n_ - 1);
    auto key = std::make_pair(m, m + 1);
    if (auto it = images_.find(key); it != images_.end()) return it->second;
    SkewElement x;
    for (int i = 1; i <= m; ++i) {
        int sign = profile_.raising_sign;
        if (corruption_ && corruption_->kind == GeneratorId::Kind::Raising && corruption_->m == m &&
            corruption_->term == i)
            sign = -sign;
        x += term(coefficient_A(m, i, +1), ShiftVector::delta({m, i})).scaled(RationalFunction(static_cast<long>(sign)));
    }
    return images_[key] = std::move(x);
}

const SkewElement& Realization::lowering_image(int m) {
    check_m(m, n_ - 1);
    auto key = std::make_pair(m + 1, m);
    if (auto it = images_.find(key); it != images_.end()) return it->second;
    SkewElement x;
    for (int i = 1; i <= m; ++i) {
        int sign = profile_.lowering_sign;
        if (corruption_ && corruption_->kind == GeneratorId::Kind::Lowering && corruption_->m == m &&
            corruption_->term == i)
            sign = -sign;
        x += term(coefficient_A(m, i, -1), ShiftVector::delta({m, i}, -1))
                 .scaled(RationalFunction(static_cast<long>(sign)));
    }
    return images_[key] = std::move(x);
}

const SkewElement& Realization::diagonal_image(int m) {
    check_m(m, n_);
    auto key = std::make_pair(m, m);
    if (auto it = images_.find(key); it != images_.end()) return it->second;
    SkewElement x;
    if (m == 1) {
        x = SkewElement::scalar(profile_.diagonal_base());
    } else {
        SkewElement prev = diagonal_image(m - 1);
        x = prev - ring_.commutator(raising_image(m - 1), lowering_image(m - 1));
        for (const auto& [z, a] : x.terms()) {
            if (!z.is_zero())
                throw ConventionInvalid("t(e" + std::to_string(m) + std::to_string(m) +
                                        ") has a term off the identity at " + z.to_string());
            if (!a.is_polynomial())
                throw ConventionInvalid("t(e" + std::to_string(m) + std::to_string(m) +
                                        ") is not polynomial: " + a.to_string());
            if (!is_g_invariant(a, n_))
                throw ConventionInvalid("t(e" + std::to_string(m) + std::to_string(m) +
                                        ") is not G-invariant: " + a.to_string());
        }
    }
    return images_[key] = std::move(x);
}

const SkewElement& Realization::general_image(int i, int j) {
    check_m(i, n_);
    check_m(j, n_);
    if (i == j) return diagonal_image(i);
    if (j == i + 1) return raising_image(i);
    if (i == j + 1) return lowering_image(j);
    auto key = std::make_pair(i, j);
    if (auto it = images_.find(key); it != images_.end()) return it->second;
    SkewElement x = i < j ? ring_.commutator(general_image(i, j - 1), raising_image(j - 1))
                          : ring_.commutator(lowering_image(i - 1), general_image(i - 1, j));
    return images_[key] = std::move(x);
}

const SkewElement& Realization::image(const GeneratorId& g) {
    g.check(n_);
    return general_image(g.i, g.j);
}

SkewElement Realization::bracket_via(int i, int k, int j) {
    const SkewElement& a = general_image(i, k);
    const SkewElement& b = general_image(k, j);
    return ring_.commutator(a, b);
}

const SkewElement& Realization::c_image_unchecked(int m, int k) {
    check_m(m, n_);
    check_m(k, m);
    auto key = std::make_pair(m, k);
    if (auto it = c_images_.find(key); it != c_images_.end()) return it->second;
    // Trace of the k-th power of the matrix (t(e_ij))_{i,j <= m}.
    std::vector<std::vector<const SkewElement*>> E(m, std::vector<const SkewElement*>(m));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) E[i - 1][j - 1] = &general_image(i, j);
    std::vector<std::vector<SkewElement>> power(m, std::vector<SkewElement>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) power[i][j] = *E[i][j];
    for (int p = 1;; ++p) {
        SkewElement trace;
        for (int i = 0; i < m; ++i) trace += power[i][i];
        c_images_[{m, p}] = trace;
        if (p == k) break;
        std::vector<std::vector<SkewElement>> next(m, std::vector<SkewElement>(m));
        bool last = p + 1 == k;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                if (last && i != j) continue;
                for (int l = 0; l < m; ++l) next[i][j] += ring_.multiply(power[i][l], *E[l][j]);
            }
        power = std::move(next);
    }
    return c_images_.at(key);
}

const SkewElement& Realization::c_image(int m, int k) {
    const SkewElement& c = c_image_unchecked(m, k);
    for (const auto& [z, a] : c.terms())
        if (!z.is_zero())
            throw SupportLeak("c_" + std::to_string(m) + std::to_string(k) + " image has a term at " +
                              z.to_string());
    return c;
}

RationalFunction Realization::eigenvalue_gamma(int m, int k) {
    RationalFunction sum;
    for (int i = 1; i <= m; ++i) {
        RationalFunction t = (lam(m, i) + RationalFunction(static_cast<long>(m))).pow(k);
        for (int j = 1; j <= m; ++j)
            if (j != i) t *= RationalFunction(Rational(1)) - RationalFunction(Rational(1)) / (lam(m, i) - lam(m, j));
        sum += t;
    }
    return sum;
}

RelationReport Realization::verify_relations(const VerifyOptions& opts) {
    RelationReport report;
    report.n = n_;
    std::vector<std::pair<int, int>> gens;
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) gens.emplace_back(i, j);
    struct Pair {
        std::pair<int, int> a, b;
    };
    std::vector<Pair> pairs;
    for (std::size_t x = 0; x < gens.size(); ++x)
        for (std::size_t y = x + 1; y < gens.size(); ++y) pairs.push_back({gens[x], gens[y]});

    auto label = [](const Pair& p) {
        return "[" + GeneratorId::e(p.a.first, p.a.second).label() + "," +
               GeneratorId::e(p.b.first, p.b.second).label() + "]";
    };
    // Images are built serially; afterwards the checks only read them.
    std::map<std::pair<int, int>, const SkewElement*> img;
    std::string build_error;
    for (const auto& g : gens) {
        try {
            img[g] = &general_image(g.first, g.second);
        } catch (const ConventionInvalid& e) {
            img[g] = nullptr;
            if (build_error.empty()) build_error = e.what();
            if (opts.fail_fast) break;
        }
    }
    report.identities.resize(pairs.size());
    for (std::size_t idx = 0; idx < pairs.size(); ++idx) report.identities[idx].label = label(pairs[idx]);
    std::vector<char> done(pairs.size(), 0);
    run_checks(pairs.size(), opts.jobs, opts.fail_fast, [&](std::size_t idx) {
        const auto& [a, b] = pairs[idx];
        auto& check = report.identities[idx];
        done[idx] = 1;
        const SkewElement* xa = img.count(a) ? img[a] : nullptr;
        const SkewElement* xb = img.count(b) ? img[b] : nullptr;
        auto [i, j] = a;
        auto [k, l] = b;
        std::pair<int, int> il{i, l}, kj{k, j};
        const SkewElement* xil = j == k ? (img.count(il) ? img[il] : nullptr) : nullptr;
        const SkewElement* xkj = l == i ? (img.count(kj) ? img[kj] : nullptr) : nullptr;
        if (!xa || !xb || (j == k && !xil) || (l == i && !xkj)) {
            check.passed = false;
            check.witness = "image unavailable: " + build_error;
            return false;
        }
        SkewElement diff = ring_.commutator(*xa, *xb);
        if (j == k) diff -= *xil;
        if (l == i) diff += *xkj;
        check.passed = diff.is_zero();
        check.witness = first_witness(diff);
        return check.passed;
    });
    if (opts.fail_fast) {
        std::vector<IdentityCheck> kept;
        for (std::size_t idx = 0; idx < pairs.size(); ++idx)
            if (done[idx]) kept.push_back(report.identities[idx]);
        report.identities = std::move(kept);
    }
    return report;
}

CenterReport Realization::verify_center(const VerifyOptions& opts) {
    CenterReport report;
    report.n = n_;
    auto fail = [&](std::vector<IdentityCheck>& list, std::string label, std::string witness) {
        list.push_back({std::move(label), false, std::move(witness)});
    };
    for (int m = 1; m <= n_; ++m) {
        for (int k = 1; k <= m; ++k) {
            std::string label = "c" + std::to_string(m) + std::to_string(k) + " = gamma" + std::to_string(m) +
                                std::to_string(k);
            const SkewElement* c = nullptr;
            try {
                c = &c_image_unchecked(m, k);
            } catch (const ConventionInvalid& e) {
                fail(report.eigenvalue_checks, label, e.what());
                if (opts.fail_fast) return report;
                continue;
            }
            bool ok = true;
            std::string witness;
            for (const auto& [z, a] : c->terms())
                if (!z.is_zero()) {
                    ok = false;
                    witness = "support leak at " + z.to_string() + ": " + a.to_string();
                    break;
                }
            if (ok) {
                RationalFunction diff = c->coefficient(ShiftVector{}) - eigenvalue_gamma(m, k);
                ok = diff.is_zero();
                if (!ok) witness = "c - gamma = " + diff.to_string();
            }
            report.eigenvalue_checks.push_back({label, ok, witness});
            if (!ok && opts.fail_fast) return report;
        }
    }
    for (int k = 1; k <= n_; ++k) {
        const SkewElement& c = c_image_unchecked(n_, k);
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) {
                std::string label = "[c" + std::to_string(n_) + std::to_string(k) + "," +
                                    GeneratorId::e(i, j).label() + "]";
                SkewElement diff = ring_.commutator(c, general_image(i, j));
                bool ok = diff.is_zero();
                report.centrality_checks.push_back({label, ok, first_witness(diff)});
                if (!ok && opts.fail_fast) return report;
            }
    }
    return report;
}

CalibrationResult calibrate_conventions(int offset_min, int offset_max, unsigned jobs) {
    auto start = std::chrono::steady_clock::now();
    CalibrationResult result;
    VerifyOptions fast{true, jobs};
    for (ShiftDirection s : {ShiftDirection::Minus, ShiftDirection::Plus})
        for (int lowering : {1, -1})
            for (CoefficientEvaluation ev : {CoefficientEvaluation::Source, CoefficientEvaluation::Target})
                for (int c = offset_min; c <= offset_max; ++c) {
                    CalibrationCandidate cand;
                    cand.profile = ConventionProfile{s, 1, lowering, c, ev};
                    try {
                        Realization r2(2, cand.profile);
                        auto rel2 = r2.verify_relations(fast);
                        cand.relations2 = rel2.all_passed();
                        if (!cand.relations2) {
                            cand.failure = "relations(2): " + rel2.identities.back().label;
                        } else {
                            Realization r3(3, cand.profile);
                            auto center = r3.verify_center(fast);
                            cand.center3 = center.all_passed();
                            if (!cand.center3) {
                                const auto& list = center.centrality_checks.empty() ? center.eigenvalue_checks
                                                                                    : center.centrality_checks;
                                cand.failure = "center(3): " + list.back().label;
                            } else {
                                auto rel3 = r3.verify_relations(fast);
                                cand.relations3 = rel3.all_passed();
                                if (!cand.relations3) cand.failure = "relations(3): " + rel3.identities.back().label;
                            }
                        }
                    } catch (const std::exception& e) {
                        cand.failure = e.what();
                    }
                    if (cand.valid()) {
                        ++result.valid_count;
                        result.profile = cand.profile;
                    }
                    result.candidates.push_back(std::move(cand));
                }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.valid_count != 1)
        throw NoValidProfile("calibration found " + std::to_string(result.valid_count) + " valid profiles");
    return result;
}

ConventionProfile default_profile() {
    return ConventionProfile{ShiftDirection::Minus, 1, 1, 1, CoefficientEvaluation::Source};
}

}  // namespace gtorders
