#include "gtorders/skew.hpp"

#include <sstream>

namespace gtorders {

SkewElement::SkewElement(const ShiftVector& z, RationalFunction a) {
    if (!a.is_zero()) terms_.emplace(z, std::move(a));
}

std::set<ShiftVector> SkewElement::support() const {
    std::set<ShiftVector> s;
    for (const auto& [z, a] : terms_) s.insert(z);
    return s;
}

RationalFunction SkewElement::coefficient(const ShiftVector& z) const {
    auto it = terms_.find(z);
    return it == terms_.end() ? RationalFunction{} : it->second;
}

void SkewElement::add_term(const ShiftVector& z, const RationalFunction& a) {
    if (a.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(z, a);
    if (inserted) return;
    it->second += a;
    if (it->second.is_zero()) terms_.erase(it);
}

SkewElement SkewElement::operator-() const {
    SkewElement r = *this;
    for (auto& [z, a] : r.terms_) a = -a;
    return r;
}

SkewElement& SkewElement::operator+=(const SkewElement& o) {
    for (const auto& [z, a] : o.terms_) add_term(z, a);
    return *this;
}

SkewElement& SkewElement::operator-=(const SkewElement& o) {
    for (const auto& [z, a] : o.terms_) add_term(z, -a);
    return *this;
}

SkewElement SkewElement::scaled(const RationalFunction& c) const {
    SkewElement r;
    for (const auto& [z, a] : terms_) r.add_term(z, c * a);
    return r;
}

bool operator==(const SkewElement& a, const SkewElement& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [z, c] : a.terms_) {
        if (!(it->first == z) || !(it->second == c)) return false;
        ++it;
    }
    return true;
}

std::string SkewElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [z, a] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << a.to_string() << ")*" << z.to_string();
    }
    return os.str();
}

GOrbitOfShifts::GOrbitOfShifts(std::set<ShiftVector> shifts, int n) : shifts_(std::move(shifts)) {
    auto gens = group_generators(n);
    for (const auto& z : shifts_) {
        z.check_rank(n);
        for (const auto& g : gens)
            if (!shifts_.contains(g.act(z)))
                throw std::invalid_argument("shift set is not G-invariant: " + g.act(z).to_string() + " missing");
    }
}

SkewRing::SkewRing(int n, ShiftDirection s)
    : n_(n), s_(s), group_(enumerate_group(n)), generators_(group_generators(n)) {
    if (n < 1 || n > kMaxRank) throw std::invalid_argument("skew ring rank must be in [1, 4]");
}

SkewElement SkewRing::multiply(const SkewElement& x, const SkewElement& y) const {
    SkewElement r;
    for (const auto& [z1, a1] : x.terms()) {
        for (const auto& [z2, a2] : y.terms()) {
            r.add_term(z1 + z2, a1 * apply_shift(a2, z1, s_));
        }
    }
    return r;
}

SkewElement SkewRing::commutator(const SkewElement& x, const SkewElement& y) const {
    return multiply(x, y) - multiply(y, x);
}

SkewElement SkewRing::right_scale(const SkewElement& x, const RationalFunction& gamma) const {
    SkewElement r;
    for (const auto& [z, a] : x.terms()) r.add_term(z, a * apply_shift(gamma, z, s_));
    return r;
}

SkewElement SkewRing::g_act(const SkewElement& x, const PermutationTuple& g) const {
    SkewElement r;
    for (const auto& [z, a] : x.terms()) r.add_term(g.act(z), apply_permutation(a, g));
    return r;
}

bool SkewRing::is_invariant(const SkewElement& x) const {
    for (const auto& g : generators_)
        if (!(g_act(x, g) == x)) return false;
    return true;
}

std::vector<PermutationTuple> SkewRing::stabilizer(const ShiftVector& phi) const {
    std::vector<PermutationTuple> h;
    for (const auto& g : group_)
        if (g.act(phi) == phi) h.push_back(g);
    return h;
}

GOrbitOfShifts SkewRing::orbit(const ShiftVector& phi) const { return closure({phi}); }

GOrbitOfShifts SkewRing::closure(const std::set<ShiftVector>& shifts) const {
    std::set<ShiftVector> out;
    for (const auto& z : shifts) {
        z.check_rank(n_);
        for (const auto& g : group_) out.insert(g.act(z));
    }
    return GOrbitOfShifts(std::move(out), n_);
}

std::vector<std::set<ShiftVector>> SkewRing::orbits_of(const GOrbitOfShifts& S) const {
    std::vector<std::set<ShiftVector>> orbits;
    std::set<ShiftVector> seen;
    for (const auto& z : S.shifts()) {
        if (seen.contains(z)) continue;
        std::set<ShiftVector> o;
        for (const auto& g : group_) o.insert(g.act(z));
        seen.insert(o.begin(), o.end());
        orbits.push_back(std::move(o));
    }
    return orbits;
}

SkewElement SkewRing::symmetrize_term(const RationalFunction& a, const ShiftVector& phi) const {
    phi.check_rank(n_);
    for (const auto& h : stabilizer(phi))
        if (!(apply_permutation(a, h) == a))
            throw StabilizerViolation("coefficient is not fixed by the stabilizer of " + phi.to_string() +
                                      " (fails for " + h.to_string() + ")");
    // One representative g per coset gH_phi, i.e. per point g.phi of the orbit.
    SkewElement r;
    std::set<ShiftVector> seen;
    for (const auto& g : group_) {
        ShiftVector gphi = g.act(phi);
        if (!seen.insert(gphi).second) continue;
        r.add_term(gphi, apply_permutation(a, g));
    }
    return r;
}

SkewElement SkewRing::restrict_support(const SkewElement& x, const GOrbitOfShifts& S) {
    SkewElement r;
    for (const auto& [z, a] : x.terms())
        if (S.contains(z)) r.add_term(z, a);
    return r;
}

std::size_t SkewRing::invariant_support_dimension(const GOrbitOfShifts& S) const { return orbits_of(S).size(); }

SkewElement SkewRing::separator_apply(const RationalFunction& f, const std::set<ShiftVector>& S,
                                      const SkewElement& x) const {
    SkewElement r;
    for (const auto& [m, a] : x.terms()) {
        RationalFunction factor(Rational(1));
        for (const auto& t : S) {
            factor *= f - apply_shift(f, m - t, s_);
            if (factor.is_zero()) break;
        }
        r.add_term(m, factor * a);
    }
    return r;
}

SkewElement SkewRing::separator_apply_by_products(const RationalFunction& f, const std::set<ShiftVector>& S,
                                                  const SkewElement& x) const {
    SkewElement current = x;
    SkewElement left = SkewElement::scalar(f);
    for (const auto& t : S) {
        SkewElement right = SkewElement::scalar(apply_shift(f, -t, s_));
        current = multiply(left, current) - multiply(current, right);
    }
    return current;
}

}  // namespace gtorders
