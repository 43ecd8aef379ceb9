#include "gtorders/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace gtorders {

namespace {

constexpr std::uint64_t guard_mask() {
    std::uint64_t mask = 0;
    for (int v = 0; v < kMaxVars; ++v) mask |= std::uint64_t{1} << (Monomial::kBits * v + 5);
    return mask;
}

constexpr std::uint64_t kGuard = guard_mask();

void sort_and_combine(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        Rational sum = std::move(terms[i].coeff);
        while (j < terms.size() && terms[j].monomial == terms[i].monomial) {
            sum += terms[j].coeff;
            ++j;
        }
        if (sgn(sum) != 0) {
            terms[out].monomial = terms[i].monomial;
            terms[out].coeff = std::move(sum);
            ++out;
        }
        i = j;
    }
    terms.resize(out);
}

}  // namespace

std::string VariableId::to_string() const {
    return "l[" + std::to_string(row) + "," + std::to_string(col) + "]";
}

Monomial Monomial::variable(int index, int exponent) {
    if (index < 0 || index >= kMaxVars) throw std::out_of_range("variable index out of range");
    if (exponent < 0 || exponent > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
    return Monomial(static_cast<std::uint64_t>(exponent) << (kBits * index));
}

int Monomial::degree() const {
    int d = 0;
    for (int v = 0; v < kMaxVars; ++v) d += exponent(v);
    return d;
}

bool Monomial::divides(Monomial other) const {
    for (int v = 0; v < kMaxVars; ++v)
        if (exponent(v) > other.exponent(v)) return false;
    return true;
}

Monomial Monomial::operator*(Monomial other) const {
    std::uint64_t k = key_ + other.key_;
    if (k & kGuard) throw std::overflow_error("monomial exponent overflow");
    return Monomial(k);
}

Monomial Monomial::operator/(Monomial other) const { return Monomial(key_ - other.key_); }

bool glex_less(Monomial a, Monomial b) {
    int da = a.degree();
    int db = b.degree();
    if (da != db) return da < db;
    for (int v = 0; v < kMaxVars; ++v) {
        int ea = a.exponent(v);
        int eb = b.exponent(v);
        if (ea != eb) return ea < eb;
    }
    return false;
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Polynomial::Polynomial(const Rational& c) {
    if (sgn(c) != 0) terms_.push_back({Monomial{}, c});
}

Polynomial Polynomial::variable(VariableId v) {
    if (v.col < 1 || v.col > v.row || v.row > kMaxRank)
        throw std::out_of_range("variable " + v.to_string() + " out of range");
    Polynomial p;
    p.terms_.push_back({Monomial::variable(v.index()), Rational(1)});
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    sort_and_combine(p.terms_);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

Rational Polynomial::constant_value() const {
    if (!is_constant()) throw std::logic_error("polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

int Polynomial::total_degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
}

const Term& Polynomial::glex_leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    const Term* best = &terms_[0];
    for (const auto& t : terms_)
        if (glex_less(best->monomial, t.monomial)) best = &t;
    return *best;
}

std::uint32_t Polynomial::variable_mask() const {
    std::uint32_t mask = 0;
    for (const auto& t : terms_)
        for (int v = 0; v < kMaxVars; ++v)
            if (t.monomial.exponent(v) != 0) mask |= 1u << v;
    return mask;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (other.terms_.empty()) return *this;
    if (terms_.empty()) return *this = other;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() && b != other.terms_.end()) {
        if (a->monomial < b->monomial) {
            merged.push_back(std::move(*a++));
        } else if (b->monomial < a->monomial) {
            merged.push_back(*b++);
        } else {
            Rational s = a->coeff + b->coeff;
            if (sgn(s) != 0) merged.push_back({a->monomial, std::move(s)});
            ++a;
            ++b;
        }
    }
    for (; a != terms_.end(); ++a) merged.push_back(std::move(*a));
    for (; b != other.terms_.end(); ++b) merged.push_back(*b);
    terms_ = std::move(merged);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1 && a.terms_[0].monomial.is_one()) return b * a.terms_[0].coeff;
    if (b.size() == 1 && b.terms_[0].monomial.is_one()) return a * b.terms_[0].coeff;
    // Sort index pairs by product monomial, then accumulate each group once.
    struct Slot {
        std::uint64_t key;
        std::uint32_t i;
        std::uint32_t j;
    };
    std::vector<Slot> slots;
    slots.reserve(a.size() * b.size());
    for (std::uint32_t i = 0; i < a.size(); ++i)
        for (std::uint32_t j = 0; j < b.size(); ++j)
            slots.push_back({(a.terms_[i].monomial * b.terms_[j].monomial).key(), i, j});
    std::sort(slots.begin(), slots.end(),
              [](const Slot& x, const Slot& y) { return x.key < y.key; });
    Polynomial r;
    Rational acc;
    Rational prod;
    for (std::size_t s = 0; s < slots.size();) {
        std::size_t e = s;
        acc = 0;
        Monomial m = a.terms_[slots[s].i].monomial * b.terms_[slots[s].j].monomial;
        while (e < slots.size() && slots[e].key == slots[s].key) {
            mpq_mul(prod.get_mpq_t(), a.terms_[slots[e].i].coeff.get_mpq_t(),
                    b.terms_[slots[e].j].coeff.get_mpq_t());
            acc += prod;
            ++e;
        }
        if (sgn(acc) != 0) r.terms_.push_back({m, acc});
        s = e;
    }
    return r;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::domain_error("negative polynomial power");
    Polynomial result(Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

bool Polynomial::divide_exact(const Polynomial& divisor, Polynomial& quotient) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    quotient = Polynomial{};
    if (is_zero()) return true;
    if (divisor.is_constant()) {
        quotient = *this * (Rational(1) / divisor.constant_value());
        return true;
    }
    // Division by a single polynomial under the lex key order: the remainder
    // vanishes iff divisor | *this.
    const Term& lead = divisor.terms_.back();
    if (total_degree() < divisor.total_degree()) return false;
    std::map<std::uint64_t, std::pair<Monomial, Rational>, std::greater<>> rem;
    for (const auto& t : terms_) rem.emplace(t.monomial.key(), std::make_pair(t.monomial, t.coeff));
    std::vector<Term> q;
    Rational lead_inv = Rational(1) / lead.coeff;
    while (!rem.empty()) {
        auto it = rem.begin();
        Monomial m = it->second.first;
        if (!lead.monomial.divides(m)) return false;
        Monomial qm = m / lead.monomial;
        Rational qc = it->second.second * lead_inv;
        rem.erase(it);
        for (std::size_t k = 0; k + 1 < divisor.terms_.size(); ++k) {
            const Term& t = divisor.terms_[k];
            Monomial pm = qm * t.monomial;
            Rational delta = qc * t.coeff;
            auto [pos, inserted] = rem.try_emplace(pm.key(), pm, Rational(0));
            pos->second.second -= delta;
            if (sgn(pos->second.second) == 0) rem.erase(pos);
        }
        q.push_back({qm, std::move(qc)});
    }
    quotient = from_terms(std::move(q));
    return true;
}

Polynomial Polynomial::translate(std::span<const Rational> offsets) const {
    Polynomial current = *this;
    for (int v = 0; v < static_cast<int>(offsets.size()); ++v) {
        if (sgn(offsets[v]) == 0) continue;
        bool occurs = false;
        for (const auto& t : current.terms_)
            if (t.monomial.exponent(v) != 0) {
                occurs = true;
                break;
            }
        if (!occurs) continue;
        std::vector<Term> out;
        std::vector<Rational> powers{Rational(1)};
        for (const auto& t : current.terms_) {
            int e = t.monomial.exponent(v);
            if (e == 0) {
                out.push_back(t);
                continue;
            }
            while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * offsets[v]);
            Monomial rest = t.monomial / Monomial::variable(v, e);
            // (x + c)^e = sum_k binom(e, k) c^(e-k) x^k
            mpz_class binom = 1;
            for (int k = 0; k <= e; ++k) {
                Rational c = t.coeff * powers[e - k] * Rational(binom);
                out.push_back({rest * Monomial::variable(v, k), std::move(c)});
                binom = binom * (e - k) / (k + 1);
            }
        }
        current = from_terms(std::move(out));
    }
    return current;
}

Polynomial Polynomial::rename(std::span<const int> image) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m;
        for (int v = 0; v < kMaxVars; ++v) {
            int e = t.monomial.exponent(v);
            if (e == 0) continue;
            int target = v < static_cast<int>(image.size()) ? image[v] : v;
            m = m * Monomial::variable(target, e);
        }
        out.push_back({m, t.coeff});
    }
    return from_terms(std::move(out));
}

Rational Polynomial::evaluate(std::span<const Rational> values) const {
    Rational sum = 0;
    std::array<std::vector<Rational>, kMaxVars> powers;
    for (const auto& t : terms_) {
        Rational term = t.coeff;
        for (int v = 0; v < kMaxVars; ++v) {
            int e = t.monomial.exponent(v);
            if (e == 0) continue;
            if (v >= static_cast<int>(values.size()))
                throw std::out_of_range("evaluation point lacks " + VariableId::from_index(v).to_string());
            auto& pw = powers[v];
            if (pw.empty()) pw.push_back(Rational(1));
            while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * values[v]);
            term *= pw[e];
        }
        sum += term;
    }
    return sum;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    // Print in descending glex order for readability.
    std::vector<const Term*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](const Term* a, const Term* b) { return glex_less(b->monomial, a->monomial); });
    std::ostringstream os;
    bool first = true;
    for (const Term* t : order) {
        Rational c = t->coeff;
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool unit = c == 1;
        bool has_var = !t->monomial.is_one();
        if (!unit || !has_var) {
            os << rational_to_string(c);
            if (has_var) os << "*";
        }
        bool first_var = true;
        for (int v = 0; v < kMaxVars; ++v) {
            int e = t->monomial.exponent(v);
            if (e == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << VariableId::from_index(v).to_string();
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

std::size_t Polynomial::hash() const {
    std::size_t h = terms_.size();
    for (const auto& t : terms_) {
        h ^= std::hash<std::uint64_t>{}(t.monomial.key()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= std::hash<std::string>{}(t.coeff.get_str()) + (h << 6) + (h >> 2);
    }
    return h;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

}  // namespace gtorders
