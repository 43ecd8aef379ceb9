#include "gtorders/ratfun.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace gtorders {

namespace {

bool poly_less(const Polynomial& a, const Polynomial& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    if (ta.size() != tb.size()) return ta.size() < tb.size();
    for (std::size_t i = 0; i < ta.size(); ++i) {
        if (!(ta[i].monomial == tb[i].monomial)) return ta[i].monomial < tb[i].monomial;
        if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
    }
    return false;
}

Polynomial product_of(const std::vector<RationalFunction::Factor>& factors) {
    Polynomial p(Rational(1));
    for (const auto& f : factors) p = p * f.poly.pow(f.multiplicity);
    return p;
}

/// Multiplicity of `p` in `factors`, 0 if absent.
int multiplicity_in(const std::vector<RationalFunction::Factor>& factors, const Polynomial& p) {
    for (const auto& f : factors)
        if (f.poly == p) return f.multiplicity;
    return 0;
}

}  // namespace

RationalFunction::RationalFunction(Polynomial numerator) : num_(std::move(numerator)) {}

Polynomial RationalFunction::denominator() const { return product_of(den_); }

std::size_t RationalFunction::weight() const {
    std::size_t w = num_.size();
    for (const auto& f : den_) w += f.poly.size();
    return w;
}

void RationalFunction::add_factor(Polynomial p, int multiplicity) {
    if (p.is_zero()) throw std::domain_error("division by zero rational function");
    if (p.is_constant()) {
        Rational c = p.constant_value();
        Rational scale = 1;
        for (int k = 0; k < multiplicity; ++k) scale /= c;
        num_ *= scale;
        return;
    }
    Rational lc = p.glex_leading_term().coeff;
    if (lc != 1) {
        p *= Rational(1) / lc;
        Rational scale = 1;
        for (int k = 0; k < multiplicity; ++k) scale /= lc;
        num_ *= scale;
    }
    for (auto& f : den_)
        if (f.poly == p) {
            f.multiplicity += multiplicity;
            return;
        }
    den_.push_back({std::move(p), multiplicity});
}

void RationalFunction::normalize_factors() {
    std::sort(den_.begin(), den_.end(), [](const Factor& a, const Factor& b) { return poly_less(a.poly, b.poly); });
}

void RationalFunction::cancel() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    std::uint32_t num_mask = num_.variable_mask();
    for (auto& f : den_) {
        std::uint32_t fmask = f.poly.variable_mask();
        while (f.multiplicity > 0 && (fmask & ~num_mask) == 0) {
            Polynomial q;
            if (!num_.divide_exact(f.poly, q)) break;
            num_ = std::move(q);
            --f.multiplicity;
            num_mask = num_.variable_mask();
        }
    }
    std::erase_if(den_, [](const Factor& f) { return f.multiplicity == 0; });
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    // Common multiple of the factored denominators: max multiplicity per factor.
    std::vector<Factor> extra_mine;   // factors o has beyond ours
    std::vector<Factor> extra_other;  // factors we have beyond o
    std::vector<Factor> lcm = den_;
    for (const auto& f : o.den_) {
        int mine = multiplicity_in(den_, f.poly);
        if (f.multiplicity > mine) {
            extra_mine.push_back({f.poly, f.multiplicity - mine});
            bool found = false;
            for (auto& l : lcm)
                if (l.poly == f.poly) {
                    l.multiplicity = f.multiplicity;
                    found = true;
                }
            if (!found) lcm.push_back(f);
        }
    }
    for (const auto& f : den_) {
        int theirs = multiplicity_in(o.den_, f.poly);
        if (f.multiplicity > theirs) extra_other.push_back({f.poly, f.multiplicity - theirs});
    }
    num_ = num_ * product_of(extra_mine) + o.num_ * product_of(extra_other);
    den_ = std::move(lcm);
    normalize_factors();
    cancel();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (is_zero() || o.is_zero()) {
        num_ = Polynomial{};
        den_.clear();
        return *this;
    }
    num_ = num_ * o.num_;
    for (const auto& f : o.den_) {
        bool found = false;
        for (auto& mine : den_)
            if (mine.poly == f.poly) {
                mine.multiplicity += f.multiplicity;
                found = true;
            }
        if (!found) den_.push_back(f);
    }
    normalize_factors();
    cancel();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    num_ = num_ * o.denominator();
    add_factor(o.num_, 1);
    normalize_factors();
    cancel();
    return *this;
}

RationalFunction RationalFunction::pow(int e) const {
    RationalFunction base = *this;
    if (e < 0) {
        base = RationalFunction(Rational(1)) / base;
        e = -e;
    }
    RationalFunction r(Rational(1));
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return r;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_.size() == b.den_.size()) {
        bool same_den = true;
        for (std::size_t i = 0; i < a.den_.size() && same_den; ++i)
            same_den = a.den_[i].multiplicity == b.den_[i].multiplicity && a.den_[i].poly == b.den_[i].poly;
        if (same_den) return a.num_ == b.num_;
    }
    return a.num_ * b.denominator() == b.num_ * a.denominator();
}

std::string RationalFunction::to_string() const {
    if (den_.empty()) return num_.to_string();
    std::ostringstream os;
    os << "(" << num_.to_string() << ")/(";
    bool first = true;
    for (const auto& f : den_) {
        if (!first) os << "*";
        first = false;
        os << "(" << f.poly.to_string() << ")";
        if (f.multiplicity > 1) os << "^" << f.multiplicity;
    }
    os << ")";
    return os.str();
}

RationalFunction RationalFunction::translate(std::span<const Rational> offsets) const {
    RationalFunction r;
    r.num_ = num_.translate(offsets);
    for (const auto& f : den_) r.den_.push_back({f.poly.translate(offsets), f.multiplicity});
    r.normalize_factors();
    return r;
}

RationalFunction RationalFunction::rename(std::span<const int> image) const {
    RationalFunction r(num_.rename(image));
    for (const auto& f : den_) r.add_factor(f.poly.rename(image), f.multiplicity);
    r.normalize_factors();
    return r;
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
    Rational den = 1;
    for (const auto& f : den_) {
        Rational v = f.poly.evaluate(point);
        if (sgn(v) == 0) throw DenominatorVanishes(f.poly.to_string());
        for (int k = 0; k < f.multiplicity; ++k) den *= v;
    }
    return num_.evaluate(point) / den;
}

Rational evaluate(const RationalFunction& f, const Tableau& point) {
    return f.evaluate(std::span<const Rational>(point.entries()));
}

RationalFunction apply_shift(const RationalFunction& f, const ShiftVector& z, ShiftDirection s) {
    if (z.is_zero()) return f;
    std::array<Rational, kMaxVars> offsets;
    for (int v = 0; v < kMaxVars; ++v) offsets[v] = sign_of(s) * z[v];
    return f.translate(offsets);
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    RationalFunction parse() {
        RationalFunction r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    long integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }

    RationalFunction expr() {
        RationalFunction r = term();
        for (;;) {
            if (eat('+'))
                r += term();
            else if (eat('-'))
                r -= term();
            else
                return r;
        }
    }
    RationalFunction term() {
        RationalFunction r = unary();
        for (;;) {
            if (eat('*'))
                r *= unary();
            else if (eat('/'))
                r /= unary();
            else
                return r;
        }
    }
    RationalFunction unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        RationalFunction base = primary();
        if (eat('^')) {
            bool neg = eat('-');
            long e = integer();
            return base.pow(neg ? -static_cast<int>(e) : static_cast<int>(e));
        }
        return base;
    }
    RationalFunction primary() {
        skip();
        if (eat('(')) {
            RationalFunction r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (pos_ < s_.size() && (s_[pos_] == 'l' || s_[pos_] == 'L')) {
            ++pos_;
            if (!eat('[')) fail("expected '[' after l");
            long i = integer();
            if (!eat(',')) fail("expected ','");
            long j = integer();
            if (!eat(']')) fail("expected ']'");
            if (j < 1 || j > i || i > kMaxRank) fail("variable index out of range");
            return RationalFunction::variable({static_cast<int>(i), static_cast<int>(j)});
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return RationalFunction(Rational(mpz_class(std::string(s_.substr(start, pos_ - start)))));
        }
        fail("expected number, variable or '('");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(std::string_view text) { return Parser(text).parse(); }

Rational parse_rational(std::string_view text) {
    std::string t(text);
    t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }), t.end());
    if (t.empty()) throw std::invalid_argument("empty rational");
    Rational q;
    if (q.set_str(t, 10) != 0) throw std::invalid_argument("bad rational '" + t + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + t + "'");
    q.canonicalize();
    return q;
}

// ------------------------------------------------------------ permutations

PermutationTuple::PermutationTuple(std::vector<std::vector<int>> sigma) : sigma_(std::move(sigma)) {
    for (std::size_t i = 0; i < sigma_.size(); ++i) {
        const auto& p = sigma_[i];
        if (p.size() != i + 1) throw std::invalid_argument("sigma_i must permute i columns");
        std::vector<int> seen(p.size(), 0);
        for (int x : p) {
            if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]++)
                throw std::invalid_argument("sigma_i is not a bijection");
        }
    }
}

PermutationTuple PermutationTuple::identity(int n) {
    std::vector<std::vector<int>> s;
    for (int i = 1; i <= n; ++i) {
        std::vector<int> p(i);
        std::iota(p.begin(), p.end(), 0);
        s.push_back(std::move(p));
    }
    return PermutationTuple(std::move(s));
}

PermutationTuple PermutationTuple::adjacent_transposition(int n, int row, int c) {
    auto g = identity(n);
    std::swap(g.sigma_[row - 1][c - 1], g.sigma_[row - 1][c]);
    return g;
}

bool PermutationTuple::is_identity() const {
    for (const auto& p : sigma_)
        for (int k = 0; k < static_cast<int>(p.size()); ++k)
            if (p[k] != k) return false;
    return true;
}

PermutationTuple PermutationTuple::inverse() const {
    auto r = *this;
    for (std::size_t i = 0; i < sigma_.size(); ++i)
        for (std::size_t k = 0; k < sigma_[i].size(); ++k) r.sigma_[i][sigma_[i][k]] = static_cast<int>(k);
    return r;
}

PermutationTuple PermutationTuple::compose(const PermutationTuple& other) const {
    auto r = *this;
    for (std::size_t i = 0; i < sigma_.size(); ++i)
        for (std::size_t k = 0; k < sigma_[i].size(); ++k) r.sigma_[i][k] = sigma_[i][other.sigma_[i][k]];
    return r;
}

std::vector<int> PermutationTuple::variable_image() const {
    std::vector<int> image(kMaxVars);
    std::iota(image.begin(), image.end(), 0);
    for (int i = 1; i <= n() && i <= kMaxRank; ++i)
        for (int j = 1; j <= i; ++j) image[VariableId{i, j}.index()] = VariableId{i, this->image(i, j)}.index();
    return image;
}

ShiftVector PermutationTuple::act(const ShiftVector& z) const {
    ShiftVector r;
    for (int v = 0; v < kMaxVars; ++v) {
        if (z[v] == 0) continue;
        auto id = VariableId::from_index(v);
        if (id.row > n()) throw std::invalid_argument("shift row exceeds permutation rank");
        r.set({id.row, image(id.row, id.col)}, z[v]);
    }
    return r;
}

Tableau PermutationTuple::act(const Tableau& t) const {
    if (t.n() != n()) throw std::invalid_argument("tableau and permutation rank differ");
    Tableau r(t.n());
    for (int i = 1; i <= t.n(); ++i)
        for (int j = 1; j <= i; ++j) r.set(i, image(i, j), t.at(i, j));
    return r;
}

std::string PermutationTuple::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < sigma_.size(); ++i) {
        if (i) os << " ";
        os << "[";
        for (std::size_t k = 0; k < sigma_[i].size(); ++k) os << (k ? "," : "") << sigma_[i][k] + 1;
        os << "]";
    }
    os << ")";
    return os.str();
}

std::vector<PermutationTuple> enumerate_group(int n) {
    std::vector<std::vector<std::vector<int>>> per_row;
    for (int i = 1; i <= n; ++i) {
        std::vector<int> p(i);
        std::iota(p.begin(), p.end(), 0);
        std::vector<std::vector<int>> all;
        do all.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        per_row.push_back(std::move(all));
    }
    std::vector<PermutationTuple> out;
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
        std::vector<std::vector<int>> s;
        for (int i = 0; i < n; ++i) s.push_back(per_row[i][idx[i]]);
        out.emplace_back(std::move(s));
        int k = n - 1;
        while (k >= 0 && ++idx[k] == per_row[k].size()) idx[k--] = 0;
        if (k < 0) break;
    }
    return out;
}

std::vector<PermutationTuple> group_generators(int n) {
    std::vector<PermutationTuple> gens;
    for (int row = 2; row <= n; ++row)
        for (int c = 1; c < row; ++c) gens.push_back(PermutationTuple::adjacent_transposition(n, row, c));
    return gens;
}

RationalFunction apply_permutation(const RationalFunction& f, const PermutationTuple& g) {
    auto image = g.variable_image();
    return f.rename(image);
}

bool is_g_invariant(const RationalFunction& f, int n) {
    for (const auto& g : group_generators(n))
        if (!(apply_permutation(f, g) == f)) return false;
    return true;
}

}  // namespace gtorders
