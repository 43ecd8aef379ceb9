#include "gtorders/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gtorders {

ShiftVector ShiftVector::delta(VariableId v, int multiplicity) {
    ShiftVector z;
    z.set(v, multiplicity);
    return z;
}

bool ShiftVector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](int x) { return x == 0; });
}

int ShiftVector::max_row() const {
    int r = 0;
    for (int i = 0; i < kMaxVars; ++i)
        if (entries_[i] != 0) r = std::max(r, VariableId::from_index(i).row);
    return r;
}

int ShiftVector::sup_norm() const {
    int m = 0;
    for (int x : entries_) m = std::max(m, std::abs(x));
    return m;
}

void ShiftVector::check_rank(int n) const {
    if (max_row() >= n)
        throw std::invalid_argument("shift " + to_string() + " moves a row >= n = " + std::to_string(n));
}

ShiftVector ShiftVector::operator-() const {
    ShiftVector r;
    for (int i = 0; i < kMaxVars; ++i) r.entries_[i] = -entries_[i];
    return r;
}

ShiftVector ShiftVector::operator+(const ShiftVector& o) const {
    ShiftVector r;
    for (int i = 0; i < kMaxVars; ++i) r.entries_[i] = entries_[i] + o.entries_[i];
    return r;
}

ShiftVector ShiftVector::operator-(const ShiftVector& o) const { return *this + (-o); }

std::string ShiftVector::to_string() const {
    if (is_zero()) return "e";
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int i = 0; i < kMaxVars; ++i) {
        if (entries_[i] == 0) continue;
        auto v = VariableId::from_index(i);
        if (!first) os << ", ";
        first = false;
        os << v.row << "," << v.col << ":" << entries_[i];
    }
    os << "}";
    return os.str();
}

Tableau::Tableau(int n) : n_(n), entries_(static_cast<std::size_t>(variable_count(n))) {
    if (n < 1) throw std::invalid_argument("tableau rank must be positive");
}

Tableau Tableau::from_rows(const std::vector<std::vector<Rational>>& rows) {
    Tableau t(static_cast<int>(rows.size()));
    for (int i = 1; i <= t.n_; ++i) {
        if (static_cast<int>(rows[i - 1].size()) != i)
            throw std::invalid_argument("tableau row " + std::to_string(i) + " must have " +
                                        std::to_string(i) + " entries");
        for (int j = 1; j <= i; ++j) t.set(i, j, rows[i - 1][j - 1]);
    }
    return t;
}

std::vector<Rational> Tableau::row(int i) const {
    std::vector<Rational> r;
    for (int j = 1; j <= i; ++j) r.push_back(at(i, j));
    return r;
}

Tableau Tableau::shifted(const ShiftVector& step) const {
    step.check_rank(n_);
    Tableau r = *this;
    int limit = std::min(variable_count(n_ - 1), kMaxVars);
    for (int v = 0; v < limit; ++v)
        if (step[v] != 0) r.entries_[v] += step[v];
    return r;
}

bool Tableau::is_integral() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

Tableau Tableau::canonical() const {
    Tableau r = *this;
    for (int i = 1; i <= n_; ++i) {
        auto first = r.entries_.begin() + VariableId{i, 1}.index();
        std::sort(first, first + i, [](const Rational& a, const Rational& b) { return a > b; });
    }
    return r;
}

std::string Tableau::to_string() const {
    std::ostringstream os;
    os << "(";
    for (int i = n_; i >= 1; --i) {
        if (i != n_) os << "; ";
        for (int j = 1; j <= i; ++j) {
            if (j > 1) os << ", ";
            os << rational_to_string(at(i, j));
        }
    }
    os << ")";
    return os.str();
}

bool operator<(const Tableau& a, const Tableau& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                        b.entries_.end());
}

}  // namespace gtorders
