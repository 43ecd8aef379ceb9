#pragma once

#include "gtorders/polynomial.hpp"

#include <array>
#include <string>
#include <vector>

namespace gtorders {

/// Finitely supported integral shift of the non-top rows: an element of the
/// lattice M generated by the delta^{ij}, 1 <= j <= i <= n-1. Entries are
/// indexed like the variables, absent entries are zero.
class ShiftVector {
public:
    ShiftVector() { entries_.fill(0); }
    static ShiftVector delta(VariableId v, int multiplicity = 1);

    [[nodiscard]] int operator[](int index) const { return entries_[index]; }
    [[nodiscard]] int at(VariableId v) const { return entries_[v.index()]; }
    void set(VariableId v, int value) { entries_[v.index()] = value; }
    void set_index(int index, int value) { entries_[index] = value; }

    [[nodiscard]] bool is_zero() const;
    /// Largest row carrying a nonzero entry (0 for the zero shift).
    [[nodiscard]] int max_row() const;
    [[nodiscard]] int sup_norm() const;
    /// Throws std::invalid_argument if an entry sits on row >= n.
    void check_rank(int n) const;

    ShiftVector operator-() const;
    ShiftVector operator+(const ShiftVector& o) const;
    ShiftVector operator-(const ShiftVector& o) const;

    /// Compact textual form, e.g. "{1,1:1, 2,2:-1}"; "e" for zero.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const ShiftVector&, const ShiftVector&) = default;
    friend auto operator<=>(const ShiftVector& a, const ShiftVector& b) { return a.entries_ <=> b.entries_; }

private:
    std::array<int, kMaxVars> entries_{};
};

/// A point of the l-space: a complete triangular array of rationals with row n
/// as the top row. Entries are indexed like the variables.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(int n);
    /// rows[0] is row 1 (one entry), rows[n-1] is the top row (n entries).
    static Tableau from_rows(const std::vector<std::vector<Rational>>& rows);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] const Rational& at(int row, int col) const { return entries_[VariableId{row, col}.index()]; }
    void set(int row, int col, Rational v) {
        v.canonicalize();
        entries_[VariableId{row, col}.index()] = std::move(v);
    }
    [[nodiscard]] const std::vector<Rational>& entries() const { return entries_; }
    [[nodiscard]] std::vector<Rational> row(int i) const;

    /// l + step for every non-top entry.
    [[nodiscard]] Tableau shifted(const ShiftVector& step) const;
    [[nodiscard]] bool is_integral() const;
    /// Each row sorted descending: the canonical representative of the G-orbit.
    [[nodiscard]] Tableau canonical() const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Tableau& a, const Tableau& b) { return a.n_ == b.n_ && a.entries_ == b.entries_; }
    friend bool operator<(const Tableau& a, const Tableau& b);

private:
    int n_ = 0;
    std::vector<Rational> entries_;
};

}  // namespace gtorders
