#include "gtorders/tableaux.hpp"

#include <deque>
#include <functional>
#include <sstream>

namespace gtorders {

namespace {

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace

bool is_generic(const Tableau& t) {
    for (int m = 1; m < t.n(); ++m)
        for (int i = 1; i <= m; ++i) {
            for (int j = i + 1; j <= m; ++j)
                if (is_integer(t.at(m, i) - t.at(m, j))) return false;
            for (int j = 1; j <= m + 1; ++j)
                if (is_integer(t.at(m + 1, j) - t.at(m, i))) return false;
        }
    return true;
}

ModuleVector::ModuleVector(const Tableau& t, Rational c) { add(t, c); }

Rational ModuleVector::coefficient(const Tableau& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Rational(0) : it->second;
}

void ModuleVector::add(const Tableau& t, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
    for (const auto& [t, c] : o.terms_) add(t, -c);
    return *this;
}

ModuleVector ModuleVector::scaled(const Rational& c) const {
    ModuleVector r;
    for (const auto& [t, a] : terms_) r.add(t, a * c);
    return r;
}

std::string ModuleVector::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rational_to_string(c) << "*T" << t.to_string();
    }
    return os.str();
}

ModuleVector act(const Realization& r, const SkewElement& x, const ModuleVector& v) {
    ModuleVector out;
    for (const auto& [t, c] : v.terms())
        for (const auto& [z, a] : x.terms()) {
            Tableau target = t.shifted(r.tableau_step(z));
            out.add(target, c * evaluate(a, target));
        }
    return out;
}

ModuleVector act(Realization& r, const GeneratorId& g, const ModuleVector& v) { return act(r, r.image(g), v); }

ModuleVector act_c(Realization& r, int m, int k, const ModuleVector& v) {
    if (m < 1 || m > r.n() || k < 1 || k > m) throw std::invalid_argument("c_mk needs 1 <= k <= m <= n");
    ModuleVector total;
    for (int col = 1; col <= m; ++col) {
        // X[row] = (E^p)_{row,col} v.
        std::vector<ModuleVector> X(m);
        for (int row = 1; row <= m; ++row) X[row - 1] = act(r, GeneratorId::e(row, col), v);
        for (int p = 1; p < k; ++p) {
            std::vector<ModuleVector> next(m);
            for (int row = 1; row <= m; ++row) {
                if (p + 1 == k && row != col) continue;
                for (int j = 1; j <= m; ++j)
                    if (!X[j - 1].is_zero()) next[row - 1] += act(r, GeneratorId::e(row, j), X[j - 1]);
            }
            X = std::move(next);
        }
        total += X[col - 1];
    }
    return total;
}

std::vector<Rational> central_character(const Tableau& t) {
    std::vector<Rational> values;
    for (int m = 1; m <= t.n(); ++m)
        for (int k = 1; k <= m; ++k) values.push_back(evaluate(Realization::eigenvalue_gamma(m, k), t));
    return values;
}

void check_dominant(const std::vector<long>& top) {
    if (top.empty() || top.size() > static_cast<std::size_t>(kMaxRank))
        throw std::invalid_argument("top row must have 1 to 4 entries");
    for (std::size_t i = 1; i < top.size(); ++i)
        if (top[i - 1] < top[i]) throw NotDominant("top row is not weakly decreasing");
}

std::vector<Tableau> gt_patterns(const std::vector<long>& top) {
    check_dominant(top);
    const int n = static_cast<int>(top.size());
    std::vector<Tableau> out;
    Tableau p(n);
    for (int j = 1; j <= n; ++j) p.set(n, j, top[j - 1]);
    std::function<void(int, int)> fill = [&](int row, int col) {
        if (row == 0) {
            out.push_back(p);
            return;
        }
        if (col > row) {
            fill(row - 1, 1);
            return;
        }
        long hi = p.at(row + 1, col).get_num().get_si();
        long lo = p.at(row + 1, col + 1).get_num().get_si();
        for (long v = hi; v >= lo; --v) {
            p.set(row, col, v);
            fill(row, col + 1);
        }
    };
    fill(n - 1, 1);
    return out;
}

std::size_t gt_pattern_count(const std::vector<long>& top) {
    check_dominant(top);
    // Count by dynamic programming over rows: row -> number of completions.
    std::map<std::vector<long>, mpz_class> layer{{top, 1}};
    for (std::size_t len = top.size(); len > 1; --len) {
        std::map<std::vector<long>, mpz_class> next;
        for (const auto& [row, ways] : layer) {
            std::vector<long> below(len - 1);
            std::function<void(std::size_t)> rec = [&](std::size_t j) {
                if (j == below.size()) {
                    next[below] += ways;
                    return;
                }
                for (long v = row[j]; v >= row[j + 1]; --v) {
                    below[j] = v;
                    rec(j + 1);
                }
            };
            rec(0);
        }
        layer = std::move(next);
    }
    mpz_class total = 0;
    for (const auto& [row, ways] : layer) total += ways;
    return total.get_ui();
}

mpz_class weyl_dimension(const std::vector<long>& top) {
    check_dominant(top);
    Rational d = 1;
    const long n = static_cast<long>(top.size());
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j) d *= Rational(top[i] - top[j] + j - i, j - i);
    d.canonicalize();
    if (d.get_den() != 1) throw std::logic_error("Weyl dimension is not integral");
    return d.get_num();
}

Tableau pattern_to_tableau(const Tableau& pattern) {
    Tableau t(pattern.n());
    for (int i = 1; i <= t.n(); ++i)
        for (int j = 1; j <= i; ++j) t.set(i, j, pattern.at(i, j) - j);
    return t;
}

Tableau tableau_to_pattern(const Tableau& t) {
    Tableau p(t.n());
    for (int i = 1; i <= t.n(); ++i)
        for (int j = 1; j <= i; ++j) p.set(i, j, t.at(i, j) + j);
    return p;
}

// Pattern modules ----------------------------------------------------------------

namespace {

using Matrix = PatternModule::Matrix;

Matrix zero_matrix(std::size_t dim) { return Matrix(dim); }

Matrix mul(const Matrix& a, const Matrix& b) {
    Matrix c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (const auto& [k, x] : a[i])
            for (const auto& [j, y] : b[k]) {
                auto& slot = c[i][j];
                slot += x * y;
                if (slot == 0) c[i].erase(j);
            }
    return c;
}

void axpy(Matrix& dst, const Rational& s, const Matrix& src) {
    for (std::size_t i = 0; i < src.size(); ++i)
        for (const auto& [j, v] : src[i]) {
            auto& slot = dst[i][j];
            slot += s * v;
            if (slot == 0) dst[i].erase(j);
        }
}

Matrix commutator(const Matrix& a, const Matrix& b) {
    Matrix c = mul(a, b);
    axpy(c, -1, mul(b, a));
    return c;
}

bool is_zero(const Matrix& m) {
    for (const auto& row : m)
        if (!row.empty()) return false;
    return true;
}

}  // namespace

PatternModule::PatternModule(Realization& r, std::vector<long> top) : n_(static_cast<int>(top.size())), top_(top) {
    if (n_ != r.n()) throw std::invalid_argument("top row length must equal the realization rank");
    for (const auto& p : gt_patterns(top_)) {
        index_.emplace(pattern_to_tableau(p), static_cast<int>(basis_.size()));
        basis_.push_back(pattern_to_tableau(p));
    }
    build_generators(r);
    verify();
}

void PatternModule::build_generators(Realization& r) {
    const std::size_t dim = basis_.size();
    E_.assign(n_, std::vector<Matrix>(n_, zero_matrix(dim)));
    auto fill = [&](Matrix& M, const SkewElement& x) {
        for (std::size_t col = 0; col < dim; ++col)
            for (const auto& [z, a] : x.terms()) {
                Tableau target = basis_[col].shifted(r.tableau_step(z));
                auto it = index_.find(target);
                Rational value;
                try {
                    value = evaluate(a, target);
                } catch (const DenominatorVanishes&) {
                    if (it != index_.end()) throw;
                    ++verification_.leaving_steps;
                    continue;
                }
                if (value == 0) continue;
                if (it == index_.end()) {
                    ++verification_.leaving_steps;
                    continue;
                }
                M[it->second][static_cast<int>(col)] += value;
            }
    };
    for (int m = 1; m <= n_; ++m) fill(E_[m - 1][m - 1], r.diagonal_image(m));
    for (int m = 1; m < n_; ++m) {
        fill(E_[m - 1][m], r.raising_image(m));
        fill(E_[m][m - 1], r.lowering_image(m));
    }
    // Remaining e_ij by the same bracket recursion as the realization.
    for (int gap = 2; gap < n_; ++gap)
        for (int i = 1; i + gap <= n_; ++i) {
            int j = i + gap;
            E_[i - 1][j - 1] = commutator(E_[i - 1][j - 2], E_[j - 2][j - 1]);
            E_[j - 1][i - 1] = commutator(E_[j - 1][j - 2], E_[j - 2][i - 1]);
        }
}

void PatternModule::verify() {
    auto& v = verification_;
    v.relations = true;
    for (int a = 0; a < n_ * n_ && v.relations; ++a)
        for (int b = a + 1; b < n_ * n_; ++b) {
            int i = a / n_ + 1, j = a % n_ + 1, k = b / n_ + 1, l = b % n_ + 1;
            Matrix diff = commutator(matrix(i, j), matrix(k, l));
            if (j == k) axpy(diff, -1, matrix(i, l));
            if (l == i) axpy(diff, 1, matrix(k, j));
            ++v.bracket_checks;
            if (!is_zero(diff)) {
                v.relations = false;
                v.failure = "bracket [" + GeneratorId::e(i, j).label() + "," + GeneratorId::e(k, l).label() +
                            "] fails on the truncated module";
                break;
            }
        }
    v.central_character = true;
    std::vector<std::vector<Rational>> chars;
    for (const auto& t : basis_) chars.push_back(central_character(t));
    int slot = 0;
    for (int m = 1; m <= n_ && v.central_character; ++m) {
        std::vector<std::vector<Matrix>> power(m, std::vector<Matrix>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) power[i][j] = E_[i][j];
        for (int k = 1; k <= m; ++k, ++slot) {
            if (k > 1) {
                std::vector<std::vector<Matrix>> next(m, std::vector<Matrix>(m, zero_matrix(basis_.size())));
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j)
                        for (int l = 0; l < m; ++l) axpy(next[i][j], 1, mul(power[i][l], E_[l][j]));
                power = std::move(next);
            }
            Matrix c = zero_matrix(basis_.size());
            for (int i = 0; i < m; ++i) axpy(c, 1, power[i][i]);
            for (std::size_t b = 0; b < basis_.size(); ++b) {
                // c must act on T(l) by gamma_mk(l).
                auto& row = c[b];
                row[static_cast<int>(b)] -= chars[b][slot];
                if (row[static_cast<int>(b)] == 0) row.erase(static_cast<int>(b));
            }
            ++v.central_checks;
            if (!is_zero(c)) {
                v.central_character = false;
                v.failure = "c" + std::to_string(m) + std::to_string(k) + " is not the central character";
                break;
            }
        }
    }
}

ModuleVector PatternModule::act(const GeneratorId& g, const ModuleVector& v) const {
    g.check(n_);
    if (!verification_.passed())
        throw BoundaryLeak("truncated pattern module fails verification: " + verification_.failure);
    const Matrix& M = matrix(g.i, g.j);
    // Transposed access: M[target][source].
    ModuleVector out;
    for (const auto& [t, c] : v.terms()) {
        auto it = index_.find(t);
        if (it == index_.end()) throw std::invalid_argument("vector has a term outside the pattern set");
        for (std::size_t row = 0; row < M.size(); ++row) {
            auto e = M[row].find(it->second);
            if (e != M[row].end()) out.add(basis_[row], c * e->second);
        }
    }
    return out;
}

// Reachability -------------------------------------------------------------------

ReachabilityReport reachability(Realization& r, const Tableau& start, int radius, ReachMode mode) {
    if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
    if (start.n() != r.n()) throw std::invalid_argument("tableau rank must equal the realization rank");
    const int n = r.n();
    ReachabilityReport rep;
    rep.start = start;
    rep.radius = radius;
    rep.mode = mode;
    auto in_window = [&](const Tableau& t) {
        for (int i = 1; i < n; ++i)
            for (int j = 1; j <= i; ++j) {
                Rational d = t.at(i, j) - start.at(i, j);
                if (d > radius || d < -radius) return false;
            }
        return true;
    };
    std::deque<Tableau> queue{start};
    rep.reached.insert(start);

    if (mode == ReachMode::Lattice) {
        const int vars = variable_count(n - 1);
        long size = 1;
        for (int v = 0; v < vars; ++v) size *= 2L * radius + 1;
        rep.window_size = static_cast<std::size_t>(size);
        std::vector<const SkewElement*> moves;
        for (int m = 1; m < n; ++m) {
            moves.push_back(&r.raising_image(m));
            moves.push_back(&r.lowering_image(m));
        }
        while (!queue.empty()) {
            Tableau t = queue.front();
            queue.pop_front();
            for (const auto* x : moves)
                for (const auto& [z, a] : x->terms()) {
                    Tableau target = t.shifted(r.tableau_step(z));
                    if (evaluate(a, target) == 0) continue;
                    if (!in_window(target)) {
                        ++rep.leaving_steps;
                        continue;
                    }
                    if (rep.reached.insert(target).second) queue.push_back(target);
                }
        }
        return rep;
    }

    if (!start.is_integral()) throw std::invalid_argument("pattern mode needs an integral tableau");
    std::vector<long> top;
    for (int j = 1; j <= n; ++j) top.push_back(tableau_to_pattern(start).at(n, j).get_num().get_si());
    PatternModule module(r, top);
    if (!module.contains(start)) throw std::invalid_argument("start is not a GT pattern in l coordinates");
    rep.truncated_steps = module.verification().leaving_steps;
    rep.module_verified = module.verification().passed();
    for (const auto& t : module.basis()) rep.window_size += in_window(t) ? 1 : 0;
    while (!queue.empty()) {
        Tableau t = queue.front();
        queue.pop_front();
        for (int m = 1; m < n; ++m)
            for (const auto& g : {GeneratorId::raising(m), GeneratorId::lowering(m)}) {
                ModuleVector out = module.act(g, ModuleVector(t));
                for (const auto& [target, c] : out.terms()) {
                    if (!in_window(target)) {
                        ++rep.leaving_steps;
                        continue;
                    }
                    if (rep.reached.insert(target).second) queue.push_back(target);
                }
            }
    }
    return rep;
}

}  // namespace gtorders
