#include "gtorders/mackey.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace gtorders {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> cyclic_orders) : orders_(std::move(cyclic_orders)) {
    for (int d : orders_)
        if (d < 2) throw std::invalid_argument("cyclic orders must be >= 2");
}

std::size_t FiniteAbelianGroup::order() const {
    std::size_t k = 1;
    for (int d : orders_) k *= static_cast<std::size_t>(d);
    return k;
}

std::vector<GroupVector> FiniteAbelianGroup::elements() const {
    std::vector<GroupVector> out;
    GroupVector x(orders_.size(), 0);
    for (std::size_t i = 0; i < order(); ++i) {
        out.push_back(x);
        for (std::size_t k = 0; k < x.size(); ++k) {
            if (++x[k] < orders_[k]) break;
            x[k] = 0;
        }
    }
    return out;
}

GroupVector FiniteAbelianGroup::reduce(GroupVector a) const {
    if (a.size() != orders_.size()) throw std::invalid_argument("element has the wrong rank");
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = ((a[k] % orders_[k]) + orders_[k]) % orders_[k];
    return a;
}

GroupVector FiniteAbelianGroup::add(const GroupVector& a, const GroupVector& b) const {
    GroupVector c(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] + b[k];
    return reduce(std::move(c));
}

std::size_t FiniteAbelianGroup::index(const GroupVector& a) const {
    std::size_t idx = 0, stride = 1;
    for (std::size_t k = 0; k < a.size(); ++k) {
        idx += static_cast<std::size_t>(a[k]) * stride;
        stride *= static_cast<std::size_t>(orders_[k]);
    }
    return idx;
}

TableGroup::TableGroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
    const int n = static_cast<int>(table_.size());
    if (n == 0) throw std::invalid_argument("group table is empty");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("group table is not square");
        for (int x : row)
            if (x < 0 || x >= n) throw std::invalid_argument("group table entry out of range");
    }
    identity_ = -1;
    for (int e = 0; e < n && identity_ < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
        if (ok) identity_ = e;
    }
    if (identity_ < 0) throw std::invalid_argument("group table has no identity");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw std::invalid_argument("group table is not associative");
    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (table_[a][b] == identity_) inverse_[a] = b;
    for (int a = 0; a < n; ++a)
        if (inverse_[a] < 0) throw std::invalid_argument("group table has an element without inverse");
}

TableGroup TableGroup::cyclic(int order) {
    std::vector<std::vector<int>> t(order, std::vector<int>(order));
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) t[a][b] = (a + b) % order;
    return TableGroup(std::move(t));
}

std::size_t TableGroup::class_count(const std::vector<int>& subgroup) const {
    std::set<int> seen;
    std::size_t classes = 0;
    for (int x : subgroup) {
        if (seen.contains(x)) continue;
        ++classes;
        for (int g : subgroup) seen.insert(mul(mul(g, x), inverse(g)));
    }
    return classes;
}

std::size_t TableGroup::derived_order(const std::vector<int>& subgroup) const {
    std::set<int> gens;
    for (int a : subgroup)
        for (int b : subgroup) gens.insert(mul(mul(a, b), mul(inverse(a), inverse(b))));
    std::set<int> closure{identity_};
    std::vector<int> todo{identity_};
    while (!todo.empty()) {
        int x = todo.back();
        todo.pop_back();
        for (int g : gens) {
            int y = mul(x, g);
            if (closure.insert(y).second) todo.push_back(y);
        }
    }
    return closure.size();
}

SemidirectSpec::SemidirectSpec(FiniteAbelianGroup n_part, TableGroup h, std::vector<std::vector<GroupVector>> action)
    : n_(std::move(n_part)), h_(std::move(h)), action_(std::move(action)) {
    const std::size_t r = n_.rank();
    if (action_.size() != h_.order()) throw std::invalid_argument("action needs one entry per element of H");
    for (auto& images : action_) {
        if (images.size() != r) throw std::invalid_argument("action needs one image per generator of N");
        for (std::size_t k = 0; k < r; ++k) {
            images[k] = n_.reduce(images[k]);
            // The image of a generator of order d must have order dividing d.
            GroupVector sum(r, 0);
            for (int t = 0; t < n_.cyclic_orders()[k]; ++t) sum = n_.add(sum, images[k]);
            if (std::any_of(sum.begin(), sum.end(), [](int x) { return x != 0; }))
                throw std::invalid_argument("action image does not respect the cyclic orders");
        }
    }
    auto elements = n_.elements();
    for (std::size_t h1 = 0; h1 < h_.order(); ++h1) {
        std::set<GroupVector> image;
        for (const auto& x : elements) image.insert(act(static_cast<int>(h1), x));
        if (image.size() != elements.size()) throw std::invalid_argument("action is not bijective on N");
        for (std::size_t h2 = 0; h2 < h_.order(); ++h2)
            for (const auto& x : elements)
                if (act(h_.mul(static_cast<int>(h1), static_cast<int>(h2)), x) !=
                    act(static_cast<int>(h1), act(static_cast<int>(h2), x)))
                    throw std::invalid_argument("action is not a homomorphism H -> Aut N");
    }
    for (const auto& x : elements)
        if (act(h_.identity(), x) != x) throw std::invalid_argument("identity of H acts nontrivially");
}

GroupVector SemidirectSpec::act(int h, const GroupVector& x) const {
    GroupVector out(n_.rank(), 0);
    for (std::size_t k = 0; k < n_.rank(); ++k)
        for (int t = 0; t < x[k]; ++t) out = n_.add(out, action_[h][k]);
    return out;
}

GroupVector SemidirectSpec::act_on_character(int h, const GroupVector& chi) const {
    // psi_j / d_j = sum_k chi_k (h^-1 e_j)_k / d_k  (mod 1).
    const auto& d = n_.cyclic_orders();
    int hinv = h_.inverse(h);
    GroupVector psi(n_.rank());
    for (std::size_t j = 0; j < n_.rank(); ++j) {
        GroupVector e(n_.rank(), 0);
        e[j] = 1;
        GroupVector image = act(hinv, e);
        Rational phase = 0;
        for (std::size_t k = 0; k < n_.rank(); ++k) phase += Rational(chi[k] * image[k], d[k]);
        phase *= d[j];
        phase.canonicalize();
        if (phase.get_den() != 1) throw std::logic_error("dual action is not integral");
        psi[j] = static_cast<int>(phase.get_num().get_si());
    }
    return n_.reduce(psi);
}

std::size_t SemidirectSpec::class_count() const {
    auto elements = n_.elements();
    const std::size_t nn = elements.size(), nh = h_.order();
    auto mul = [&](std::size_t a, std::size_t b) {
        std::size_t na = a % nn, ha = a / nn, nb = b % nn, hb = b / nn;
        GroupVector x = n_.add(elements[na], act(static_cast<int>(ha), elements[nb]));
        return n_.index(x) + nn * static_cast<std::size_t>(h_.mul(static_cast<int>(ha), static_cast<int>(hb)));
    };
    const std::size_t total = nn * nh;
    std::vector<std::size_t> inverse(total);
    for (std::size_t a = 0; a < total; ++a)
        for (std::size_t b = 0; b < total; ++b)
            if (mul(a, b) == n_.index(GroupVector(n_.rank(), 0)) + nn * static_cast<std::size_t>(h_.identity()))
                inverse[a] = b;
    std::vector<char> seen(total, 0);
    std::size_t classes = 0;
    for (std::size_t x = 0; x < total; ++x) {
        if (seen[x]) continue;
        ++classes;
        for (std::size_t g = 0; g < total; ++g) seen[mul(mul(g, x), inverse[g])] = 1;
    }
    return classes;
}

SemidirectSpec SemidirectSpec::s3() {
    return SemidirectSpec(FiniteAbelianGroup({3}), TableGroup::cyclic(2), {{{1}}, {{2}}});
}

SemidirectSpec SemidirectSpec::a4() {
    return SemidirectSpec(FiniteAbelianGroup({2, 2}), TableGroup::cyclic(3),
                          {{{1, 0}, {0, 1}}, {{0, 1}, {1, 1}}, {{1, 1}, {1, 0}}});
}

std::vector<std::vector<GroupVector>> character_orbits(const SemidirectSpec& spec) {
    std::vector<std::vector<GroupVector>> orbits;
    std::set<GroupVector> seen;
    for (const auto& chi : spec.n_part().elements()) {
        if (seen.contains(chi)) continue;
        std::set<GroupVector> orbit;
        for (std::size_t h = 0; h < spec.h().order(); ++h) orbit.insert(spec.act_on_character(static_cast<int>(h), chi));
        seen.insert(orbit.begin(), orbit.end());
        orbits.emplace_back(orbit.begin(), orbit.end());
    }
    return orbits;
}

std::vector<long> irreducible_dimensions(std::size_t order, std::size_t classes, std::size_t abelianization) {
    if (abelianization > classes) throw std::runtime_error("abelianization exceeds the class count");
    const long remaining = static_cast<long>(order) - static_cast<long>(abelianization);
    const std::size_t slots = classes - abelianization;
    std::vector<long> divisors;
    for (long d = 2; d * d <= static_cast<long>(order); ++d)
        if (order % static_cast<std::size_t>(d) == 0) divisors.push_back(d);
    std::vector<std::vector<long>> solutions;
    std::vector<long> current;
    std::function<void(std::size_t, long, std::size_t)> search = [&](std::size_t start, long left, std::size_t k) {
        if (k == 0) {
            if (left == 0) solutions.push_back(current);
            return;
        }
        for (std::size_t i = start; i < divisors.size(); ++i) {
            long sq = divisors[i] * divisors[i];
            if (sq * static_cast<long>(k) > left) break;
            current.push_back(divisors[i]);
            search(i, left - sq, k - 1);
            current.pop_back();
        }
    };
    search(0, remaining, slots);
    if (solutions.size() != 1)
        throw std::runtime_error("irreducible dimensions not determined (" + std::to_string(solutions.size()) +
                                 " candidates)");
    std::vector<long> dims(abelianization, 1);
    dims.insert(dims.end(), solutions[0].begin(), solutions[0].end());
    return dims;
}

std::vector<long> MackeyReport::all_dims() const {
    std::vector<long> d;
    for (const auto& b : blocks) d.insert(d.end(), b.dims.begin(), b.dims.end());
    std::sort(d.begin(), d.end());
    return d;
}

MackeyReport mackey_simple_modules(const SemidirectSpec& spec, std::size_t max_stabilizer) {
    MackeyReport rep;
    rep.group_order = spec.order();
    for (const auto& orbit : character_orbits(spec)) {
        MackeyBlock block;
        block.orbit = orbit;
        std::vector<int> stab;
        for (std::size_t h = 0; h < spec.h().order(); ++h)
            if (spec.act_on_character(static_cast<int>(h), orbit.front()) == orbit.front())
                stab.push_back(static_cast<int>(h));
        block.stabilizer_order = stab.size();
        if (stab.size() > max_stabilizer)
            throw StabilizerTooLarge("stabilizer of order " + std::to_string(stab.size()) +
                                     " exceeds the brute-force bound");
        if (orbit.size() * stab.size() != spec.h().order())
            throw std::logic_error("orbit-stabilizer relation fails");
        block.simple_count = spec.h().class_count(stab);
        std::size_t ab = stab.size() / spec.h().derived_order(stab);
        for (long d : irreducible_dimensions(stab.size(), block.simple_count, ab))
            block.dims.push_back(static_cast<long>(orbit.size()) * d);
        for (long d : block.dims) rep.sum_of_squares += static_cast<std::size_t>(d * d);
        rep.blocks.push_back(std::move(block));
    }
    std::size_t total = 0;
    for (const auto& b : rep.blocks) total += b.simple_count;
    rep.brute_force_classes = spec.class_count();
    rep.burnside_holds = rep.sum_of_squares == rep.group_order;
    rep.class_count_matches = total == rep.brute_force_classes;
    return rep;
}

std::size_t translation_hom_count(const Rational& m, const Rational& n, const Rational& shift) {
    if (shift == 0) throw ZeroShift("shift must be nonzero");
    Rational k = (n - m) / shift;
    k.canonicalize();
    return k.get_den() == 1 ? 1 : 0;
}

BlockSummary skew_orbit_block(const Rational& base, const Rational& shift, int steps) {
    if (shift == 0) throw ZeroShift("shift must be nonzero");
    if (steps < 1) throw std::invalid_argument("steps must be positive");
    BlockSummary s;
    s.base = base;
    s.shift = shift;
    s.steps = steps;
    for (int k = 0; k < steps; ++k) {
        Rational p = base + shift * k;
        p.canonicalize();
        s.points.push_back(p);
    }
    std::set<Rational> distinct(s.points.begin(), s.points.end());
    s.free_action = distinct.size() == s.points.size();
    s.within_orbit_singleton = true;
    for (const auto& a : s.points)
        for (const auto& b : s.points) s.within_orbit_singleton &= translation_hom_count(a, b, shift) == 1;
    s.statement = "block equivalent to local-completion modules";
    return s;
}

}  // namespace gtorders
