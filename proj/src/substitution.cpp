#include "pisot/substitution.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace pisot {

Substitution::Substitution(std::vector<Word> rules) : rules_(std::move(rules)) {
    if (rules_.empty()) throw PreconditionError("substitution has an empty alphabet");
    const int m = size();
    for (int j = 0; j < m; ++j) {
        if (rules_[j].empty()) throw PreconditionError("empty rule for letter " + std::to_string(j + 1));
        for (Letter a : rules_[j])
            if (a < 0 || a >= m)
                throw PreconditionError("rule for letter " + std::to_string(j + 1) + " uses undeclared letter " +
                                        std::to_string(a + 1));
    }
}

Word Substitution::apply(const Word& w, std::size_t cap) const {
    std::size_t total = 0;
    for (Letter a : w) total += rule(a).size();
    if (total > cap) throw CapExceeded("word-length", cap, "substituted word too long");
    Word out;
    out.reserve(total);
    for (Letter a : w) out.insert(out.end(), rule(a).begin(), rule(a).end());
    return out;
}

std::size_t Substitution::constant_length() const {
    const std::size_t q = rules_.front().size();
    for (const auto& r : rules_)
        if (r.size() != q) return 0;
    return q;
}

IntMatrix substitution_matrix(const Substitution& s) {
    const int m = s.size();
    IntMatrix mat = IntMatrix::Zero(m, m);
    for (int j = 0; j < m; ++j)
        for (Letter i : s.rule(j)) mat(i, j) += 1;
    return mat;
}

bool is_primitive(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw StructuralError("is_primitive: matrix is not square");
    const auto n = m.rows();
    Matrix<int> pattern(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            if (m(i, j) < 0) throw PreconditionError("is_primitive: negative entry");
            pattern(i, j) = m(i, j) > 0 ? 1 : 0;
        }
    // Wielandt: a primitive n x n matrix has M^k > 0 for k = (n-1)^2 + 1.
    const Eigen::Index bound = (n - 1) * (n - 1) + 1;
    Matrix<int> p = pattern;
    for (Eigen::Index k = 1; k <= bound; ++k) {
        if ((p.array() > 0).all()) return true;
        p = (p * pattern).cwiseMin(1);
    }
    return false;
}

Substitution power(const Substitution& s, int n, std::size_t cap) {
    if (n < 1) throw PreconditionError("power: exponent must be >= 1");
    std::vector<Word> rules;
    for (Letter a = 0; a < s.size(); ++a) {
        Word w{a};
        for (int k = 0; k < n; ++k) w = s.apply(w, cap);
        rules.push_back(std::move(w));
    }
    return Substitution(std::move(rules));
}

bool is_irreducible(const Substitution& s) {
    return is_irreducible(charpoly(substitution_matrix(s)));
}

namespace {

using AlgMatrix = std::vector<std::vector<AlgebraicReal>>;

// One vector spanning the kernel of a square matrix over Q(beta) whose
// kernel is one-dimensional.
std::vector<AlgebraicReal> kernel_vector(AlgMatrix a, const FieldPtr& field) {
    const std::size_t n = a.size();
    std::vector<int> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t p = row;
        while (p < n && a[p][col].is_zero()) ++p;
        if (p == n) continue;
        std::swap(a[p], a[row]);
        const AlgebraicReal inv = a[row][col].inverse();
        for (auto& x : a[row]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            const AlgebraicReal f = a[r][col];
            for (std::size_t c = 0; c < n; ++c) a[r][c] -= f * a[row][c];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++row;
    }
    if (pivot_col.size() + 1 != n) throw StructuralError("Perron eigenspace is not one-dimensional");
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    std::vector<AlgebraicReal> v(n, AlgebraicReal::zero(field));
    v[free_col] = AlgebraicReal::one(field);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a[r][free_col];
    return v;
}

}  // namespace

PerronData perron_data(const Substitution& s) {
    const IntMatrix m = substitution_matrix(s);
    if (!is_primitive(m)) throw GateFailure("primitivity gate failed: substitution matrix is not primitive");

    const IntPoly chi = charpoly(m);
    const RatPoly chi_q = cast<Rational>(chi);
    auto [lo, hi] = isolate_largest_real_root(chi_q);
    if (lo < 1 && count_roots(sturm_chain(squarefree_part(chi_q)), Rational(1), hi) == 0)
        throw GateFailure("Perron root is 1; the substitution is not expanding");

    FieldPtr field;
    for (const auto& f : irreducible_factors(chi)) {
        if (f.degree() == 1) {
            const Rational r = -Rational(f.coeff(0));
            if (r > lo && r <= hi) {
                field = NumberField::create(f, r, r);
                break;
            }
        } else if (count_roots(sturm_chain(cast<Rational>(f)), lo, hi) == 1) {
            field = NumberField::create(f, lo, hi);
            break;
        }
    }
    if (!field) throw StructuralError("no irreducible factor carries the Perron root");
    PerronData out{chi, field, AlgebraicReal::beta(field), {}, false};

    // (M^T - beta I) l^T = 0
    const int n = s.size();
    AlgMatrix a(n, std::vector<AlgebraicReal>(n, AlgebraicReal::zero(field)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            a[i][j] = AlgebraicReal::rational(field, Rational(m(j, i)));
            if (i == j) a[i][j] -= out.beta;
        }
    std::vector<AlgebraicReal> l = kernel_vector(std::move(a), field);
    if (l.front().sign() < 0)
        for (auto& x : l) x = -x;
    for (const auto& x : l)
        if (x.sign() <= 0) throw StructuralError("Perron eigenvector is not positive");
    const AlgebraicReal smallest = *std::min_element(l.begin(), l.end());
    const AlgebraicReal inv = smallest.inverse();
    for (auto& x : l) x *= inv;
    out.lengths = std::move(l);
    out.pisot = is_pisot(field);
    return out;
}

std::vector<std::pair<Letter, Letter>> legal_pairs(const Substitution& s) {
    std::set<std::pair<Letter, Letter>> seen;
    std::deque<std::pair<Letter, Letter>> todo;
    auto add_factors = [&](const Word& w) {
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            const std::pair<Letter, Letter> p{w[k], w[k + 1]};
            if (seen.insert(p).second) todo.push_back(p);
        }
    };
    for (Letter c = 0; c < s.size(); ++c) add_factors(s.rule(c));
    while (!todo.empty()) {
        auto [a, b] = todo.front();
        todo.pop_front();
        Word w = s.rule(a);
        w.insert(w.end(), s.rule(b).begin(), s.rule(b).end());
        add_factors(w);
    }
    return {seen.begin(), seen.end()};
}

FixedPointSeed fixed_point_seed(const Substitution& s) {
    const int m = s.size();
    const auto legal = legal_pairs(s);
    const std::set<std::pair<Letter, Letter>> legal_set(legal.begin(), legal.end());
    std::vector<Letter> first(m), last(m);
    for (Letter a = 0; a < m; ++a) {
        first[a] = a;
        last[a] = a;
    }
    for (int k = 1; k <= m * m; ++k) {
        for (Letter a = 0; a < m; ++a) {
            first[a] = s.rule(first[a]).front();
            last[a] = s.rule(last[a]).back();
        }
        for (Letter a = 0; a < m; ++a) {
            if (last[a] != a) continue;
            for (Letter b = 0; b < m; ++b)
                if (first[b] == b && legal_set.count({a, b})) return {k, a, b};
        }
    }
    throw StructuralError("no fixed-point seed found");
}

bool dekking_column_check(const Substitution& s) {
    const std::size_t q = s.constant_length();
    if (q == 0) throw PreconditionError("column check needs a constant-length substitution");
    std::vector<Letter> all(static_cast<std::size_t>(s.size()));
    for (Letter a = 0; a < s.size(); ++a) all[a] = a;
    std::set<std::vector<Letter>> seen{all};
    std::deque<std::vector<Letter>> todo{all};
    while (!todo.empty()) {
        const auto col = todo.front();
        todo.pop_front();
        if (col.size() == 1) return true;
        for (std::size_t r = 0; r < q; ++r) {
            std::set<Letter> next;
            for (Letter a : col) next.insert(s.rule(a)[r]);
            std::vector<Letter> v(next.begin(), next.end());
            if (seen.insert(v).second) todo.push_back(std::move(v));
        }
    }
    return false;
}

}  // namespace pisot
