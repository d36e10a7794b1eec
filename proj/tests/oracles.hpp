// Independent reference computations for the tests. Nothing here calls the
// library's algorithms; inputs are plain rule tables and coordinate lists.
#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Rules = std::vector<std::vector<int>>;
using Word = std::vector<int>;
using Dec = boost::multiprecision::cpp_dec_float_100;

inline Word image(const Rules& s, const Word& w) {
    Word out;
    for (int a : w) out.insert(out.end(), s[a].begin(), s[a].end());
    return out;
}

/// Prefix of a one-sided fixed point of some power of s, at least n letters.
inline Word fixed_point_prefix(const Rules& s, std::size_t n) {
    const int m = static_cast<int>(s.size());
    for (int a = 0; a < m; ++a) {
        // letter a is the first letter of s^p(a) for some p <= m
        int b = a;
        for (int p = 1; p <= m; ++p) {
            b = s[b][0];
            if (b != a) continue;
            Word w{a};
            while (w.size() < n) {
                Word next = w;
                for (int k = 0; k < p; ++k) next = image(s, next);
                if (next.size() == w.size()) break;
                w = std::move(next);
            }
            if (w.size() >= n) return w;
        }
    }
    return {};
}

using Pair = std::pair<Word, Word>;

/// Cuts two words into consecutive irreducible balanced pairs. The unbalanced
/// tail is dropped.
inline std::vector<Pair> split_balanced(const Word& x, const Word& y, int m) {
    std::vector<Pair> out;
    std::vector<long> diff(static_cast<std::size_t>(m), 0);
    std::size_t start = 0;
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        ++diff[x[i]];
        --diff[y[i]];
        if (std::all_of(diff.begin(), diff.end(), [](long d) { return d == 0; })) {
            out.emplace_back(Word(x.begin() + start, x.begin() + i + 1), Word(y.begin() + start, y.begin() + i + 1));
            start = i + 1;
        }
    }
    return out;
}

/// Balanced pair algorithm: compares the fixed point u with its shifts by
/// the first few return words, closes the irreducible balanced pairs under s
/// and asks whether every pair leads to a one-letter pair (a, a). Empty when
/// the pair set exceeds `cap` or a pair grows longer than `max_len`.
inline std::optional<bool> balanced_pair_coincidence(const Rules& s, std::size_t cap = 20000,
                                                     std::size_t prefix = 4000, std::size_t max_len = 400) {
    const int m = static_cast<int>(s.size());
    const Word u = fixed_point_prefix(s, prefix);
    std::map<Pair, int> index;
    std::vector<Pair> pairs;
    std::vector<std::vector<int>> succ;
    std::queue<int> todo;
    auto intern = [&](const Pair& p) {
        auto [it, fresh] = index.emplace(p, static_cast<int>(pairs.size()));
        if (fresh) {
            pairs.push_back(p);
            succ.emplace_back();
            todo.push(it->second);
        }
        return it->second;
    };

    int shifts = 0;
    for (std::size_t k = 1; k < u.size() / 2 && shifts < 3; ++k) {
        if (u[k] != u[0]) continue;
        ++shifts;
        const Word tail(u.begin() + static_cast<long>(k), u.end());
        for (const auto& p : split_balanced(u, tail, m)) intern(p);
    }

    while (!todo.empty()) {
        if (pairs.size() > cap) return std::nullopt;
        const int id = todo.front();
        todo.pop();
        const Pair p = pairs[id];
        if (p.first.size() > max_len) return std::nullopt;
        if (p.first.size() == 1) continue;
        for (const auto& q : split_balanced(image(s, p.first), image(s, p.second), m)) {
            const int to = intern(q);
            succ[id].push_back(to);
        }
    }

    // backward closure from the coincidences
    std::vector<std::vector<int>> pred(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (int j : succ[i]) pred[j].push_back(static_cast<int>(i));
    std::vector<bool> good(pairs.size(), false);
    std::queue<int> q;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (pairs[i].first.size() == 1 && pairs[i].first == pairs[i].second) {
            good[i] = true;
            q.push(static_cast<int>(i));
        }
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int w : pred[v])
            if (!good[w]) {
                good[w] = true;
                q.push(w);
            }
    }
    return std::all_of(good.begin(), good.end(), [](bool b) { return b; });
}

/// Column coincidence for a constant-length rule table: some composition of
/// column maps sends the whole alphabet to one letter.
inline bool dekking_columns(const Rules& s) {
    const std::size_t q = s[0].size();
    const int m = static_cast<int>(s.size());
    std::set<std::set<int>> seen;
    std::queue<std::set<int>> todo;
    std::set<int> all;
    for (int a = 0; a < m; ++a) all.insert(a);
    todo.push(all);
    seen.insert(all);
    while (!todo.empty()) {
        const auto cur = todo.front();
        todo.pop();
        if (cur.size() == 1) return true;
        for (std::size_t k = 0; k < q; ++k) {
            std::set<int> img;
            for (int a : cur) img.insert(s[a][k]);
            if (seen.insert(img).second) todo.push(img);
        }
    }
    return false;
}

/// Cycles of a map v -> next[v], each rotated to its smallest vertex, found
/// by walking n steps from every vertex.
inline std::set<std::vector<int>> functional_cycles(const std::vector<int>& next) {
    const std::size_t n = next.size();
    std::set<std::vector<int>> out;
    for (std::size_t v = 0; v < n; ++v) {
        int x = static_cast<int>(v);
        for (std::size_t k = 0; k < n; ++k) x = next[x];
        std::vector<int> cyc{x};
        for (int y = next[x]; y != x; y = next[y]) cyc.push_back(y);
        std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
        out.insert(cyc);
    }
    return out;
}

/// Largest real root of a monic integer polynomial (constant first) in
/// [lo, hi], by bisection to full working precision.
inline Dec root_in(const std::vector<long>& poly, Dec lo, Dec hi) {
    auto eval = [&](const Dec& x) {
        Dec acc = 0;
        for (std::size_t k = poly.size(); k-- > 0;) acc = acc * x + poly[k];
        return acc;
    };
    const bool lo_neg = eval(lo) < 0;
    for (int it = 0; it < 400; ++it) {
        const Dec mid = (lo + hi) / 2;
        if ((eval(mid) < 0) == lo_neg)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

/// Value of sum_k (num_k / den_k) x^k.
inline Dec evaluate(const std::vector<std::pair<std::string, std::string>>& coords, const Dec& x) {
    Dec acc = 0, power = 1;
    for (const auto& [num, den] : coords) {
        acc += Dec(num) / Dec(den) * power;
        power *= x;
    }
    return acc;
}

/// Dominant eigenvalue of a nonnegative primitive matrix by power iteration.
inline Dec perron_root(const std::vector<std::vector<long>>& m, int iterations = 3000) {
    const std::size_t n = m.size();
    std::vector<Dec> v(n, Dec(1));
    Dec ratio = 0;
    for (int it = 0; it < iterations; ++it) {
        std::vector<Dec> w(n, Dec(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) w[i] += Dec(m[i][j]) * v[j];
        Dec norm = 0;
        for (const auto& x : w) norm += x;
        Dec before = 0;
        for (const auto& x : v) before += x;
        ratio = norm / before;
        for (auto& x : w) x /= norm;
        v = std::move(w);
    }
    return ratio;
}

}  // namespace oracle
