#include "pisot/polynomial.hpp"

#include <functional>
#include <sstream>

namespace pisot {

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    if (a.degree() < b.degree()) return {RatPoly{}, a};
    std::vector<Rational> r = a.coeffs();
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
    const Rational lead = b.leading();
    for (int k = a.degree(); k >= b.degree(); --k) {
        const Rational f = r[k] / lead;
        if (f == 0) continue;
        q[k - b.degree()] = f;
        for (int j = 0; j <= b.degree(); ++j) r[k - b.degree() + j] -= f * b.coeff(j);
    }
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly monic(const RatPoly& p) {
    if (p.is_zero()) return p;
    return (Rational(1) / p.leading()) * p;
}

RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

std::pair<RatPoly, RatPoly> gcdex(const RatPoly& a, const RatPoly& b) {
    RatPoly r0 = a, r1 = b;
    RatPoly s0{Rational(1)}, s1{};
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        RatPoly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.is_zero()) return {r0, s0};
    const Rational inv = Rational(1) / r0.leading();
    return {inv * r0, inv * s0};
}

RatPoly squarefree_part(const RatPoly& p) {
    if (p.degree() < 1) return monic(p);
    const RatPoly g = gcd(p, derivative(p));
    return monic(divmod(p, g).first);
}

IntPoly primitive_part(const RatPoly& p) {
    if (p.is_zero()) return {};
    BigInt den(1);
    for (const auto& c : p.coeffs()) den = mp::lcm(den, BigInt(mp::denominator(c)));
    std::vector<BigInt> z;
    BigInt content(0);
    for (const auto& c : p.coeffs()) {
        z.emplace_back(BigInt(mp::numerator(c)) * (den / BigInt(mp::denominator(c))));
        content = mp::gcd(content, z.back());
    }
    if (p.leading() < 0) content = -content;
    for (auto& c : z) c /= content;
    return IntPoly(std::move(z));
}

int sign_at(const RatPoly& p, const Rational& x) {
    const Rational v = evaluate(p, x);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain{p};
    if (p.degree() < 1) return chain;
    chain.push_back(derivative(p));
    while (true) {
        const auto& a = chain[chain.size() - 2];
        const auto& b = chain.back();
        RatPoly r = -divmod(a, b).second;
        if (r.is_zero()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_variations(const std::vector<int>& signs) {
    int count = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int variations_at(const std::vector<RatPoly>& chain, const Rational& x) {
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& p : chain) s.push_back(sign_at(p, x));
    return sign_variations(s);
}

int variations_at_infinity(const std::vector<RatPoly>& chain, bool positive) {
    std::vector<int> s;
    for (const auto& p : chain) {
        if (p.is_zero()) {
            s.push_back(0);
            continue;
        }
        int sg = p.leading() > 0 ? 1 : -1;
        if (!positive && p.degree() % 2 == 1) sg = -sg;
        s.push_back(sg);
    }
    return sign_variations(s);
}

int count_roots(const std::vector<RatPoly>& chain, const Rational& a, const Rational& b) {
    return variations_at(chain, a) - variations_at(chain, b);
}

std::pair<Rational, Rational> isolate_largest_real_root(const RatPoly& p) {
    const RatPoly q = squarefree_part(p);
    if (q.degree() < 1) throw PreconditionError("constant polynomial has no roots");
    const auto chain = sturm_chain(q);
    // Cauchy bound: every root lies in (-bound, bound).
    Rational bound(0);
    for (int k = 0; k < q.degree(); ++k) bound = std::max(bound, mp::abs(q.coeff(k) / q.leading()));
    bound += 1;
    Rational lo = -bound, hi = bound;
    if (count_roots(chain, lo, hi) == 0) throw PreconditionError("polynomial has no real root");
    while (count_roots(chain, lo, hi) > 1) {
        const Rational mid = (lo + hi) / 2;
        if (count_roots(chain, mid, hi) >= 1)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

namespace {

std::vector<BigInt> positive_divisors(BigInt n) {
    n = mp::abs(n);
    if (n > BigInt("1000000000000"))
        throw PreconditionError("polynomial values too large for factor search");
    std::vector<BigInt> small, large;
    for (BigInt d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Exact division of integer polynomials; false when the quotient is not an
// integer polynomial.
bool divides(const IntPoly& f, const IntPoly& p, IntPoly& quotient) {
    auto [q, r] = divmod(cast<Rational>(p), cast<Rational>(f));
    if (!r.is_zero()) return false;
    std::vector<BigInt> z;
    for (const auto& c : q.coeffs()) {
        if (mp::denominator(c) != 1) return false;
        z.emplace_back(mp::numerator(c));
    }
    quotient = IntPoly(std::move(z));
    return true;
}

// Monic factor of degree k of p, or the zero polynomial if there is none.
IntPoly find_factor_of_degree(const IntPoly& p, int k) {
    // Interpolation nodes 0, 1, -1, 2, -2, ...
    std::vector<BigInt> nodes, values;
    for (int step = 0; static_cast<int>(nodes.size()) < k; ++step) {
        const BigInt x = (step % 2 == 0) ? BigInt(step / 2) : BigInt(-(step + 1) / 2);
        const BigInt v = evaluate(p, x);
        if (v == 0) {
            IntPoly q;
            IntPoly lin{-x, BigInt(1)};
            if (k == 1 && divides(lin, p, q)) return lin;
            continue;
        }
        nodes.push_back(x);
        values.push_back(v);
    }
    if (k == 1) {
        // Integer roots divide the constant term, and every node value.
        for (const auto& d : positive_divisors(values[0])) {
            for (int s : {1, -1}) {
                const BigInt root = nodes[0] - BigInt(s) * d;
                IntPoly lin{-root, BigInt(1)}, q;
                if (divides(lin, p, q)) return lin;
            }
        }
        return {};
    }

    std::vector<std::vector<BigInt>> choices;
    for (const auto& v : values) {
        std::vector<BigInt> c;
        for (const auto& d : positive_divisors(v)) {
            c.push_back(d);
            c.push_back(-d);
        }
        choices.push_back(std::move(c));
    }

    // Node polynomial W = prod (x - x_i) and Lagrange basis polynomials.
    RatPoly w{Rational(1)};
    for (const auto& x : nodes) w = w * RatPoly{Rational(-x), Rational(1)};
    std::vector<RatPoly> basis;
    for (int i = 0; i < k; ++i) {
        RatPoly li{Rational(1)};
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            li = li * RatPoly{Rational(-nodes[j]) / Rational(nodes[i] - nodes[j]),
                              Rational(1) / Rational(nodes[i] - nodes[j])};
        }
        basis.push_back(std::move(li));
    }

    std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
    while (true) {
        RatPoly f = w;
        for (int i = 0; i < k; ++i) f = f + Rational(choices[i][idx[i]]) * basis[i];
        bool integral = true;
        for (const auto& c : f.coeffs()) integral = integral && mp::denominator(c) == 1;
        if (integral) {
            std::vector<BigInt> z;
            for (const auto& c : f.coeffs()) z.emplace_back(mp::numerator(c));
            IntPoly cand(std::move(z)), q;
            if (cand.degree() == k && divides(cand, p, q)) return cand;
        }
        int pos = 0;
        while (pos < k && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
        if (pos == k) break;
    }
    return {};
}

}  // namespace

std::vector<IntPoly> irreducible_factors(const IntPoly& p) {
    if (p.is_zero() || p.leading() != 1)
        throw PreconditionError("irreducible_factors expects a monic polynomial");
    if (p.degree() > 16) throw PreconditionError("degree too large for factor search");
    std::vector<IntPoly> out;
    IntPoly rest = p;
    while (rest.degree() >= 1) {
        bool found = false;
        for (int k = 1; 2 * k <= rest.degree(); ++k) {
            IntPoly f = find_factor_of_degree(rest, k);
            if (f.is_zero()) continue;
            IntPoly q;
            divides(f, rest, q);
            out.push_back(f);
            rest = q;
            found = true;
            break;
        }
        if (!found) {
            out.push_back(rest);
            break;
        }
    }
    std::sort(out.begin(), out.end(), [](const IntPoly& a, const IntPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                            b.coeffs().end());
    });
    return out;
}

bool is_irreducible(const IntPoly& p) {
    return p.degree() >= 1 && irreducible_factors(p).size() == 1;
}

namespace {

template <typename Scalar>
std::string format_poly(const Polynomial<Scalar>& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        Scalar c = p.coeff(k);
        if (c == 0) continue;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        const bool unit = (c == 1);
        if (!unit || k == 0) os << c.str();
        if (k >= 1) os << (unit ? "" : "*") << var;
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

}  // namespace

std::string to_string(const IntPoly& p, const std::string& var) { return format_poly(p, var); }
std::string to_string(const RatPoly& p, const std::string& var) { return format_poly(p, var); }

}  // namespace pisot
