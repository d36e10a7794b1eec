#ifndef PISOT_POLYNOMIAL_HPP
#define PISOT_POLYNOMIAL_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "pisot/core.hpp"

namespace pisot {

/// Dense univariate polynomial, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
template <typename Scalar>
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

    Polynomial(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

    static Polynomial monomial(int k, Scalar coeff = Scalar(1)) {
        std::vector<Scalar> c(static_cast<std::size_t>(k) + 1, Scalar(0));
        c.back() = std::move(coeff);
        return Polynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    Scalar coeff(int k) const {
        if (k < 0 || k > degree()) return Scalar(0);
        return c_[static_cast<std::size_t>(k)];
    }

    const Scalar& leading() const { return c_.back(); }
    const std::vector<Scalar>& coeffs() const { return c_; }

    bool operator==(const Polynomial&) const = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == Scalar(0)) c_.pop_back();
    }

    std::vector<Scalar> c_;
};

template <typename Scalar>
Polynomial<Scalar> operator+(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
    std::vector<Scalar> c(static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1), Scalar(0));
    for (int k = 0; k <= a.degree(); ++k) c[k] += a.coeff(k);
    for (int k = 0; k <= b.degree(); ++k) c[k] += b.coeff(k);
    return Polynomial<Scalar>(std::move(c));
}

template <typename Scalar>
Polynomial<Scalar> operator-(const Polynomial<Scalar>& a) {
    std::vector<Scalar> c = a.coeffs();
    for (auto& x : c) x = -x;
    return Polynomial<Scalar>(std::move(c));
}

template <typename Scalar>
Polynomial<Scalar> operator-(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
    return a + (-b);
}

template <typename Scalar>
Polynomial<Scalar> operator*(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> c(static_cast<std::size_t>(a.degree() + b.degree() + 1), Scalar(0));
    for (int i = 0; i <= a.degree(); ++i)
        for (int j = 0; j <= b.degree(); ++j) c[i + j] += a.coeff(i) * b.coeff(j);
    return Polynomial<Scalar>(std::move(c));
}

template <typename Scalar>
Polynomial<Scalar> operator*(const Scalar& s, const Polynomial<Scalar>& a) {
    std::vector<Scalar> c = a.coeffs();
    for (auto& x : c) x *= s;
    return Polynomial<Scalar>(std::move(c));
}

/// Horner evaluation at any type that accepts `T * T` and `T + Scalar`.
/// `zero` supplies the additive identity of T (needed when T carries context,
/// such as a number field).
template <typename Scalar, typename T>
T evaluate(const Polynomial<Scalar>& p, const T& x, T zero) {
    T acc = std::move(zero);
    for (int k = p.degree(); k >= 0; --k) acc = acc * x + p.coeff(k);
    return acc;
}

template <typename Scalar>
Scalar evaluate(const Polynomial<Scalar>& p, const Scalar& x) {
    return evaluate(p, x, Scalar(0));
}

template <typename Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& p) {
    if (p.degree() < 1) return {};
    std::vector<Scalar> c(static_cast<std::size_t>(p.degree()));
    for (int k = 1; k <= p.degree(); ++k) c[k - 1] = p.coeff(k) * Scalar(k);
    return Polynomial<Scalar>(std::move(c));
}

template <typename To, typename From>
Polynomial<To> cast(const Polynomial<From>& p) {
    std::vector<To> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return Polynomial<To>(std::move(c));
}

/// Characteristic polynomial det(xI - A) by Faddeev-LeVerrier. Every division
/// is exact for integer and rational scalars.
template <typename Scalar>
Polynomial<Scalar> charpoly(const Matrix<Scalar>& a) {
    if (a.rows() != a.cols()) throw StructuralError("charpoly: matrix is not square");
    const auto n = a.rows();
    std::vector<Scalar> c(static_cast<std::size_t>(n) + 1, Scalar(0));
    c[n] = Scalar(1);
    Matrix<Scalar> m = Matrix<Scalar>::Zero(n, n);
    const Matrix<Scalar> id = Matrix<Scalar>::Identity(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        m = (a * m).eval() + id * c[n - k + 1];
        Scalar tr = (a * m).trace();
        c[n - k] = -tr / Scalar(k);
    }
    return Polynomial<Scalar>(std::move(c));
}

// ---- rational polynomial algebra -------------------------------------------

using RatPoly = Polynomial<Rational>;
using IntPoly = Polynomial<BigInt>;

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly gcd(RatPoly a, RatPoly b);
RatPoly monic(const RatPoly& p);
RatPoly squarefree_part(const RatPoly& p);

/// Scales by a positive rational so the coefficients are coprime integers.
IntPoly primitive_part(const RatPoly& p);

/// Extended Euclid: returns (g, s) with s*a = g (mod b), g = gcd(a, b) monic.
std::pair<RatPoly, RatPoly> gcdex(const RatPoly& a, const RatPoly& b);

int sign_at(const RatPoly& p, const Rational& x);

/// Sturm chain p, p', -rem(...), ... of a squarefree polynomial.
std::vector<RatPoly> sturm_chain(const RatPoly& p);

/// Number of sign changes after dropping zeros.
int sign_variations(const std::vector<int>& signs);

int variations_at(const std::vector<RatPoly>& chain, const Rational& x);
int variations_at_infinity(const std::vector<RatPoly>& chain, bool positive);

/// Distinct real roots of the chain's head in the half-open interval (a, b].
int count_roots(const std::vector<RatPoly>& chain, const Rational& a, const Rational& b);

/// Rational interval (lo, hi] containing the largest real root of p and no
/// other root. Throws PreconditionError when p has no real root.
std::pair<Rational, Rational> isolate_largest_real_root(const RatPoly& p);

/// Complete factorisation of a monic integer polynomial into monic
/// irreducible factors over the rationals (with repetition). Uses integer
/// root stripping then Kronecker's interpolation search, which is exact but
/// only practical for the small degrees met as substitution matrices.
std::vector<IntPoly> irreducible_factors(const IntPoly& p);

bool is_irreducible(const IntPoly& p);

std::string to_string(const IntPoly& p, const std::string& var = "x");
std::string to_string(const RatPoly& p, const std::string& var = "x");

}  // namespace pisot

#endif
