#ifndef PISOT_NUMBERFIELD_HPP
#define PISOT_NUMBERFIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pisot/core.hpp"
#include "pisot/polynomial.hpp"

namespace pisot {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// The real field Q(beta) for a real algebraic integer beta > 1, given by its
/// monic minimal polynomial and a rational isolating interval.
///
/// Elements are coordinate vectors in the power basis 1, beta, ...,
/// beta^(d-1). Signs are decided exactly: the element is evaluated over a
/// dyadic enclosure of beta, and the enclosure is bisected on sign changes of
/// the minimal polynomial until the evaluated range excludes zero.
class NumberField {
public:
    /// Builds Q(beta) where beta is the unique root of `min_poly` in [lo, hi].
    /// `min_poly` must be monic and irreducible, and beta must exceed 1.
    static FieldPtr create(const IntPoly& min_poly, const Rational& lo, const Rational& hi);

    /// Convenience: beta is the largest real root of `min_poly`.
    static FieldPtr from_largest_root(const IntPoly& min_poly);

    int degree() const { return degree_; }
    const IntPoly& min_poly() const { return min_poly_; }

    /// Isolating interval kept by the field: lo >= 1 and beta is the only
    /// root of the minimal polynomial in [lo, hi].
    const Rational& lower() const { return lo_; }
    const Rational& upper() const { return hi_; }

    /// Exact sign of sum_k numerators[k] * beta^k (k < degree).
    int sign_of(const std::vector<BigInt>& numerators) const;

    /// Same for machine integers. A double evaluation decides when its
    /// forward error bound excludes zero; otherwise falls back to sign_of.
    int sign_of_small(const std::int64_t* numerators) const;

    /// Coordinates of beta^k for 0 <= k <= 2*degree - 2.
    const Matrix<Rational>& power_table() const { return powers_; }

    /// True when both objects describe the same field with the same beta.
    bool same_as(const NumberField& other) const;

    /// Approximation of beta for display only.
    double approximate_beta() const;

    NumberField(const NumberField&) = delete;
    NumberField& operator=(const NumberField&) = delete;

private:
    NumberField() = default;

    IntPoly min_poly_;
    int degree_ = 0;
    Rational lo_, hi_;

    // beta in [dy_lo_ / 2^dy_bits_, dy_hi_ / 2^dy_bits_]; scaled powers for
    // the first, unrefined evaluation.
    BigInt dy_lo_, dy_hi_;
    unsigned dy_bits_ = 0;
    std::vector<BigInt> lo_pow_scaled_, hi_pow_scaled_;
    // Outward-rounded double bounds on beta^k.
    std::vector<double> lo_pow_d_, hi_pow_d_;

    Matrix<Rational> powers_;
};

/// Element of Q(beta). Immutable value type; all arithmetic is exact.
class AlgebraicReal {
public:
    AlgebraicReal(FieldPtr field, Vector<Rational> coords);

    static AlgebraicReal zero(const FieldPtr& field);
    static AlgebraicReal one(const FieldPtr& field);
    static AlgebraicReal beta(const FieldPtr& field);
    static AlgebraicReal rational(const FieldPtr& field, const Rational& q);

    const FieldPtr& field() const { return field_; }
    const Vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    int sign() const;
    AlgebraicReal inverse() const;

    /// Display-only approximation.
    double approx() const;

    /// Human-readable exact form, e.g. "1/2 + 3*b - b^2".
    std::string str(const std::string& var = "b") const;

    /// Coordinates as decimal strings of rationals ("3/4", "-1", ...).
    std::vector<std::string> coord_strings() const;

    AlgebraicReal operator-() const;
    AlgebraicReal& operator+=(const AlgebraicReal& b);
    AlgebraicReal& operator-=(const AlgebraicReal& b);
    AlgebraicReal& operator*=(const AlgebraicReal& b);
    AlgebraicReal& operator/=(const AlgebraicReal& b);

    friend AlgebraicReal operator+(AlgebraicReal a, const AlgebraicReal& b) { return a += b; }
    friend AlgebraicReal operator-(AlgebraicReal a, const AlgebraicReal& b) { return a -= b; }
    friend AlgebraicReal operator*(const AlgebraicReal& a, const AlgebraicReal& b);
    friend AlgebraicReal operator/(const AlgebraicReal& a, const AlgebraicReal& b) { return a * b.inverse(); }

    friend AlgebraicReal operator+(AlgebraicReal a, const Rational& q);
    friend AlgebraicReal operator+(const Rational& q, AlgebraicReal a) { return std::move(a) + q; }
    friend AlgebraicReal operator-(AlgebraicReal a, const Rational& q) { return std::move(a) + Rational(-q); }
    friend AlgebraicReal operator-(const Rational& q, const AlgebraicReal& a) { return -a + q; }
    friend AlgebraicReal operator*(AlgebraicReal a, const Rational& q);
    friend AlgebraicReal operator*(const Rational& q, AlgebraicReal a) { return std::move(a) * q; }

    friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b);
    friend std::strong_ordering operator<=>(const AlgebraicReal& a, const AlgebraicReal& b);

private:
    void check_same_field(const AlgebraicReal& b) const;

    FieldPtr field_;
    Vector<Rational> coords_;
};

inline int sign(const AlgebraicReal& a) { return a.sign(); }
AlgebraicReal pow(const AlgebraicReal& a, int n);
AlgebraicReal abs(const AlgebraicReal& a);

/// Canonical order on coordinate vectors. Not numeric order; used to key
/// containers by exact value without sign computations.
struct CoordLess {
    bool operator()(const AlgebraicReal& a, const AlgebraicReal& b) const;
};

bool coords_less(const Vector<Rational>& a, const Vector<Rational>& b);

/// Hash of the coordinate vector, for unordered containers keyed by value.
struct CoordHash {
    std::size_t operator()(const AlgebraicReal& a) const;
};

/// True iff every root of `min_poly` other than beta (the root in [lo, hi])
/// has modulus < 1 and beta > 1. Deflates the root exactly over Q(beta) and
/// runs the Schur-Cohn recursion on the cofactor with exact signs.
/// Throws PreconditionError if `min_poly` is reducible.
bool is_pisot(const IntPoly& min_poly, const Rational& lo, const Rational& hi);

/// Same test on an already constructed field.
bool is_pisot(const FieldPtr& field);

}  // namespace pisot

#endif
