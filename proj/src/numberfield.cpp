#include "pisot/numberfield.hpp"

#include <cmath>
#include <sstream>

namespace pisot {

namespace {

BigInt pow2(unsigned bits) {
    BigInt r(1);
    return r << bits;
}

// Sign of p(m / 2^bits) for an integer polynomial, using integers only:
// evaluates sum_k p_k m^k 2^(bits (n - k)) by Horner.
int sign_at_dyadic(const IntPoly& p, const BigInt& m, unsigned bits) {
    const BigInt two_b = pow2(bits);
    BigInt acc(0);
    BigInt scale(1);
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * m + p.coeff(k) * scale;
        scale *= two_b;
    }
    return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

Rational dyadic(const BigInt& m, unsigned bits) { return Rational(m, pow2(bits)); }

BigInt floor_rational(const Rational& q) {
    BigInt n = mp::numerator(q), d = mp::denominator(q);
    BigInt f = n / d;
    if (n < 0 && f * d != n) f -= 1;
    return f;
}

BigInt ceil_rational(const Rational& q) { return -floor_rational(-q); }

Matrix<Rational> build_power_table(const IntPoly& f) {
    const int d = f.degree();
    const int cols = std::max(1, 2 * d - 1);
    Matrix<Rational> t = Matrix<Rational>::Zero(d, cols);
    for (int k = 0; k < std::min(d, cols); ++k) t(k, k) = 1;
    for (int k = d; k < cols; ++k) {
        // beta^k = beta * beta^(k-1); shift up and reduce the overflow term.
        const Rational top = t(d - 1, k - 1);
        for (int i = d - 1; i >= 1; --i) t(i, k) = t(i - 1, k - 1);
        t(0, k) = 0;
        for (int i = 0; i < d; ++i) t(i, k) -= top * Rational(f.coeff(i));
    }
    return t;
}

}  // namespace

FieldPtr NumberField::create(const IntPoly& min_poly, const Rational& lo_in, const Rational& hi_in) {
    if (min_poly.degree() < 1 || min_poly.leading() != 1)
        throw PreconditionError("minimal polynomial must be monic of degree >= 1");
    if (lo_in > hi_in) throw PreconditionError("empty isolating interval");

    std::shared_ptr<NumberField> f(new NumberField());
    f->min_poly_ = min_poly;
    f->degree_ = min_poly.degree();
    f->powers_ = build_power_table(min_poly);

    if (f->degree_ == 1) {
        const Rational beta = Rational(-min_poly.coeff(0));
        if (beta < lo_in || beta > hi_in) throw PreconditionError("interval does not contain the root");
        if (beta <= 1) throw PreconditionError("beta must exceed 1");
        f->lo_ = f->hi_ = beta;
        return f;
    }

    if (!is_irreducible(min_poly)) throw PreconditionError("minimal polynomial " + to_string(min_poly) + " is reducible");
    const RatPoly fr = cast<Rational>(min_poly);
    const auto chain = sturm_chain(fr);
    if (variations_at(chain, lo_in) - variations_at(chain, hi_in) != 1)
        throw PreconditionError("interval does not isolate a single root");

    // No rational roots, so endpoint signs are nonzero and opposite.
    Rational lo = lo_in, hi = hi_in;
    const int s_lo = sign_at(fr, lo);
    auto bisect = [&] {
        const Rational mid = (lo + hi) / 2;
        if (sign_at(fr, mid) == s_lo)
            lo = mid;
        else
            hi = mid;
    };
    while (lo < 1) {
        if (hi <= 1) throw PreconditionError("beta must exceed 1");
        bisect();
    }
    for (unsigned bits = 64;; bits += 16) {
        while (hi - lo >= dyadic(BigInt(1), bits + 2)) bisect();
        const BigInt L = floor_rational(lo * Rational(pow2(bits)));
        const BigInt H = ceil_rational(hi * Rational(pow2(bits)));
        const Rational dl = dyadic(L, bits), dh = dyadic(H, bits);
        if (dl < 1) continue;
        if (sign_at(fr, dl) != s_lo || sign_at(fr, dh) != -s_lo) continue;
        if (variations_at(chain, dl) - variations_at(chain, dh) != 1) continue;
        f->dy_lo_ = L;
        f->dy_hi_ = H;
        f->dy_bits_ = bits;
        f->lo_ = dl;
        f->hi_ = dh;
        break;
    }
    const int d = f->degree_;
    f->lo_pow_scaled_.resize(d);
    f->hi_pow_scaled_.resize(d);
    for (int k = 0; k < d; ++k) {
        const BigInt shift = pow2(f->dy_bits_ * static_cast<unsigned>(d - 1 - k));
        f->lo_pow_scaled_[k] = mp::pow(f->dy_lo_, static_cast<unsigned>(k)) * shift;
        f->hi_pow_scaled_[k] = mp::pow(f->dy_hi_, static_cast<unsigned>(k)) * shift;
    }
    const BigInt den = pow2(f->dy_bits_);
    for (int k = 0; k < d; ++k) {
        const BigInt kd = mp::pow(den, static_cast<unsigned>(k));
        const double lo_k = Rational(mp::pow(f->dy_lo_, static_cast<unsigned>(k)), kd).convert_to<double>();
        const double hi_k = Rational(mp::pow(f->dy_hi_, static_cast<unsigned>(k)), kd).convert_to<double>();
        f->lo_pow_d_.push_back(lo_k * (1 - 0x1p-50));
        f->hi_pow_d_.push_back(hi_k * (1 + 0x1p-50));
    }
    return f;
}

FieldPtr NumberField::from_largest_root(const IntPoly& min_poly) {
    auto [lo, hi] = isolate_largest_real_root(cast<Rational>(min_poly));
    if (min_poly.degree() == 1) {
        const Rational beta = Rational(-min_poly.coeff(0));
        return create(min_poly, beta, beta);
    }
    return create(min_poly, lo, hi);
}

int NumberField::sign_of(const std::vector<BigInt>& n) const {
    if (static_cast<int>(n.size()) != degree_) throw StructuralError("coordinate vector has wrong length");
    if (degree_ == 1) return n[0] > 0 ? 1 : (n[0] < 0 ? -1 : 0);
    bool all_zero = true;
    for (const auto& x : n) all_zero = all_zero && x == 0;
    if (all_zero) return 0;

    auto bounds = [&](const std::vector<BigInt>& lp, const std::vector<BigInt>& hp) {
        BigInt low(0), high(0);
        for (int k = 0; k < degree_; ++k) {
            if (n[k] >= 0) {
                low += n[k] * lp[k];
                high += n[k] * hp[k];
            } else {
                low += n[k] * hp[k];
                high += n[k] * lp[k];
            }
        }
        return std::pair{low, high};
    };
    {
        auto [low, high] = bounds(lo_pow_scaled_, hi_pow_scaled_);
        if (low > 0) return 1;
        if (high < 0) return -1;
    }

    // Local refinement; the stored enclosure is left untouched.
    BigInt L = dy_lo_, H = dy_hi_;
    unsigned bits = dy_bits_;
    const int s_lo = sign_at_dyadic(min_poly_, L, bits);
    std::vector<BigInt> lp(degree_), hp(degree_);
    while (true) {
        const BigInt M = L + H;
        L <<= 1;
        H <<= 1;
        ++bits;
        if (sign_at_dyadic(min_poly_, M, bits) == s_lo)
            L = M;
        else
            H = M;
        for (int k = 0; k < degree_; ++k) {
            const BigInt shift = pow2(bits * static_cast<unsigned>(degree_ - 1 - k));
            lp[k] = mp::pow(L, static_cast<unsigned>(k)) * shift;
            hp[k] = mp::pow(H, static_cast<unsigned>(k)) * shift;
        }
        auto [low, high] = bounds(lp, hp);
        if (low > 0) return 1;
        if (high < 0) return -1;
    }
}

bool NumberField::same_as(const NumberField& other) const {
    if (this == &other) return true;
    return min_poly_ == other.min_poly_ && !(hi_ < other.lo_) && !(other.hi_ < lo_);
}

int NumberField::sign_of_small(const std::int64_t* n) const {
    if (degree_ == 1) return n[0] > 0 ? 1 : (n[0] < 0 ? -1 : 0);
    constexpr std::int64_t limit = std::int64_t(1) << 52;
    double low = 0, high = 0, scale = 0;
    bool exact_ints = true;
    for (int k = 0; k < degree_; ++k) {
        exact_ints = exact_ints && n[k] < limit && n[k] > -limit;
        const double x = static_cast<double>(n[k]);
        low += x * (x >= 0 ? lo_pow_d_[k] : hi_pow_d_[k]);
        high += x * (x >= 0 ? hi_pow_d_[k] : lo_pow_d_[k]);
        scale += std::abs(x) * hi_pow_d_[k];
    }
    if (exact_ints) {
        // Rounding in the 2d products and sums is below (2d + 2) u * scale;
        // the slack factor of 4 also covers rounding inside `slack` itself.
        const double slack = 4 * (2 * degree_ + 2) * 0x1p-53 * scale;
        if (low > slack) return 1;
        if (high < -slack) return -1;
    }
    std::vector<BigInt> big(n, n + degree_);
    return sign_of(big);
}

double NumberField::approximate_beta() const {
    return ((lo_ + hi_) / 2).convert_to<double>();
}

// ---- AlgebraicReal ---------------------------------------------------------

AlgebraicReal::AlgebraicReal(FieldPtr field, Vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (!field_) throw StructuralError("algebraic number without a field");
    if (coords_.size() != field_->degree()) throw StructuralError("coordinate vector has wrong length");
}

AlgebraicReal AlgebraicReal::zero(const FieldPtr& field) {
    return AlgebraicReal(field, Vector<Rational>::Zero(field->degree()));
}

AlgebraicReal AlgebraicReal::one(const FieldPtr& field) { return rational(field, Rational(1)); }

AlgebraicReal AlgebraicReal::rational(const FieldPtr& field, const Rational& q) {
    Vector<Rational> c = Vector<Rational>::Zero(field->degree());
    c(0) = q;
    return AlgebraicReal(field, std::move(c));
}

AlgebraicReal AlgebraicReal::beta(const FieldPtr& field) {
    if (field->degree() == 1) return rational(field, Rational(-field->min_poly().coeff(0)));
    Vector<Rational> c = Vector<Rational>::Zero(field->degree());
    c(1) = 1;
    return AlgebraicReal(field, std::move(c));
}

void AlgebraicReal::check_same_field(const AlgebraicReal& b) const {
    if (field_ != b.field_ && !field_->same_as(*b.field_))
        throw StructuralError("operands belong to different number fields");
}

bool AlgebraicReal::is_zero() const {
    for (Eigen::Index k = 0; k < coords_.size(); ++k)
        if (coords_(k) != 0) return false;
    return true;
}

int AlgebraicReal::sign() const {
    if (is_zero()) return 0;
    BigInt den(1);
    for (Eigen::Index k = 0; k < coords_.size(); ++k) den = mp::lcm(den, BigInt(mp::denominator(coords_(k))));
    std::vector<BigInt> n;
    n.reserve(coords_.size());
    for (Eigen::Index k = 0; k < coords_.size(); ++k)
        n.emplace_back(BigInt(mp::numerator(coords_(k))) * (den / BigInt(mp::denominator(coords_(k)))));
    return field_->sign_of(n);
}

AlgebraicReal AlgebraicReal::inverse() const {
    if (is_zero()) throw PreconditionError("inverse of zero");
    const int d = field_->degree();
    if (d == 1) return rational(field_, Rational(1) / coords_(0));
    std::vector<Rational> a(coords_.data(), coords_.data() + d);
    const RatPoly fr = cast<Rational>(field_->min_poly());
    auto [g, s] = gcdex(RatPoly(std::move(a)), fr);
    if (g.degree() != 0) throw StructuralError("element is a zero divisor; minimal polynomial not irreducible");
    const RatPoly r = divmod(s, fr).second;
    Vector<Rational> c = Vector<Rational>::Zero(d);
    for (int k = 0; k <= r.degree(); ++k) c(k) = r.coeff(k);
    return AlgebraicReal(field_, std::move(c));
}

double AlgebraicReal::approx() const {
    const double b = field_->approximate_beta();
    double acc = 0;
    for (Eigen::Index k = coords_.size() - 1; k >= 0; --k) acc = acc * b + coords_(k).convert_to<double>();
    if (field_->degree() == 1) return coords_(0).convert_to<double>();
    return acc;
}

std::string AlgebraicReal::str(const std::string& var) const {
    if (field_->degree() == 1) return coords_(0).str();
    std::vector<Rational> c(coords_.data(), coords_.data() + coords_.size());
    return to_string(RatPoly(std::move(c)), var);
}

std::vector<std::string> AlgebraicReal::coord_strings() const {
    std::vector<std::string> out;
    for (Eigen::Index k = 0; k < coords_.size(); ++k) out.push_back(coords_(k).str());
    return out;
}

AlgebraicReal AlgebraicReal::operator-() const { return AlgebraicReal(field_, -coords_); }

AlgebraicReal& AlgebraicReal::operator+=(const AlgebraicReal& b) {
    check_same_field(b);
    coords_ += b.coords_;
    return *this;
}

AlgebraicReal& AlgebraicReal::operator-=(const AlgebraicReal& b) {
    check_same_field(b);
    coords_ -= b.coords_;
    return *this;
}

AlgebraicReal operator*(const AlgebraicReal& a, const AlgebraicReal& b) {
    a.check_same_field(b);
    const int d = a.field_->degree();
    if (d == 1) return AlgebraicReal::rational(a.field_, a.coords_(0) * b.coords_(0));
    Vector<Rational> conv = Vector<Rational>::Zero(2 * d - 1);
    for (int i = 0; i < d; ++i) {
        if (a.coords_(i) == 0) continue;
        for (int j = 0; j < d; ++j) conv(i + j) += a.coords_(i) * b.coords_(j);
    }
    return AlgebraicReal(a.field_, a.field_->power_table() * conv);
}

AlgebraicReal& AlgebraicReal::operator*=(const AlgebraicReal& b) { return *this = *this * b; }
AlgebraicReal& AlgebraicReal::operator/=(const AlgebraicReal& b) { return *this = *this / b; }

AlgebraicReal operator+(AlgebraicReal a, const Rational& q) {
    a.coords_(0) += q;
    return a;
}

AlgebraicReal operator*(AlgebraicReal a, const Rational& q) {
    a.coords_ *= q;
    return a;
}

bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) {
    a.check_same_field(b);
    return a.coords_ == b.coords_;
}

std::strong_ordering operator<=>(const AlgebraicReal& a, const AlgebraicReal& b) {
    const int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

AlgebraicReal pow(const AlgebraicReal& a, int n) {
    if (n < 0) return pow(a.inverse(), -n);
    AlgebraicReal result = AlgebraicReal::one(a.field());
    AlgebraicReal base = a;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return result;
}

AlgebraicReal abs(const AlgebraicReal& a) { return a.sign() < 0 ? -a : a; }

bool coords_less(const Vector<Rational>& a, const Vector<Rational>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index k = 0; k < a.size(); ++k) {
        if (a(k) < b(k)) return true;
        if (b(k) < a(k)) return false;
    }
    return false;
}

bool CoordLess::operator()(const AlgebraicReal& a, const AlgebraicReal& b) const {
    return coords_less(a.coords(), b.coords());
}

namespace {

std::size_t hash_mpz(mpz_srcptr z) {
    std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) + 0x9e3779b97f4a7c15ULL;
    if (mpz_size(z) > 0) h ^= static_cast<std::size_t>(mpz_getlimbn(z, 0)) * 0xff51afd7ed558ccdULL;
    return h;
}

}  // namespace

std::size_t CoordHash::operator()(const AlgebraicReal& a) const {
    std::size_t h = 0;
    for (Eigen::Index k = 0; k < a.coords().size(); ++k) {
        const auto* q = a.coords()(k).backend().data();
        h = h * 31 + hash_mpz(mpq_numref(q));
        h = h * 31 + hash_mpz(mpq_denref(q));
    }
    return h;
}

// ---- Pisot test ------------------------------------------------------------

bool is_pisot(const FieldPtr& field) {
    const int d = field->degree();
    if (d == 1) return true;  // beta > 1 is a field invariant
    const IntPoly& p = field->min_poly();
    const AlgebraicReal beta = AlgebraicReal::beta(field);

    // Deflate: p(x) = (x - beta) q(x) over Q(beta).
    std::vector<AlgebraicReal> q(static_cast<std::size_t>(d), AlgebraicReal::zero(field));
    q[d - 1] = AlgebraicReal::one(field);
    for (int k = d - 1; k >= 1; --k) q[k - 1] = beta * q[k] + Rational(p.coeff(k));

    // Schur-Cohn: with |a_n| > |a_0|, f is stable iff (a_n f - a_0 f*) / x is.
    while (q.size() > 1) {
        const std::size_t n = q.size() - 1;
        const AlgebraicReal an = q[n], a0 = q[0];
        if ((an * an - a0 * a0).sign() <= 0) return false;
        std::vector<AlgebraicReal> g;
        g.reserve(n);
        for (std::size_t k = 0; k < n; ++k) g.push_back(an * q[k + 1] - a0 * q[n - k - 1]);
        q = std::move(g);
    }
    return true;
}

bool is_pisot(const IntPoly& min_poly, const Rational& lo, const Rational& hi) {
    if (min_poly.degree() < 1 || min_poly.leading() != 1)
        throw PreconditionError("is_pisot expects a monic polynomial");
    if (!is_irreducible(min_poly)) throw PreconditionError("polynomial " + to_string(min_poly) + " is reducible");
    if (min_poly.degree() == 1) return Rational(-min_poly.coeff(0)) > 1;
    const RatPoly fr = cast<Rational>(min_poly);
    const auto chain = sturm_chain(fr);
    if (count_roots(chain, lo, hi) != 1) throw PreconditionError("interval does not isolate a single root");
    if (hi <= 1) return false;
    if (lo < 1 && count_roots(chain, Rational(1), hi) != 1) return false;
    return is_pisot(NumberField::create(min_poly, lo, hi));
}

}  // namespace pisot
