#ifndef PISOT_CORE_HPP
#define PISOT_CORE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace pisot {

namespace mp = boost::multiprecision;

// Expression templates are disabled so the scalars behave as plain values
// inside Eigen expressions.
using BigInt = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<BigInt>;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands that cannot be combined (elements of different number fields,
/// matrices of mismatched shape, ...).
class StructuralError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An input rejected by one of the admission gates (primitivity, Pisot).
class GateFailure : public Error {
public:
    using Error::Error;
};

/// A configured resource cap was exhausted. Carries the cap's name and value
/// so callers can report which knob to turn.
class CapExceeded : public Error {
public:
    CapExceeded(std::string cap_name, std::size_t cap_value, const std::string& what)
        : Error(what + " (cap " + cap_name + " = " + std::to_string(cap_value) + ")"),
          cap_name_(std::move(cap_name)), cap_value_(cap_value) {}

    const std::string& cap_name() const { return cap_name_; }
    std::size_t cap_value() const { return cap_value_; }

private:
    std::string cap_name_;
    std::size_t cap_value_;
};

inline Rational parse_rational(const std::string& text) {
    Rational q;
    try {
        q = Rational(text);
    } catch (const std::exception&) {
        throw PreconditionError("not a rational number: '" + text + "'");
    }
    if (mpz_sgn(mpq_denref(q.backend().data())) == 0) throw PreconditionError("zero denominator: '" + text + "'");
    // the string constructor does not reduce "4/2"
    mpq_canonicalize(q.backend().data());
    return q;
}

inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const BigInt& z) { return z.str(); }

}  // namespace pisot

#endif
