#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fzeta {

// GMP-backed exact types: interval geometry is dominated by rational comparisons.
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Complex = std::complex<double>;

/// Extended-precision complex type (50 significant digits).
using ExtendedComplex = boost::multiprecision::cpp_complex_50;
using ExtendedReal = boost::multiprecision::cpp_bin_float_50;

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value violates a documented invariant of a domain type.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A function is evaluated outside the set where it is defined.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A theorem's hypotheses do not hold for the given inputs.
class HypothesisError : public Error {
public:
    using Error::Error;
};

class PoleProximityError : public Error {
public:
    PoleProximityError(const std::string& what, Complex nearest)
        : Error(what), nearest_pole_(nearest) {}

    Complex nearest_pole() const noexcept { return nearest_pole_; }

private:
    Complex nearest_pole_;
};

// ---------------------------------------------------------------------------
// Rationals

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Always "num/den", including integers ("1/1").
inline std::string to_string(const Rational& r)
{
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "num/den" or an integer. Decimal notation is rejected.
inline Rational parse_rational(std::string_view text)
{
    auto is_integer = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto strip_plus = [](std::string_view s) {
        return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer(text))
            throw InvalidArgument("not an exact rational: \"" + std::string(text) + "\" (use num/den)");
        return Rational(BigInt(strip_plus(text)));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_integer(num) || !is_integer(den))
        throw InvalidArgument("not an exact rational: \"" + std::string(text) + "\" (use num/den)");
    const BigInt d(strip_plus(den));
    if (d == 0) throw InvalidArgument("zero denominator in \"" + std::string(text) + "\"");
    return Rational(BigInt(strip_plus(num)), d);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(const BigInt& v) { return v.convert_to<double>(); }

/// Natural log of a positive big integer without overflowing double.
inline double log_of(const BigInt& v)
{
    if (v <= 0) throw DomainError("log of a non-positive integer");
    const auto bits = msb(v);
    if (bits < 1000) return std::log(v.convert_to<double>());
    const unsigned shift = static_cast<unsigned>(bits) - 60;
    const BigInt top = v >> shift;
    return std::log(top.convert_to<double>()) + shift * std::numbers::ln2;
}

/// Natural log of a positive rational, accurate for tiny values like 3^-500.
inline double log_of(const Rational& r)
{
    if (r <= 0) throw DomainError("log of a non-positive rational");
    return log_of(numerator(r)) - log_of(denominator(r));
}

inline Rational pow(const Rational& base, unsigned exponent)
{
    Rational result = 1;
    Rational b = base;
    while (exponent) {
        if (exponent & 1u) result *= b;
        b *= b;
        exponent >>= 1;
    }
    return result;
}

inline BigInt pow(const BigInt& base, unsigned exponent)
{
    return boost::multiprecision::pow(base, exponent);
}

// ---------------------------------------------------------------------------
// Scalar traits for the double / extended-precision evaluation paths.

template <class C>
struct ComplexTraits;

template <>
struct ComplexTraits<Complex> {
    using Real = double;
    static Real from_rational(const Rational& r) { return to_double(r); }
    static Real log_rational(const Rational& r) { return log_of(r); }
    static Real log_integer(const BigInt& v) { return log_of(v); }
    static Real pi() { return std::numbers::pi; }
};

template <>
struct ComplexTraits<ExtendedComplex> {
    using Real = ExtendedReal;
    static Real from_rational(const Rational& r)
    {
        return Real(numerator(r)) / Real(denominator(r));
    }
    static Real log_rational(const Rational& r)
    {
        return log(Real(numerator(r))) - log(Real(denominator(r)));
    }
    static Real log_integer(const BigInt& v) { return log(Real(v)); }
    static Real pi() { return boost::math::constants::pi<Real>(); }
};

template <class C>
using RealOf = typename ComplexTraits<C>::Real;

inline Complex to_complex(const ExtendedComplex& z)
{
    return {real(z).convert_to<double>(), imag(z).convert_to<double>()};
}

inline ExtendedComplex to_extended(const Complex& z)
{
    return ExtendedComplex(ExtendedReal(z.real()), ExtendedReal(z.imag()));
}

} // namespace fzeta
