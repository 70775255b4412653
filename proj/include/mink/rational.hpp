#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "mink/errors.hpp"

namespace mink {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Safe construction with arbitrary-sign denominator (the two-int cpp_rational
// constructor rejects negative denominators).
Rational make_rational(long long num, long long den = 1);

int sign(const Rational& r);

// "p" or "p/q" with q > 0, reduced. Rejects anything else.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

// Exact complex scalar: rational real and imaginary parts. The value type of
// every tensor component and field coefficient in this library.
struct ComplexRational {
    Rational re;
    Rational im;

    ComplexRational() = default;
    ComplexRational(Rational real) : re(std::move(real)) {}
    ComplexRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}
    ComplexRational(long long n) : re(n) {}

    static ComplexRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    ComplexRational conj() const { return {re, -im}; }

    ComplexRational& operator+=(const ComplexRational& o);
    ComplexRational& operator-=(const ComplexRational& o);
    ComplexRational& operator*=(const ComplexRational& o);
    ComplexRational& operator/=(const ComplexRational& o); // throws DomainError on zero divisor

    friend bool operator==(const ComplexRational&, const ComplexRational&) = default;
};

ComplexRational operator+(ComplexRational a, const ComplexRational& b);
ComplexRational operator-(ComplexRational a, const ComplexRational& b);
ComplexRational operator*(ComplexRational a, const ComplexRational& b);
ComplexRational operator/(ComplexRational a, const ComplexRational& b);
ComplexRational operator-(const ComplexRational& a);

// Canonical text: "p/q" when imag = 0, else "p/q+r/s*i" / "p/q-r/s*i" with the
// real part always present; integer parts drop the "/1". parse_complex is more
// lenient on input: it also takes "r/s*i", "i", "-i", "1+i".
ComplexRational parse_complex(std::string_view text);
std::string to_string(const ComplexRational& z);

} // namespace mink
