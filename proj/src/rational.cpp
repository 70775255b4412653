#include "mink/rational.hpp"

#include <cctype>

namespace mink {

Rational make_rational(long long num, long long den) {
    if (den == 0)
        throw DomainError("rational with zero denominator");
    return Rational(num) / Rational(den);
}

int sign(const Rational& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

[[noreturn]] void bad(std::string_view text) {
    throw ValidationError("not a rational: '" + std::string(text) + "'");
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    std::string_view orig = s;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string_view num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        bad(orig);
    if (BigInt(std::string(den)) == 0)
        bad(orig);
    Rational r = Rational(BigInt(std::string(num))) / Rational(BigInt(std::string(den)));
    return negative ? -r : r;
}

std::string to_string(const Rational& r) {
    std::string out = numerator(r).str();
    if (denominator(r) != 1)
        out += "/" + denominator(r).str();
    return out;
}

ComplexRational& ComplexRational::operator+=(const ComplexRational& o) {
    re += o.re;
    im += o.im;
    return *this;
}

ComplexRational& ComplexRational::operator-=(const ComplexRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

ComplexRational& ComplexRational::operator*=(const ComplexRational& o) {
    Rational new_re = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(new_re);
    return *this;
}

ComplexRational& ComplexRational::operator/=(const ComplexRational& o) {
    if (o.is_zero())
        throw DomainError("complex division by zero");
    Rational n = o.re * o.re + o.im * o.im;
    Rational new_re = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = std::move(new_re);
    return *this;
}

ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }

ComplexRational parse_complex(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty())
        throw ValidationError("empty complex literal");
    if (s.back() != 'i')
        return ComplexRational(parse_rational(s));

    std::string_view body = s.substr(0, s.size() - 1);
    // Split off the real part: the last top-level '+'/'-' that is not the
    // leading sign. Denominators are unsigned, so any later sign separates.
    size_t split = std::string_view::npos;
    for (size_t p = body.size(); p-- > 1;) {
        if (body[p] == '+' || body[p] == '-') {
            split = p;
            break;
        }
    }
    std::string_view real_part, imag_part = body;
    if (split != std::string_view::npos) {
        real_part = body.substr(0, split);
        imag_part = body.substr(split); // keeps the sign
    }

    Rational re = real_part.empty() ? Rational(0) : parse_rational(real_part);

    // imag_part is "", "+", "-", "c*" or "±c*" with c a rational literal.
    Rational im;
    std::string_view ip = trim(imag_part);
    if (ip.empty() || ip == "+") {
        im = 1;
    } else if (ip == "-") {
        im = -1;
    } else {
        if (ip.back() != '*')
            throw ValidationError("not a complex literal: '" + std::string(text) + "'");
        im = parse_rational(ip.substr(0, ip.size() - 1));
    }
    return {re, im};
}

std::string to_string(const ComplexRational& z) {
    if (z.im == 0)
        return to_string(z.re);
    std::string imag = to_string(z.im < 0 ? Rational(-z.im) : z.im) + "*i";
    return to_string(z.re) + (z.im < 0 ? "-" : "+") + imag;
}

} // namespace mink
