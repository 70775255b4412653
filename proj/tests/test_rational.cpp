#include "doctest.h"

#include "mink/generators.hpp"
#include "mink/rational.hpp"

using namespace mink;

TEST_CASE("make_rational normalizes sign and reduces") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(make_rational(5, -10) == make_rational(-1, 2));
    CHECK(make_rational(-6, -4) == make_rational(3, 2));
    CHECK(make_rational(0, 7) == 0);
    CHECK_THROWS_AS(make_rational(1, 0), DomainError);
}

TEST_CASE("rational text form") {
    CHECK(to_string(make_rational(-1, 2)) == "-1/2");
    CHECK(to_string(make_rational(5)) == "5");
    CHECK(to_string(Rational(0)) == "0");

    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-4/8") == make_rational(-1, 2));
    CHECK(parse_rational("+7/3") == make_rational(7, 3));
    CHECK(parse_rational(" 7/3 ") == make_rational(7, 3));

    CHECK_THROWS_AS(parse_rational(""), ValidationError);
    CHECK_THROWS_AS(parse_rational("abc"), ValidationError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ValidationError);
    CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
    CHECK_THROWS_AS(parse_rational("2.5"), ValidationError);
    CHECK_THROWS_AS(parse_rational("1/"), ValidationError);
}

TEST_CASE("complex arithmetic is exact") {
    ComplexRational a{Rational(1), Rational(2)};
    ComplexRational b{Rational(3), Rational(-1)};
    CHECK(a * b == ComplexRational{Rational(5), Rational(5)});
    CHECK(a * b / b == a);
    CHECK(a + b - b == a);
    CHECK(ComplexRational::i() * ComplexRational::i() == ComplexRational(-1));
    CHECK(a.conj() == ComplexRational{Rational(1), Rational(-2)});
    CHECK(a.conj().conj() == a);
    CHECK((a - a).is_zero());
    CHECK(ComplexRational(7).is_real());
    CHECK(!a.is_real());
    CHECK_THROWS_AS(a / ComplexRational(0), DomainError);
}

TEST_CASE("complex text form") {
    CHECK(to_string(ComplexRational::i()) == "0+1*i");
    CHECK(to_string(ComplexRational{make_rational(1, 2), make_rational(-1, 3)}) == "1/2-1/3*i");
    CHECK(to_string(ComplexRational(-1)) == "-1");
    CHECK(to_string(ComplexRational(0)) == "0");

    CHECK(parse_complex("1/2-1/3*i") ==
          ComplexRational{make_rational(1, 2), make_rational(-1, 3)});
    CHECK(parse_complex("0+1*i") == ComplexRational::i());
    CHECK(parse_complex("i") == ComplexRational::i());
    CHECK(parse_complex("-i") == -ComplexRational::i());
    CHECK(parse_complex("3*i") == ComplexRational{Rational(0), Rational(3)});
    CHECK(parse_complex("-2/5*i") == ComplexRational{Rational(0), make_rational(-2, 5)});
    CHECK(parse_complex("1+i") == ComplexRational{Rational(1), Rational(1)});
    CHECK(parse_complex("2-i") == ComplexRational{Rational(2), Rational(-1)});
    CHECK(parse_complex("-7") == ComplexRational(-7));

    CHECK_THROWS_AS(parse_complex(""), ValidationError);
    CHECK_THROWS_AS(parse_complex("1i"), ValidationError);
    CHECK_THROWS_AS(parse_complex("i*i"), ValidationError);
    CHECK_THROWS_AS(parse_complex("1+*i"), ValidationError);
    CHECK_THROWS_AS(parse_complex("1/0*i"), ValidationError);
}

TEST_CASE("complex text round-trips") {
    RandomSource rnd(20240817);
    for (int n = 0; n < 200; ++n) {
        ComplexRational z = rnd.complex();
        CHECK(parse_complex(to_string(z)) == z);
    }
}
