#include "stforms/rational.hpp"
#include "stforms/rng.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace stforms;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    CHECK(Rational(BigInt(2), BigInt(4)) == Rational(BigInt(1), BigInt(2)));
    CHECK(Rational(BigInt(3), BigInt(-6)) == Rational(BigInt(-1), BigInt(2)));
    CHECK(Rational(BigInt(0), BigInt(-7)).den() == 1);
    CHECK(Rational(BigInt(-4), BigInt(-2)) == Rational(2));
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
    const Rational a(BigInt(1), BigInt(3));
    const Rational b(BigInt(1), BigInt(6));
    CHECK(a + b == Rational(BigInt(1), BigInt(2)));
    CHECK(a - b == b);
    CHECK(a * b == Rational(BigInt(1), BigInt(18)));
    CHECK(a / b == Rational(2));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK(-a == Rational(BigInt(-1), BigInt(3)));
    CHECK(a < Rational(BigInt(1), BigInt(2)));
    CHECK(Rational(BigInt(-3), BigInt(2)) < Rational(-1));
}

TEST_CASE("serialization round-trips, den 1 is shortened") {
    CHECK(Rational(BigInt(3), BigInt(5)).str() == "3/5");
    CHECK(Rational(-1).str() == "-1");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational::parse("3/5") == Rational(BigInt(3), BigInt(5)));
    CHECK(Rational::parse("-1/1") == Rational(-1));
    CHECK(Rational::parse("-1") == Rational(-1));
    CHECK(Rational::parse("6/4") == Rational(BigInt(3), BigInt(2)));
    CHECK_THROWS_AS(Rational::parse("1/x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
}

TEST_CASE("field identities hold on random values") {
    Rng rng(2024);
    for (int i = 0; i < 200; ++i) {
        const Rational a = rng.rational(50, 20);
        const Rational b = rng.rational(50, 20);
        const Rational c = rng.rational(50, 20);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
        CHECK(Rational::parse(a.str()) == a);
    }
}
