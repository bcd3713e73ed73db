#include <catch2/catch_amalgamated.hpp>

#include "andcc/scalars.hpp"

using namespace andcc;

TEST_CASE("fraction strings parse and canonicalize") {
    CHECK(fraction_str(parse_fraction("4/6")) == "2/3");
    CHECK(fraction_str(parse_fraction("-3/9")) == "-1/3");
    CHECK(fraction_str(parse_fraction("7")) == "7");
    CHECK(fraction_str(parse_fraction("-0")) == "0");
    CHECK(fraction_str(parse_fraction("1/-2")) == "-1/2");
    CHECK(parse_fraction("2/4") == Rational(1, 2));
    CHECK_THROWS_AS(parse_fraction("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_fraction("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_fraction(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_fraction("1/2/3"), std::invalid_argument);
}

TEST_CASE("fraction round trip") {
    for (int num = -9; num <= 9; ++num) {
        for (int den = 1; den <= 7; ++den) {
            const Rational r(num, den);
            CHECK(parse_fraction(fraction_str(r)) == r);
        }
    }
}

TEST_CASE("prime field arithmetic") {
    Fp::set_modulus(7);
    CHECK(Fp(3) + Fp(5) == Fp(1));
    CHECK(Fp(3) * Fp(5) == Fp(1));
    CHECK(Fp(3).inverse() == Fp(5));
    CHECK(Fp(-1) == Fp(6));
    CHECK(Fp(1) / Fp(3) == Fp(5));
    CHECK(-Fp(2) == Fp(5));
    CHECK(Fp(0) - Fp(1) == Fp(6));
    CHECK_THROWS_AS(Fp(1) / Fp(0), std::domain_error);
    CHECK_THROWS_AS(Fp::set_modulus(6), std::invalid_argument);

    // every nonzero element has a working inverse
    for (long long v = 1; v < 7; ++v) CHECK(Fp(v) * Fp(v).inverse() == Fp(1));
}

TEST_CASE("rationals reduce into the prime field") {
    Fp::set_modulus(7);
    CHECK(to_fp(Rational(1, 2)) == Fp(4));  // 2*4 = 8 = 1 mod 7
    CHECK(to_fp(Rational(10, 3)) == Fp(10) / Fp(3));
    CHECK_THROWS_AS(to_fp(Rational(1, 7)), std::domain_error);
}
