#include <catch2/catch_amalgamated.hpp>

#include "andcc/linalg.hpp"

using namespace andcc;

TEST_CASE("rank over the rationals") {
    CHECK(rank_of<Rational>(RationalMat::Identity(3, 3)) == 3);
    CHECK(rank_of<Rational>(RationalMat::Zero(4, 2)) == 0);
    CHECK(rank_of<Rational>(RationalMat::Zero(0, 5)) == 0);

    RationalMat a(2, 2);
    a << 1, 2, 2, 4;
    CHECK(rank_of(a) == 1);

    RationalMat b(2, 2);
    b << 1, 1, 1, -1;
    CHECK(rank_of(b) == 2);

    // second row is half the first
    RationalMat c(2, 2);
    c << Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 6);
    CHECK(rank_of(c) == 1);
}

TEST_CASE("rank depends on the characteristic") {
    Fp::set_modulus(2);
    Mat<Fp> b(2, 2);
    b << Fp(1), Fp(1), Fp(1), Fp(-1);
    CHECK(rank_of(b) == 1);  // over Q this matrix has rank 2

    Fp::set_modulus(3);
    Mat<Fp> c(2, 2);
    c << Fp(1), Fp(1), Fp(1), Fp(-1);
    CHECK(rank_of(c) == 2);
}

TEST_CASE("rank is invariant under row scaling and permutation") {
    RationalMat m(3, 4);
    m << 1, 2, 3, 4, 0, 1, 1, 0, 1, 3, 4, 4;  // row3 = row1 + row2
    CHECK(rank_of(m) == 2);
    m.row(1) *= Rational(7, 3);
    CHECK(rank_of(m) == 2);
    m.row(0).swap(m.row(2));
    CHECK(rank_of(m) == 2);
}

TEST_CASE("kronecker product") {
    RationalMat a(1, 2);
    a << 2, 3;
    RationalMat b(2, 1);
    b << 5, 7;
    const RationalMat k = kron(a, b);
    REQUIRE(k.rows() == 2);
    REQUIRE(k.cols() == 2);
    CHECK(k(0, 0) == 10);
    CHECK(k(1, 0) == 14);
    CHECK(k(0, 1) == 15);
    CHECK(k(1, 1) == 21);

    CHECK(is_zero_matrix<Rational>(kron<Rational>(RationalMat::Zero(2, 2), b)));
    CHECK(!is_zero_matrix(k));
}
