#include <catch2/catch_amalgamated.hpp>

#include "andcc/random.hpp"
#include "andcc/simplex.hpp"

using namespace andcc;

namespace {

void check_certificates(const RationalMat& a, const RationalVec& b, const RationalVec& c,
                        const SimplexResult& r) {
    REQUIRE(r.status == LpStatus::Optimal);
    for (Eigen::Index j = 0; j < c.size(); ++j) CHECK(r.x(j) >= 0);
    for (Eigen::Index i = 0; i < b.size(); ++i) CHECK(r.y(i) >= 0);
    const RationalVec slack = b - a * r.x;
    for (Eigen::Index i = 0; i < b.size(); ++i) CHECK(slack(i) >= 0);
    const RationalVec reduced = a.transpose() * r.y - c;
    for (Eigen::Index j = 0; j < c.size(); ++j) CHECK(reduced(j) >= 0);
    CHECK(c.dot(r.x) == r.value);
    CHECK(b.dot(r.y) == r.value);
}

}  // namespace

TEST_CASE("box maximum") {
    RationalMat a = RationalMat::Identity(2, 2);
    RationalVec b = RationalVec::Constant(2, 1);
    RationalVec c = RationalVec::Constant(2, 1);
    const auto r = simplex_max(a, b, c);
    CHECK(r.value == 2);
    CHECK(r.x(0) == 1);
    CHECK(r.x(1) == 1);
    check_certificates(a, b, c, r);
}

TEST_CASE("two constraints") {
    RationalMat a(2, 2);
    a << 1, 1, 1, 0;
    RationalVec b(2);
    b << 4, 2;
    RationalVec c(2);
    c << 3, 2;
    const auto r = simplex_max(a, b, c);
    CHECK(r.value == 10);  // x = (2, 2)
    CHECK(r.x(0) == 2);
    CHECK(r.x(1) == 2);
    check_certificates(a, b, c, r);
}

TEST_CASE("unbounded detection") {
    RationalMat a(1, 1);
    a << -1;
    RationalVec b(1);
    b << 1;
    RationalVec c(1);
    c << 1;
    CHECK(simplex_max(a, b, c).status == LpStatus::Unbounded);
}

TEST_CASE("empty shapes") {
    CHECK(simplex_max(RationalMat::Zero(0, 0), RationalVec(0), RationalVec(0)).value == 0);
    // no constraints but a profitable column: unbounded
    CHECK(simplex_max(RationalMat::Zero(0, 1), RationalVec(0), RationalVec::Constant(1, 1)).status ==
          LpStatus::Unbounded);
    // constraints but no variables: optimal at zero
    CHECK(simplex_max(RationalMat::Zero(2, 0), RationalVec::Constant(2, 1), RationalVec(0)).value == 0);
}

TEST_CASE("negative rhs is rejected") {
    RationalMat a(1, 1);
    a << 1;
    RationalVec b(1);
    b << -1;
    CHECK_THROWS_AS(simplex_max(a, b, RationalVec::Constant(1, 1)), std::invalid_argument);
}

// Beale's classic degenerate program makes Dantzig's rule cycle; Bland's
// rule must terminate at the optimum 1/20.
TEST_CASE("Beale cycling example terminates at the optimum") {
    RationalMat a(3, 4);
    a << Rational(1, 4), -60, Rational(-1, 25), 9,
         Rational(1, 2), -90, Rational(-1, 50), 3,
         0, 0, 1, 0;
    RationalVec b(3);
    b << 0, 0, 1;
    RationalVec c(4);
    c << Rational(3, 4), -150, Rational(1, 50), -6;
    const auto r = simplex_max(a, b, c);
    CHECK(r.value == Rational(1, 20));
    check_certificates(a, b, c, r);
}

TEST_CASE("random covering-shaped programs have consistent certificates") {
    Rng rng(13);
    for (int t = 0; t < 100; ++t) {
        const int m = rng.range(1, 6), n = rng.range(1, 8);
        RationalMat a(m, n);
        bool any = false;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) {
                a(i, j) = rng.chance(50) ? 1 : 0;
                any = any || a(i, j) == 1;
            }
        // make every column constrained so the program is bounded
        for (int j = 0; j < n; ++j) {
            bool hit = false;
            for (int i = 0; i < m; ++i) hit = hit || a(i, j) == 1;
            if (!hit) a(rng.range(0, m - 1), j) = 1;
        }
        const RationalVec b = RationalVec::Constant(m, 1);
        const RationalVec c = RationalVec::Constant(n, 1);
        const auto r = simplex_max(a, b, c);
        check_certificates(a, b, c, r);
        (void)any;
    }
}
