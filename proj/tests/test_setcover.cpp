#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <bit>
#include <optional>
#include <vector>

#include "andcc/random.hpp"
#include "andcc/setcover.hpp"

using namespace andcc;

namespace {

const GroundSetPtr ab = make_ground({"a", "b"});
BoolFun fun(const std::string& bits) { return BoolFun::from_bitstring(ab, bits); }

// Independent oracle: minimum subset whose conjunction equals the target,
// by exhaustive subset enumeration straight from the definition.
std::optional<int> brute_size(const AndInstance& inst) {
    const int r = static_cast<int>(inst.family.size());
    std::optional<int> best;
    for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
        BoolFun c = BoolFun::constant(inst.target.ground(), true);
        for (int i = 0; i < r; ++i)
            if (mask & (1u << i)) c = conj(c, inst.family[i]);
        if (c == inst.target) {
            const int size = std::popcount(mask);
            if (!best || size < *best) best = size;
        }
    }
    return best;
}

std::vector<int> brute_lex_witness(const AndInstance& inst, int best) {
    const int r = static_cast<int>(inst.family.size());
    std::optional<std::vector<int>> lex;
    for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
        if (std::popcount(mask) != best) continue;
        BoolFun c = BoolFun::constant(inst.target.ground(), true);
        std::vector<int> members;
        for (int i = 0; i < r; ++i)
            if (mask & (1u << i)) {
                c = conj(c, inst.family[i]);
                members.push_back(i);
            }
        if (c == inst.target && (!lex || members < *lex)) lex = members;
    }
    REQUIRE(lex.has_value());
    return *lex;
}

}  // namespace

TEST_CASE("build_program on the demand-exact instance") {
    const AndInstance inst(fun("00"), {fun("01"), fun("10")});
    const CoverProgram prog = build_program(inst);
    CHECK(prog.admissible == std::vector<int>{0, 1});
    CHECK(prog.universe == std::vector<int>{0, 1});
    CHECK(prog.coverage == std::vector<std::vector<int>>{{0}, {1}});
}

TEST_CASE("build_program with the target in the family") {
    const AndInstance inst(fun("01"), {fun("01")});
    const CoverProgram prog = build_program(inst);
    CHECK(prog.universe == std::vector<int>{0});
    CHECK(prog.coverage == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("build_program with nothing to cover") {
    const AndInstance inst(fun("11"), {fun("01"), fun("11")});
    const CoverProgram prog = build_program(inst);
    CHECK(prog.universe.empty());
    CHECK(prog.admissible == std::vector<int>{1});  // (0,1) is not above (1,1)
}

TEST_CASE("exact_size examples") {
    CHECK(*exact_size(AndInstance(fun("00"), {fun("01"), fun("10")})).value == 2);
    CHECK(*exact_size(AndInstance(fun("01"), {fun("01")})).value == 1);

    const GroundSetPtr a1 = make_ground({"a"});
    const AndInstance infeasible(BoolFun::from_bitstring(a1, "0"),
                                 {BoolFun::from_bitstring(a1, "1")});
    CHECK(exact_size(infeasible).infinite());
    CHECK(exact_size(infeasible).witness.empty());
}

TEST_CASE("exact_size matches brute force and picks the lex-smallest witness") {
    Rng rng(7);
    for (int t = 0; t < 150; ++t) {
        const AndInstance inst = random_instance(rng, 10, 8);
        const SizeResult got = exact_size(inst);
        const auto expected = brute_size(inst);
        REQUIRE(got.value.has_value() == expected.has_value());
        if (!expected) continue;
        CHECK(*got.value == *expected);
        CHECK(got.witness == brute_lex_witness(inst, *expected));
        BoolFun c = BoolFun::constant(inst.target.ground(), true);
        for (int i : got.witness) c = conj(c, inst.family[i]);
        CHECK(c == inst.target);
    }
}

TEST_CASE("lp_bound on the demand-exact instance") {
    const auto lp = lp_bound(build_program(AndInstance(fun("00"), {fun("01"), fun("10")})));
    REQUIRE(!lp.infinite());
    CHECK(*lp.value == 2);
    CHECK(lp.dual == std::vector<Rational>{1, 1});
    CHECK(lp.primal == std::vector<Rational>{1, 1});
}

TEST_CASE("lp_bound degenerate cases") {
    const auto empty = lp_bound(build_program(AndInstance(fun("11"), {fun("01")})));
    REQUIRE(!empty.infinite());
    CHECK(*empty.value == 0);

    const GroundSetPtr a1 = make_ground({"a"});
    const auto inf = lp_bound(build_program(
        AndInstance(BoolFun::from_bitstring(a1, "0"), {BoolFun::from_bitstring(a1, "1")})));
    CHECK(inf.infinite());
}

TEST_CASE("demanders") {
    const CoverProgram demand = build_program(AndInstance(fun("00"), {fun("01"), fun("10")}));
    CHECK(demanders(demand) == std::vector<std::vector<int>>{{0}, {1}});

    // identical members demand nothing
    const CoverProgram twins = build_program(AndInstance(fun("00"), {fun("01"), fun("01")}));
    CHECK(demanders(twins) == std::vector<std::vector<int>>{{}, {}});

    // a single member is demanded wherever it vanishes on the universe
    const CoverProgram solo = build_program(AndInstance(fun("00"), {fun("01")}));
    CHECK(demanders(solo) == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("exactness certificate") {
    const auto cert = exactness_certificate(build_program(AndInstance(fun("00"), {fun("01"), fun("10")})));
    REQUIRE(cert.has_value());
    CHECK(cert->value == 2);
    CHECK(cert->alpha == std::vector<Rational>{1, 1});

    // a redundant member (the conjunction of the others) kills all demands on it
    const auto redundant =
        exactness_certificate(build_program(AndInstance(fun("00"), {fun("01"), fun("10"), fun("00")})));
    CHECK(!redundant.has_value());

    const auto solo = exactness_certificate(build_program(AndInstance(fun("00"), {fun("00")})));
    REQUIRE(solo.has_value());
    CHECK(solo->value == 1);

    // demanders exist but the cover is infeasible: no certificate
    const GroundSetPtr abc = make_ground({"a", "b", "c"});
    const auto uncoverable = exactness_certificate(
        build_program(AndInstance(BoolFun::from_bitstring(abc, "000"),
                                  {BoolFun::from_bitstring(abc, "011")})));
    CHECK(!uncoverable.has_value());
}

TEST_CASE("literal family examples") {
    const GroundSetPtr pts = cube_points_ground(2);
    const auto x1_and_x2 =
        literal_size(2, conj(literal_fun(pts, 0, true), literal_fun(pts, 1, true)));
    CHECK(*x1_and_x2.size.value == 2);
    CHECK(*x1_and_x2.lp.value == 2);
    CHECK(x1_and_x2.names == std::vector<std::string>{"x1", "x2"});

    const auto just_x1 = literal_size(2, literal_fun(pts, 0, true));
    CHECK(*just_x1.size.value == 1);
    CHECK(*just_x1.lp.value == 1);

    // XOR is not a conjunction of literals
    const BoolFun xor2 = BoolFun::from_bitstring(pts, "0110");
    const auto xr = literal_size(2, xor2);
    CHECK(xr.size.infinite());
    CHECK(xr.lp.infinite());
    CHECK(xr.leftover.empty());

    // constant 0: all four literals remain but one complementary pair suffices
    const auto zero = literal_size(2, BoolFun::constant(pts, false));
    CHECK(zero.leftover.size() == 4);
    CHECK(*zero.size.value == 2);
    CHECK(*zero.lp.value == 2);

    // constant 1: the empty conjunction
    const auto one = literal_size(2, BoolFun::constant(pts, true));
    CHECK(one.leftover.empty());
    CHECK(*one.size.value == 0);
    CHECK(*one.lp.value == 0);

    CHECK_THROWS_AS(literal_size(5, BoolFun::constant(cube_points_ground(5), false)),
                    std::invalid_argument);
}

TEST_CASE("lp never exceeds ilp and duality is strong") {
    Rng rng(21);
    for (int t = 0; t < 100; ++t) {
        const AndInstance inst = random_instance(rng, 9, 7);
        const CoverProgram prog = build_program(inst);
        const SizeResult size = exact_size(inst);
        const LpResult lp = lp_bound(prog);
        REQUIRE(size.infinite() == lp.infinite());
        if (lp.infinite()) continue;
        CHECK(Rational(*size.value) >= *lp.value);
        Rational psum = 0, dsum = 0;
        for (const auto& v : lp.primal) psum += v;
        for (const auto& v : lp.dual) dsum += v;
        CHECK(psum == *lp.value);
        CHECK(dsum == *lp.value);
    }
}
