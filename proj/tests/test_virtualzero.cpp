#include <catch2/catch_amalgamated.hpp>

#include "andcc/cohomology.hpp"
#include "andcc/random.hpp"
#include "andcc/virtualzero.hpp"

using namespace andcc;

namespace {

VertexBits bits_of(int n, std::initializer_list<int> members) {
    VertexBits b(n);
    for (int v : members) b.set(v);
    return b;
}

}  // namespace

TEST_CASE("forced dimensions") {
    Rng rng(103);
    const DagPtr dag = random_dag(rng, 3, 7);
    const auto g = random_presheaf<Rational>(rng, dag, 3);
    const OpenSet u = random_open(rng, *dag);
    const ClosedSet z = random_closed(rng, *dag);
    const auto dims = forced_dims(g, u, z);
    for (int v = 0; v < dag->vertex_count(); ++v) {
        const int expected = (u.members.test(v) || z.members.test(v)) ? g.dim(v) : 0;
        CHECK(dims[v] == expected);
        // the four-term count: dim G_U + dim G_Z - dim G_{U n Z}
        const int gu = u.members.test(v) ? g.dim(v) : 0;
        const int gz = z.members.test(v) ? g.dim(v) : 0;
        const int guz = (u.members.test(v) && z.members.test(v)) ? g.dim(v) : 0;
        CHECK(dims[v] == gu + gz - guz);
    }
}

TEST_CASE("construction special cases") {
    Rng rng(107);
    const DagPtr dag = random_dag(rng, 3, 7);
    const auto g = random_presheaf<Rational>(rng, dag, 3);

    // Z the complement of U: H is G itself
    const OpenSet u = random_open(rng, *dag);
    const ClosedSet z_comp = complement(u);
    const auto w1 = construct_vze(g, u, z_comp);
    CHECK(w1.H == g);
    CHECK(check_vze(w1));

    // U empty: H is G_Z
    const OpenSet empty = OpenSet::unchecked(VertexBits(dag->vertex_count()));
    const ClosedSet z = random_closed(rng, *dag);
    const auto w2 = construct_vze(g, empty, z);
    CHECK(w2.H == extend_by_zero(g, z.members));
    CHECK(check_vze(w2));
}

TEST_CASE("random witnesses validate") {
    Rng rng(109);
    for (int t = 0; t < 100; ++t) {
        const DagPtr dag = random_dag(rng, 2, 8);
        const auto g = random_presheaf<Rational>(rng, dag, 3);
        const OpenSet u = random_open(rng, *dag);
        const ClosedSet z = random_closed(rng, *dag);
        const auto w = construct_vze(g, u, z);
        const auto why = vze_violation(w);
        if (why) FAIL("unexpected violation: " << *why);
        CHECK(forced_dims(g, u, z) == w.H.dims());
    }
}

TEST_CASE("broken witnesses are rejected with a locus") {
    // concrete two-vertex setup: edge u -> v, U = {u}, Z = {u, v}
    const DagPtr dag = make_dag(2, {{0, 1}});
    std::vector<Mat<Rational>> maps{RationalMat::Constant(1, 1, 2)};
    const Presheaf<Rational> g(dag, {1, 1}, maps);
    const OpenSet u(*dag, bits_of(2, {0}));
    const ClosedSet z(*dag, bits_of(2, {0, 1}));

    const auto good = construct_vze(g, u, z);
    REQUIRE(check_vze(good));

    // zero out delta: the audit reports a vertex locus (the square that no
    // longer anticommutes, or lost surjectivity onto G_Z)
    auto broken_delta = good;
    std::vector<Mat<Rational>> zero_comps(2);
    for (int v = 0; v < 2; ++v)
        zero_comps[v] = RationalMat::Zero(good.delta.at(v).rows(), good.delta.at(v).cols());
    broken_delta.delta =
        NatTrans<Rational>::unchecked(good.delta.source(), good.delta.target(), zero_comps);
    const auto why1 = vze_violation(broken_delta);
    REQUIRE(why1.has_value());
    CHECK_THAT(*why1, Catch::Matchers::ContainsSubstring("vertex"));

    // with U empty the zeroed delta survives to the exactness check and
    // loses surjectivity where G is nonzero on Z
    const auto w_empty = construct_vze(g, OpenSet::unchecked(VertexBits(2)), z);
    auto broken_surj = w_empty;
    std::vector<Mat<Rational>> zero2(2);
    for (int v = 0; v < 2; ++v)
        zero2[v] = RationalMat::Zero(w_empty.delta.at(v).rows(), w_empty.delta.at(v).cols());
    broken_surj.delta =
        NatTrans<Rational>::unchecked(w_empty.delta.source(), w_empty.delta.target(), zero2);
    const auto why_surj = vze_violation(broken_surj);
    REQUIRE(why_surj.has_value());
    CHECK_THAT(*why_surj, Catch::Matchers::ContainsSubstring("exact") ||
                              Catch::Matchers::ContainsSubstring("surjective"));

    // perturb an H edge map on an edge from U n Z into Z \ U: delta loses
    // naturality there
    auto broken_h = good;
    std::vector<Mat<Rational>> h_maps{RationalMat::Constant(1, 1, 3)};
    broken_h.H = Presheaf<Rational>(dag, {1, 1}, h_maps);
    broken_h.alpha = NatTrans<Rational>::unchecked(good.alpha.source(), broken_h.H,
                                                   {good.alpha.at(0), good.alpha.at(1)});
    broken_h.delta = NatTrans<Rational>::unchecked(broken_h.H, good.delta.target(),
                                                   {good.delta.at(0), good.delta.at(1)});
    const auto why2 = vze_violation(broken_h);
    REQUIRE(why2.has_value());
    CHECK_THAT(*why2, Catch::Matchers::ContainsSubstring("natural"));

    // witness with wrong dims is caught by the endpoint comparison
    auto broken_dims = good;
    broken_dims.H = Presheaf<Rational>(dag, {1, 0}, {RationalMat::Zero(1, 0)});
    broken_dims.alpha = NatTrans<Rational>::unchecked(
        good.alpha.source(), broken_dims.H,
        {RationalMat::Identity(1, 1), RationalMat::Zero(0, 0)});
    broken_dims.delta = NatTrans<Rational>::unchecked(
        broken_dims.H, good.delta.target(), {RationalMat::Identity(1, 1), RationalMat::Zero(1, 0)});
    CHECK(vze_violation(broken_dims).has_value());
}

TEST_CASE("witnesses feed the inequality checker") {
    Rng rng(113);
    for (int t = 0; t < 20; ++t) {
        const DagPtr dag = random_dag(rng, 2, 7);
        const auto g = random_presheaf<Rational>(rng, dag, 2);
        const OpenSet u = random_open(rng, *dag);
        const ClosedSet z = random_closed(rng, *dag);
        const auto w = construct_vze(g, u, z);
        REQUIRE(check_vze(w));
        const auto f = random_presheaf<Rational>(rng, dag, 2);
        CHECK(check_theorem1(f, g, u, z).ok());
    }
}
