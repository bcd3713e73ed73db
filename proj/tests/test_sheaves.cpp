#include <catch2/catch_amalgamated.hpp>

#include "andcc/random.hpp"
#include "andcc/sheaves.hpp"

using namespace andcc;

namespace {

const DagPtr arrow = make_dag(2, {{0, 1}});  // A -> B

VertexBits bits_of(int n, std::initializer_list<int> members) {
    VertexBits b(n);
    for (int v : members) b.set(v);
    return b;
}

}  // namespace

TEST_CASE("path-space sheaf on the arrow") {
    const auto from_b = kp_star<Rational>(arrow, 1);
    CHECK(from_b.dims() == std::vector<int>{0, 1});

    const auto from_a = kp_star<Rational>(arrow, 0);
    CHECK(from_a.dims() == std::vector<int>{1, 1});
    REQUIRE(from_a.map(0).rows() == 1);
    REQUIRE(from_a.map(0).cols() == 1);
    CHECK(from_a.map(0)(0, 0) == 1);
}

TEST_CASE("path-space dimensions are path counts") {
    Rng rng(31);
    for (int t = 0; t < 50; ++t) {
        const DagPtr dag = random_dag(rng, 2, 7);
        const int p = rng.range(0, dag->vertex_count() - 1);
        const auto sheaf = kp_star<Rational>(dag, p);
        const auto homs = hom_counts_from(*dag, p);
        for (int v = 0; v < dag->vertex_count(); ++v) CHECK(BigInt(sheaf.dim(v)) == homs[v]);
    }
}

TEST_CASE("restricted construction equals restriction") {
    Rng rng(37);
    for (int t = 0; t < 40; ++t) {
        const DagPtr dag = random_dag(rng, 2, 7);
        const int p = rng.range(0, dag->vertex_count() - 1);
        const VertexBits a = random_bits(rng, dag->vertex_count(), 50);
        CHECK(kp_star_on<Rational>(dag, p, a) == extend_by_zero(kp_star<Rational>(dag, p), a));
    }
}

TEST_CASE("dimension cap reported") {
    const CubeCat big(make_ground({"a", "b", "c", "d", "e"}));
    CHECK_THROWS_AS(kp_star<Rational>(big.dag(), 0, 5), cap_exceeded);  // 5! = 120 at the top
}

TEST_CASE("superskyscrapers") {
    CHECK(superskyscraper<Rational>(arrow, {0, 0}) == Presheaf<Rational>::zero(arrow));
    const auto sky = skyscraper<Rational>(arrow, 1);
    CHECK(sky.dims() == std::vector<int>{0, 1});
    CHECK(sky.all_maps_zero());
    const auto s = superskyscraper<Rational>(arrow, {3, 2});
    CHECK(s.dim(0) == 3);
    CHECK(s.all_maps_zero());
    CHECK(!kp_star<Rational>(arrow, 0).all_maps_zero());
}

TEST_CASE("extension by zero") {
    Rng rng(41);
    const DagPtr dag = random_dag(rng, 3, 7);
    const auto g = random_presheaf<Rational>(rng, dag, 3);
    VertexBits all(dag->vertex_count());
    all.set();
    CHECK(extend_by_zero(g, all) == g);
    CHECK(extend_by_zero(g, VertexBits(dag->vertex_count())) == Presheaf<Rational>::zero(dag));
}

TEST_CASE("open restrictions are subobjects, closed ones quotients") {
    Rng rng(43);
    for (int t = 0; t < 30; ++t) {
        const DagPtr dag = random_dag(rng, 2, 7);
        const auto g = random_presheaf<Rational>(rng, dag, 3);
        const OpenSet u = random_open(rng, *dag);
        const ClosedSet z = random_closed(rng, *dag);
        VertexBits all(dag->vertex_count());
        all.set();

        const auto into = usual_map(g, u.members, all);  // G_U -> G, inclusion
        const auto onto = usual_map(g, all, z.members);  // G -> G_Z, projection
        for (int v = 0; v < dag->vertex_count(); ++v) {
            CHECK(rank_of<Rational>(into.at(v)) == into.source().dim(v));
            CHECK(rank_of<Rational>(onto.at(v)) == onto.target().dim(v));
        }
        // the two usual maps through U n Z compose to the direct one
        const auto through = compose(usual_map(g, u.members & z.members, z.members),
                                     usual_map(g, u.members, u.members & z.members));
        const auto direct = usual_map(g, u.members, z.members);
        for (int v = 0; v < dag->vertex_count(); ++v) CHECK(mats_equal(through.at(v), direct.at(v)));
    }
}

TEST_CASE("usual map rejects unnatural shapes") {
    // one edge with a nonzero map; keeping the source but dropping the
    // target breaks the square at that edge
    std::vector<Mat<Rational>> maps{RationalMat::Constant(1, 1, 1)};
    const Presheaf<Rational> g(arrow, {1, 1}, maps);
    CHECK_THROWS_WITH(usual_map(g, bits_of(2, {0, 1}), bits_of(2, {0})),
                      Catch::Matchers::ContainsSubstring("edge 0"));
    CHECK_NOTHROW(usual_map(g, bits_of(2, {0, 1}), bits_of(2, {1})));
    const auto id = usual_map(g, bits_of(2, {0, 1}), bits_of(2, {0, 1}));
    CHECK(mats_equal<Rational>(id.at(0), RationalMat::Identity(1, 1)));
}

TEST_CASE("direct sums") {
    Rng rng(47);
    const DagPtr dag = random_dag(rng, 3, 7);
    const auto f = random_presheaf<Rational>(rng, dag, 3);
    const auto g = random_presheaf<Rational>(rng, dag, 2);
    CHECK(direct_sum(f, Presheaf<Rational>::zero(dag)) == f);
    const auto sum = direct_sum(f, g);
    for (int v = 0; v < dag->vertex_count(); ++v) CHECK(sum.dim(v) == f.dim(v) + g.dim(v));
    for (int e = 0; e < dag->edge_count(); ++e) {
        const int u = dag->source(e), v = dag->target(e);
        CHECK(mats_equal<Rational>(sum.map(e).topLeftCorner(f.dim(u), f.dim(v)), f.map(e)));
        CHECK(mats_equal<Rational>(sum.map(e).bottomRightCorner(g.dim(u), g.dim(v)), g.map(e)));
        CHECK(is_zero_matrix<Rational>(sum.map(e).topRightCorner(f.dim(u), g.dim(v))));
    }
}

TEST_CASE("restriction sequences are exact") {
    Rng rng(53);
    for (int t = 0; t < 30; ++t) {
        const DagPtr dag = random_dag(rng, 2, 7);
        const auto g = random_presheaf<Rational>(rng, dag, 3);
        const OpenSet u = random_open(rng, *dag);
        const ClosedSet z = random_closed(rng, *dag);
        VertexBits all(dag->vertex_count());
        all.set();

        // 0 -> G_{U n ~Z} -> G_U -> G_{U n Z} -> 0
        const std::vector<NatTrans<Rational>> seq1{
            usual_map(g, u.members & ~z.members, u.members),
            usual_map(g, u.members, u.members & z.members)};
        CHECK(check_exact(seq1));

        // 0 -> G_{~Z} -> G -> G_Z -> 0
        const std::vector<NatTrans<Rational>> seq2{usual_map(g, ~z.members, all),
                                                   usual_map(g, all, z.members)};
        CHECK(check_exact(seq2));
    }
}

TEST_CASE("exactness checker on degenerate complexes") {
    std::vector<Mat<Rational>> maps{RationalMat::Constant(1, 1, 2)};
    const Presheaf<Rational> g(arrow, {1, 1}, maps);
    const auto identity = usual_map(g, bits_of(2, {0, 1}), bits_of(2, {0, 1}));

    // 0 -> G -> G -> 0 with the identity is exact (it is an isomorphism)
    CHECK(check_exact(std::vector<NatTrans<Rational>>{identity}));

    // chaining the identity twice is not a complex unless G = 0
    CHECK(!check_exact(std::vector<NatTrans<Rational>>{identity, identity}));
    const auto zero = Presheaf<Rational>::zero(arrow);
    const auto zid = usual_map(zero, bits_of(2, {0, 1}), bits_of(2, {0, 1}));
    CHECK(check_exact(std::vector<NatTrans<Rational>>{zid, zid}));

    // non-composable chains are rejected
    const auto other = usual_map(g, bits_of(2, {0, 1}), bits_of(2, {1}));
    CHECK_THROWS_AS(check_exact(std::vector<NatTrans<Rational>>{other, identity}),
                    std::invalid_argument);
}

TEST_CASE("naturality is validated with the offending edge") {
    std::vector<Mat<Rational>> maps{RationalMat::Constant(1, 1, 1)};
    const Presheaf<Rational> g(arrow, {1, 1}, maps);
    std::vector<Mat<Rational>> comps{RationalMat::Identity(1, 1), RationalMat::Constant(1, 1, 2)};
    CHECK_THROWS_WITH((NatTrans<Rational>(g, g, comps)),
                      Catch::Matchers::ContainsSubstring("edge 0"));
    const auto unchecked = NatTrans<Rational>::unchecked(g, g, comps);
    REQUIRE(unchecked.naturality_violation().has_value());
    CHECK(*unchecked.naturality_violation() == 0);
}
