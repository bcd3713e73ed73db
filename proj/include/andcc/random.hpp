#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "andcc/boolfun.hpp"
#include "andcc/freecat.hpp"
#include "andcc/setcover.hpp"
#include "andcc/sheaves.hpp"

namespace andcc {

// Seeded generator for the randomized suites.  mt19937_64 and the modulo
// draws below are fully specified, so a seed pins the whole run on any
// platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool chance(int percent) { return range(0, 99) < percent; }

private:
    std::mt19937_64 gen_;
};

inline GroundSetPtr random_ground(Rng& rng, int min_n, int max_n) {
    const int n = rng.range(min_n, max_n);
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
    return make_ground(std::move(names));
}

inline BoolFun random_boolfun(Rng& rng, const GroundSetPtr& ground) {
    const int n = ground->size();
    const std::uint64_t mask = n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
    return BoolFun(ground, rng.next() & mask);
}

// Mixed family: members forced above the target keep the admissible set
// interesting, fully random members exercise the discard path, and the
// occasional duplicate exercises the demand analysis.
inline AndInstance random_instance(Rng& rng, int max_s, int max_r) {
    const GroundSetPtr ground = random_ground(rng, 1, max_s);
    const BoolFun target = random_boolfun(rng, ground);
    const int r = rng.range(1, max_r);
    std::vector<BoolFun> family;
    family.reserve(r);
    for (int i = 0; i < r; ++i) {
        if (!family.empty() && rng.chance(10)) {
            family.push_back(family[rng.range(0, static_cast<int>(family.size()) - 1)]);
        } else if (rng.chance(60)) {
            const BoolFun extra = random_boolfun(rng, ground);
            family.push_back(BoolFun(ground, target.canonical_index() | extra.canonical_index()));
        } else {
            family.push_back(random_boolfun(rng, ground));
        }
    }
    return AndInstance(target, std::move(family));
}

inline DagPtr random_dag(Rng& rng, int min_v, int max_v, int edge_percent = 35,
                         int dup_percent = 8) {
    const int n = rng.range(min_v, max_v);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!rng.chance(edge_percent)) continue;
            edges.emplace_back(u, v);
            if (rng.chance(dup_percent)) edges.emplace_back(u, v);  // parallel edge
        }
    }
    return make_dag(n, std::move(edges));
}

inline VertexBits random_bits(Rng& rng, int n, int percent) {
    VertexBits bits(n);
    for (int v = 0; v < n; ++v)
        if (rng.chance(percent)) bits.set(v);
    return bits;
}

inline ClosedSet random_closed(Rng& rng, const Dag& dag) {
    return successor_closure(dag, random_bits(rng, dag.vertex_count(), 30));
}

inline OpenSet random_open(Rng& rng, const Dag& dag) {
    return predecessor_closure(dag, random_bits(rng, dag.vertex_count(), 30));
}

template <class Scalar>
Presheaf<Scalar> random_presheaf(Rng& rng, const DagPtr& dag, int max_dim) {
    std::vector<int> dims(dag->vertex_count());
    for (int& d : dims) d = rng.range(0, max_dim);
    std::vector<Mat<Scalar>> maps(dag->edge_count());
    for (int e = 0; e < dag->edge_count(); ++e) {
        Mat<Scalar> m(dims[dag->source(e)], dims[dag->target(e)]);
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) = Scalar(rng.range(-2, 2));
        maps[e] = std::move(m);
    }
    return Presheaf<Scalar>(dag, std::move(dims), std::move(maps));
}

template <class Scalar>
Presheaf<Scalar> random_superskyscraper(Rng& rng, const DagPtr& dag, int max_dim) {
    std::vector<int> dims(dag->vertex_count());
    for (int& d : dims) d = rng.range(0, max_dim);
    return superskyscraper<Scalar>(dag, std::move(dims));
}

}  // namespace andcc
