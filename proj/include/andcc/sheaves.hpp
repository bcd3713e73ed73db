#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "andcc/config.hpp"
#include "andcc/freecat.hpp"
#include "andcc/linalg.hpp"
#include "andcc/scalars.hpp"

namespace andcc {

template <class Scalar>
bool mats_equal(const Mat<Scalar>& a, const Mat<Scalar>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

// A presheaf of finite-dimensional vector spaces on the free category of a
// DAG (with the trivial topology every presheaf is a sheaf, so no gluing
// condition appears anywhere).
//
// Convention: the data is contravariant.  An edge e: u -> v carries the
// matrix map(e): F(v) -> F(u), of shape dim(u) x dim(v).  With open =
// predecessor-closed this makes extensions by zero over open sets
// subobjects and over closed sets quotients.  If the covariant convention
// is ever wanted instead, run the same machinery on the edge-reversed DAG;
// nothing else changes.
template <class Scalar>
class Presheaf {
public:
    Presheaf(DagPtr dag, std::vector<int> dims, std::vector<Mat<Scalar>> maps)
        : dag_(std::move(dag)), dims_(std::move(dims)), maps_(std::move(maps)) {
        if (!dag_) throw std::invalid_argument("null dag");
        if (static_cast<int>(dims_.size()) != dag_->vertex_count())
            throw std::invalid_argument("dims size mismatch");
        if (static_cast<int>(maps_.size()) != dag_->edge_count())
            throw std::invalid_argument("maps size mismatch");
        for (int d : dims_)
            if (d < 0) throw std::invalid_argument("negative dimension");
        for (int e = 0; e < dag_->edge_count(); ++e) {
            if (maps_[e].rows() != dims_[dag_->source(e)] || maps_[e].cols() != dims_[dag_->target(e)])
                throw std::invalid_argument("edge map shape mismatch at edge " + std::to_string(e));
        }
    }

    static Presheaf zero(DagPtr dag) {
        std::vector<int> dims(dag->vertex_count(), 0);
        std::vector<Mat<Scalar>> maps(dag->edge_count(), Mat<Scalar>::Zero(0, 0));
        return Presheaf(std::move(dag), std::move(dims), std::move(maps));
    }

    const DagPtr& dag() const { return dag_; }
    int dim(int v) const { return dims_.at(v); }
    const std::vector<int>& dims() const { return dims_; }
    const Mat<Scalar>& map(int e) const { return maps_.at(e); }

    long long total_dim() const {
        long long t = 0;
        for (int d : dims_) t += d;
        return t;
    }

    bool all_maps_zero() const {
        for (const auto& m : maps_)
            if (!is_zero_matrix(m)) return false;
        return true;
    }

    bool operator==(const Presheaf& o) const {
        if (!(*dag_ == *o.dag_) || dims_ != o.dims_) return false;
        for (std::size_t e = 0; e < maps_.size(); ++e)
            if (!mats_equal(maps_[e], o.maps_[e])) return false;
        return true;
    }
    bool operator!=(const Presheaf& o) const { return !(*this == o); }

private:
    DagPtr dag_;
    std::vector<int> dims_;
    std::vector<Mat<Scalar>> maps_;
};

// The path-space sheaf of P restricted to a vertex set A: value at X in A
// is the space of functions on Hom(P, X), with basis the enumerated paths;
// zero outside A.  An edge e: u -> v acts by precomposition, sending the
// indicator of a path P -> u to the indicator of its extension by e.
// Equals extend_by_zero(kp_star(dag, P), A) including the choice of bases,
// but only enumerates paths that matter for A.
template <class Scalar>
Presheaf<Scalar> kp_star_on(const DagPtr& dag, int P, const VertexBits& A, int dim_cap = 5000,
                            long long path_cap = 100000) {
    const int n = dag->vertex_count();
    auto groups = enumerate_paths_grouped(*dag, P, A, path_cap);

    std::vector<int> dims(n, 0);
    for (int v = 0; v < n; ++v) {
        dims[v] = static_cast<int>(groups[v].size());
        if (dims[v] > dim_cap)
            throw cap_exceeded("path-space dimension exceeds cap at vertex " + std::to_string(v));
    }

    std::vector<std::map<std::vector<int>, int>> index(n);
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < dims[v]; ++k) index[v].emplace(groups[v][k].edges, k);

    std::vector<Mat<Scalar>> maps(dag->edge_count());
    for (int e = 0; e < dag->edge_count(); ++e) {
        const int u = dag->source(e), v = dag->target(e);
        Mat<Scalar> m = Mat<Scalar>::Zero(dims[u], dims[v]);
        if (A.test(u) && A.test(v)) {
            for (int r = 0; r < dims[u]; ++r) {
                std::vector<int> ext = groups[u][r].edges;
                ext.push_back(e);
                m(r, index[v].at(ext)) = Scalar(1);
            }
        }
        maps[e] = std::move(m);
    }
    return Presheaf<Scalar>(dag, std::move(dims), std::move(maps));
}

template <class Scalar>
Presheaf<Scalar> kp_star(const DagPtr& dag, int P, int dim_cap = 5000,
                         long long path_cap = 100000) {
    VertexBits all(dag->vertex_count());
    all.set();
    return kp_star_on<Scalar>(dag, P, all, dim_cap, path_cap);
}

// Arbitrary stalks, every edge map zero.
template <class Scalar>
Presheaf<Scalar> superskyscraper(const DagPtr& dag, std::vector<int> dims) {
    std::vector<Mat<Scalar>> maps(dag->edge_count());
    for (int e = 0; e < dag->edge_count(); ++e)
        maps[e] = Mat<Scalar>::Zero(dims.at(dag->source(e)), dims.at(dag->target(e)));
    return Presheaf<Scalar>(dag, std::move(dims), std::move(maps));
}

template <class Scalar>
Presheaf<Scalar> skyscraper(const DagPtr& dag, int v, int dim = 1) {
    std::vector<int> dims(dag->vertex_count(), 0);
    dims.at(v) = dim;
    return superskyscraper<Scalar>(dag, std::move(dims));
}

// G_A: values kept on A and zeroed outside; edge maps kept only when both
// endpoints lie in A.
template <class Scalar>
Presheaf<Scalar> extend_by_zero(const Presheaf<Scalar>& G, const VertexBits& A) {
    const Dag& dag = *G.dag();
    if (A.size() != static_cast<std::size_t>(dag.vertex_count()))
        throw std::invalid_argument("vertex set size mismatch");
    std::vector<int> dims(dag.vertex_count(), 0);
    for (int v = 0; v < dag.vertex_count(); ++v)
        if (A.test(v)) dims[v] = G.dim(v);
    std::vector<Mat<Scalar>> maps(dag.edge_count());
    for (int e = 0; e < dag.edge_count(); ++e) {
        const int u = dag.source(e), v = dag.target(e);
        if (A.test(u) && A.test(v))
            maps[e] = G.map(e);
        else
            maps[e] = Mat<Scalar>::Zero(dims[u], dims[v]);
    }
    return Presheaf<Scalar>(G.dag(), std::move(dims), std::move(maps));
}

template <class Scalar>
Presheaf<Scalar> direct_sum(const Presheaf<Scalar>& F, const Presheaf<Scalar>& G) {
    if (!(*F.dag() == *G.dag())) throw std::invalid_argument("direct_sum: different dags");
    const Dag& dag = *F.dag();
    std::vector<int> dims(dag.vertex_count());
    for (int v = 0; v < dag.vertex_count(); ++v) dims[v] = F.dim(v) + G.dim(v);
    std::vector<Mat<Scalar>> maps(dag.edge_count());
    for (int e = 0; e < dag.edge_count(); ++e) {
        const int u = dag.source(e), v = dag.target(e);
        Mat<Scalar> m = Mat<Scalar>::Zero(dims[u], dims[v]);
        m.topLeftCorner(F.dim(u), F.dim(v)) = F.map(e);
        m.bottomRightCorner(G.dim(u), G.dim(v)) = G.map(e);
        maps[e] = std::move(m);
    }
    return Presheaf<Scalar>(F.dag(), std::move(dims), std::move(maps));
}

// A natural transformation: one matrix per vertex, commuting with the edge
// maps.  The checked constructor reports the first offending edge.
template <class Scalar>
class NatTrans {
public:
    NatTrans(Presheaf<Scalar> source, Presheaf<Scalar> target, std::vector<Mat<Scalar>> components)
        : NatTrans(unchecked(std::move(source), std::move(target), std::move(components))) {
        if (auto e = naturality_violation())
            throw std::invalid_argument("not natural at edge " + std::to_string(*e));
    }

    static NatTrans unchecked(Presheaf<Scalar> source, Presheaf<Scalar> target,
                              std::vector<Mat<Scalar>> components) {
        if (!(*source.dag() == *target.dag()))
            throw std::invalid_argument("transformation between presheaves on different dags");
        const int n = source.dag()->vertex_count();
        if (static_cast<int>(components.size()) != n)
            throw std::invalid_argument("component count mismatch");
        for (int v = 0; v < n; ++v) {
            if (components[v].rows() != target.dim(v) || components[v].cols() != source.dim(v))
                throw std::invalid_argument("component shape mismatch at vertex " + std::to_string(v));
        }
        NatTrans t;
        t.source_ = std::move(source);
        t.target_ = std::move(target);
        t.at_ = std::move(components);
        return t;
    }

    // First edge u -> v with at(u) . source(e) != target(e) . at(v), if any.
    std::optional<int> naturality_violation() const {
        const Dag& dag = *source_->dag();
        for (int e = 0; e < dag.edge_count(); ++e) {
            const int u = dag.source(e), v = dag.target(e);
            const Mat<Scalar> lhs = at_[u] * source_->map(e);
            const Mat<Scalar> rhs = target_->map(e) * at_[v];
            if (!mats_equal(lhs, rhs)) return e;
        }
        return std::nullopt;
    }

    const Presheaf<Scalar>& source() const { return *source_; }
    const Presheaf<Scalar>& target() const { return *target_; }
    const Mat<Scalar>& at(int v) const { return at_.at(v); }

private:
    NatTrans() = default;
    std::optional<Presheaf<Scalar>> source_, target_;
    std::vector<Mat<Scalar>> at_;
};

template <class Scalar>
NatTrans<Scalar> compose(const NatTrans<Scalar>& second, const NatTrans<Scalar>& first) {
    if (first.target() != second.source())
        throw std::invalid_argument("compose: middle presheaves differ");
    const int n = first.source().dag()->vertex_count();
    std::vector<Mat<Scalar>> comps(n);
    for (int v = 0; v < n; ++v) comps[v] = second.at(v) * first.at(v);
    return NatTrans<Scalar>::unchecked(first.source(), second.target(), std::move(comps));
}

// The transformation G_A -> G_B that is the identity on A n B and zero
// elsewhere.  Natural for the nested / open-closed shapes that arise from
// restriction; the constructor rejects anything else with the offending
// edge.
template <class Scalar>
NatTrans<Scalar> usual_map(const Presheaf<Scalar>& G, const VertexBits& A, const VertexBits& B) {
    Presheaf<Scalar> src = extend_by_zero(G, A);
    Presheaf<Scalar> tgt = extend_by_zero(G, B);
    const int n = G.dag()->vertex_count();
    std::vector<Mat<Scalar>> comps(n);
    for (int v = 0; v < n; ++v) {
        if (A.test(v) && B.test(v))
            comps[v] = Mat<Scalar>::Identity(G.dim(v), G.dim(v));
        else
            comps[v] = Mat<Scalar>::Zero(tgt.dim(v), src.dim(v));
    }
    return NatTrans<Scalar>(std::move(src), std::move(tgt), std::move(comps));
}

// Vertexwise exactness of 0 -> O_0 -> O_1 -> ... -> O_K -> 0 presented as
// the list of its maps: first injective, image = kernel at every interior
// stage, last surjective.  With each composite zero this reduces to the
// rank count rank(in) + rank(out) = dim at every object and vertex.
template <class Scalar>
bool check_exact(const std::vector<NatTrans<Scalar>>& seq) {
    if (seq.empty()) throw std::invalid_argument("check_exact: empty sequence");
    for (std::size_t k = 0; k + 1 < seq.size(); ++k)
        if (seq[k].target() != seq[k + 1].source())
            throw std::invalid_argument("check_exact: maps do not compose at stage " + std::to_string(k));

    const Dag& dag = *seq.front().source().dag();
    const int K = static_cast<int>(seq.size());
    for (int v = 0; v < dag.vertex_count(); ++v) {
        for (int k = 0; k + 1 < K; ++k) {
            if (!is_zero_matrix<Scalar>(seq[k + 1].at(v) * seq[k].at(v))) return false;
        }
        std::vector<int> r(K);
        for (int k = 0; k < K; ++k) r[k] = rank_of<Scalar>(seq[k].at(v));
        for (int j = 0; j <= K; ++j) {
            const int before = j == 0 ? 0 : r[j - 1];
            const int after = j == K ? 0 : r[j];
            const int d = j == 0 ? seq[0].source().dim(v) : seq[j - 1].target().dim(v);
            if (before + after != d) return false;
        }
    }
    return true;
}

}  // namespace andcc
