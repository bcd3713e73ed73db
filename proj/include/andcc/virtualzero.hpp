#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "andcc/freecat.hpp"
#include "andcc/linalg.hpp"
#include "andcc/sheaves.hpp"

namespace andcc {

// The completed data of 0 -> G_U -> G_{U n Z} (+) H -> G_Z -> 0 with the
// usual restriction maps on the outer legs.
template <class Scalar>
struct VzeWitness {
    Presheaf<Scalar> G;
    VertexBits U, Z;
    Presheaf<Scalar> H;
    NatTrans<Scalar> alpha;  // G_U -> H
    NatTrans<Scalar> delta;  // H -> G_Z
    NatTrans<Scalar> rho;    // G_U -> G_{U n Z}, usual map
    NatTrans<Scalar> sigma;  // G_{U n Z} -> G_Z, usual map
};

// Exactness forces dim H(X) = dim G_U(X) + dim G_Z(X) - dim G_{U n Z}(X),
// which collapses to dim G(X) on U u Z and 0 elsewhere.
template <class Scalar>
std::vector<int> forced_dims(const Presheaf<Scalar>& G, const OpenSet& U, const ClosedSet& Z) {
    const int n = G.dag()->vertex_count();
    std::vector<int> dims(n, 0);
    for (int v = 0; v < n; ++v)
        if (U.members.test(v) || Z.members.test(v)) dims[v] = G.dim(v);
    return dims;
}

// Canonical completion: H = G extended by zero over U u Z.  Naturality of
// alpha forces H(e) = G(e) on edges inside U, naturality of delta forces
// it on edges inside Z, edges between U \ Z and Z \ U get G(e) as well,
// and every other edge map is squeezed to zero by a zero endpoint.
// Freeness is what makes any edge assignment a valid presheaf, so the
// completion always exists here.  alpha is the identity on U, delta the
// identity on Z and zero on U \ Z; the open/closed closure rules are
// exactly what keeps both natural.
template <class Scalar>
VzeWitness<Scalar> construct_vze(const Presheaf<Scalar>& G, const OpenSet& U, const ClosedSet& Z) {
    const DagPtr& dag = G.dag();
    const int n = dag->vertex_count();
    if (U.members.size() != static_cast<std::size_t>(n) || Z.members.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("vertex set size mismatch");

    const VertexBits uz = U.members | Z.members;
    const VertexBits u_and_z = U.members & Z.members;
    Presheaf<Scalar> h = extend_by_zero(G, uz);
    Presheaf<Scalar> gu = extend_by_zero(G, U.members);
    Presheaf<Scalar> gz = extend_by_zero(G, Z.members);

    std::vector<Mat<Scalar>> alpha_comps(n), delta_comps(n);
    for (int v = 0; v < n; ++v) {
        if (U.members.test(v))
            alpha_comps[v] = Mat<Scalar>::Identity(G.dim(v), G.dim(v));
        else
            alpha_comps[v] = Mat<Scalar>::Zero(h.dim(v), 0);
        if (Z.members.test(v))
            delta_comps[v] = Mat<Scalar>::Identity(G.dim(v), G.dim(v));
        else
            delta_comps[v] = Mat<Scalar>::Zero(0, h.dim(v));
    }

    return VzeWitness<Scalar>{
        G,
        U.members,
        Z.members,
        h,
        NatTrans<Scalar>(gu, h, std::move(alpha_comps)),
        NatTrans<Scalar>(h, gz, std::move(delta_comps)),
        usual_map(G, U.members, u_and_z),
        usual_map(G, u_and_z, Z.members),
    };
}

// Full audit of a witness: outer legs are the usual maps, alpha and delta
// are natural with the right endpoints, the square anticommutes, and the
// four-term sequence is exact.  Returns a description of the first
// failure, or nothing when the witness is valid.
template <class Scalar>
std::optional<std::string> vze_violation(const VzeWitness<Scalar>& w) {
    const DagPtr& dag = w.G.dag();
    const int n = dag->vertex_count();
    if (!is_open(*dag, w.U)) return "U is not open";
    if (!is_closed(*dag, w.Z)) return "Z is not closed";

    const Presheaf<Scalar> gu = extend_by_zero(w.G, w.U);
    const Presheaf<Scalar> gz = extend_by_zero(w.G, w.Z);
    const NatTrans<Scalar> rho_ref = usual_map(w.G, w.U, w.U & w.Z);
    const NatTrans<Scalar> sigma_ref = usual_map(w.G, w.U & w.Z, w.Z);

    if (w.rho.source() != rho_ref.source() || w.rho.target() != rho_ref.target())
        return "rho endpoints are not G_U -> G_{U n Z}";
    if (w.sigma.source() != sigma_ref.source() || w.sigma.target() != sigma_ref.target())
        return "sigma endpoints are not G_{U n Z} -> G_Z";
    for (int v = 0; v < n; ++v) {
        if (!mats_equal(w.rho.at(v), rho_ref.at(v))) return "rho is not the usual map at vertex " + std::to_string(v);
        if (!mats_equal(w.sigma.at(v), sigma_ref.at(v))) return "sigma is not the usual map at vertex " + std::to_string(v);
    }

    if (w.alpha.source() != gu) return "alpha source is not G_U";
    if (w.alpha.target() != w.H) return "alpha target is not H";
    if (w.delta.source() != w.H) return "delta source is not H";
    if (w.delta.target() != gz) return "delta target is not G_Z";
    if (auto e = w.alpha.naturality_violation()) return "alpha not natural at edge " + std::to_string(*e);
    if (auto e = w.delta.naturality_violation()) return "delta not natural at edge " + std::to_string(*e);

    for (int v = 0; v < n; ++v) {
        const Mat<Scalar> composite =
            w.sigma.at(v) * w.rho.at(v) - w.delta.at(v) * w.alpha.at(v);
        if (!is_zero_matrix(composite)) return "composite does not vanish at vertex " + std::to_string(v);
    }

    // Middle object and the two stacked maps of the four-term sequence.
    const Presheaf<Scalar> middle = direct_sum(w.rho.target(), w.H);
    std::vector<Mat<Scalar>> first(n), second(n);
    for (int v = 0; v < n; ++v) {
        Mat<Scalar> f = Mat<Scalar>::Zero(middle.dim(v), gu.dim(v));
        f.topRows(w.rho.target().dim(v)) = w.rho.at(v);
        f.bottomRows(w.H.dim(v)) = w.alpha.at(v);
        first[v] = std::move(f);
        Mat<Scalar> s = Mat<Scalar>::Zero(gz.dim(v), middle.dim(v));
        s.leftCols(w.rho.target().dim(v)) = w.sigma.at(v);
        s.rightCols(w.H.dim(v)) = -w.delta.at(v);
        second[v] = std::move(s);
    }
    const std::vector<NatTrans<Scalar>> seq{
        NatTrans<Scalar>::unchecked(gu, middle, std::move(first)),
        NatTrans<Scalar>::unchecked(middle, gz, std::move(second)),
    };
    if (!check_exact(seq)) {
        for (int v = 0; v < n; ++v) {
            const int r1 = rank_of<Scalar>(seq[0].at(v));
            const int r2 = rank_of<Scalar>(seq[1].at(v));
            if (r1 != gu.dim(v)) return "not injective at vertex " + std::to_string(v);
            if (r1 + r2 != middle.dim(v)) return "not exact in the middle at vertex " + std::to_string(v);
            if (r2 != gz.dim(v)) return "not surjective at vertex " + std::to_string(v);
        }
        return "sequence not exact";
    }
    return std::nullopt;
}

template <class Scalar>
bool check_vze(const VzeWitness<Scalar>& w) {
    return !vze_violation(w).has_value();
}

}  // namespace andcc
