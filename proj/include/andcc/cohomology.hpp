#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "andcc/config.hpp"
#include "andcc/freecat.hpp"
#include "andcc/linalg.hpp"
#include "andcc/measures.hpp"
#include "andcc/setcover.hpp"
#include "andcc/sheaves.hpp"

namespace andcc {

struct ExtProfile {
    long long hom = 0;   // dim Hom = dim Ext^0
    long long ext1 = 0;  // dim Ext^1
    long long cc() const { return hom + ext1; }

    bool operator==(const ExtProfile& o) const { return hom == o.hom && ext1 == o.ext1; }
    bool operator!=(const ExtProfile& o) const { return !(*this == o); }
};

// Hom and Ext^1 between presheaves on the free category of a DAG, read off
// in one step from
//
//     Phi : (+)_v Hom(F(v), G(v)) -> (+)_{e: u->v} Hom(F(v), G(u)),
//     Phi(eta)_e = G(e) . eta_v - eta_u . F(e).
//
// ker Phi is the space of natural transformations F -> G.  Free (path)
// categories are hereditary: the standard projective resolution of any
// representation has length one, so coker Phi computes Ext^1 and Ext^i
// vanishes for every i >= 2.  The total complexity cc is therefore the sum
// of just these two dimensions.  Phi is assembled blockwise only where
// dim F > 0, which keeps superskyscraper instances small even when G is a
// large path-space sheaf.
template <class Scalar>
ExtProfile ext_profile(const Presheaf<Scalar>& F, const Presheaf<Scalar>& G) {
    if (!(*F.dag() == *G.dag())) throw std::invalid_argument("ext_profile: different dags");
    const Dag& dag = *F.dag();
    const int n = dag.vertex_count();

    long long domain_total = 0, codomain_total = 0;
    std::vector<long long> col_off(n, -1);
    for (int v = 0; v < n; ++v) {
        const long long cols = static_cast<long long>(F.dim(v)) * G.dim(v);
        if (cols > 0) {
            col_off[v] = domain_total;
            domain_total += cols;
        }
    }
    std::vector<long long> row_off(dag.edge_count(), -1);
    for (int e = 0; e < dag.edge_count(); ++e) {
        const int u = dag.source(e), v = dag.target(e);
        const long long rows = static_cast<long long>(F.dim(v)) * G.dim(u);
        if (rows > 0) {
            row_off[e] = codomain_total;
            codomain_total += rows;
        }
    }

    Mat<Scalar> phi = Mat<Scalar>::Zero(codomain_total, domain_total);
    for (int e = 0; e < dag.edge_count(); ++e) {
        if (row_off[e] < 0) continue;
        const int u = dag.source(e), v = dag.target(e);
        const long long rows = static_cast<long long>(F.dim(v)) * G.dim(u);
        // vec(G(e) . eta_v) = (I_{dim F(v)} (x) G(e)) vec(eta_v)
        if (col_off[v] >= 0) {
            const Mat<Scalar> idf = Mat<Scalar>::Identity(F.dim(v), F.dim(v));
            phi.block(row_off[e], col_off[v], rows, static_cast<long long>(F.dim(v)) * G.dim(v)) +=
                kron<Scalar>(idf, G.map(e));
        }
        // vec(eta_u . F(e)) = (F(e)^T (x) I_{dim G(u)}) vec(eta_u)
        if (col_off[u] >= 0) {
            const Mat<Scalar> idg = Mat<Scalar>::Identity(G.dim(u), G.dim(u));
            const Mat<Scalar> ft = F.map(e).transpose();
            phi.block(row_off[e], col_off[u], rows, static_cast<long long>(F.dim(u)) * G.dim(u)) -=
                kron<Scalar>(ft, idg);
        }
    }

    const int rank = (domain_total == 0 || codomain_total == 0) ? 0 : rank_of<Scalar>(phi);
    ExtProfile out;
    out.hom = domain_total - rank;
    out.ext1 = codomain_total - rank;
    return out;
}

// hom - ext1 from dimensions alone; an independent oracle for ext_profile.
template <class Scalar>
long long euler_characteristic(const Presheaf<Scalar>& F, const Presheaf<Scalar>& G) {
    if (!(*F.dag() == *G.dag())) throw std::invalid_argument("euler_characteristic: different dags");
    const Dag& dag = *F.dag();
    long long chi = 0;
    for (int v = 0; v < dag.vertex_count(); ++v)
        chi += static_cast<long long>(F.dim(v)) * G.dim(v);
    for (int e = 0; e < dag.edge_count(); ++e)
        chi -= static_cast<long long>(F.dim(dag.target(e))) * G.dim(dag.source(e));
    return chi;
}

// sum_{Q in Z} dim F(Q) * |Hom_Z(P, Q)| -- pure counting, no linear algebra.
template <class Scalar>
BigInt cc_closed_pathsum(const Presheaf<Scalar>& F, int P, const ClosedSet& Z) {
    const Dag& dag = *F.dag();
    const auto homz = hom_z_counts_from(dag, Z, P);
    BigInt total = 0;
    for (int q = 0; q < dag.vertex_count(); ++q)
        if (Z.members.test(q) && F.dim(q) > 0) total += BigInt(F.dim(q)) * homz[q];
    return total;
}

// The decomposition of the path-space sheaf restricted to a closed set:
// (a) the counting identity hom(P, X) = sum_{Q in Z} homz(P, Q) hom(Q, X)
// for every X in Z, and (b) equal ext profiles against F of both sides,
// the restriction on the left and the matching sum of path-space sheaves
// based at the entry points on the right.
template <class Scalar>
bool check_lemma(const DagPtr& dag, int P, const ClosedSet& Z, const Presheaf<Scalar>& F,
                 int dim_cap = 5000, long long path_cap = 100000) {
    const int n = dag->vertex_count();
    const auto hom_p = hom_counts_from(*dag, P);
    const auto homz = hom_z_counts_from(*dag, Z, P);

    std::vector<std::vector<BigInt>> hom_q(n);
    for (int q = 0; q < n; ++q)
        if (Z.members.test(q) && homz[q] != 0) hom_q[q] = hom_counts_from(*dag, q);
    for (int x = 0; x < n; ++x) {
        if (!Z.members.test(x)) continue;
        BigInt rhs = 0;
        for (int q = 0; q < n; ++q)
            if (!hom_q[q].empty()) rhs += homz[q] * hom_q[q][x];
        if (rhs != hom_p[x]) return false;
    }

    const Presheaf<Scalar> lhs = kp_star_on<Scalar>(dag, P, Z.members, dim_cap, path_cap);
    Presheaf<Scalar> rhs = Presheaf<Scalar>::zero(dag);
    for (int q = 0; q < n; ++q) {
        if (hom_q[q].empty()) continue;
        if (homz[q] > dim_cap) throw cap_exceeded("multiplicity exceeds cap in decomposition");
        const Presheaf<Scalar> piece = kp_star_on<Scalar>(dag, q, Z.members, dim_cap, path_cap);
        for (BigInt k = 0; k < homz[q]; ++k) rhs = direct_sum(rhs, piece);
    }
    return ext_profile(F, lhs) == ext_profile(F, rhs);
}

// cc(F, G_U) for the path-space sheaf G of P, built directly on U.
template <class Scalar>
ExtProfile cc_open(const Presheaf<Scalar>& F, int P, const OpenSet& U, int dim_cap = 5000,
                   long long path_cap = 100000) {
    return ext_profile(F, kp_star_on<Scalar>(F.dag(), P, U.members, dim_cap, path_cap));
}

// The subadditivity inequality for extensions by zero, together with the
// two inequalities it factors through.
struct TheoremCheck {
    long long cc_g = 0, cc_u = 0, cc_zbar = 0, cc_z = 0, cc_u_zbar = 0;
    bool main_ok = false, step_sum_ok = false, step_closed_ok = false;
    bool ok() const { return main_ok && step_sum_ok && step_closed_ok; }

    std::string describe() const {
        return "cc(F,G_{U n ~Z})=" + std::to_string(cc_u_zbar) + " cc(F,G)=" + std::to_string(cc_g) +
               " cc(F,G_U)=" + std::to_string(cc_u) + " cc(F,G_{~Z})=" + std::to_string(cc_zbar) +
               " cc(F,G_Z)=" + std::to_string(cc_z);
    }
};

template <class Scalar>
TheoremCheck check_theorem1(const Presheaf<Scalar>& F, const Presheaf<Scalar>& G, const OpenSet& U,
                            const ClosedSet& Z) {
    TheoremCheck r;
    const VertexBits zbar = ~Z.members;
    r.cc_g = ext_profile(F, G).cc();
    r.cc_u = ext_profile(F, extend_by_zero(G, U.members)).cc();
    r.cc_zbar = ext_profile(F, extend_by_zero(G, zbar)).cc();
    r.cc_z = ext_profile(F, extend_by_zero(G, Z.members)).cc();
    r.cc_u_zbar = ext_profile(F, extend_by_zero(G, U.members & zbar)).cc();
    r.main_ok = r.cc_u_zbar <= r.cc_g + r.cc_u + r.cc_zbar;
    r.step_sum_ok = r.cc_u_zbar <= r.cc_z + r.cc_u;
    r.step_closed_ok = r.cc_z <= r.cc_g + r.cc_zbar;
    return r;
}

// The model on a monotone cube: F paired with the path-space sheaf of a
// base vertex, evaluated on the downset of each Boolean function.
template <class Scalar>
struct CohomModel {
    CubeCat cube;
    Presheaf<Scalar> F;
    int base;

    CohomModel(CubeCat c, Presheaf<Scalar> f, int base_vertex)
        : cube(std::move(c)), F(std::move(f)), base(base_vertex) {
        if (!(*F.dag() == *cube.dag())) throw std::invalid_argument("F must live on the cube");
        if (base < 0 || base >= cube.vertex_count()) throw std::out_of_range("base vertex out of range");
    }
};

// h(f) = cc(F, G_{U_f}) as a measure on B^S.  Valid only when cc(F, G) = 0
// for G the base path-space sheaf; beyond the dimension cap that
// precondition reduces to dim F(base) = 0, because G is injective with
// Hom(F, G) isomorphic to F(base)^* (both facts are exercised by the test
// suites).  For a superskyscraper F the value is computed by the closed
// path sum, which the decomposition makes equal to the ext route.
template <class Scalar>
Measure and_measure_from_model(const CohomModel<Scalar>& model, int dim_cap = 5000,
                               long long path_cap = 100000) {
    bool pre_ok;
    std::string detail;
    try {
        const auto profile =
            ext_profile(model.F, kp_star<Scalar>(model.cube.dag(), model.base, dim_cap, path_cap));
        pre_ok = profile.cc() == 0;
        detail = "cc(F,G) = " + std::to_string(profile.cc());
    } catch (const cap_exceeded&) {
        pre_ok = model.F.dim(model.base) == 0;
        detail = "dim F(base) = " + std::to_string(model.F.dim(model.base));
    }
    if (!pre_ok)
        throw std::invalid_argument("model does not induce a measure: " + detail + ", expected 0");

    auto shared = std::make_shared<CohomModel<Scalar>>(model);
    const bool fast = model.F.all_maps_zero();
    return Measure("model", [shared, fast, dim_cap, path_cap](const BoolFun& g) -> Rational {
        if (fast) {
            return Rational(cc_closed_pathsum(shared->F, shared->base,
                                              closed_complement(shared->cube, g)));
        }
        const OpenSet u = smallest_open(shared->cube, g);
        return Rational(cc_open(shared->F, shared->base, u, dim_cap, path_cap).cc());
    });
}

// sum_s A_s / M as a size lower bound, for A/M a feasible dual vector.
// A must vanish off the universe (it is a dual vector of the covering
// program) and satisfy sum_s A_s (1 - f_i(s)) <= M for every admissible i.
// Weak duality keeps the result at or below the LP optimum; an optimal
// dual with cleared denominators attains it.
inline Rational lp_recovery(const AndInstance& inst, const std::vector<Rational>& A,
                            const Rational& M) {
    const int n = inst.target.arity();
    if (static_cast<int>(A.size()) != n)
        throw std::invalid_argument("lp_recovery: weight count mismatch");
    if (M <= 0) throw std::invalid_argument("lp_recovery: M must be positive");
    for (int s = 0; s < n; ++s) {
        if (A[s] < 0) throw std::invalid_argument("lp_recovery: negative weight");
        if (A[s] > 0 && inst.target.value(s))
            throw std::invalid_argument("lp_recovery: A must vanish off the universe");
    }
    const CoverProgram prog = build_program(inst);
    for (std::size_t k = 0; k < prog.admissible.size(); ++k) {
        Rational lhs = 0;
        for (int s : prog.coverage[k]) lhs += A[s];
        if (lhs > M) throw std::invalid_argument("lp_recovery: infeasible A for member " +
                                                 std::to_string(prog.admissible[k] + 1));
    }
    Rational bound = 0;
    for (int s = 0; s < n; ++s) bound += A[s];
    bound /= M;
    const LpResult lp = lp_bound(prog);
    if (!lp.infinite() && bound > *lp.value)
        throw std::logic_error("lp_recovery: bound exceeded the LP optimum");
    return bound;
}

// -- exploratory reports ----------------------------------------------------
//
// Both reports compare a literal reading of a sketched identity against
// directly computed values.  They emit numbers and never assert: the exact
// convention each identity intends (which paths count, which endpoint
// conditions apply) is ambiguous, and known small cases disagree under the
// most literal reading.

struct EdgeTerm {
    int a = 0, b = 0;   // edge a -> b
    BigInt n_pq;        // paths base -> Q through this edge
    BigInt cc_ab;       // closed path sum for the skyscraper at b, based at a
};

struct EdgeDecompositionReport {
    std::string f_bits;
    int q = 0;
    BigInt lhs, rhs;
    std::vector<EdgeTerm> terms;  // terms with n_pq > 0
    BigInt difference() const { return lhs - rhs; }
};

template <class Scalar>
EdgeDecompositionReport edge_decomposition_report(const CohomModel<Scalar>& model, int Q,
                                                  const BoolFun& f) {
    if (model.base != 0) throw std::invalid_argument("edge decomposition expects base = const 0");
    if (Q <= 0 || Q >= model.cube.vertex_count())
        throw std::invalid_argument("Q must differ from the base vertex");
    const DagPtr& dag = model.cube.dag();
    const ClosedSet zf = closed_complement(model.cube, f);

    EdgeDecompositionReport rep;
    rep.f_bits = f.bitstring();
    rep.q = Q;
    rep.lhs = cc_closed_pathsum(skyscraper<Scalar>(dag, Q), model.base, zf);
    rep.rhs = 0;

    const auto from_p = hom_counts_from(*dag, model.base);
    const auto to_q = hom_counts_to(*dag, Q);
    for (int e = 0; e < dag->edge_count(); ++e) {
        const int a = dag->source(e), b = dag->target(e);
        const BigInt n_pq = from_p[a] * to_q[b];
        if (n_pq == 0) continue;
        EdgeTerm term;
        term.a = a;
        term.b = b;
        term.n_pq = n_pq;
        term.cc_ab = cc_closed_pathsum(skyscraper<Scalar>(dag, b), a, zf);
        rep.rhs += term.n_pq * term.cc_ab;
        rep.terms.push_back(std::move(term));
    }
    return rep;
}

struct BetaRow {
    int q = 0;
    int dim_f = 0;
    BigInt homz_pq;  // multiplicity of Q among qualifying path targets
    // "loose": paths from Q whose non-final vertices stay in U, any endpoint.
    // "strict": same, but the endpoint must leave U.
    long long v_dim_loose = 0, rank_loose = 0, beta_loose = 0;
    long long v_dim_strict = 0, rank_strict = 0, beta_strict = 0;
};

struct BetaReport {
    std::string f_bits;
    BigInt h_loose, h_strict;
    std::optional<long long> direct_cc;  // ext route, when within caps
    std::vector<BetaRow> rows;           // rows with homz_pq > 0
};

namespace detail {

// Paths from Q whose every vertex except the last lies in `inside`.
inline void beta_paths_dfs(const Dag& dag, int at, const VertexBits& inside, long long cap,
                           Path& cur, std::vector<Path>& out) {
    if (static_cast<long long>(out.size()) >= cap) throw cap_exceeded("beta path enumeration cap");
    out.push_back(cur);
    if (!inside.test(at)) return;
    for (int e : dag.out_edges(at)) {
        cur.edges.push_back(e);
        beta_paths_dfs(dag, dag.target(e), inside, cap, cur, out);
        cur.edges.pop_back();
    }
}

template <class Scalar>
Mat<Scalar> composite_along(const Presheaf<Scalar>& F, const Path& path) {
    const Dag& dag = *F.dag();
    Mat<Scalar> m = Mat<Scalar>::Identity(F.dim(path.start), F.dim(path.start));
    for (int e : path.edges) m = m * F.map(e);  // contravariant: edges compose left to right
    return m;
}

}  // namespace detail

// The per-vertex weight beta(Q) = dim F(Q) + dim V(Q) - 2 rank(M), where
// V(Q) stacks F at the targets of the qualifying paths out of Q and M
// collects the composite maps back into F(Q).  h(f) then sums beta over
// the qualifying path targets below f.  Computed under both endpoint
// conventions, with the directly computed cc alongside.
template <class Scalar>
BetaReport beta_report(const CohomModel<Scalar>& model, const OpenSet& U, const BoolFun& f,
                       int dim_cap = 5000, long long path_cap = 100000) {
    const DagPtr& dag = model.cube.dag();
    const ClosedSet zf = closed_complement(model.cube, f);
    const ClosedSet ubar = complement(U);
    const auto homz = hom_z_counts_from(*dag, zf, model.base);

    BetaReport rep;
    rep.f_bits = f.bitstring();
    rep.h_loose = 0;
    rep.h_strict = 0;

    for (int q = 0; q < dag->vertex_count(); ++q) {
        if (homz[q] == 0 || !zf.members.test(q)) continue;  // targets stay on the closed side
        std::vector<Path> loose;
        Path cur{q, {}};
        detail::beta_paths_dfs(*dag, q, U.members, path_cap, cur, loose);

        BetaRow row;
        row.q = q;
        row.dim_f = model.F.dim(q);
        row.homz_pq = homz[q];

        const auto fill = [&](const std::vector<Path>& chis, long long& v_dim, long long& rank,
                              long long& beta) {
            v_dim = 0;
            for (const auto& chi : chis) v_dim += model.F.dim(chi.end(*dag));
            Mat<Scalar> m = Mat<Scalar>::Zero(model.F.dim(q), v_dim);
            long long off = 0;
            for (const auto& chi : chis) {
                const int d = model.F.dim(chi.end(*dag));
                if (d > 0) m.block(0, off, model.F.dim(q), d) = detail::composite_along(model.F, chi);
                off += d;
            }
            rank = rank_of<Scalar>(m);
            beta = model.F.dim(q) + v_dim - 2 * rank;
        };

        fill(loose, row.v_dim_loose, row.rank_loose, row.beta_loose);
        std::vector<Path> strict;
        for (const auto& chi : loose)
            if (ubar.members.test(chi.end(*dag))) strict.push_back(chi);
        fill(strict, row.v_dim_strict, row.rank_strict, row.beta_strict);

        rep.h_loose += homz[q] * BigInt(row.beta_loose);
        rep.h_strict += homz[q] * BigInt(row.beta_strict);
        rep.rows.push_back(std::move(row));
    }

    try {
        const OpenSet uf = smallest_open(model.cube, f);
        rep.direct_cc = ext_profile(model.F, kp_star_on<Scalar>(dag, model.base,
                                                                U.members & uf.members, dim_cap,
                                                                path_cap))
                            .cc();
    } catch (const cap_exceeded&) {
        rep.direct_cc = std::nullopt;
    }
    return rep;
}

}  // namespace andcc
