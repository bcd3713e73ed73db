#pragma once

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "andcc/boolfun.hpp"
#include "andcc/config.hpp"
#include "andcc/scalars.hpp"

namespace andcc {

using VertexBits = boost::dynamic_bitset<>;

// Finite directed acyclic multigraph.  Its free category has the vertices
// as objects and the directed paths (identities included) as morphisms;
// acyclicity is what keeps every Hom set finite.
class Dag {
public:
    Dag(int vertex_count, std::vector<std::pair<int, int>> edges)
        : n_(vertex_count), edges_(std::move(edges)), out_(n_), in_(n_) {
        if (n_ < 0) throw std::invalid_argument("negative vertex count");
        for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
            const auto [u, v] = edges_[e];
            if (u < 0 || u >= n_ || v < 0 || v >= n_)
                throw std::invalid_argument("edge endpoint out of range");
            out_[u].push_back(e);
            in_[v].push_back(e);
        }
        // Kahn topological sort doubles as the acyclicity check.
        std::vector<int> indeg(n_, 0);
        for (const auto& [u, v] : edges_) ++indeg[v];
        std::vector<int> queue;
        for (int v = 0; v < n_; ++v)
            if (indeg[v] == 0) queue.push_back(v);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            topo_.push_back(v);
            for (int e : out_[v])
                if (--indeg[edges_[e].second] == 0) queue.push_back(edges_[e].second);
        }
        if (static_cast<int>(topo_.size()) != n_)
            throw std::invalid_argument("graph has a cycle");
        topo_pos_.resize(n_);
        for (int i = 0; i < n_; ++i) topo_pos_[topo_[i]] = i;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int source(int e) const { return edges_.at(e).first; }
    int target(int e) const { return edges_.at(e).second; }
    const std::vector<int>& out_edges(int v) const { return out_.at(v); }
    const std::vector<int>& in_edges(int v) const { return in_.at(v); }
    const std::vector<int>& topological_order() const { return topo_; }
    int topological_position(int v) const { return topo_pos_.at(v); }

    bool operator==(const Dag& o) const { return n_ == o.n_ && edges_ == o.edges_; }
    bool operator!=(const Dag& o) const { return !(*this == o); }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> out_, in_;
    std::vector<int> topo_, topo_pos_;
};

using DagPtr = std::shared_ptr<const Dag>;

inline DagPtr make_dag(int vertex_count, std::vector<std::pair<int, int>> edges) {
    return std::make_shared<const Dag>(vertex_count, std::move(edges));
}

// A morphism of the free category: a start vertex and a composable edge
// sequence.  The empty sequence is the identity at start.
struct Path {
    int start = 0;
    std::vector<int> edges;

    int end(const Dag& dag) const { return edges.empty() ? start : dag.target(edges.back()); }
    std::size_t length() const { return edges.size(); }

    bool operator==(const Path& o) const { return start == o.start && edges == o.edges; }
};

inline bool is_valid_path(const Dag& dag, const Path& p) {
    int at = p.start;
    if (at < 0 || at >= dag.vertex_count()) return false;
    for (int e : p.edges) {
        if (e < 0 || e >= dag.edge_count() || dag.source(e) != at) return false;
        at = dag.target(e);
    }
    return true;
}

// Sieve condition: every edge into the set starts inside it.
inline bool is_open(const Dag& dag, const VertexBits& bits) {
    for (const auto& [u, v] : dag.edges())
        if (bits.test(v) && !bits.test(u)) return false;
    return true;
}

// Complementary condition: every edge out of the set ends inside it.
inline bool is_closed(const Dag& dag, const VertexBits& bits) {
    for (const auto& [u, v] : dag.edges())
        if (bits.test(u) && !bits.test(v)) return false;
    return true;
}

struct OpenSet {
    VertexBits members;

    OpenSet(const Dag& dag, VertexBits bits) : members(std::move(bits)) {
        if (members.size() != static_cast<std::size_t>(dag.vertex_count()))
            throw std::invalid_argument("vertex set size mismatch");
        if (!is_open(dag, members)) throw std::invalid_argument("set is not open (not a sieve)");
    }
    static OpenSet unchecked(VertexBits bits) {
        OpenSet s;
        s.members = std::move(bits);
        return s;
    }

private:
    OpenSet() = default;
};

struct ClosedSet {
    VertexBits members;

    ClosedSet(const Dag& dag, VertexBits bits) : members(std::move(bits)) {
        if (members.size() != static_cast<std::size_t>(dag.vertex_count()))
            throw std::invalid_argument("vertex set size mismatch");
        if (!is_closed(dag, members)) throw std::invalid_argument("set is not closed");
    }
    static ClosedSet unchecked(VertexBits bits) {
        ClosedSet s;
        s.members = std::move(bits);
        return s;
    }

private:
    ClosedSet() = default;
};

inline ClosedSet complement(const OpenSet& u) { return ClosedSet::unchecked(~u.members); }
inline OpenSet complement(const ClosedSet& z) { return OpenSet::unchecked(~z.members); }

// Smallest open superset: add predecessors until stable.
inline OpenSet predecessor_closure(const Dag& dag, VertexBits bits) {
    const auto& order = dag.topological_order();
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
        const int v = order[i];
        if (!bits.test(v)) continue;
        for (int e : dag.in_edges(v)) bits.set(dag.source(e));
    }
    return OpenSet::unchecked(std::move(bits));
}

// Smallest closed superset: add successors until stable.
inline ClosedSet successor_closure(const Dag& dag, VertexBits bits) {
    for (int v : dag.topological_order()) {
        if (!bits.test(v)) continue;
        for (int e : dag.out_edges(v)) bits.set(dag.target(e));
    }
    return ClosedSet::unchecked(std::move(bits));
}

// Path counts from P to every vertex, exact.  Counts grow factorially on
// cubes, hence arbitrary precision.
inline std::vector<BigInt> hom_counts_from(const Dag& dag, int P) {
    if (P < 0 || P >= dag.vertex_count()) throw std::out_of_range("vertex out of range");
    std::vector<BigInt> cnt(dag.vertex_count(), BigInt(0));
    cnt[P] = 1;
    for (int v : dag.topological_order()) {
        if (cnt[v] == 0) continue;
        for (int e : dag.out_edges(v)) cnt[dag.target(e)] += cnt[v];
    }
    return cnt;
}

inline BigInt hom_count(const Dag& dag, int P, int Q) {
    if (Q < 0 || Q >= dag.vertex_count()) throw std::out_of_range("vertex out of range");
    return hom_counts_from(dag, P)[Q];
}

// Path counts from every vertex to Q.
inline std::vector<BigInt> hom_counts_to(const Dag& dag, int Q) {
    if (Q < 0 || Q >= dag.vertex_count()) throw std::out_of_range("vertex out of range");
    std::vector<BigInt> cnt(dag.vertex_count(), BigInt(0));
    cnt[Q] = 1;
    const auto& order = dag.topological_order();
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
        const int v = order[i];
        for (int e : dag.out_edges(v)) cnt[v] += cnt[dag.target(e)];
    }
    return cnt;
}

// Counts of paths from P whose every vertex except the last lies outside
// the closed set Z.  The endpoint itself is unconstrained: the zero-length
// path always qualifies, so the count at Q = P is 1 even when P lies in Z,
// and 0 at every other Q when P lies in Z.
inline std::vector<BigInt> hom_z_counts_from(const Dag& dag, const ClosedSet& Z, int P) {
    if (P < 0 || P >= dag.vertex_count()) throw std::out_of_range("vertex out of range");
    if (Z.members.size() != static_cast<std::size_t>(dag.vertex_count()))
        throw std::invalid_argument("closed set size mismatch");
    // outside[v]: paths P -> v with every vertex (v included) outside Z.
    std::vector<BigInt> outside(dag.vertex_count(), BigInt(0));
    if (!Z.members.test(P)) outside[P] = 1;
    for (int v : dag.topological_order()) {
        if (Z.members.test(v) || outside[v] == 0) continue;
        for (int e : dag.out_edges(v)) {
            const int w = dag.target(e);
            if (!Z.members.test(w)) outside[w] += outside[v];
        }
    }
    std::vector<BigInt> cnt(dag.vertex_count(), BigInt(0));
    cnt[P] = 1;
    for (int e = 0; e < dag.edge_count(); ++e) {
        const int u = dag.source(e), w = dag.target(e);
        if (!Z.members.test(u)) cnt[w] += outside[u];
    }
    return cnt;
}

inline BigInt hom_z_count(const Dag& dag, const ClosedSet& Z, int P, int Q) {
    if (Q < 0 || Q >= dag.vertex_count()) throw std::out_of_range("vertex out of range");
    return hom_z_counts_from(dag, Z, P)[Q];
}

namespace detail {

// Vertices from which some vertex of `targets` is reachable.
inline VertexBits reaches(const Dag& dag, const VertexBits& targets) {
    VertexBits r = targets;
    const auto& order = dag.topological_order();
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
        const int v = order[i];
        for (int e : dag.out_edges(v))
            if (r.test(dag.target(e))) r.set(v);
    }
    return r;
}

inline void enumerate_dfs(const Dag& dag, int at, const VertexBits& store,
                          const VertexBits& useful, long long cap, Path& cur,
                          std::vector<std::vector<Path>>& out, long long& stored) {
    if (store.test(at)) {
        if (++stored > cap) throw cap_exceeded("path enumeration exceeded cap");
        out[at].push_back(cur);
    }
    for (int e : dag.out_edges(at)) {
        const int w = dag.target(e);
        if (!useful.test(w)) continue;
        cur.edges.push_back(e);
        enumerate_dfs(dag, w, store, useful, cap, cur, out, stored);
        cur.edges.pop_back();
    }
}

}  // namespace detail

// All paths from P ending in `targets`, grouped by endpoint, each group in
// lexicographic order of its edge-index sequences.  The DFS is pruned to
// vertices that can still reach a target, so the work stays proportional
// to the output.
inline std::vector<std::vector<Path>> enumerate_paths_grouped(const Dag& dag, int P,
                                                              const VertexBits& targets,
                                                              long long cap) {
    if (P < 0 || P >= dag.vertex_count()) throw std::out_of_range("vertex out of range");
    std::vector<std::vector<Path>> out(dag.vertex_count());
    const VertexBits useful = detail::reaches(dag, targets);
    if (!useful.test(P)) return out;
    Path cur{P, {}};
    long long stored = 0;
    detail::enumerate_dfs(dag, P, targets, useful, cap, cur, out, stored);
    return out;
}

inline std::vector<Path> enumerate_paths(const Dag& dag, int P, int Q, long long cap) {
    if (Q < 0 || Q >= dag.vertex_count()) throw std::out_of_range("vertex out of range");
    VertexBits targets(dag.vertex_count());
    targets.set(Q);
    return std::move(enumerate_paths_grouped(dag, P, targets, cap)[Q]);
}

// The monotone cube on a ground set: one vertex per element of B^S in
// canonical order, one edge f -> g whenever g is f with exactly one value
// raised to 1.  Edges are ordered by (source, raised element).
class CubeCat {
public:
    explicit CubeCat(GroundSetPtr ground, int size_limit = 20) : ground_(std::move(ground)) {
        const int n = ground_->size();
        if (n > size_limit)
            throw std::invalid_argument("ground set exceeds configured cube limit");
        const std::uint64_t count = std::uint64_t{1} << n;
        std::vector<std::pair<int, int>> edges;
        for (std::uint64_t f = 0; f < count; ++f) {
            for (int i = 0; i < n; ++i) {
                const std::uint64_t bit = std::uint64_t{1} << (n - 1 - i);
                if (!(f & bit)) edges.emplace_back(static_cast<int>(f), static_cast<int>(f | bit));
            }
        }
        dag_ = make_dag(static_cast<int>(count), std::move(edges));
    }

    const GroundSetPtr& ground() const { return ground_; }
    const DagPtr& dag() const { return dag_; }
    int vertex_count() const { return dag_->vertex_count(); }

    int vertex_of(const BoolFun& f) const {
        if (!(*f.ground() == *ground_)) throw std::invalid_argument("function on a different ground set");
        return static_cast<int>(f.canonical_index());
    }
    BoolFun fun_of(int vertex) const {
        return BoolFun(ground_, static_cast<std::uint64_t>(vertex));
    }

private:
    GroundSetPtr ground_;
    DagPtr dag_;
};

// U_f = { g : g <= f }, the smallest open set containing f.
inline OpenSet smallest_open(const CubeCat& cube, const BoolFun& f) {
    VertexBits bits(cube.vertex_count());
    const std::uint64_t fbits = f.canonical_index();
    for (int v = 0; v < cube.vertex_count(); ++v)
        if ((static_cast<std::uint64_t>(v) & ~fbits) == 0) bits.set(v);
    return OpenSet::unchecked(std::move(bits));
}

// Z_f, the complement of U_f.
inline ClosedSet closed_complement(const CubeCat& cube, const BoolFun& f) {
    return complement(smallest_open(cube, f));
}

// A subcube: the functions agreeing with a partial assignment.
struct Subcube {
    GroundSetPtr ground;
    std::vector<std::pair<int, bool>> fixed;  // (element index, forced value)

    bool contains(const BoolFun& f) const {
        for (const auto& [i, v] : fixed)
            if (f.value(i) != v) return false;
        return true;
    }

    VertexBits members(const CubeCat& cube) const {
        VertexBits bits(cube.vertex_count());
        for (int v = 0; v < cube.vertex_count(); ++v)
            if (contains(cube.fun_of(v))) bits.set(v);
        return bits;
    }
};

}  // namespace andcc
