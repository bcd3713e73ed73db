#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "andcc/boolfun.hpp"
#include "andcc/simplex.hpp"

namespace andcc {

// A target function together with the family it must be assembled from by
// conjunction.
struct AndInstance {
    BoolFun target;
    std::vector<BoolFun> family;

    AndInstance(BoolFun t, std::vector<BoolFun> fam)
        : target(std::move(t)), family(std::move(fam)) {
        if (family.empty()) throw std::invalid_argument("family must be nonempty");
        for (const auto& f : family) require_same_ground(target, f);
    }
};

// The cover program of an instance: admissible members (target <= f_i),
// the universe target^{-1}(0), and per-member coverage sets
// { s in universe : f_i(s) = 0 }.  Members with target !<= f_i never help
// and are dropped.
struct CoverProgram {
    BoolFun target;
    std::vector<int> admissible;             // ascending original family indices
    std::vector<int> universe;               // ascending element indices
    std::vector<std::vector<int>> coverage;  // parallel to admissible
};

inline CoverProgram build_program(const AndInstance& inst) {
    CoverProgram prog{inst.target, {}, {}, {}};
    const int n = inst.target.arity();
    for (int s = 0; s < n; ++s)
        if (!inst.target.value(s)) prog.universe.push_back(s);
    for (int i = 0; i < static_cast<int>(inst.family.size()); ++i) {
        if (!leq(inst.target, inst.family[i])) continue;
        prog.admissible.push_back(i);
        std::vector<int> cov;
        for (int s : prog.universe)
            if (!inst.family[i].value(s)) cov.push_back(s);
        prog.coverage.push_back(std::move(cov));
    }
    return prog;
}

inline bool covers_universe(const CoverProgram& prog) {
    std::vector<char> hit(prog.target.arity(), 0);
    for (const auto& cov : prog.coverage)
        for (int s : cov) hit[s] = 1;
    for (int s : prog.universe)
        if (!hit[s]) return false;
    return true;
}

// Minimum size of a conjunction; value is empty when the target is not a
// conjunction of admissible members at all.
struct SizeResult {
    std::optional<int> value;
    std::vector<int> witness;  // ascending original family indices
    bool infinite() const { return !value.has_value(); }
};

// Exact LP optimum with matching primal (mu, per admissible member) and
// dual (alpha, per universe element) solutions.
struct LpResult {
    std::optional<Rational> value;
    std::vector<Rational> primal;
    std::vector<Rational> dual;
    bool infinite() const { return !value.has_value(); }
};

inline BigInt ceil_rational(const Rational& r) {
    const BigInt num = numerator(r), den = denominator(r);
    if (num < 0) throw std::invalid_argument("ceil_rational: negative input");
    return (num + den - 1) / den;
}

// The covering LP is solved through its dual
//     max 1.alpha  s.t.  (coverage incidence)^T alpha <= 1, alpha >= 0,
// which is feasible at the origin, so one simplex run yields both optima
// (the primal mu appears as the multipliers of the dual constraints).
inline LpResult lp_bound(const CoverProgram& prog) {
    LpResult out;
    const int mr = static_cast<int>(prog.admissible.size());
    const int u = static_cast<int>(prog.universe.size());
    if (u == 0) {
        out.value = Rational(0);
        out.primal.assign(mr, Rational(0));
        return out;
    }
    if (!covers_universe(prog)) return out;  // primal infeasible, dual unbounded

    std::vector<int> pos(prog.target.arity(), -1);
    for (int s = 0; s < u; ++s) pos[prog.universe[s]] = s;

    RationalMat A = RationalMat::Zero(mr, u);
    for (int i = 0; i < mr; ++i)
        for (int s : prog.coverage[i]) A(i, pos[s]) = 1;

    const auto res = simplex_max(A, RationalVec::Constant(mr, 1), RationalVec::Constant(u, 1));
    if (res.status != LpStatus::Optimal)
        throw std::logic_error("covering LP must be bounded once every element is covered");
    out.value = res.value;
    out.dual.assign(u, Rational(0));
    for (int s = 0; s < u; ++s) out.dual[s] = res.x(s);
    out.primal.assign(mr, Rational(0));
    for (int i = 0; i < mr; ++i) out.primal[i] = res.y(i);
    return out;
}

namespace detail {

struct CoverSearch {
    std::vector<std::uint64_t> masks;  // per admissible position
    std::uint64_t full = 0;
    int max_cov = 1;

    int lower_bound(std::uint64_t covered) const {
        const int missing = std::popcount(full & ~covered);
        return (missing + max_cov - 1) / max_cov;
    }
};

inline void best_size_dfs(const CoverSearch& cs, const std::vector<int>& order,
                          const std::vector<std::uint64_t>& suffix_union, std::size_t pos,
                          int count, std::uint64_t covered, int& best) {
    if (covered == cs.full) {
        best = std::min(best, count);
        return;
    }
    if (pos == order.size()) return;
    if ((covered | suffix_union[pos]) != cs.full) return;
    if (count + cs.lower_bound(covered) >= best) return;
    best_size_dfs(cs, order, suffix_union, pos + 1, count + 1,
                  covered | cs.masks[order[pos]], best);
    best_size_dfs(cs, order, suffix_union, pos + 1, count, covered, best);
}

inline bool lex_witness_dfs(const CoverSearch& cs, const std::vector<std::uint64_t>& suffix_union,
                            std::size_t pos, int budget, std::uint64_t covered,
                            std::vector<int>& chosen) {
    if (covered == cs.full) return true;
    if (pos == cs.masks.size()) return false;
    if ((covered | suffix_union[pos]) != cs.full) return false;
    if (cs.lower_bound(covered) > budget) return false;
    if (budget > 0) {
        chosen.push_back(static_cast<int>(pos));
        if (lex_witness_dfs(cs, suffix_union, pos + 1, budget - 1, covered | cs.masks[pos], chosen))
            return true;
        chosen.pop_back();
    }
    return lex_witness_dfs(cs, suffix_union, pos + 1, budget, covered, chosen);
}

}  // namespace detail

// Branch-and-bound exact minimum cover.  The search explores members by
// decreasing coverage, pruned by a greedy upper bound, a counting lower
// bound and the LP bound at the root; a second pass in original index
// order extracts the lexicographically smallest optimal witness.
inline SizeResult exact_size(const AndInstance& inst) {
    const CoverProgram prog = build_program(inst);
    const int mr = static_cast<int>(prog.admissible.size());
    const int u = static_cast<int>(prog.universe.size());
    if (u == 0) return {0, {}};
    if (!covers_universe(prog)) return {std::nullopt, {}};

    std::vector<int> pos(prog.target.arity(), -1);
    for (int s = 0; s < u; ++s) pos[prog.universe[s]] = s;

    detail::CoverSearch cs;
    cs.full = u == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << u) - 1);
    cs.masks.resize(mr);
    for (int i = 0; i < mr; ++i)
        for (int s : prog.coverage[i]) cs.masks[i] |= std::uint64_t{1} << pos[s];
    for (int i = 0; i < mr; ++i)
        cs.max_cov = std::max(cs.max_cov, std::popcount(cs.masks[i]));

    // Greedy upper bound.
    int greedy = 0;
    {
        std::uint64_t covered = 0;
        while (covered != cs.full) {
            int best_i = -1, best_gain = -1;
            for (int i = 0; i < mr; ++i) {
                const int gain = std::popcount(cs.masks[i] & ~covered);
                if (gain > best_gain) {
                    best_gain = gain;
                    best_i = i;
                }
            }
            covered |= cs.masks[best_i];
            ++greedy;
        }
    }

    int best = greedy;
    const LpResult lp = lp_bound(prog);
    const BigInt lp_lower = ceil_rational(*lp.value);
    if (BigInt(best) > lp_lower) {
        std::vector<int> order(mr);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return std::popcount(cs.masks[a]) > std::popcount(cs.masks[b]);
        });
        std::vector<std::uint64_t> suffix(mr + 1, 0);
        for (int i = mr - 1; i >= 0; --i) suffix[i] = suffix[i + 1] | cs.masks[order[i]];
        detail::best_size_dfs(cs, order, suffix, 0, 0, 0, best);
    }

    // Lexicographically smallest witness of the optimal size.
    std::vector<std::uint64_t> suffix(mr + 1, 0);
    for (int i = mr - 1; i >= 0; --i) suffix[i] = suffix[i + 1] | cs.masks[i];
    std::vector<int> chosen;
    if (!detail::lex_witness_dfs(cs, suffix, 0, best, 0, chosen))
        throw std::logic_error("optimal cover disappeared in witness pass");

    SizeResult out;
    out.value = best;
    for (int p : chosen) out.witness.push_back(prog.admissible[p]);
    return out;
}

// For each admissible member, the universe elements that demand it:
// f_i(s) = 0 while every other admissible f_j has f_j(s) = 1.  Returned
// parallel to prog.admissible.
inline std::vector<std::vector<int>> demanders(const CoverProgram& prog) {
    const int mr = static_cast<int>(prog.admissible.size());
    std::vector<std::vector<int>> dem(mr);
    std::vector<int> pos(prog.target.arity(), -1);
    for (int s = 0; s < static_cast<int>(prog.universe.size()); ++s) pos[prog.universe[s]] = s;

    std::vector<int> zero_count(prog.universe.size(), 0);
    std::vector<int> zero_member(prog.universe.size(), -1);
    for (int i = 0; i < mr; ++i) {
        for (int s : prog.coverage[i]) {
            ++zero_count[pos[s]];
            zero_member[pos[s]] = i;
        }
    }
    for (std::size_t k = 0; k < prog.universe.size(); ++k)
        if (zero_count[k] == 1) dem[zero_member[k]].push_back(prog.universe[k]);
    return dem;
}

// 0/1 dual certificate that forces LP = ILP = |R|: one demander chosen per
// admissible member.  Requires a feasible cover; a demanded member with an
// uncoverable element elsewhere certifies nothing (both bounds are then
// infinite).
struct ExactnessCertificate {
    std::vector<Rational> alpha;  // per universe element
    std::vector<int> chosen;      // chosen demander per admissible member
    int value = 0;                // |R|
};

inline std::optional<ExactnessCertificate> exactness_certificate(const CoverProgram& prog) {
    if (!covers_universe(prog)) return std::nullopt;
    const auto dem = demanders(prog);
    for (const auto& d : dem)
        if (d.empty()) return std::nullopt;

    ExactnessCertificate cert;
    cert.value = static_cast<int>(prog.admissible.size());
    cert.alpha.assign(prog.universe.size(), Rational(0));
    std::vector<int> pos(prog.target.arity(), -1);
    for (int s = 0; s < static_cast<int>(prog.universe.size()); ++s) pos[prog.universe[s]] = s;
    for (const auto& d : dem) {
        cert.chosen.push_back(d.front());
        cert.alpha[pos[d.front()]] = 1;
    }
    return cert;
}

// Ground set whose elements are the 2^n points of {0,1}^n, named by their
// n-bit strings in increasing binary order (coordinate 1 first).
inline GroundSetPtr cube_points_ground(int n) {
    if (n < 1 || n > 5) throw std::invalid_argument("cube_points_ground: n must be in 1..5");
    std::vector<std::string> names;
    names.reserve(std::size_t{1} << n);
    for (std::uint64_t p = 0; p < (std::uint64_t{1} << n); ++p) {
        std::string t(n, '0');
        for (int k = 0; k < n; ++k)
            if ((p >> (n - 1 - k)) & 1) t[k] = '1';
        names.push_back(std::move(t));
    }
    return make_ground(std::move(names));
}

// The literal x_{coord+1} (or its negation) as a function of the point.
inline BoolFun literal_fun(const GroundSetPtr& ground, int coord, bool positive) {
    std::string bits(ground->size(), '0');
    for (int i = 0; i < ground->size(); ++i) {
        const bool on = ground->name(i).at(coord) == '1';
        bits[i] = (on == positive) ? '1' : '0';
    }
    return BoolFun::from_bitstring(ground, bits);
}

struct LiteralFamilyResult {
    std::vector<BoolFun> leftover;       // literals >= f, in x_1, !x_1, x_2, ... order
    std::vector<std::string> names;      // printable names, parallel to leftover
    SizeResult size;
    LpResult lp;
};

// The literal-family special case: the candidate family is all 2n literals
// over {0,1}^n; constants and literals not above f are discarded.
inline LiteralFamilyResult literal_size(int n, const BoolFun& f, int size_limit = 20) {
    if ((1 << n) > size_limit)
        throw std::invalid_argument("literal_size: 2^n exceeds the configured ground limit");
    const GroundSetPtr ground = cube_points_ground(n);
    if (!(*ground == *f.ground()))
        throw std::invalid_argument("literal_size: f must live on the full point cube");

    LiteralFamilyResult out;
    for (int k = 0; k < n; ++k) {
        for (bool positive : {true, false}) {
            BoolFun lit = literal_fun(ground, k, positive);
            if (!leq(f, lit)) continue;
            out.names.push_back((positive ? "x" : "!x") + std::to_string(k + 1));
            out.leftover.push_back(std::move(lit));
        }
    }
    if (out.leftover.empty()) {
        if (f == BoolFun::constant(ground, true)) {
            out.size = {0, {}};
            out.lp.value = Rational(0);
        }
        return out;  // otherwise both infinite
    }
    AndInstance inst(f, out.leftover);
    out.size = exact_size(inst);
    out.lp = lp_bound(build_program(inst));
    return out;
}

}  // namespace andcc
