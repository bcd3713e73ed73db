#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "andcc/boolfun.hpp"
#include "andcc/freecat.hpp"
#include "andcc/scalars.hpp"
#include "andcc/setcover.hpp"

namespace andcc {

// A nonnegative-rational function of Boolean functions.  Evaluations are
// memoized by canonical index behind a mutex (single writer per key);
// copies of a Measure share the cache.
class Measure {
public:
    Measure(std::string name, std::function<Rational(const BoolFun&)> eval)
        : name_(std::move(name)), eval_(std::move(eval)), memo_(std::make_shared<Memo>()) {}

    Rational operator()(const BoolFun& f) const {
        std::lock_guard<std::mutex> lock(memo_->guard);
        auto it = memo_->table.find(f.canonical_index());
        if (it != memo_->table.end()) return it->second;
        Rational v = eval_(f);
        if (v < 0) throw std::logic_error("measure produced a negative value");
        memo_->table.emplace(f.canonical_index(), v);
        return v;
    }

    const std::string& name() const { return name_; }

private:
    struct Memo {
        std::mutex guard;
        std::unordered_map<std::uint64_t, Rational> table;
    };
    std::string name_;
    std::function<Rational(const BoolFun&)> eval_;
    std::shared_ptr<Memo> memo_;
};

// All values in canonical order of B^S.
inline std::vector<Rational> tabulate(const Measure& h, const GroundSetPtr& ground, int limit = 20) {
    const int n = ground->size();
    if (n > limit) throw std::invalid_argument("tabulate: ground set too large");
    std::vector<Rational> table;
    table.reserve(std::size_t{1} << n);
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i)
        table.push_back(h(BoolFun(ground, i)));
    return table;
}

struct AndMeasureCheck {
    bool ok = true;
    std::optional<std::pair<BoolFun, BoolFun>> witness;  // first violating pair
};

// Subadditivity h(f ^ g) <= h(f) + h(g) over all pairs of B^S.
inline AndMeasureCheck check_and_measure(const Measure& h, const GroundSetPtr& ground, int limit = 12) {
    const int n = ground->size();
    if (n > limit) throw std::invalid_argument("check_and_measure: ground set too large");
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<Rational> table;
    table.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) table.push_back(h(BoolFun(ground, i)));
    for (std::uint64_t a = 0; a < count; ++a) {
        for (std::uint64_t b = a; b < count; ++b) {
            if (table[a & b] > table[a] + table[b])
                return {false, std::make_pair(BoolFun(ground, a), BoolFun(ground, b))};
        }
    }
    return {};
}

// h(target) / max_i h(f_i).  Empty when the denominator is zero while the
// numerator is not: every family member is free under h, so the bound is
// vacuously infinite and reported as such rather than as a number.
inline std::optional<Rational> size_lower_bound(const Measure& h, const AndInstance& inst) {
    Rational m = 0;
    for (const auto& f : inst.family) m = std::max(m, h(f));
    const Rational ht = h(inst.target);
    if (m == 0) {
        if (ht == 0) return Rational(0);
        return std::nullopt;
    }
    return ht / m;
}

class negation_asymmetry : public std::runtime_error {
public:
    negation_asymmetry(std::string msg, BoolFun w)
        : std::runtime_error(std::move(msg)), witness(std::move(w)) {}
    BoolFun witness;
};

struct DepthBound {
    Rational ratio;                      // h(target) / M
    std::optional<long long> exact_log2; // present when ratio is a power of two
    std::pair<long long, long long> bracket;  // 2^lo <= ratio < 2^hi, hi = lo + 1
};

namespace detail {
inline Rational pow2(long long k) {
    BigInt one = 1;
    if (k >= 0) return Rational(one << static_cast<unsigned>(k));
    return Rational(one, one << static_cast<unsigned>(-k));
}
}  // namespace detail

// log2 of the size bound, kept exact: an integer when the ratio is a power
// of two, otherwise the unit bracket around it.  Requires h(f) = h(!f),
// checked exhaustively when the ground set is small and on the instance's
// functions (and their negations) otherwise.
inline DepthBound depth_lower_bound(const Measure& h, const AndInstance& inst, int check_limit = 12) {
    const GroundSetPtr& ground = inst.target.ground();
    if (ground->size() <= check_limit) {
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << ground->size()); ++i) {
            const BoolFun f(ground, i);
            if (h(f) != h(neg(f)))
                throw negation_asymmetry("measure is not negation-symmetric at " + f.bitstring(), f);
        }
    } else {
        std::vector<BoolFun> probe = inst.family;
        probe.push_back(inst.target);
        for (const auto& f : probe)
            if (h(f) != h(neg(f)))
                throw negation_asymmetry("measure is not negation-symmetric at " + f.bitstring(), f);
    }

    Rational m = 0;
    for (const auto& f : inst.family) m = std::max(m, h(f));
    if (m == 0 || h(inst.target) == 0)
        throw std::domain_error("depth bound requires h(target)/M > 0");
    const Rational ratio = h(inst.target) / m;

    long long lo = 0;
    while (detail::pow2(lo + 1) <= ratio) ++lo;
    while (detail::pow2(lo) > ratio) --lo;
    DepthBound out;
    out.ratio = ratio;
    out.bracket = {lo, lo + 1};
    if (detail::pow2(lo) == ratio) out.exact_log2 = lo;
    return out;
}

// Is the complement of B closed under conjunction?  Equivalently:
// f ^ g in B implies f in B or g in B.
inline bool is_conj_closed_complement(const std::vector<BoolFun>& B, const GroundSetPtr& ground,
                                      int limit = 12) {
    const int n = ground->size();
    if (n > limit) throw std::invalid_argument("is_conj_closed_complement: ground set too large");
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<char> in_b(count, 0);
    for (const auto& f : B) {
        if (!(*f.ground() == *ground)) throw std::invalid_argument("member on a different ground set");
        in_b[f.canonical_index()] = 1;
    }
    std::vector<std::uint64_t> comp;
    for (std::uint64_t i = 0; i < count; ++i)
        if (!in_b[i]) comp.push_back(i);
    for (std::uint64_t a : comp)
        for (std::uint64_t b : comp)
            if (in_b[a & b]) return false;
    return true;
}

// Characteristic measure of a conjunctively closed complement.
inline Measure chi_measure(const std::vector<BoolFun>& B, const GroundSetPtr& ground, int limit = 12) {
    if (!is_conj_closed_complement(B, ground, limit))
        throw std::invalid_argument("chi_measure: complement of B is not closed under conjunction");
    auto in_b = std::make_shared<std::vector<char>>(std::size_t{1} << ground->size(), 0);
    for (const auto& f : B) (*in_b)[f.canonical_index()] = 1;
    return Measure("chi", [in_b](const BoolFun& f) -> Rational {
        return Rational((*in_b)[f.canonical_index()] ? 1 : 0);
    });
}

// Nonnegative linear combination of measures, itself a measure.
inline Measure scaled_sum(std::vector<std::pair<Rational, Measure>> parts, std::string name = "sum") {
    for (const auto& [coeff, part] : parts)
        if (coeff < 0) throw std::invalid_argument("scaled_sum: negative coefficient");
    auto shared = std::make_shared<std::vector<std::pair<Rational, Measure>>>(std::move(parts));
    return Measure(std::move(name), [shared](const BoolFun& f) -> Rational {
        Rational v = 0;
        for (const auto& [coeff, part] : *shared) v += coeff * part(f);
        return v;
    });
}

// The measure g |-> sum_s A_s (1 - g(s)): weight A_s collected wherever g
// vanishes.
inline Measure zero_weight_measure(const GroundSetPtr& ground, std::vector<Rational> weights) {
    if (static_cast<int>(weights.size()) != ground->size())
        throw std::invalid_argument("zero_weight_measure: weight count mismatch");
    for (const auto& w : weights)
        if (w < 0) throw std::invalid_argument("zero_weight_measure: negative weight");
    auto shared = std::make_shared<std::vector<Rational>>(std::move(weights));
    return Measure("zero-weight", [ground, shared](const BoolFun& g) -> Rational {
        Rational v = 0;
        for (int s = 0; s < ground->size(); ++s)
            if (!g.value(s)) v += (*shared)[s];
        return v;
    });
}

// Nonnegative weights on finitely many cube paths from a base vertex.
struct PathMeasure {
    CubeCat cube;
    int base;
    std::vector<std::pair<Path, Rational>> weights;

    PathMeasure(CubeCat c, int base_vertex, std::vector<std::pair<Path, Rational>> w)
        : cube(std::move(c)), base(base_vertex), weights(std::move(w)) {
        for (const auto& [path, weight] : weights) {
            if (weight < 0) throw std::invalid_argument("path weight must be nonnegative");
            if (path.start != base || !is_valid_path(*cube.dag(), path))
                throw std::invalid_argument("weighted path does not start at the base vertex");
        }
    }
};

// h(f) = sum of A over the weighted paths lying in Hom_{Z_f}(base, .): every
// vertex except the last stays below f, and the endpoint does not (path
// target sets always restrict to the closed side).  The zero-length path
// therefore counts exactly when the base itself escapes the downset of f.
inline Measure path_measure(const PathMeasure& pm) {
    auto shared = std::make_shared<PathMeasure>(pm);
    return Measure("path", [shared](const BoolFun& f) -> Rational {
        const Dag& dag = *shared->cube.dag();
        const std::uint64_t fbits = f.canonical_index();
        Rational v = 0;
        for (const auto& [path, weight] : shared->weights) {
            bool qualifies = true;
            std::uint64_t at = static_cast<std::uint64_t>(path.start);
            for (int e : path.edges) {
                if ((at & ~fbits) != 0) {  // a non-final vertex escaped U_f
                    qualifies = false;
                    break;
                }
                at = static_cast<std::uint64_t>(dag.target(e));
            }
            if (qualifies && (at & ~fbits) != 0) v += weight;  // endpoint in Z_f
        }
        return v;
    });
}

}  // namespace andcc
