#pragma once

#include <stdexcept>
#include <vector>

#include "andcc/scalars.hpp"

namespace andcc {

enum class LpStatus { Optimal, Unbounded };

struct SimplexResult {
    LpStatus status = LpStatus::Optimal;
    Rational value;
    RationalVec x;  // primal solution, length n
    RationalVec y;  // dual multipliers, length m
};

// Dense tableau simplex over exact rationals for
//     maximize c^T x  subject to  A x <= b,  x >= 0,
// with b >= 0 so the slack basis is feasible and no phase one is needed.
// Bland's rule (smallest improving column; ties in the ratio test broken
// by smallest basis variable) guarantees termination.  The dual vector is
// read off the slack reduced costs, so value == b^T y == c^T x exactly.
inline SimplexResult simplex_max(const RationalMat& A, const RationalVec& b, const RationalVec& c) {
    const Eigen::Index m = A.rows(), n = A.cols();
    if (b.size() != m || c.size() != n) throw std::invalid_argument("simplex: shape mismatch");
    for (Eigen::Index i = 0; i < m; ++i)
        if (b(i) < 0) throw std::invalid_argument("simplex: requires b >= 0");

    RationalMat T = RationalMat::Zero(m, n + m + 1);
    T.block(0, 0, m, n) = A;
    for (Eigen::Index i = 0; i < m; ++i) T(i, n + i) = 1;
    T.col(n + m) = b;

    RationalVec red = RationalVec::Zero(n + m);
    red.head(n) = c;
    Rational objval = 0;
    std::vector<Eigen::Index> basis(m);
    for (Eigen::Index i = 0; i < m; ++i) basis[i] = n + i;

    for (;;) {
        Eigen::Index enter = -1;
        for (Eigen::Index j = 0; j < n + m; ++j) {
            if (red(j) > 0) {
                enter = j;
                break;
            }
        }
        if (enter < 0) break;  // optimal

        Eigen::Index leave = -1;
        Rational best_ratio = 0;
        for (Eigen::Index i = 0; i < m; ++i) {
            if (T(i, enter) <= 0) continue;
            const Rational ratio = T(i, n + m) / T(i, enter);
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0) {
            SimplexResult r;
            r.status = LpStatus::Unbounded;
            return r;
        }

        const Rational piv = T(leave, enter);
        T.row(leave) /= piv;
        for (Eigen::Index i = 0; i < m; ++i) {
            if (i == leave || T(i, enter) == 0) continue;
            const Rational f = T(i, enter);
            T.row(i) -= f * T.row(leave);
        }
        const Rational rc = red(enter);
        objval += rc * T(leave, n + m);
        for (Eigen::Index j = 0; j < n + m; ++j) {
            if (T(leave, j) != 0) red(j) -= rc * T(leave, j);
        }
        basis[leave] = enter;
    }

    SimplexResult r;
    r.status = LpStatus::Optimal;
    r.value = objval;
    r.x = RationalVec::Zero(n);
    for (Eigen::Index i = 0; i < m; ++i)
        if (basis[i] < n) r.x(basis[i]) = T(i, n + m);
    r.y = RationalVec::Zero(m);
    for (Eigen::Index i = 0; i < m; ++i) r.y(i) = -red(n + i);
    return r;
}

}  // namespace andcc
