#pragma once

#include "andcc/scalars.hpp"

namespace andcc {

// Rank by Gaussian elimination over an exact field.  Any nonzero pivot is
// valid; no magnitude-based pivoting is needed (or meaningful, for F_p).
template <class Scalar>
int rank_of(Mat<Scalar> m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    int r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = r; i < rows; ++i) {
            if (m(i, c) != Scalar(0)) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != r) m.row(piv).swap(m.row(r));
        const Scalar inv = Scalar(1) / m(r, c);
        for (Eigen::Index i = r + 1; i < rows; ++i) {
            if (m(i, c) == Scalar(0)) continue;
            const Scalar f = m(i, c) * inv;
            m.row(i).tail(cols - c) -= f * m.row(r).tail(cols - c);
        }
        ++r;
    }
    return r;
}

template <class Scalar>
bool is_zero_matrix(const Mat<Scalar>& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (m(i, j) != Scalar(0)) return false;
    return true;
}

template <class Scalar>
Mat<Scalar> kron(const Mat<Scalar>& a, const Mat<Scalar>& b) {
    Mat<Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

}  // namespace andcc
