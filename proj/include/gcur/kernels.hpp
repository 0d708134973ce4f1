#pragma once

#include <Eigen/Dense>

#include "gcur/matrix.hpp"

namespace gcur {

namespace detail {

using EigenMap = Eigen::Map<Eigen::MatrixXd>;
using ConstEigenMap = Eigen::Map<const Eigen::MatrixXd>;

inline ConstEigenMap as_eigen(const DenseMatrix& m) {
    return ConstEigenMap(m.data(), static_cast<Eigen::Index>(m.rows()),
                         static_cast<Eigen::Index>(m.cols()));
}

inline EigenMap as_eigen(DenseMatrix& m) {
    return EigenMap(m.data(), static_cast<Eigen::Index>(m.rows()),
                    static_cast<Eigen::Index>(m.cols()));
}

}  // namespace detail

/// a*b via Eigen GEMM. Fast path for factor assembly and error evaluation,
/// where no cross-path bit-identity is promised.
inline DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matmul: inner dimensions differ");
    DenseMatrix out(a.rows(), b.cols());
    detail::as_eigen(out).noalias() = detail::as_eigen(a) * detail::as_eigen(b);
    return out;
}

/// acc(acc_row0+i, j) += (l_mat * r)(i, j), accumulating each entry strictly
/// in inner-index order: the loop nest is j-w-i, so entry (i,j) receives its
/// w-terms one at a time, in order, no matter how the inner dimension is
/// split into blocks. That makes streamed (block-accumulated) and in-memory
/// sketches identical bit for bit at every block size, while the contiguous
/// i-axpy in the innermost loop keeps the kernel fast.
inline void seq_gemm(DenseMatrix& acc, const DenseMatrix& l_mat, const DenseMatrix& r,
                     std::size_t acc_row0 = 0) {
    const std::size_t m = l_mat.rows(), k = l_mat.cols(), n = r.cols();
    if (acc_row0 + m > acc.rows() || acc.cols() != n || r.rows() != k)
        throw DimensionMismatch("seq_gemm: shape mismatch");
    // tile the output columns so each l_mat column is streamed once per tile
    // instead of once per column; within an entry the additions still run in
    // ascending w, so tiling never changes a bit
    constexpr std::size_t tile = 8;
    for (std::size_t j0 = 0; j0 < n; j0 += tile) {
        const std::size_t j1 = std::min(j0 + tile, n);
        for (std::size_t w = 0; w < k; ++w) {
            const double* lw = l_mat.col(w);
            for (std::size_t j = j0; j < j1; ++j) {
                double* accj = acc.col(j) + acc_row0;
                const double rwj = r.col(j)[w];
                for (std::size_t i = 0; i < m; ++i) accj[i] += lw[i] * rwj;
            }
        }
    }
}

/// Deterministic product a*b built on seq_gemm. Used where streamed and
/// in-memory paths must agree bit for bit.
inline DenseMatrix seq_matmul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("seq_matmul: inner dimensions differ");
    DenseMatrix acc(a.rows(), b.cols());
    seq_gemm(acc, a, b);
    return acc;
}

}  // namespace gcur
