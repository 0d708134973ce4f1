#pragma once

#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "gcur/kernels.hpp"
#include "gcur/matrix.hpp"

namespace gcur {

/// Column-pivoted QR of an m x n matrix.
///
/// q has orthonormal columns (m x r, r = min(m,n)); t is r x n upper
/// triangular with exact zeros below the diagonal and non-increasing
/// |t(i,i)|; perm is the full pivot order J_n, so x(:,perm) = q*t.
struct CpqrResult {
    DenseMatrix q;
    DenseMatrix t;
    IndexVector perm;

    /// Columns with |t(i,i)| > rel_tol * |t(0,0)|.
    std::size_t numerical_rank(double rel_tol) const {
        const std::size_t r = std::min(t.rows(), t.cols());
        if (r == 0) return 0;
        const double head = std::abs(t(0, 0));
        std::size_t rank = 0;
        for (std::size_t i = 0; i < r; ++i)
            if (std::abs(t(i, i)) > rel_tol * head) ++rank;
        return rank;
    }
};

/// Householder QR with greedy column pivoting on remaining column norms.
///
/// Pivot ties (norms equal within 1e-14 relative) resolve to the lower
/// original column index, so permutations are reproducible. Column norms are
/// downdated and recomputed once the downdated value falls below sqrt(eps)
/// times the column's original norm.
inline CpqrResult cpqr(const DenseMatrix& x) {
    x.validated("cpqr");
    const std::size_t m = x.rows(), n = x.cols();
    const std::size_t r = std::min(m, n);
    constexpr double eps = std::numeric_limits<double>::epsilon();

    DenseMatrix work = x;
    Eigen::Map<Eigen::MatrixXd> w(work.data(), static_cast<Eigen::Index>(m),
                                  static_cast<Eigen::Index>(n));

    IndexVector perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});

    std::vector<double> norm2(n), orig2(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += work(i, j) * work(i, j);
        norm2[j] = orig2[j] = s;
    }

    std::vector<Eigen::VectorXd> reflectors;
    std::vector<double> betas;
    reflectors.reserve(r);
    betas.reserve(r);

    for (std::size_t step = 0; step < r; ++step) {
        // greedy pivot with deterministic tie-break
        double best = -1.0;
        for (std::size_t c = step; c < n; ++c) best = std::max(best, norm2[c]);
        std::size_t pivot = step;
        std::size_t pivot_orig = std::numeric_limits<std::size_t>::max();
        for (std::size_t c = step; c < n; ++c) {
            const double lo = best - 2e-14 * best;  // 1e-14 relative on norms ~ 2e-14 on squares
            if (norm2[c] >= lo && perm[c] < pivot_orig) {
                pivot = c;
                pivot_orig = perm[c];
            }
        }
        if (pivot != step) {
            w.col(static_cast<Eigen::Index>(step)).swap(w.col(static_cast<Eigen::Index>(pivot)));
            std::swap(perm[step], perm[pivot]);
            std::swap(norm2[step], norm2[pivot]);
            std::swap(orig2[step], orig2[pivot]);
        }

        const auto tail = static_cast<Eigen::Index>(m - step);
        auto col = w.col(static_cast<Eigen::Index>(step)).tail(tail);
        const double below = tail > 1 ? col.tail(tail - 1).norm() : 0.0;
        Eigen::VectorXd v = col;
        double beta = 0.0;
        if (below > 0.0) {
            const double sigma = col.norm();
            const double alpha = v(0) >= 0.0 ? -sigma : sigma;
            v(0) -= alpha;
            const double vtv = v.squaredNorm();
            beta = 2.0 / vtv;
            if (n > step + 1) {
                auto trail = w.bottomRightCorner(tail, static_cast<Eigen::Index>(n - step - 1));
                Eigen::RowVectorXd vt_trail = v.transpose() * trail;
                trail.noalias() -= beta * v * vt_trail;
            }
            col.setZero();
            col(0) = alpha;
        }
        // below == 0: the column is already triangular, no reflection (tau=0)
        reflectors.push_back(std::move(v));
        betas.push_back(beta);

        for (std::size_t c = step + 1; c < n; ++c) {
            const double t = work(step, c);
            double nd = norm2[c] - t * t;
            if (nd <= eps * orig2[c]) {
                nd = 0.0;
                for (std::size_t i = step + 1; i < m; ++i) nd += work(i, c) * work(i, c);
            }
            norm2[c] = std::max(nd, 0.0);
        }
    }

    CpqrResult out;
    out.perm = std::move(perm);
    out.t = DenseMatrix(r, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < std::min(j + 1, r); ++i) out.t(i, j) = work(i, j);

    // back-accumulate the economy Q
    out.q = DenseMatrix(m, r);
    Eigen::Map<Eigen::MatrixXd> q(out.q.data(), static_cast<Eigen::Index>(m),
                                  static_cast<Eigen::Index>(r));
    for (std::size_t i = 0; i < r; ++i) q(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 1.0;
    for (std::size_t stepp = r; stepp-- > 0;) {
        if (betas[stepp] == 0.0) continue;
        const auto tail = static_cast<Eigen::Index>(m - stepp);
        auto block = q.bottomRightCorner(tail, static_cast<Eigen::Index>(r - stepp));
        const Eigen::VectorXd& v = reflectors[stepp];
        Eigen::RowVectorXd vt_block = v.transpose() * block;
        block.noalias() -= betas[stepp] * v * vt_block;
    }
    return out;
}

}  // namespace gcur
