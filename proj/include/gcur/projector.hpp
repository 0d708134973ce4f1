#pragma once

#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "gcur/kernels.hpp"
#include "gcur/matrix.hpp"

namespace gcur {

/// Oblique projector P = range_basis * (row_map * range_basis)^-1 * row_map.
///
/// P projects onto range(range_basis) along the nullspace of row_map; the
/// deterministic error theorems are stated through these. Throws
/// SingularCore when the square core row_map*range_basis has condition
/// estimate above 1/sqrt(eps).
inline DenseMatrix oblique_projector(const DenseMatrix& range_basis, const DenseMatrix& row_map) {
    range_basis.validated("oblique_projector: range_basis");
    row_map.validated("oblique_projector: row_map");
    if (row_map.cols() != range_basis.rows() || row_map.rows() != range_basis.cols())
        throw DimensionMismatch("oblique_projector: core is not square");

    const auto rb = detail::as_eigen(range_basis);
    const auto rm = detail::as_eigen(row_map);
    Eigen::MatrixXd core = rm * rb;

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(core);
    const auto& s = svd.singularValues();
    const double smin = s(s.size() - 1), smax = s(0);
    if (!(smin > 0.0) ||
        smax / smin > 1.0 / std::sqrt(std::numeric_limits<double>::epsilon()))
        throw SingularCore("oblique_projector: core is numerically singular");

    DenseMatrix p(range_basis.rows(), row_map.cols());
    detail::as_eigen(p).noalias() = rb * core.partialPivLu().solve(Eigen::MatrixXd(rm));
    return p;
}

/// Identity columns I_n(:, idx): the canonical range basis for index sets.
inline DenseMatrix identity_columns(std::size_t n, const IndexVector& idx) {
    check_indices(idx, n, "identity_columns");
    DenseMatrix out(n, idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c) out(idx[c], c) = 1.0;
    return out;
}

}  // namespace gcur
