#pragma once

#include <limits>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "gcur/kernels.hpp"
#include "gcur/matrix.hpp"

namespace gcur {

/// Singular values, non-increasing.
inline std::vector<double> singular_values(const DenseMatrix& a) {
    a.validated("singular_values");
    Eigen::BDCSVD<Eigen::MatrixXd> svd(detail::as_eigen(a));
    const auto& s = svd.singularValues();
    return std::vector<double>(s.data(), s.data() + s.size());
}

inline double spectral_norm(const DenseMatrix& a) {
    a.validated("spectral_norm");
    Eigen::BDCSVD<Eigen::MatrixXd> svd(detail::as_eigen(a));
    return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

inline constexpr double kAutoTol = -1.0;

/// Moore-Penrose pseudoinverse via SVD. Singular values at or below tol are
/// treated as zero; tol = kAutoTol selects max(rows,cols)*eps*sigma_max.
inline DenseMatrix pinv(const DenseMatrix& a, double tol = kAutoTol) {
    a.validated("pinv");
    if (tol != kAutoTol && tol < 0.0) throw InputError("pinv: negative tolerance");
    Eigen::BDCSVD<Eigen::MatrixXd> svd(detail::as_eigen(a),
                                       Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& s = svd.singularValues();
    const double smax = s.size() ? s(0) : 0.0;
    const double cut = (tol == kAutoTol)
                           ? static_cast<double>(std::max(a.rows(), a.cols())) *
                                 std::numeric_limits<double>::epsilon() * smax
                           : tol;
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(s.size());
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > cut) inv(i) = 1.0 / s(i);
    DenseMatrix out(a.cols(), a.rows());
    detail::as_eigen(out).noalias() =
        svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
    return out;
}

}  // namespace gcur
