#pragma once

#include <string>

#include "gcur/kernels.hpp"
#include "gcur/matrix.hpp"
#include "gcur/svd.hpp"

namespace gcur {

enum class Norm { spectral, frobenius };

inline const char* to_string(Norm n) {
    return n == Norm::spectral ? "spectral" : "frobenius";
}

/// One CUR factorization: c and r are verbatim column/row slices of the
/// source (never recomputed), m couples them so source ~ c*m*r.
struct CurFactors {
    DenseMatrix c;
    DenseMatrix m;
    DenseMatrix r;
    IndexVector col_idx;
    IndexVector row_idx;
};

/// M = (pinv(c) * source) * pinv(r), evaluated left to right so the largest
/// intermediate is l x n.
inline DenseMatrix middle_matrix(const DenseMatrix& c, const DenseMatrix& source,
                                 const DenseMatrix& r) {
    DenseMatrix left = matmul(pinv(c), source);
    return matmul(left, pinv(r));
}

/// Streaming form of middle_matrix: strip = c^T * source (accumulated during
/// the retrieval pass), so pinv(c)*source = pinv(c^T c)*strip with
/// c^T c = strip(:, col_idx).
inline DenseMatrix middle_matrix_from_strip(const DenseMatrix& strip, const IndexVector& col_idx,
                                            const DenseMatrix& r) {
    DenseMatrix gram = strip.select_columns(col_idx);
    DenseMatrix left = matmul(pinv(gram), strip);
    return matmul(left, pinv(r));
}

inline DenseMatrix reconstruct(const CurFactors& f) {
    return matmul(matmul(f.c, f.m), f.r);
}

/// ||source - c*m*r|| in the requested norm.
inline double absolute_error(const DenseMatrix& source, const CurFactors& f, Norm norm) {
    if (source.rows() != f.c.rows() || source.cols() != f.r.cols())
        throw DimensionMismatch("absolute_error: factor shapes do not match source");
    const DenseMatrix residual = source - reconstruct(f);
    return norm == Norm::spectral ? spectral_norm(residual) : frobenius_norm(residual);
}

/// ||source - c*m*r|| / ||source|| in the requested norm.
inline double relative_error(const DenseMatrix& source, const CurFactors& f, Norm norm) {
    if (source.rows() != f.c.rows() || source.cols() != f.r.cols())
        throw DimensionMismatch("relative_error: factor shapes do not match source");
    const DenseMatrix residual = source - reconstruct(f);
    const double denom =
        norm == Norm::spectral ? spectral_norm(source) : frobenius_norm(source);
    if (denom == 0.0)
        throw UndefinedRelativeError("relative_error: source matrix is zero");
    const double num =
        norm == Norm::spectral ? spectral_norm(residual) : frobenius_norm(residual);
    return num / denom;
}

}  // namespace gcur
