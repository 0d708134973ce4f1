#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <utility>
#include <vector>

#include "gcur/errors.hpp"

namespace gcur {

/// Ordered list of 0-based row/column positions.
using IndexVector = std::vector<std::size_t>;

/// Dense real matrix, column-major storage.
///
/// The universal value type of the library. Entries are doubles; storage is
/// a contiguous column-major buffer so columns can be handed to BLAS-style
/// kernels directly.
class DenseMatrix {
public:
    DenseMatrix() = default;

    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> column_major)
        : rows_(rows), cols_(cols), data_(std::move(column_major)) {
        if (data_.size() != rows_ * cols_)
            throw DimensionMismatch("DenseMatrix: data length does not equal rows*cols");
    }

    /// Row-major brace construction for small literals in tests and docs.
    DenseMatrix(std::initializer_list<std::initializer_list<double>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.assign(rows_ * cols_, 0.0);
        std::size_t i = 0;
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw DimensionMismatch("DenseMatrix: ragged initializer");
            std::size_t j = 0;
            for (double v : r) (*this)(i, j++) = v;
            ++i;
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t i, std::size_t j) { return data_[j * rows_ + i]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[j * rows_ + i]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    double* col(std::size_t j) { return data_.data() + j * rows_; }
    const double* col(std::size_t j) const { return data_.data() + j * rows_; }

    bool all_finite() const {
        for (double v : data_)
            if (!std::isfinite(v)) return false;
        return true;
    }

    /// Throws DegenerateInput on empty dims, InputError on NaN/Inf entries.
    /// Call at external-input boundaries.
    const DenseMatrix& validated(const char* what) const {
        if (rows_ == 0 || cols_ == 0)
            throw DegenerateInput(std::string(what) + ": matrix has zero rows or columns");
        if (!all_finite())
            throw InputError(std::string(what) + ": matrix contains NaN or Inf");
        return *this;
    }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    DenseMatrix transposed() const {
        DenseMatrix t(cols_, rows_);
        for (std::size_t j = 0; j < cols_; ++j)
            for (std::size_t i = 0; i < rows_; ++i) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Verbatim column sub-slice: result(:,c) = (*this)(:, idx[c]), bit-exact.
    DenseMatrix select_columns(const IndexVector& idx) const {
        DenseMatrix out(rows_, idx.size());
        for (std::size_t c = 0; c < idx.size(); ++c) {
            if (idx[c] >= cols_) throw DimensionMismatch("select_columns: index out of range");
            std::copy(col(idx[c]), col(idx[c]) + rows_, out.col(c));
        }
        return out;
    }

    /// Verbatim row sub-slice: result(r,:) = (*this)(idx[r], :), bit-exact.
    DenseMatrix select_rows(const IndexVector& idx) const {
        DenseMatrix out(idx.size(), cols_);
        for (std::size_t r = 0; r < idx.size(); ++r) {
            if (idx[r] >= rows_) throw DimensionMismatch("select_rows: index out of range");
            for (std::size_t j = 0; j < cols_; ++j) out(r, j) = (*this)(idx[r], j);
        }
        return out;
    }

    /// Rows [r0, r1) as a new matrix.
    DenseMatrix row_block(std::size_t r0, std::size_t r1) const {
        if (r0 > r1 || r1 > rows_) throw DimensionMismatch("row_block: bad range");
        DenseMatrix out(r1 - r0, cols_);
        for (std::size_t j = 0; j < cols_; ++j)
            for (std::size_t i = r0; i < r1; ++i) out(i - r0, j) = (*this)(i, j);
        return out;
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// [A; B]: rows of a on top of rows of b (shared column count).
inline DenseMatrix vstack(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.cols()) throw DimensionMismatch("vstack: column counts differ");
    DenseMatrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        std::copy(a.col(j), a.col(j) + a.rows(), out.col(j));
        std::copy(b.col(j), b.col(j) + b.rows(), out.col(j) + a.rows());
    }
    return out;
}

/// [A, B]: columns of a followed by columns of b (shared row count).
inline DenseMatrix hstack(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("hstack: row counts differ");
    DenseMatrix out(a.rows(), a.cols() + b.cols());
    std::copy(a.data(), a.data() + a.size(), out.data());
    std::copy(b.data(), b.data() + b.size(), out.data() + a.size());
    return out;
}

inline DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("operator-: shapes differ");
    DenseMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i) out.data()[i] = a.data()[i] - b.data()[i];
    return out;
}

inline double frobenius_norm(const DenseMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a.data()[i] * a.data()[i];
    return std::sqrt(s);
}

inline void check_indices(const IndexVector& idx, std::size_t dim, const char* what) {
    std::vector<bool> seen(dim, false);
    for (std::size_t v : idx) {
        if (v >= dim) throw DimensionMismatch(std::string(what) + ": index out of range");
        if (seen[v]) throw InputError(std::string(what) + ": duplicate index");
        seen[v] = true;
    }
}

}  // namespace gcur
