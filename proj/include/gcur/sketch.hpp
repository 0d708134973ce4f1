#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <span>

#include "gcur/kernels.hpp"
#include "gcur/matrix.hpp"
#include "gcur/random.hpp"
#include "gcur/source.hpp"

namespace gcur {

/// Target rank k, oversampling p, sample size l = k+p, and the master seed.
struct SketchPlan {
    std::size_t target_rank = 0;
    std::size_t oversampling = 5;
    std::uint64_t seed = 0;

    std::size_t sample_size() const { return target_rank + oversampling; }

    // p >= 2 is only needed by the expectation-bound formulas (they divide by
    // p-1); the algorithms themselves run for any p >= 0, and the bounds
    // module enforces its own domain.
    void validate() const {
        if (target_rank < 1) throw DomainError("SketchPlan: target rank must be >= 1");
    }

    SketchPlan with_seed(std::uint64_t s) const { return {target_rank, oversampling, s}; }
};

/// Column slices of a fixed sketching matrix, in both orientations. Lets
/// tests inject a non-Gaussian Omega.
struct OmegaSource {
    std::function<DenseMatrix(std::size_t c0, std::size_t c1)> cols_block;    // Omega(:, c0:c1)
    std::function<DenseMatrix(std::size_t c0, std::size_t c1)> cols_block_t;  // its transpose
};

inline OmegaSource omega_of(const GaussianMatrix& g) {
    return {[g](std::size_t c0, std::size_t c1) { return g.cols_block(c0, c1); },
            [g](std::size_t c0, std::size_t c1) { return g.transposed_block(c0, c1); }};
}

inline OmegaSource omega_of(const DenseMatrix& omega) {
    DenseMatrix t = omega.transposed();
    return {[omega](std::size_t c0, std::size_t c1) {
                IndexVector idx(c1 - c0);
                std::iota(idx.begin(), idx.end(), c0);
                return omega.select_columns(idx);
            },
            [t](std::size_t c0, std::size_t c1) { return t.row_block(c0, c1); }};
}

/// Accumulates X = Omega * [S_0; S_1; ...] (l x n) from row blocks of the
/// stacked sources. Entry sums run in global stacked-row order, so the result
/// is independent of the block size.
class RowSketchAccumulator {
public:
    RowSketchAccumulator(std::size_t l, std::size_t n, OmegaSource omega)
        : x_(l, n), omega_(std::move(omega)) {}

    /// Block starting at the given row of the *stacked* matrix.
    void consume(std::size_t stacked_row0, const DenseMatrix& block) {
        const DenseMatrix w = omega_.cols_block(stacked_row0, stacked_row0 + block.rows());
        seq_gemm(x_, w, block);
    }

    const DenseMatrix& value() const { return x_; }
    DenseMatrix take() { return std::move(x_); }

private:
    DenseMatrix x_;
    OmegaSource omega_;
};

/// Accumulates Y = [S_0, S_1, ...] * Omega^T (rows x l) from row blocks; each
/// source covers the Omega column slice starting at its horizontal offset.
class ColSketchAccumulator {
public:
    ColSketchAccumulator(std::size_t rows, std::size_t l, OmegaSource omega)
        : y_(rows, l), omega_(std::move(omega)) {}

    void consume(std::size_t row0, const DenseMatrix& block, std::size_t col_offset = 0) {
        const DenseMatrix wt = omega_.cols_block_t(col_offset, col_offset + block.cols());
        seq_gemm(y_, block, wt, row0);
    }

    const DenseMatrix& value() const { return y_; }
    DenseMatrix take() { return std::move(y_); }

private:
    DenseMatrix y_;
    OmegaSource omega_;
};

/// X = Omega [S_0; S_1; ...] with Omega ~ l x (sum rows) drawn from plan.seed.
/// Consumes exactly one pass over each stacked source.
inline DenseMatrix sketch_rows(const SketchPlan& plan, std::span<MatrixSource* const> stacked,
                               std::size_t block_rows = kDefaultBlockRows) {
    plan.validate();
    if (stacked.empty()) throw InputError("sketch_rows: no sources");
    const std::size_t n = stacked.front()->cols();
    std::size_t total_rows = 0;
    for (MatrixSource* s : stacked) {
        if (s->cols() != n) throw DimensionMismatch("sketch_rows: stacked column counts differ");
        total_rows += s->rows();
    }
    const std::size_t l = plan.sample_size();
    if (l > total_rows)
        throw DimensionMismatch("sketch_rows: sample size exceeds stacked row count");

    RowSketchAccumulator acc(l, n, omega_of(gaussian(l, total_rows, plan.seed)));
    std::size_t offset = 0;
    for (MatrixSource* s : stacked) {
        s->stream_pass(block_rows, [&](std::size_t r0, const DenseMatrix& blk) {
            acc.consume(offset + r0, blk);
        });
        offset += s->rows();
    }
    return acc.take();
}

inline DenseMatrix sketch_rows(const SketchPlan& plan, MatrixSource& source,
                               std::size_t block_rows = kDefaultBlockRows) {
    MatrixSource* one[] = {&source};
    return sketch_rows(plan, one, block_rows);
}

namespace detail {

/// What the second (retrieval) pass of the pass-efficient algorithms
/// collects from one source: its selected columns and rows, verbatim, plus
/// the strip c^T * source the middle factor is built from.
struct Retrieval {
    DenseMatrix c;
    DenseMatrix r;
    DenseMatrix strip;
};

inline Retrieval retrieve_factors(MatrixSource& src, const IndexVector& cols,
                                  const IndexVector& rows, std::size_t block_rows) {
    Retrieval ret{DenseMatrix(src.rows(), cols.size()),
                  DenseMatrix(rows.size(), src.cols()),
                  DenseMatrix(cols.size(), src.cols())};
    src.stream_pass(block_rows, [&](std::size_t r0, const DenseMatrix& blk) {
        const DenseMatrix cblk = blk.select_columns(cols);
        for (std::size_t j = 0; j < cblk.cols(); ++j)
            for (std::size_t i = 0; i < cblk.rows(); ++i) ret.c(r0 + i, j) = cblk(i, j);
        for (std::size_t ri = 0; ri < rows.size(); ++ri)
            if (rows[ri] >= r0 && rows[ri] < r0 + blk.rows())
                for (std::size_t j = 0; j < blk.cols(); ++j)
                    ret.r(ri, j) = blk(rows[ri] - r0, j);
        seq_gemm(ret.strip, cblk.transposed(), blk);
    });
    return ret;
}

}  // namespace detail

/// Y = S * Omega^T with Omega ~ l x cols(S) drawn from plan.seed; one pass.
inline DenseMatrix sketch_cols(const SketchPlan& plan, MatrixSource& source,
                               std::size_t block_rows = kDefaultBlockRows) {
    plan.validate();
    const std::size_t l = plan.sample_size();
    if (l > source.cols())
        throw DimensionMismatch("sketch_cols: sample size exceeds column count");
    ColSketchAccumulator acc(source.rows(), l, omega_of(gaussian(l, source.cols(), plan.seed)));
    source.stream_pass(block_rows, [&](std::size_t r0, const DenseMatrix& blk) {
        acc.consume(r0, blk);
    });
    return acc.take();
}

}  // namespace gcur
