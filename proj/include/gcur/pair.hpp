#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "gcur/cpqr.hpp"
#include "gcur/cur.hpp"
#include "gcur/matrix.hpp"
#include "gcur/sketch.hpp"
#include "gcur/source.hpp"

namespace gcur {

/// Coupled CUR of (A,B): both factorizations share the column index set J;
/// row index sets are selected per matrix.
struct PairCur {
    CurFactors a_factors;
    CurFactors b_factors;
};

struct PairSelection {
    IndexVector col_idx;  // J, |J| = l
    DenseMatrix c_a;      // A(:,J)
    DenseMatrix c_b;      // B(:,J)
    DenseMatrix sketch;   // X = Omega [A;B], kept for the deterministic error bounds
};

namespace detail {

inline double sqrt_eps() { return std::sqrt(std::numeric_limits<double>::epsilon()); }

/// First l pivots of the CPQR of a stacked-pair sketch; throws
/// RankDeficientSketch when |t(l-1,l-1)| <= sqrt(eps)*|t(0,0)|.
inline IndexVector leading_pivots_checked(const CpqrResult& f, std::size_t l,
                                          const char* what) {
    const std::size_t rank = f.numerical_rank(sqrt_eps());
    if (rank < l)
        throw RankDeficientSketch(std::string(what) + ": sketch is rank deficient", rank);
    return IndexVector(f.perm.begin(), f.perm.begin() + static_cast<std::ptrdiff_t>(l));
}

/// First l pivots of a secondary (single-matrix) selection; only a numerical
/// rank below the target rank k violates the algorithm's assumption.
inline IndexVector leading_pivots_factor(const CpqrResult& f, std::size_t l, std::size_t k,
                                         const char* what) {
    const std::size_t rank = f.numerical_rank(sqrt_eps());
    if (rank < k)
        throw RankDeficientFactor(std::string(what) + ": selection cannot reach the target rank",
                                  rank);
    return IndexVector(f.perm.begin(), f.perm.begin() + static_cast<std::ptrdiff_t>(l));
}

inline void check_pair_shapes(const DenseMatrix& a, const DenseMatrix& b) {
    a.validated("cur pair: A");
    b.validated("cur pair: B");
    if (a.cols() != b.cols())
        throw DimensionMismatch("cur pair: A and B must share their column count");
}

/// Algorithm-1 selection with an explicit seed for Omega (the triplet
/// algorithms run it under their own derived seeds).
inline PairSelection select_pair(const DenseMatrix& a, const DenseMatrix& b,
                                 const SketchPlan& plan, std::uint64_t omega_seed,
                                 const char* what) {
    check_pair_shapes(a, b);
    plan.validate();
    const std::size_t l = plan.sample_size();
    if (l > a.cols())
        throw DimensionMismatch(std::string(what) + ": sample size l exceeds column count");

    InMemorySource sa(a), sb(b);
    MatrixSource* stack[] = {&sa, &sb};
    DenseMatrix x = sketch_rows(plan.with_seed(omega_seed), stack);

    const CpqrResult f = cpqr(x);
    PairSelection sel;
    sel.col_idx = leading_pivots_checked(f, l, what);
    sel.c_a = a.select_columns(sel.col_idx);
    sel.c_b = b.select_columns(sel.col_idx);
    sel.sketch = std::move(x);
    return sel;
}

}  // namespace detail

/// Column selection for (A,B): sketch the stack with an l x (m+d) Gaussian,
/// CPQR the sketch, take the first l pivots.
inline PairSelection select_columns_pair(const DenseMatrix& a, const DenseMatrix& b,
                                         const SketchPlan& plan) {
    return detail::select_pair(a, b, plan, plan.seed + 0, "select_columns_pair");
}

/// Randomized CUR of (A,B): shared column selection, per-matrix row selection
/// through exact CPQRs of C_A^T and C_B^T, middle factors C† * source * R†.
inline PairCur cur_pair(const DenseMatrix& a, const DenseMatrix& b, const SketchPlan& plan) {
    detail::check_pair_shapes(a, b);
    plan.validate();
    const std::size_t l = plan.sample_size();
    if (l > a.rows() || l > b.rows())
        throw DimensionMismatch("cur_pair: sample size l exceeds a row count");

    PairSelection sel = select_columns_pair(a, b, plan);

    const CpqrResult fa = cpqr(sel.c_a.transposed());
    const CpqrResult fb = cpqr(sel.c_b.transposed());
    IndexVector rows_a =
        detail::leading_pivots_factor(fa, l, plan.target_rank, "cur_pair: columns of A");
    IndexVector rows_b =
        detail::leading_pivots_factor(fb, l, plan.target_rank, "cur_pair: columns of B");

    PairCur out;
    out.a_factors.col_idx = sel.col_idx;
    out.a_factors.row_idx = std::move(rows_a);
    out.a_factors.c = std::move(sel.c_a);
    out.a_factors.r = a.select_rows(out.a_factors.row_idx);
    out.a_factors.m = middle_matrix(out.a_factors.c, a, out.a_factors.r);

    out.b_factors.col_idx = sel.col_idx;
    out.b_factors.row_idx = std::move(rows_b);
    out.b_factors.c = std::move(sel.c_b);
    out.b_factors.r = b.select_rows(out.b_factors.row_idx);
    out.b_factors.m = middle_matrix(out.b_factors.c, b, out.b_factors.r);
    return out;
}

struct StreamOptions {
    bool indices_only = false;
    std::size_t block_rows = kDefaultBlockRows;
};

struct PairCurStreamResult {
    IndexVector col_idx;    // J
    IndexVector row_idx_a;  // I_A
    IndexVector row_idx_b;  // I_B
    std::optional<PairCur> factors;  // absent when indices_only
    PassReport passes;
    // sketches from pass 1, kept for the deterministic error bounds
    DenseMatrix sketch_x;   // Omega [A;B]
    DenseMatrix sketch_y1;  // A Omega_1^T
    DenseMatrix sketch_y2;  // B Omega_1^T
};

/// Pass-efficient CUR of (A,B). Pass 1 computes X = Omega[A;B], Y1 = A Om1^T,
/// Y2 = B Om1^T jointly; their CPQRs give J, I_A, I_B. Pass 2 retrieves C and
/// R and accumulates the strips C^T*source the middle factors are built from.
/// Exactly two passes over each source (one with indices_only).
inline PairCurStreamResult cur_pair_pass_efficient(MatrixSource& a, MatrixSource& b,
                                                   const SketchPlan& plan,
                                                   const StreamOptions& opts = {}) {
    plan.validate();
    const std::size_t m = a.rows(), n = a.cols(), d = b.rows();
    const std::size_t l = plan.sample_size();
    // validate every shape before any pass is consumed
    if (b.cols() != n)
        throw DimensionMismatch("cur_pair_pass_efficient: A and B must share their column count");
    if (l > n || l > m || l > d)
        throw DimensionMismatch("cur_pair_pass_efficient: sample size l exceeds a dimension");

    const std::size_t pass0_a = a.pass_count(), pass0_b = b.pass_count();

    // pass 1: all three sketches in one traversal of (A,B)
    RowSketchAccumulator x_acc(l, n, omega_of(gaussian(l, m + d, plan.seed + 0)));
    const GaussianMatrix omega1 = gaussian(l, n, plan.seed + 1);
    ColSketchAccumulator y1_acc(m, l, omega_of(omega1));
    ColSketchAccumulator y2_acc(d, l, omega_of(omega1));
    a.stream_pass(opts.block_rows, [&](std::size_t r0, const DenseMatrix& blk) {
        x_acc.consume(r0, blk);
        y1_acc.consume(r0, blk);
    });
    b.stream_pass(opts.block_rows, [&](std::size_t r0, const DenseMatrix& blk) {
        x_acc.consume(m + r0, blk);
        y2_acc.consume(r0, blk);
    });

    PairCurStreamResult out;
    out.sketch_x = x_acc.take();
    out.sketch_y1 = y1_acc.take();
    out.sketch_y2 = y2_acc.take();

    out.col_idx = detail::leading_pivots_checked(cpqr(out.sketch_x), l,
                                                 "cur_pair_pass_efficient");
    out.row_idx_a = detail::leading_pivots_factor(cpqr(out.sketch_y1.transposed()), l,
                                                  plan.target_rank,
                                                  "cur_pair_pass_efficient: row sketch of A");
    out.row_idx_b = detail::leading_pivots_factor(cpqr(out.sketch_y2.transposed()), l,
                                                  plan.target_rank,
                                                  "cur_pair_pass_efficient: row sketch of B");

    if (opts.indices_only) {
        out.passes.passes = a.pass_count() - pass0_a;
        if (b.pass_count() - pass0_b != out.passes.passes)
            throw Error("cur_pair_pass_efficient: sources fell out of step");
        return out;
    }

    // pass 2: retrieve C, R and accumulate the strips C^T * source
    detail::Retrieval ra = detail::retrieve_factors(a, out.col_idx, out.row_idx_a, opts.block_rows);
    detail::Retrieval rb = detail::retrieve_factors(b, out.col_idx, out.row_idx_b, opts.block_rows);

    PairCur cur;
    cur.a_factors.m = middle_matrix_from_strip(ra.strip, out.col_idx, ra.r);
    cur.a_factors.c = std::move(ra.c);
    cur.a_factors.r = std::move(ra.r);
    cur.a_factors.col_idx = out.col_idx;
    cur.a_factors.row_idx = out.row_idx_a;
    cur.b_factors.m = middle_matrix_from_strip(rb.strip, out.col_idx, rb.r);
    cur.b_factors.c = std::move(rb.c);
    cur.b_factors.r = std::move(rb.r);
    cur.b_factors.col_idx = out.col_idx;
    cur.b_factors.row_idx = out.row_idx_b;
    out.factors = std::move(cur);

    out.passes.passes = a.pass_count() - pass0_a;
    if (b.pass_count() - pass0_b != out.passes.passes)
        throw Error("cur_pair_pass_efficient: sources fell out of step");
    return out;
}

}  // namespace gcur
