#pragma once

#include <optional>

#include "gcur/pair.hpp"

namespace gcur {

/// Coupled CUR of (A,B,G) with A m x n, B m x t, G d x n: A and G share the
/// column index set J, A and B share the row index set I; B's columns (J_B)
/// and G's rows (I_G) are selected independently.
struct TripletCur {
    CurFactors a_factors;
    CurFactors b_factors;
    CurFactors g_factors;
};

struct TripletCurResult {
    TripletCur cur;
    DenseMatrix sketch_x1;  // Omega_2 [A;G], drives J
    DenseMatrix sketch_y3;  // [A,B] Omega_3^T, drives I
};

namespace detail {

inline void check_triplet_shapes(std::size_t m, std::size_t n, std::size_t b_rows,
                                 std::size_t t, std::size_t d, std::size_t g_cols,
                                 std::size_t l) {
    if (b_rows != m) throw DimensionMismatch("cur triplet: A and B must share their row count");
    if (g_cols != n) throw DimensionMismatch("cur triplet: A and G must share their column count");
    if (l > m || l > n)
        throw DimensionMismatch("cur triplet: sample size l exceeds min(rows(A), cols(A))");
    if (l > t) throw DimensionMismatch("cur triplet: B has fewer than l columns");
    if (l > d) throw DimensionMismatch("cur triplet: G has fewer than l rows");
}

}  // namespace detail

/// Randomized CUR of (A,B,G): Algorithm-1 selection on (A,G) gives J and on
/// (A^T,B^T) gives I; exact CPQRs of R_B and C_G^T give J_B and I_G; middle
/// factors are C† * source * R†.
inline TripletCurResult cur_triplet(const DenseMatrix& a, const DenseMatrix& b,
                                    const DenseMatrix& g, const SketchPlan& plan) {
    a.validated("cur_triplet: A");
    b.validated("cur_triplet: B");
    g.validated("cur_triplet: G");
    plan.validate();
    const std::size_t l = plan.sample_size();
    detail::check_triplet_shapes(a.rows(), a.cols(), b.rows(), b.cols(), g.rows(), g.cols(), l);

    PairSelection cols = detail::select_pair(a, g, plan, plan.seed + 2, "cur_triplet: (A,G)");
    PairSelection rows =
        detail::select_pair(a.transposed(), b.transposed(), plan, plan.seed + 3,
                            "cur_triplet: (A^T,B^T)");

    TripletCurResult out;
    const IndexVector& col_j = cols.col_idx;
    const IndexVector& row_i = rows.col_idx;

    DenseMatrix r_a = a.select_rows(row_i);
    DenseMatrix r_b = b.select_rows(row_i);

    IndexVector col_jb = detail::leading_pivots_factor(
        cpqr(r_b), l, plan.target_rank, "cur_triplet: rows of B");
    IndexVector row_ig = detail::leading_pivots_factor(
        cpqr(cols.c_b.transposed()), l, plan.target_rank, "cur_triplet: columns of G");

    CurFactors& fa = out.cur.a_factors;
    fa.c = std::move(cols.c_a);
    fa.r = std::move(r_a);
    fa.col_idx = col_j;
    fa.row_idx = row_i;
    fa.m = middle_matrix(fa.c, a, fa.r);

    CurFactors& fb = out.cur.b_factors;
    fb.c = b.select_columns(col_jb);
    fb.r = std::move(r_b);
    fb.col_idx = std::move(col_jb);
    fb.row_idx = row_i;
    fb.m = middle_matrix(fb.c, b, fb.r);

    CurFactors& fg = out.cur.g_factors;
    fg.c = std::move(cols.c_b);  // selection ran on (A,G): c_b is G(:,J)
    fg.r = g.select_rows(row_ig);
    fg.col_idx = col_j;
    fg.row_idx = std::move(row_ig);
    fg.m = middle_matrix(fg.c, g, fg.r);

    out.sketch_x1 = std::move(cols.sketch);
    out.sketch_y3 = rows.sketch.transposed();
    return out;
}

struct TripletCurStreamResult {
    IndexVector col_idx;    // J (A and G)
    IndexVector row_idx;    // I (A and B)
    IndexVector col_idx_b;  // J_B
    IndexVector row_idx_g;  // I_G
    std::optional<TripletCur> factors;
    PassReport passes;
    DenseMatrix sketch_x1;  // Omega_2 [A;G]
    DenseMatrix sketch_y3;  // [A,B] Omega_3^T
    DenseMatrix sketch_x2;  // Omega_4 B
    DenseMatrix sketch_y4;  // G Omega_5^T
};

/// Pass-efficient CUR of (A,B,G). Pass 1 computes X1 = Om2[A;G],
/// Y3 = [A,B]Om3^T, X2 = Om4 B, Y4 = G Om5^T in a single fused traversal;
/// four CPQRs give J, I, J_B, I_G. Pass 2 retrieves the factors. Exactly two
/// passes over each source (one with indices_only).
inline TripletCurStreamResult cur_triplet_pass_efficient(MatrixSource& a, MatrixSource& b,
                                                         MatrixSource& g, const SketchPlan& plan,
                                                         const StreamOptions& opts = {}) {
    plan.validate();
    const std::size_t m = a.rows(), n = a.cols(), t = b.cols(), d = g.rows();
    const std::size_t l = plan.sample_size();
    detail::check_triplet_shapes(m, n, b.rows(), t, d, g.cols(), l);

    const std::size_t pass0 = a.pass_count();
    const std::size_t pass0_b = b.pass_count(), pass0_g = g.pass_count();

    // pass 1: four sketches, each source traversed once
    RowSketchAccumulator x1_acc(l, n, omega_of(gaussian(l, m + d, plan.seed + 2)));
    ColSketchAccumulator y3_acc(m, l, omega_of(gaussian(l, n + t, plan.seed + 3)));
    RowSketchAccumulator x2_acc(l, t, omega_of(gaussian(l, m, plan.seed + 4)));
    ColSketchAccumulator y4_acc(d, l, omega_of(gaussian(l, n, plan.seed + 5)));

    a.stream_pass(opts.block_rows, [&](std::size_t r0, const DenseMatrix& blk) {
        x1_acc.consume(r0, blk);
        y3_acc.consume(r0, blk, 0);
    });
    b.stream_pass(opts.block_rows, [&](std::size_t r0, const DenseMatrix& blk) {
        y3_acc.consume(r0, blk, n);
        x2_acc.consume(r0, blk);
    });
    g.stream_pass(opts.block_rows, [&](std::size_t r0, const DenseMatrix& blk) {
        x1_acc.consume(m + r0, blk);
        y4_acc.consume(r0, blk, 0);
    });

    TripletCurStreamResult out;
    out.sketch_x1 = x1_acc.take();
    out.sketch_y3 = y3_acc.take();
    out.sketch_x2 = x2_acc.take();
    out.sketch_y4 = y4_acc.take();

    out.col_idx = detail::leading_pivots_checked(cpqr(out.sketch_x1), l,
                                                 "cur_triplet_pass_efficient: (A,G)");
    out.row_idx = detail::leading_pivots_checked(cpqr(out.sketch_y3.transposed()), l,
                                                 "cur_triplet_pass_efficient: (A^T,B^T)");
    out.col_idx_b = detail::leading_pivots_factor(cpqr(out.sketch_x2), l, plan.target_rank,
                                                  "cur_triplet_pass_efficient: column sketch of B");
    out.row_idx_g = detail::leading_pivots_factor(cpqr(out.sketch_y4.transposed()), l,
                                                  plan.target_rank,
                                                  "cur_triplet_pass_efficient: row sketch of G");

    auto passes_consumed = [&]() {
        const std::size_t pa = a.pass_count() - pass0;
        if (b.pass_count() - pass0_b != pa || g.pass_count() - pass0_g != pa)
            throw Error("cur_triplet_pass_efficient: sources fell out of step");
        return pa;
    };

    if (opts.indices_only) {
        out.passes.passes = passes_consumed();
        return out;
    }

    // pass 2: retrieval (definition 2 index sharing: A gets (J, I), B gets
    // (J_B, I), G gets (J, I_G))
    detail::Retrieval ra = detail::retrieve_factors(a, out.col_idx, out.row_idx, opts.block_rows);
    detail::Retrieval rb = detail::retrieve_factors(b, out.col_idx_b, out.row_idx, opts.block_rows);
    detail::Retrieval rg = detail::retrieve_factors(g, out.col_idx, out.row_idx_g, opts.block_rows);

    TripletCur cur;
    cur.a_factors.m = middle_matrix_from_strip(ra.strip, out.col_idx, ra.r);
    cur.a_factors.c = std::move(ra.c);
    cur.a_factors.r = std::move(ra.r);
    cur.a_factors.col_idx = out.col_idx;
    cur.a_factors.row_idx = out.row_idx;
    cur.b_factors.m = middle_matrix_from_strip(rb.strip, out.col_idx_b, rb.r);
    cur.b_factors.c = std::move(rb.c);
    cur.b_factors.r = std::move(rb.r);
    cur.b_factors.col_idx = out.col_idx_b;
    cur.b_factors.row_idx = out.row_idx;
    cur.g_factors.m = middle_matrix_from_strip(rg.strip, out.col_idx, rg.r);
    cur.g_factors.c = std::move(rg.c);
    cur.g_factors.r = std::move(rg.r);
    cur.g_factors.col_idx = out.col_idx;
    cur.g_factors.row_idx = out.row_idx_g;
    out.factors = std::move(cur);

    out.passes.passes = passes_consumed();
    return out;
}

}  // namespace gcur
