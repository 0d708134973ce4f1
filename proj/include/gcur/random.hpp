#pragma once

#include <cstdint>
#include <cmath>

#include "gcur/matrix.hpp"

namespace gcur {

// Generator spec (fixed; seeds reproduce across runs and platforms):
//   * Philox4x32-10 counter-based PRNG (Salmon et al. constants:
//     multipliers 0xD2511F53 / 0xCD9E8D57, Weyl keys 0x9E3779B9 / 0xBB67AE85).
//   * Entry (i,j) of a rows x cols matrix uses counter = column-major linear
//     index j*rows+i (64-bit, split into ctr[0..1]); key = 64-bit seed.
//   * The four 32-bit outputs form a 53-bit uniform u = (bits + 0.5) * 2^-53
//     in (0,1); the standard normal is Acklam's inverse-CDF rational
//     approximation (|relative error| < 1.2e-9, immaterial for sketching).

namespace detail {

struct Philox4x32 {
    std::uint32_t c0, c1, c2, c3;

    static Philox4x32 generate(std::uint64_t counter, std::uint64_t key) {
        std::uint32_t x0 = static_cast<std::uint32_t>(counter);
        std::uint32_t x1 = static_cast<std::uint32_t>(counter >> 32);
        std::uint32_t x2 = 0, x3 = 0;
        std::uint32_t k0 = static_cast<std::uint32_t>(key);
        std::uint32_t k1 = static_cast<std::uint32_t>(key >> 32);
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = 0xD2511F53ULL * x0;
            const std::uint64_t p1 = 0xCD9E8D57ULL * x2;
            const std::uint32_t y0 = static_cast<std::uint32_t>(p1 >> 32) ^ x1 ^ k0;
            const std::uint32_t y1 = static_cast<std::uint32_t>(p1);
            const std::uint32_t y2 = static_cast<std::uint32_t>(p0 >> 32) ^ x3 ^ k1;
            const std::uint32_t y3 = static_cast<std::uint32_t>(p0);
            x0 = y0; x1 = y1; x2 = y2; x3 = y3;
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        return {x0, x1, x2, x3};
    }
};

/// Uniform double in (0,1) from the top 53 bits of the Philox output.
inline double uniform01(std::uint64_t counter, std::uint64_t key) {
    const Philox4x32 r = Philox4x32::generate(counter, key);
    const std::uint64_t bits =
        ((static_cast<std::uint64_t>(r.c0) << 32) | r.c1) >> 11;
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

/// Acklam's inverse normal CDF.
inline double normal_inv_cdf(double p) {
    static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                    -2.759285104469687e+02, 1.383577518672690e+02,
                                    -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                    -1.556989798598866e+02, 6.680131188771972e+01,
                                    -1.328068155288572e+01};
    static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                    -2.400758277161838e+00, -2.549732539343734e+00,
                                    4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                    2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - p_low) {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace detail

/// Seeded i.i.d. standard-normal matrix. Entries are a pure function of
/// (rows, cols, seed, position), so any sub-block can be generated without
/// materializing the rest.
struct GaussianMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::uint64_t seed = 0;

    double entry(std::size_t i, std::size_t j) const {
        const std::uint64_t idx =
            static_cast<std::uint64_t>(j) * rows + static_cast<std::uint64_t>(i);
        return detail::normal_inv_cdf(detail::uniform01(idx, seed));
    }

    DenseMatrix dense() const {
        DenseMatrix m(rows, cols);
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = entry(i, j);
        return m;
    }

    /// Columns c0..c1 as a rows x (c1-c0) slab.
    DenseMatrix cols_block(std::size_t c0, std::size_t c1) const {
        if (c0 > c1 || c1 > cols) throw DimensionMismatch("cols_block: bad range");
        DenseMatrix m(rows, c1 - c0);
        for (std::size_t j = c0; j < c1; ++j)
            for (std::size_t i = 0; i < rows; ++i) m(i, j - c0) = entry(i, j);
        return m;
    }

    /// Rows c0..c1 of the transpose (columns c0..c1 of this matrix), shaped
    /// (c1-c0) x rows.
    DenseMatrix transposed_block(std::size_t c0, std::size_t c1) const {
        if (c0 > c1 || c1 > cols) throw DimensionMismatch("transposed_block: bad range");
        DenseMatrix m(c1 - c0, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = c0; j < c1; ++j) m(j - c0, i) = entry(i, j);
        return m;
    }
};

inline GaussianMatrix gaussian(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    if (rows == 0 || cols == 0) throw DegenerateInput("gaussian: empty shape");
    return GaussianMatrix{rows, cols, seed};
}

}  // namespace gcur
