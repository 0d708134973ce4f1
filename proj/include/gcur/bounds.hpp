#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gcur/cur.hpp"
#include "gcur/pair.hpp"
#include "gcur/svd.hpp"
#include "gcur/triplet.hpp"

namespace gcur {

/// Singular values of a designated matrix (A, B, [A;B], [A;G] or [A,B])
/// together with the (k,p) the bound is evaluated at.
struct SpectrumSummary {
    std::vector<double> sigma;  // non-increasing, nonnegative
    std::size_t k = 0;
    std::size_t p = 0;

    void validate() const {
        for (std::size_t i = 0; i < sigma.size(); ++i) {
            if (sigma[i] < 0.0 || !std::isfinite(sigma[i]))
                throw InputError("SpectrumSummary: singular values must be finite and nonnegative");
            if (i > 0 && sigma[i] > sigma[i - 1] * (1.0 + 1e-12))
                throw InputError("SpectrumSummary: singular values must be non-increasing");
        }
        if (p < 2) throw DomainError("SpectrumSummary: bounds require p >= 2 (division by p-1)");
    }

    double tail_energy() const {  // sum_{j>k} sigma_j^2
        double s = 0.0;
        for (std::size_t j = k; j < sigma.size(); ++j) s += sigma[j] * sigma[j];
        return s;
    }

    double sigma_kplus1() const { return k < sigma.size() ? sigma[k] : 0.0; }
};

inline SpectrumSummary spectrum_of(const DenseMatrix& m, std::size_t k, std::size_t p) {
    return SpectrumSummary{singular_values(m), k, p};
}

/// One evaluated bound: the value, the named terms it recombines from, and
/// whether the 4^{k+p-1} factor saturated double range.
struct BoundReport {
    double bound_value = 0.0;
    std::vector<std::pair<std::string, double>> components;
    Norm norm = Norm::spectral;
    bool saturated = false;

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["bound_value"] = saturated ? nlohmann::json("inf") : nlohmann::json(bound_value);
        j["norm"] = to_string(norm);
        j["saturated"] = saturated;
        nlohmann::json comps = nlohmann::json::object();
        for (const auto& [name, value] : components)
            comps[name] = std::isfinite(value) ? nlohmann::json(value) : nlohmann::json("inf");
        j["components"] = comps;
        return j;
    }
};

/// sqrt(1 + (n-k-p) * 4^(k+p-1)), the oblique-projector norm bound.
/// Evaluated exactly while (n-l)*4^(l-1) is representable, in log space
/// beyond that, saturating to +inf past double range.
inline double projector_bound(std::size_t n, std::size_t k, std::size_t p) {
    const std::size_t l = k + p;
    if (l < 1) throw DomainError("projector_bound: k+p must be >= 1");
    if (n <= l) throw DomainError("projector_bound: requires n > k+p");
    const double count = static_cast<double>(n - l);
    const int exp2term = 2 * (static_cast<int>(l) - 1);  // 4^(l-1) = 2^(2l-2)
    const double term = std::ldexp(count, exp2term);
    if (std::isfinite(term)) return std::sqrt(1.0 + term);
    const double half_log2 = 0.5 * (std::log2(count) + static_cast<double>(exp2term));
    if (half_log2 >= 1024.0) return std::numeric_limits<double>::infinity();
    return std::exp2(half_log2);
}

/// Expectation bound on ||A(I - X^+ X)|| for a Gaussian column sketch X:
///   spectral:  (1+sqrt(k/(p-1))) sigma_{k+1} + (e sqrt(k+p)/p) sqrt(tail)
///   Frobenius: sqrt(1 + k/(p-1)) * sqrt(tail),  tail = sum_{j>k} sigma_j^2.
inline double halko_deviation(const SpectrumSummary& s, Norm norm) {
    s.validate();
    const double k = static_cast<double>(s.k);
    const double p = static_cast<double>(s.p);
    const double tail = std::sqrt(s.tail_energy());
    if (norm == Norm::frobenius) return std::sqrt(1.0 + k / (p - 1.0)) * tail;
    const double e = std::exp(1.0);
    return (1.0 + std::sqrt(k / (p - 1.0))) * s.sigma_kplus1() +
           (e * std::sqrt(k + p) / p) * tail;
}

/// Theorem-3 bound for Algorithm 2:
///   max{E||A - C_A M_A R_A||, E||B - C_B M_B R_B||}
///     <= projector_bound(n,k,p) * halko_deviation(sigma[A;B]).
inline BoundReport pair_bound_alg2(const SpectrumSummary& sigma_stack, std::size_t n, Norm norm) {
    const double proj = projector_bound(n, sigma_stack.k, sigma_stack.p);
    const double dev = halko_deviation(sigma_stack, norm);
    BoundReport r;
    r.norm = norm;
    r.components = {{"projector_factor", proj}, {"deviation", dev}};
    r.bound_value = proj * dev;
    r.saturated = std::isinf(proj) && dev > 0.0;
    return r;
}

struct PairBounds {
    BoundReport a;
    BoundReport b;
};

/// Theorem-5 bounds for Algorithm 3 (spectral norm; the paper states no
/// other case): with alpha = projector_bound(n)*halko(sigma[A;B]),
///   E||A - C_A M_A R_A|| <= 2 alpha + projector_bound(m)*halko(sigma_A),
///   E||B - C_B M_B R_B|| <= 2 alpha + projector_bound(d)*halko(sigma_B).
inline PairBounds pair_bound_alg3(const SpectrumSummary& sigma_stack,
                                  const SpectrumSummary& sigma_a, const SpectrumSummary& sigma_b,
                                  std::size_t m, std::size_t n, std::size_t d,
                                  Norm norm = Norm::spectral) {
    if (norm != Norm::spectral)
        throw DomainError("pair_bound_alg3: only the spectral-norm bound is stated");
    const double proj_n = projector_bound(n, sigma_stack.k, sigma_stack.p);
    const double alpha = proj_n * halko_deviation(sigma_stack, norm);

    auto side = [&](const SpectrumSummary& s, std::size_t dim, const char* tag) {
        const double proj = projector_bound(dim, s.k, s.p);
        const double dev = halko_deviation(s, norm);
        BoundReport r;
        r.norm = norm;
        r.components = {{"alpha", alpha},
                        {std::string("projector_factor_") + tag, proj},
                        {std::string("deviation_") + tag, dev}};
        r.bound_value = 2.0 * alpha + proj * dev;
        r.saturated = std::isinf(r.bound_value);
        return r;
    };
    return PairBounds{side(sigma_a, m, "a"), side(sigma_b, d, "b")};
}

struct TripletBounds {
    BoundReport a;
    BoundReport b;
    BoundReport g;
};

/// Triplet expectation bounds for Algorithm 4 (spectral norm only; the paper
/// states no Frobenius analogue): with beta = halko(sigma[A;G]) and
/// theta = halko(sigma[A,B]),
///   E||A - ...|| <= projector_bound(n)*beta + projector_bound(m)*theta,
///   E||B - ...|| <= projector_bound(m)*theta,
///   E||G - ...|| <= projector_bound(n)*beta.
inline TripletBounds triplet_bound_alg4(const SpectrumSummary& sigma_ag,
                                        const SpectrumSummary& sigma_ab_rows, std::size_t m,
                                        std::size_t n, Norm norm = Norm::spectral) {
    if (norm != Norm::spectral)
        throw DomainError("triplet_bound_alg4: only the spectral-norm bound is stated");
    const double proj_n = projector_bound(n, sigma_ag.k, sigma_ag.p);
    const double proj_m = projector_bound(m, sigma_ab_rows.k, sigma_ab_rows.p);
    const double beta = halko_deviation(sigma_ag, norm);
    const double theta = halko_deviation(sigma_ab_rows, norm);

    TripletBounds out;
    out.a.norm = out.b.norm = out.g.norm = norm;
    out.a.components = {{"projector_factor_cols", proj_n},
                        {"beta", beta},
                        {"projector_factor_rows", proj_m},
                        {"theta", theta}};
    out.a.bound_value = proj_n * beta + proj_m * theta;
    out.a.saturated = std::isinf(out.a.bound_value);
    out.b.components = {{"projector_factor_rows", proj_m}, {"theta", theta}};
    out.b.bound_value = proj_m * theta;
    out.b.saturated = std::isinf(out.b.bound_value);
    out.g.components = {{"projector_factor_cols", proj_n}, {"beta", beta}};
    out.g.bound_value = proj_n * beta;
    out.g.saturated = std::isinf(out.g.bound_value);
    return out;
}

/// Mean observed errors over seeds seed0..seed0+count-1; the Monte-Carlo
/// check that the expectation bounds dominate sample means.
struct MonteCarloMeans {
    double a = 0.0;
    double b = 0.0;
    double g = 0.0;  // pairs leave this 0
};

inline MonteCarloMeans monte_carlo_pair(const DenseMatrix& a, const DenseMatrix& b,
                                        std::size_t k, std::size_t p, std::uint64_t seed0,
                                        std::size_t count, Norm norm, bool pass_efficient) {
    MonteCarloMeans means;
    for (std::size_t i = 0; i < count; ++i) {
        const SketchPlan plan{k, p, seed0 + i};
        PairCur cur;
        if (pass_efficient) {
            InMemorySource sa(a), sb(b);
            cur = *cur_pair_pass_efficient(sa, sb, plan).factors;
        } else {
            cur = cur_pair(a, b, plan);
        }
        means.a += absolute_error(a, cur.a_factors, norm);
        means.b += absolute_error(b, cur.b_factors, norm);
    }
    means.a /= static_cast<double>(count);
    means.b /= static_cast<double>(count);
    return means;
}

inline MonteCarloMeans monte_carlo_triplet(const DenseMatrix& a, const DenseMatrix& b,
                                           const DenseMatrix& g, std::size_t k, std::size_t p,
                                           std::uint64_t seed0, std::size_t count, Norm norm) {
    MonteCarloMeans means;
    for (std::size_t i = 0; i < count; ++i) {
        const SketchPlan plan{k, p, seed0 + i};
        const TripletCur cur = cur_triplet(a, b, g, plan).cur;
        means.a += absolute_error(a, cur.a_factors, norm);
        means.b += absolute_error(b, cur.b_factors, norm);
        means.g += absolute_error(g, cur.g_factors, norm);
    }
    means.a /= static_cast<double>(count);
    means.b /= static_cast<double>(count);
    means.g /= static_cast<double>(count);
    return means;
}

}  // namespace gcur
