#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gcur/kernels.hpp"
#include "gcur/pair.hpp"
#include "gcur/random.hpp"
#include "gcur/triplet.hpp"

namespace gcur {

namespace detail {

/// splitmix64; keeps data-generation seeds out of the sketch-seed space
/// (the decomposition draws Omegas at seed+0..seed+5 with the same Philox).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (tag + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline DenseMatrix lowrank_product(std::size_t rows, std::size_t cols, std::size_t rank,
                                   std::uint64_t left_seed, std::uint64_t right_seed) {
    const DenseMatrix left = gaussian(rows, rank, left_seed).dense();
    const DenseMatrix right = gaussian(rank, cols, right_seed).dense();
    return matmul(left, right);
}

}  // namespace detail

/// A = A1*A2 with seeded standard-normal factors; rank r with probability 1.
inline std::pair<DenseMatrix, DenseMatrix> generate_lowrank_pair(
    std::size_t a_rows, std::size_t b_rows, std::size_t cols, std::size_t rank,
    std::uint64_t seed) {
    if (rank == 0 || rank > a_rows || rank > b_rows || rank > cols)
        throw InputError("generate_lowrank_pair: rank exceeds a dimension");
    return {detail::lowrank_product(a_rows, cols, rank, detail::mix_seed(seed, 0),
                                    detail::mix_seed(seed, 1)),
            detail::lowrank_product(b_rows, cols, rank, detail::mix_seed(seed, 2),
                                    detail::mix_seed(seed, 3))};
}

struct TripletMatrices {
    DenseMatrix a, b, g;
};

inline TripletMatrices generate_lowrank_triplet(std::size_t m, std::size_t n, std::size_t t,
                                                std::size_t d, std::size_t rank,
                                                std::uint64_t seed) {
    if (rank == 0 || rank > m || rank > n || rank > t || rank > d)
        throw InputError("generate_lowrank_triplet: rank exceeds a dimension");
    TripletMatrices out;
    out.a = detail::lowrank_product(m, n, rank, detail::mix_seed(seed, 0),
                                    detail::mix_seed(seed, 1));
    out.b = detail::lowrank_product(m, t, rank, detail::mix_seed(seed, 2),
                                    detail::mix_seed(seed, 3));
    out.g = detail::lowrank_product(d, n, rank, detail::mix_seed(seed, 4),
                                    detail::mix_seed(seed, 5));
    return out;
}

enum class ExperimentMode { pair, triplet };

struct ExperimentConfig {
    ExperimentMode mode = ExperimentMode::pair;
    // pair: A is a_rows x cols, B is b_rows x cols.
    // triplet: A is a_rows x cols, B is a_rows x b_cols, G is g_rows x cols.
    std::size_t a_rows = 0;
    std::size_t cols = 0;
    std::size_t b_rows = 0;
    std::size_t b_cols = 0;
    std::size_t g_rows = 0;
    std::size_t true_rank = 0;
    std::vector<std::size_t> k_sweep;
    std::size_t oversampling = 5;
    std::vector<std::uint64_t> seeds;
    bool run_randomized = true;
    bool run_pass_efficient = true;
    std::string out_dir = ".";

    /// Desk-scale preset of the paper's Experiment 1 (rank-100 randn products).
    static ExperimentConfig experiment1_preset() {
        ExperimentConfig c;
        c.mode = ExperimentMode::pair;
        c.a_rows = 1000;
        c.b_rows = 800;
        c.cols = 500;
        c.true_rank = 100;
        c.k_sweep = {60, 80, 100};
        c.seeds = {1, 2, 3, 4, 5};
        return c;
    }

    /// Desk-scale preset of the paper's Experiment 2.
    static ExperimentConfig experiment2_preset() {
        ExperimentConfig c;
        c.mode = ExperimentMode::triplet;
        c.a_rows = 500;
        c.cols = 500;
        c.b_cols = 1000;
        c.g_rows = 1000;
        c.true_rank = 100;
        c.k_sweep = {60, 80, 100};
        c.seeds = {1, 2, 3, 4, 5};
        return c;
    }

    void validate() const {
        if (k_sweep.empty()) throw InputError("experiment: k sweep is empty");
        if (seeds.empty()) throw InputError("experiment: seeds list is empty");
        if (true_rank == 0) throw InputError("experiment: true rank must be >= 1");
        if (!run_randomized && !run_pass_efficient)
            throw InputError("experiment: no algorithms selected");
        for (std::size_t k : k_sweep) {
            if (k < 1) throw InputError("experiment: k values must be >= 1");
            const std::size_t l = k + oversampling;
            std::size_t min_dim = std::min(a_rows, cols);
            min_dim = std::min(min_dim, b_rows ? b_rows : min_dim);
            min_dim = std::min(min_dim, b_cols ? b_cols : min_dim);
            min_dim = std::min(min_dim, g_rows ? g_rows : min_dim);
            if (l > min_dim)
                throw InputError("experiment: every dim must be >= max(k)+p");
        }
    }
};

/// One decomposition run. Errors are NaN on failed rows and for matrices the
/// mode does not include (pair runs leave the G columns empty).
struct RunRecord {
    std::string algorithm;  // "rand" | "pass_efficient"
    std::size_t k = 0;
    std::size_t l = 0;
    std::size_t p = 0;
    std::uint64_t seed = 0;
    double err_a_spectral = std::nan("");
    double err_a_frobenius = std::nan("");
    double err_b_spectral = std::nan("");
    double err_b_frobenius = std::nan("");
    double err_g_spectral = std::nan("");
    double err_g_frobenius = std::nan("");
    double wall_seconds = 0.0;
    std::size_t pass_count = 0;  // 0 for the in-memory algorithms
    std::string status = "ok";   // "ok" or the error message
};

namespace detail {

inline std::string fmt_double(double v) {
    if (std::isnan(v)) return "";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline double parse_double(const std::string& s) {
    if (s.empty()) return std::nan("");
    return std::stod(s);
}

inline std::string sanitize(std::string s) {
    for (char& c : s)
        if (c == ',' || c == '\n' || c == '\r') c = ';';
    return s;
}

inline std::size_t thread_budget() {
    if (const char* env = std::getenv("GCUR_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<std::size_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

}  // namespace detail

inline const char* kRunsCsvHeader =
    "algorithm,k,l,p,seed,err_a_spectral,err_a_frobenius,err_b_spectral,err_b_frobenius,"
    "err_g_spectral,err_g_frobenius,wall_seconds,pass_count,status";

inline std::string to_csv_row(const RunRecord& r) {
    std::ostringstream os;
    os << r.algorithm << ',' << r.k << ',' << r.l << ',' << r.p << ',' << r.seed << ','
       << detail::fmt_double(r.err_a_spectral) << ',' << detail::fmt_double(r.err_a_frobenius)
       << ',' << detail::fmt_double(r.err_b_spectral) << ','
       << detail::fmt_double(r.err_b_frobenius) << ',' << detail::fmt_double(r.err_g_spectral)
       << ',' << detail::fmt_double(r.err_g_frobenius) << ','
       << detail::fmt_double(r.wall_seconds) << ',' << r.pass_count << ','
       << detail::sanitize(r.status);
    return os.str();
}

inline std::vector<RunRecord> parse_runs_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "' for reading");
    std::string line;
    if (!std::getline(in, line) || line != kRunsCsvHeader)
        throw ParseError(path + ": unexpected CSV header", 1);
    std::vector<RunRecord> out;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::string cell;
        std::istringstream row(line);
        while (std::getline(row, cell, ',')) f.push_back(cell);
        if (line.back() == ',') f.push_back("");
        if (f.size() != 14) throw ParseError(path + ": expected 14 fields", lineno);
        RunRecord r;
        r.algorithm = f[0];
        r.k = std::stoull(f[1]);
        r.l = std::stoull(f[2]);
        r.p = std::stoull(f[3]);
        r.seed = std::stoull(f[4]);
        r.err_a_spectral = detail::parse_double(f[5]);
        r.err_a_frobenius = detail::parse_double(f[6]);
        r.err_b_spectral = detail::parse_double(f[7]);
        r.err_b_frobenius = detail::parse_double(f[8]);
        r.err_g_spectral = detail::parse_double(f[9]);
        r.err_g_frobenius = detail::parse_double(f[10]);
        r.wall_seconds = detail::parse_double(f[11]);
        r.pass_count = std::stoull(f[12]);
        r.status = f[13];
        out.push_back(std::move(r));
    }
    return out;
}

/// Runs one (algorithm, k, seed) cell of an experiment.
inline RunRecord run_experiment_cell(const ExperimentConfig& cfg, bool pass_efficient,
                                     std::size_t k, std::uint64_t seed) {
    RunRecord rec;
    rec.algorithm = pass_efficient ? "pass_efficient" : "rand";
    rec.k = k;
    rec.p = cfg.oversampling;
    rec.l = k + cfg.oversampling;
    rec.seed = seed;
    const SketchPlan plan{k, cfg.oversampling, seed};

    try {
        if (cfg.mode == ExperimentMode::pair) {
            auto [a, b] = generate_lowrank_pair(cfg.a_rows, cfg.b_rows, cfg.cols, cfg.true_rank,
                                                seed);
            PairCur cur;
            const auto t0 = std::chrono::steady_clock::now();
            if (pass_efficient) {
                InMemorySource sa(a), sb(b);
                auto res = cur_pair_pass_efficient(sa, sb, plan);
                rec.pass_count = res.passes.passes;
                cur = std::move(*res.factors);
            } else {
                cur = cur_pair(a, b, plan);
            }
            rec.wall_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            rec.err_a_spectral = relative_error(a, cur.a_factors, Norm::spectral);
            rec.err_a_frobenius = relative_error(a, cur.a_factors, Norm::frobenius);
            rec.err_b_spectral = relative_error(b, cur.b_factors, Norm::spectral);
            rec.err_b_frobenius = relative_error(b, cur.b_factors, Norm::frobenius);
        } else {
            TripletMatrices mats = generate_lowrank_triplet(cfg.a_rows, cfg.cols, cfg.b_cols,
                                                            cfg.g_rows, cfg.true_rank, seed);
            TripletCur cur;
            const auto t0 = std::chrono::steady_clock::now();
            if (pass_efficient) {
                InMemorySource sa(mats.a), sb(mats.b), sg(mats.g);
                auto res = cur_triplet_pass_efficient(sa, sb, sg, plan);
                rec.pass_count = res.passes.passes;
                cur = std::move(*res.factors);
            } else {
                cur = cur_triplet(mats.a, mats.b, mats.g, plan).cur;
            }
            rec.wall_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            rec.err_a_spectral = relative_error(mats.a, cur.a_factors, Norm::spectral);
            rec.err_a_frobenius = relative_error(mats.a, cur.a_factors, Norm::frobenius);
            rec.err_b_spectral = relative_error(mats.b, cur.b_factors, Norm::spectral);
            rec.err_b_frobenius = relative_error(mats.b, cur.b_factors, Norm::frobenius);
            rec.err_g_spectral = relative_error(mats.g, cur.g_factors, Norm::spectral);
            rec.err_g_frobenius = relative_error(mats.g, cur.g_factors, Norm::frobenius);
        }
    } catch (const Error& e) {
        rec.status = std::string("failed: ") + e.what();
    }
    return rec;
}

struct ExperimentResult {
    std::vector<RunRecord> records;
    std::string runs_csv_path;
    std::string summary_csv_path;
};

/// Runs the full sweep and writes runs.csv plus summary.csv (means over
/// seeds per algorithm and k). Rows are emitted in (algorithm, k, seed)
/// order no matter how the cells were scheduled; GCUR_THREADS caps the
/// worker count.
inline ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();

    struct Cell {
        bool pass_efficient;
        std::size_t k;
        std::uint64_t seed;
    };
    std::vector<Cell> cells;
    std::vector<std::uint64_t> seeds = cfg.seeds;
    std::sort(seeds.begin(), seeds.end());
    std::vector<std::size_t> ks = cfg.k_sweep;
    std::sort(ks.begin(), ks.end());
    for (int alg = 0; alg < 2; ++alg) {
        const bool pe = alg == 1;
        if ((pe && !cfg.run_pass_efficient) || (!pe && !cfg.run_randomized)) continue;
        for (std::size_t k : ks)
            for (std::uint64_t s : seeds) cells.push_back({pe, k, s});
    }

    std::vector<RunRecord> records(cells.size());
    const std::size_t workers = std::min(detail::thread_budget(), cells.size());
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            records[i] = run_experiment_cell(cfg, cells[i].pass_efficient, cells[i].k,
                                             cells[i].seed);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    ExperimentResult out;
    out.records = std::move(records);
    out.runs_csv_path = cfg.out_dir + "/runs.csv";
    out.summary_csv_path = cfg.out_dir + "/summary.csv";

    std::ofstream runs(out.runs_csv_path);
    if (!runs) throw InputError("cannot open '" + out.runs_csv_path + "' for writing");
    runs << kRunsCsvHeader << "\n";
    for (const RunRecord& r : out.records) runs << to_csv_row(r) << "\n";
    if (!runs) throw InputError("write to '" + out.runs_csv_path + "' failed");
    runs.close();

    std::ofstream summary(out.summary_csv_path);
    if (!summary) throw InputError("cannot open '" + out.summary_csv_path + "' for writing");
    summary << "algorithm,k,l,p,n_seeds,n_failed,mean_err_a_spectral,mean_err_a_frobenius,"
               "mean_err_b_spectral,mean_err_b_frobenius,mean_err_g_spectral,"
               "mean_err_g_frobenius,mean_wall_seconds\n";
    for (int alg = 0; alg < 2; ++alg) {
        const bool pe = alg == 1;
        if ((pe && !cfg.run_pass_efficient) || (!pe && !cfg.run_randomized)) continue;
        for (std::size_t k : ks) {
            double sum[7] = {0, 0, 0, 0, 0, 0, 0};
            std::size_t n_ok = 0, n_failed = 0;
            for (const RunRecord& r : out.records) {
                if (r.k != k || (r.algorithm == "pass_efficient") != pe) continue;
                if (r.status != "ok") {
                    ++n_failed;
                    continue;
                }
                ++n_ok;
                sum[0] += r.err_a_spectral;
                sum[1] += r.err_a_frobenius;
                sum[2] += r.err_b_spectral;
                sum[3] += r.err_b_frobenius;
                sum[4] += r.err_g_spectral;
                sum[5] += r.err_g_frobenius;
                sum[6] += r.wall_seconds;
            }
            summary << (pe ? "pass_efficient" : "rand") << ',' << k << ','
                    << k + cfg.oversampling << ',' << cfg.oversampling << ',' << n_ok << ','
                    << n_failed;
            for (int c = 0; c < 7; ++c) {
                const double mean = n_ok ? sum[c] / static_cast<double>(n_ok) : std::nan("");
                summary << ',' << detail::fmt_double(mean);
            }
            summary << "\n";
        }
    }
    if (!summary) throw InputError("write to '" + out.summary_csv_path + "' failed");
    return out;
}

}  // namespace gcur
