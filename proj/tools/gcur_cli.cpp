// gcur: generalized CUR decompositions of matrix pairs and triplets.
//
// Verbs: decompose, experiment, bounds, generate. Exit codes: 0 success,
// 2 input error, 3 numerical failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <gcur/gcur.hpp>

namespace {

using nlohmann::json;
using namespace gcur;

json one_based(const IndexVector& idx) {
    json arr = json::array();
    for (std::size_t v : idx) arr.push_back(v + 1);
    return arr;
}

std::vector<Norm> norms_from_flag(const std::string& norm_flag) {
    if (norm_flag == "spectral") return {Norm::spectral};
    if (norm_flag == "frobenius") return {Norm::frobenius};
    if (norm_flag == "both") return {Norm::spectral, Norm::frobenius};
    throw InputError("unknown norm '" + norm_flag + "' (spectral|frobenius|both)");
}

json error_entry(const DenseMatrix& src, const CurFactors& f, const std::vector<Norm>& norms) {
    json j = json::object();
    for (Norm n : norms) j[to_string(n)] = relative_error(src, f, n);
    return j;
}

void write_factor_files(const std::string& dir, const std::string& tag, const CurFactors& f) {
    write_matrix_market(dir + "/c_" + tag + ".mtx", f.c);
    write_matrix_market(dir + "/m_" + tag + ".mtx", f.m);
    write_matrix_market(dir + "/r_" + tag + ".mtx", f.r);
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct DecomposeArgs {
    std::vector<std::string> inputs;
    std::string mode = "pair";
    std::size_t k = 0;
    std::size_t p = 5;
    std::uint64_t seed = 0;
    bool pass_efficient = false;
    bool indices_only = false;
    std::string out_dir = ".";
    std::string norm_flag = "both";
};

int run_decompose(const DecomposeArgs& args) {
    const std::size_t want = args.mode == "triplet" ? 3 : 2;
    if (args.inputs.size() != want)
        throw InputError("decompose --mode " + args.mode + " needs " + std::to_string(want) +
                         " matrix files");
    if (args.indices_only && !args.pass_efficient)
        throw InputError("--indices-only requires --pass-efficient");
    std::filesystem::create_directories(args.out_dir);

    const SketchPlan plan{args.k, args.p, args.seed};
    const std::vector<Norm> norms = norms_from_flag(args.norm_flag);

    json report;
    report["mode"] = args.mode;
    report["k"] = args.k;
    report["p"] = args.p;
    report["l"] = plan.sample_size();
    report["seed"] = args.seed;
    report["algorithm"] = args.pass_efficient ? "pass_efficient" : "rand";

    json indices = json::object();
    double wall = 0.0;

    if (args.mode == "pair") {
        if (args.pass_efficient) {
            MatrixMarketSource sa(args.inputs[0]), sb(args.inputs[1]);
            const auto t0 = std::chrono::steady_clock::now();
            const auto res =
                cur_pair_pass_efficient(sa, sb, plan, {args.indices_only, kDefaultBlockRows});
            wall = seconds_since(t0);
            report["pass_count"] = res.passes.passes;
            indices["col_idx"] = one_based(res.col_idx);
            indices["row_idx_a"] = one_based(res.row_idx_a);
            indices["row_idx_b"] = one_based(res.row_idx_b);
            if (res.factors) {
                write_factor_files(args.out_dir, "a", res.factors->a_factors);
                write_factor_files(args.out_dir, "b", res.factors->b_factors);
                const DenseMatrix a = read_matrix_market(args.inputs[0]);
                const DenseMatrix b = read_matrix_market(args.inputs[1]);
                report["errors"]["a"] = error_entry(a, res.factors->a_factors, norms);
                report["errors"]["b"] = error_entry(b, res.factors->b_factors, norms);
            }
        } else {
            const DenseMatrix a = read_matrix_market(args.inputs[0]);
            const DenseMatrix b = read_matrix_market(args.inputs[1]);
            const auto t0 = std::chrono::steady_clock::now();
            const PairCur cur = cur_pair(a, b, plan);
            wall = seconds_since(t0);
            indices["col_idx"] = one_based(cur.a_factors.col_idx);
            indices["row_idx_a"] = one_based(cur.a_factors.row_idx);
            indices["row_idx_b"] = one_based(cur.b_factors.row_idx);
            write_factor_files(args.out_dir, "a", cur.a_factors);
            write_factor_files(args.out_dir, "b", cur.b_factors);
            report["errors"]["a"] = error_entry(a, cur.a_factors, norms);
            report["errors"]["b"] = error_entry(b, cur.b_factors, norms);
        }
    } else {
        if (args.pass_efficient) {
            MatrixMarketSource sa(args.inputs[0]), sb(args.inputs[1]), sg(args.inputs[2]);
            const auto t0 = std::chrono::steady_clock::now();
            const auto res = cur_triplet_pass_efficient(sa, sb, sg, plan,
                                                        {args.indices_only, kDefaultBlockRows});
            wall = seconds_since(t0);
            report["pass_count"] = res.passes.passes;
            indices["col_idx"] = one_based(res.col_idx);
            indices["row_idx"] = one_based(res.row_idx);
            indices["col_idx_b"] = one_based(res.col_idx_b);
            indices["row_idx_g"] = one_based(res.row_idx_g);
            if (res.factors) {
                write_factor_files(args.out_dir, "a", res.factors->a_factors);
                write_factor_files(args.out_dir, "b", res.factors->b_factors);
                write_factor_files(args.out_dir, "g", res.factors->g_factors);
                const DenseMatrix a = read_matrix_market(args.inputs[0]);
                const DenseMatrix b = read_matrix_market(args.inputs[1]);
                const DenseMatrix g = read_matrix_market(args.inputs[2]);
                report["errors"]["a"] = error_entry(a, res.factors->a_factors, norms);
                report["errors"]["b"] = error_entry(b, res.factors->b_factors, norms);
                report["errors"]["g"] = error_entry(g, res.factors->g_factors, norms);
            }
        } else {
            const DenseMatrix a = read_matrix_market(args.inputs[0]);
            const DenseMatrix b = read_matrix_market(args.inputs[1]);
            const DenseMatrix g = read_matrix_market(args.inputs[2]);
            const auto t0 = std::chrono::steady_clock::now();
            const TripletCur cur = cur_triplet(a, b, g, plan).cur;
            wall = seconds_since(t0);
            indices["col_idx"] = one_based(cur.a_factors.col_idx);
            indices["row_idx"] = one_based(cur.a_factors.row_idx);
            indices["col_idx_b"] = one_based(cur.b_factors.col_idx);
            indices["row_idx_g"] = one_based(cur.g_factors.row_idx);
            write_factor_files(args.out_dir, "a", cur.a_factors);
            write_factor_files(args.out_dir, "b", cur.b_factors);
            write_factor_files(args.out_dir, "g", cur.g_factors);
            report["errors"]["a"] = error_entry(a, cur.a_factors, norms);
            report["errors"]["b"] = error_entry(b, cur.b_factors, norms);
            report["errors"]["g"] = error_entry(g, cur.g_factors, norms);
        }
    }

    report["wall_seconds"] = wall;
    {
        std::ofstream out(args.out_dir + "/indices.json");
        out << indices.dump(2) << "\n";
    }
    {
        std::ofstream out(args.out_dir + "/report.json");
        out << report.dump(2) << "\n";
    }
    std::cout << report.dump(2) << "\n";
    return 0;
}

struct ExperimentArgs {
    std::string mode = "pair";
    std::string config_path;
    std::string out_dir = ".";
    std::vector<std::size_t> k_sweep;
    std::size_t p = 5;
    std::size_t n_seeds = 0;
    std::string algorithms = "rand,pass_efficient";
    std::size_t a_rows = 0, cols = 0, b_rows = 0, b_cols = 0, g_rows = 0, true_rank = 0;
};

ExperimentConfig config_from_json(const json& j) {
    ExperimentConfig cfg;
    const std::string mode = j.value("mode", "pair");
    cfg.mode = mode == "triplet" ? ExperimentMode::triplet : ExperimentMode::pair;
    cfg.a_rows = j.value("a_rows", 0u);
    cfg.cols = j.value("cols", 0u);
    cfg.b_rows = j.value("b_rows", 0u);
    cfg.b_cols = j.value("b_cols", 0u);
    cfg.g_rows = j.value("g_rows", 0u);
    cfg.true_rank = j.value("true_rank", 0u);
    cfg.k_sweep = j.value("k_sweep", std::vector<std::size_t>{});
    cfg.oversampling = j.value("oversampling", 5u);
    cfg.seeds = j.value("seeds", std::vector<std::uint64_t>{});
    if (j.contains("algorithms")) {
        cfg.run_randomized = false;
        cfg.run_pass_efficient = false;
        for (const auto& a : j["algorithms"]) {
            if (a == "rand") cfg.run_randomized = true;
            else if (a == "pass_efficient") cfg.run_pass_efficient = true;
            else throw InputError("unknown algorithm '" + a.get<std::string>() + "'");
        }
    }
    cfg.out_dir = j.value("out_dir", ".");
    return cfg;
}

int run_experiment_cmd(const ExperimentArgs& args) {
    ExperimentConfig cfg;
    if (!args.config_path.empty()) {
        std::ifstream in(args.config_path);
        if (!in) throw InputError("cannot open config '" + args.config_path + "'");
        json j;
        try {
            in >> j;
        } catch (const json::parse_error& e) {
            throw InputError("config parse error: " + std::string(e.what()));
        }
        cfg = config_from_json(j);
    } else {
        cfg = args.mode == "triplet" ? ExperimentConfig::experiment2_preset()
                                     : ExperimentConfig::experiment1_preset();
    }
    // explicit flags override the preset/config
    if (args.a_rows) cfg.a_rows = args.a_rows;
    if (args.cols) cfg.cols = args.cols;
    if (args.b_rows) cfg.b_rows = args.b_rows;
    if (args.b_cols) cfg.b_cols = args.b_cols;
    if (args.g_rows) cfg.g_rows = args.g_rows;
    if (args.true_rank) cfg.true_rank = args.true_rank;
    if (!args.k_sweep.empty()) cfg.k_sweep = args.k_sweep;
    if (args.p != 5) cfg.oversampling = args.p;
    if (args.n_seeds) {
        cfg.seeds.clear();
        for (std::uint64_t s = 1; s <= args.n_seeds; ++s) cfg.seeds.push_back(s);
    }
    if (args.algorithms != "rand,pass_efficient") {
        cfg.run_randomized = args.algorithms.find("rand") != std::string::npos;
        cfg.run_pass_efficient = args.algorithms.find("pass_efficient") != std::string::npos;
    }
    cfg.out_dir = args.out_dir;
    std::filesystem::create_directories(cfg.out_dir);

    const ExperimentResult res = run_experiment(cfg);
    std::size_t failed = 0;
    for (const RunRecord& r : res.records)
        if (r.status != "ok") ++failed;
    std::cout << "wrote " << res.records.size() << " runs (" << failed << " failed) to "
              << res.runs_csv_path << "\nsummary: " << res.summary_csv_path << "\n";
    return 0;
}

struct BoundsArgs {
    std::vector<std::string> inputs;
    std::string mode = "pair";
    std::size_t k = 0;
    std::size_t p = 5;
    std::string norm_flag = "spectral";
    std::string out_path;
};

int run_bounds(const BoundsArgs& args) {
    const std::size_t want = args.mode == "triplet" ? 3 : 2;
    if (args.inputs.size() != want)
        throw InputError("bounds --mode " + args.mode + " needs " + std::to_string(want) +
                         " matrix files");

    json out;
    out["mode"] = args.mode;
    out["k"] = args.k;
    out["p"] = args.p;

    if (args.mode == "pair") {
        const DenseMatrix a = read_matrix_market(args.inputs[0]);
        const DenseMatrix b = read_matrix_market(args.inputs[1]);
        if (a.cols() != b.cols())
            throw DimensionMismatch("bounds: A and B must share their column count");
        const SpectrumSummary stack = spectrum_of(vstack(a, b), args.k, args.p);
        for (Norm norm : norms_from_flag(args.norm_flag))
            out["alg2"][to_string(norm)] = pair_bound_alg2(stack, a.cols(), norm).to_json();
        const PairBounds pb =
            pair_bound_alg3(stack, spectrum_of(a, args.k, args.p),
                            spectrum_of(b, args.k, args.p), a.rows(), a.cols(), b.rows());
        out["alg3"]["a"] = pb.a.to_json();
        out["alg3"]["b"] = pb.b.to_json();
    } else {
        const DenseMatrix a = read_matrix_market(args.inputs[0]);
        const DenseMatrix b = read_matrix_market(args.inputs[1]);
        const DenseMatrix g = read_matrix_market(args.inputs[2]);
        if (b.rows() != a.rows() || g.cols() != a.cols())
            throw DimensionMismatch("bounds: triplet shapes must follow (m x n, m x t, d x n)");
        const TripletBounds tb =
            triplet_bound_alg4(spectrum_of(vstack(a, g), args.k, args.p),
                               spectrum_of(hstack(a, b), args.k, args.p), a.rows(), a.cols());
        out["alg4"]["a"] = tb.a.to_json();
        out["alg4"]["b"] = tb.b.to_json();
        out["alg4"]["g"] = tb.g.to_json();
    }

    if (!args.out_path.empty()) {
        std::ofstream f(args.out_path);
        if (!f) throw InputError("cannot open '" + args.out_path + "' for writing");
        f << out.dump(2) << "\n";
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

struct GenerateArgs {
    std::string mode = "pair";
    std::size_t a_rows = 0, cols = 0, b_rows = 0, b_cols = 0, g_rows = 0;
    std::size_t rank = 0;
    std::uint64_t seed = 0;
    std::string out_dir = ".";
};

int run_generate(const GenerateArgs& args) {
    std::filesystem::create_directories(args.out_dir);
    if (args.mode == "pair") {
        auto [a, b] = generate_lowrank_pair(args.a_rows, args.b_rows, args.cols, args.rank,
                                            args.seed);
        write_matrix_market(args.out_dir + "/a.mtx", a);
        write_matrix_market(args.out_dir + "/b.mtx", b);
        std::cout << "wrote a.mtx (" << a.rows() << "x" << a.cols() << "), b.mtx (" << b.rows()
                  << "x" << b.cols() << ") to " << args.out_dir << "\n";
    } else {
        const TripletMatrices m = generate_lowrank_triplet(args.a_rows, args.cols, args.b_cols,
                                                           args.g_rows, args.rank, args.seed);
        write_matrix_market(args.out_dir + "/a.mtx", m.a);
        write_matrix_market(args.out_dir + "/b.mtx", m.b);
        write_matrix_market(args.out_dir + "/g.mtx", m.g);
        std::cout << "wrote a.mtx, b.mtx, g.mtx to " << args.out_dir << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized CUR decompositions of matrix pairs and triplets"};
    app.require_subcommand(1);

    DecomposeArgs dec;
    CLI::App* decompose = app.add_subcommand("decompose", "factor a pair or triplet");
    decompose->add_option("inputs", dec.inputs, "Matrix Market files (A B [G])")->required();
    decompose->add_option("--mode", dec.mode, "pair|triplet")
        ->check(CLI::IsMember({"pair", "triplet"}));
    decompose->add_option("-k,--rank", dec.k, "target rank")->required();
    decompose->add_option("-p,--oversample", dec.p, "oversampling")->capture_default_str();
    decompose->add_option("--seed", dec.seed, "master seed")->capture_default_str();
    decompose->add_flag("--pass-efficient", dec.pass_efficient, "two-pass streaming algorithm");
    decompose->add_flag("--indices-only", dec.indices_only, "single pass, indices only");
    decompose->add_option("--out", dec.out_dir, "output directory")->capture_default_str();
    decompose->add_option("--norm", dec.norm_flag, "spectral|frobenius|both")->capture_default_str()
        ->check(CLI::IsMember({"spectral", "frobenius", "both"}));

    ExperimentArgs exp;
    CLI::App* experiment =
        app.add_subcommand("experiment", "run the synthetic error/runtime sweeps");
    experiment->add_option("--mode", exp.mode, "pair|triplet")
        ->check(CLI::IsMember({"pair", "triplet"}));
    experiment->add_option("--config", exp.config_path, "JSON config file");
    experiment->add_option("--out", exp.out_dir, "output directory")->capture_default_str();
    experiment->add_option("-k,--rank", exp.k_sweep, "target ranks to sweep");
    experiment->add_option("-p,--oversample", exp.p, "oversampling")->capture_default_str();
    experiment->add_option("--seeds", exp.n_seeds, "use seeds 1..N");
    experiment->add_option("--algorithms", exp.algorithms, "subset of rand,pass_efficient")->capture_default_str();
    experiment->add_option("--a-rows", exp.a_rows, "rows of A");
    experiment->add_option("--cols", exp.cols, "columns of A (and B in pair mode, G in triplet)");
    experiment->add_option("--b-rows", exp.b_rows, "rows of B (pair mode)");
    experiment->add_option("--b-cols", exp.b_cols, "columns of B (triplet mode)");
    experiment->add_option("--g-rows", exp.g_rows, "rows of G (triplet mode)");
    experiment->add_option("--true-rank", exp.true_rank, "true rank of the generated matrices");

    BoundsArgs bnd;
    CLI::App* bounds = app.add_subcommand("bounds", "evaluate the expectation error bounds");
    bounds->add_option("inputs", bnd.inputs, "Matrix Market files (A B [G])")->required();
    bounds->add_option("--mode", bnd.mode, "pair|triplet")
        ->check(CLI::IsMember({"pair", "triplet"}));
    bounds->add_option("-k,--rank", bnd.k, "target rank")->required();
    bounds->add_option("-p,--oversample", bnd.p, "oversampling")->capture_default_str();
    bounds->add_option("--norm", bnd.norm_flag, "spectral|frobenius|both (alg2 only)")->capture_default_str()
        ->check(CLI::IsMember({"spectral", "frobenius", "both"}));
    bounds->add_option("--out", bnd.out_path, "write the JSON report here as well");

    GenerateArgs gen;
    CLI::App* generate = app.add_subcommand("generate", "write seeded low-rank test matrices");
    generate->add_option("--mode", gen.mode, "pair|triplet")
        ->check(CLI::IsMember({"pair", "triplet"}));
    generate->add_option("--a-rows", gen.a_rows, "rows of A")->required();
    generate->add_option("--cols", gen.cols, "columns of A")->required();
    generate->add_option("--b-rows", gen.b_rows, "rows of B (pair mode)");
    generate->add_option("--b-cols", gen.b_cols, "columns of B (triplet mode)");
    generate->add_option("--g-rows", gen.g_rows, "rows of G (triplet mode)");
    generate->add_option("-r,--rank", gen.rank, "true rank")->required();
    generate->add_option("--seed", gen.seed, "generation seed")->capture_default_str();
    generate->add_option("--out", gen.out_dir, "output directory")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (decompose->parsed()) return run_decompose(dec);
        if (experiment->parsed()) return run_experiment_cmd(exp);
        if (bounds->parsed()) return run_bounds(bnd);
        if (generate->parsed()) return run_generate(gen);
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
