#include "spast/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "spast/oracle.hpp"
#include "spast/solver.hpp"

namespace spast {

int worker_count(int requested) {
    int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1)
        n = 1;
    if (const char* env = std::getenv("SPAST_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1)
            n = std::min(n, cap);
    }
    return n;
}

std::uint64_t trial_seed(std::uint64_t base, std::uint64_t cell, std::uint64_t trial) {
    return splitmix64(splitmix64(splitmix64(base) ^ cell) ^ trial);
}

namespace {

struct CellOutcome {
    int admitting = 0;
    double total_solve_s = 0.0;
};

// Runs all trials of one grid cell on a worker pool. Trial results land in
// per-trial slots and are reduced in index order, so the outcome does not
// depend on scheduling.
CellOutcome run_cell(GeneratorConfig base, int trials, std::uint64_t seed, std::uint64_t cell,
                     int threads, bool crosscheck) {
    std::vector<char> found(trials, 0);
    std::vector<double> secs(trials, 0.0);
    std::vector<std::string> errors(trials);

    auto body = [&](int t) {
        GeneratorConfig cfg = base;
        cfg.seed = trial_seed(seed, cell, (std::uint64_t)t);
        Instance inst = generate(cfg);
        auto t0 = std::chrono::steady_clock::now();
        SolveResult result = solve(inst);
        auto t1 = std::chrono::steady_clock::now();
        secs[t] = std::chrono::duration<double>(t1 - t0).count();
        found[t] = result.found ? 1 : 0;
        if (crosscheck && inst.student_count() <= 8) {
            bool oracle_found = !all_super_stable(inst).empty();
            if (oracle_found != result.found)
                errors[t] = "solver and oracle disagree on existence (seed " +
                            std::to_string(cfg.seed) + ")";
        }
    };

    int workers = std::min(worker_count(threads), trials);
    if (workers <= 1) {
        for (int t = 0; t < trials; ++t)
            body(t);
    } else {
        std::atomic<int> next{0};
        auto drain = [&]() {
            for (int t = next.fetch_add(1); t < trials; t = next.fetch_add(1)) {
                try {
                    body(t);
                } catch (const std::exception& e) {
                    errors[t] = e.what();
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(drain);
        for (std::thread& th : pool)
            th.join();
    }

    for (int t = 0; t < trials; ++t)
        if (!errors[t].empty())
            throw std::logic_error("trial " + std::to_string(t) + ": " + errors[t]);

    CellOutcome out;
    for (int t = 0; t < trials; ++t) {
        out.admitting += found[t];
        out.total_solve_s += secs[t];
    }
    return out;
}

ExperimentRow make_row(int experiment, const GeneratorConfig& cfg, int trials,
                       std::uint64_t seed, const CellOutcome& outcome) {
    ExperimentRow row;
    row.experiment = experiment;
    row.n1 = cfg.n1;
    row.pref_len = cfg.pref_len;
    row.t_ds = cfg.t_ds;
    row.t_dl = cfg.t_dl;
    row.trials = trials;
    row.seed = seed;
    row.proportion = trials > 0 ? (double)outcome.admitting / trials : 0.0;
    row.mean_solve_s = trials > 0 ? outcome.total_solve_s / trials : 0.0;
    return row;
}

int clamped_pref_len(int n1) {
    GeneratorConfig probe = resolve_defaults({.n1 = n1});
    return std::min(50, probe.n2);
}

}  // namespace

std::vector<ExperimentRow> run_experiment_1(const std::vector<int>& n1_grid,
                                            const ExperimentOptions& opt) {
    std::vector<ExperimentRow> rows;
    if (opt.trials <= 0)
        return rows;
    std::uint64_t cell = 0;
    for (int n1 : n1_grid) {
        GeneratorConfig cfg;
        cfg.n1 = n1;
        cfg.pref_len = clamped_pref_len(n1);
        cfg.t_ds = cfg.t_dl = 0.005;
        CellOutcome outcome =
            run_cell(cfg, opt.trials, opt.seed, cell++, opt.threads, opt.crosscheck);
        rows.push_back(make_row(1, cfg, opt.trials, opt.seed, outcome));
    }
    return rows;
}

std::vector<ExperimentRow> run_experiment_2(const std::vector<int>& n1_grid,
                                            const std::vector<int>& pref_grid,
                                            const ExperimentOptions& opt) {
    std::vector<ExperimentRow> rows;
    if (opt.trials <= 0)
        return rows;
    std::uint64_t cell = 0;
    for (int n1 : n1_grid)
        for (int pref : pref_grid) {
            GeneratorConfig cfg;
            cfg.n1 = n1;
            cfg.pref_len = std::min(pref, resolve_defaults({.n1 = n1}).n2);
            cfg.t_ds = cfg.t_dl = 0.005;
            CellOutcome outcome =
                run_cell(cfg, opt.trials, opt.seed, cell++, opt.threads, opt.crosscheck);
            rows.push_back(make_row(2, cfg, opt.trials, opt.seed, outcome));
        }
    return rows;
}

std::vector<ExperimentRow> run_experiment_3(const std::vector<int>& n1_grid,
                                            const std::vector<double>& tie_grid,
                                            const ExperimentOptions& opt) {
    std::vector<ExperimentRow> rows;
    if (opt.trials <= 0)
        return rows;
    std::uint64_t cell = 0;
    for (int n1 : n1_grid)
        for (double t_ds : tie_grid)
            for (double t_dl : tie_grid) {
                GeneratorConfig cfg;
                cfg.n1 = n1;
                cfg.pref_len = clamped_pref_len(n1);
                cfg.t_ds = t_ds;
                cfg.t_dl = t_dl;
                CellOutcome outcome =
                    run_cell(cfg, opt.trials, opt.seed, cell++, opt.threads, opt.crosscheck);
                rows.push_back(make_row(3, cfg, opt.trials, opt.seed, outcome));
            }
    return rows;
}

std::vector<BenchRow> run_bench(const std::vector<int>& n1_grid, int trials, std::uint64_t seed,
                                int threads) {
    std::vector<BenchRow> rows;
    if (trials <= 0)
        return rows;
    std::uint64_t cell = 0;
    for (int n1 : n1_grid) {
        GeneratorConfig cfg;
        cfg.n1 = n1;
        cfg.pref_len = clamped_pref_len(n1);
        cfg.t_ds = cfg.t_dl = 0.005;
        CellOutcome outcome = run_cell(cfg, trials, seed, cell++, threads, false);
        rows.push_back({n1, trials, seed, outcome.total_solve_s / trials});
    }
    return rows;
}

namespace {

std::string format_double(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

}  // namespace

std::string experiment_csv(const std::vector<ExperimentRow>& rows) {
    std::string csv = "experiment,n1,pref_len,t_ds,t_dl,trials,seed,proportion,mean_solve_s\n";
    for (const ExperimentRow& r : rows) {
        csv += std::to_string(r.experiment) + "," + std::to_string(r.n1) + "," +
               std::to_string(r.pref_len) + "," + format_double("%g", r.t_ds) + "," +
               format_double("%g", r.t_dl) + "," + std::to_string(r.trials) + "," +
               std::to_string(r.seed) + "," + format_double("%.6f", r.proportion) + "," +
               format_double("%.9f", r.mean_solve_s) + "\n";
    }
    return csv;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::string csv = "n1,trials,seed,mean_solve_s\n";
    for (const BenchRow& r : rows) {
        csv += std::to_string(r.n1) + "," + std::to_string(r.trials) + "," +
               std::to_string(r.seed) + "," + format_double("%.9f", r.mean_solve_s) + "\n";
    }
    return csv;
}

}  // namespace spast
