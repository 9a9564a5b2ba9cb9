#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spast/generator.hpp"

namespace spast {

// Harness for the proportion/runtime studies. Every row of output carries
// the parameters that produced it, the trial count, and the base seed, so
// results are reproducible and confidence intervals computable downstream.

struct ExperimentRow {
    int experiment = 0;
    int n1 = 0;
    int pref_len = 0;
    double t_ds = 0.0;
    double t_dl = 0.0;
    int trials = 0;
    std::uint64_t seed = 0;
    double proportion = 0.0;    // share of instances admitting a solution
    double mean_solve_s = 0.0;  // mean wall-clock seconds per solve call
};

struct BenchRow {
    int n1 = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    double mean_solve_s = 0.0;
};

struct ExperimentOptions {
    int trials = 200;
    std::uint64_t seed = 1;
    bool crosscheck = false;  // verify solver verdicts against the oracle (n1 <= 8)
    int threads = 0;          // 0 = hardware concurrency; SPAST_THREADS caps either way
};

// Fixed list length 50 (clamped to n2) and tie density 0.005 on both
// sides, over a grid of instance sizes.
std::vector<ExperimentRow> run_experiment_1(const std::vector<int>& n1_grid,
                                            const ExperimentOptions& opt);

// Varies the student list length as well as the instance size.
std::vector<ExperimentRow> run_experiment_2(const std::vector<int>& n1_grid,
                                            const std::vector<int>& pref_grid,
                                            const ExperimentOptions& opt);

// Varies both tie densities over a grid, list length 50 (clamped).
std::vector<ExperimentRow> run_experiment_3(const std::vector<int>& n1_grid,
                                            const std::vector<double>& tie_grid,
                                            const ExperimentOptions& opt);

// Mean solve times with Experiment 1 parameters.
std::vector<BenchRow> run_bench(const std::vector<int>& n1_grid, int trials,
                                std::uint64_t seed, int threads = 0);

std::string experiment_csv(const std::vector<ExperimentRow>& rows);
std::string bench_csv(const std::vector<BenchRow>& rows);

// Effective worker count: `requested` (or hardware concurrency when 0),
// capped by the SPAST_THREADS environment variable when set.
int worker_count(int requested);

// Seed for one trial of one grid cell, derived so trials are independent
// across cells and reproducible in isolation.
std::uint64_t trial_seed(std::uint64_t base, std::uint64_t cell, std::uint64_t trial);

}  // namespace spast
