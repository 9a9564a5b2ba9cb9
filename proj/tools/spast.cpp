#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spast/cloning.hpp"
#include "spast/experiments.hpp"
#include "spast/generator.hpp"
#include "spast/ip_model.hpp"
#include "spast/oracle.hpp"
#include "spast/solver.hpp"

namespace {

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

int cmd_solve(const std::string& path, bool trace, bool check, bool alternate) {
    spast::Instance inst = spast::read_instance_file(path);
    spast::SolveOptions options;
    options.alternate = alternate;
    options.record_trace = trace;
    spast::SolveResult result = spast::solve(inst, options);

    if (trace) {
        std::string events = spast::format_trace(result.trace);
        size_t pos = 0;
        while (pos < events.size()) {
            size_t next = events.find('\n', pos);
            std::cout << "# " << events.substr(pos, next - pos) << "\n";
            pos = next == std::string::npos ? events.size() : next + 1;
        }
    }

    if (!result.found) {
        std::cout << "NO_SUPER_STABLE\n";
        return 2;
    }
    std::cout << spast::serialize_matching(*result.matching);
    if (check && !spast::is_super_stable(inst, *result.matching)) {
        std::cerr << "internal error: output failed the stability check\n";
        return 1;
    }
    return 0;
}

int cmd_check(const std::string& inst_path, const std::string& matching_path,
              const std::string& notion_name) {
    spast::Instance inst = spast::read_instance_file(inst_path);
    spast::Matching m = spast::read_matching_file(inst, matching_path);
    spast::Notion notion =
        notion_name == "weak" ? spast::Notion::weak : spast::Notion::super;

    spast::MatchingVerdict verdict = spast::is_matching(inst, m);
    if (!verdict.ok) {
        std::cout << "NOT_A_MATCHING " << verdict.reason << "\n";
        return 2;
    }
    std::vector<spast::BlockingPair> blocking = spast::find_blocking_pairs(inst, m, notion);
    if (blocking.empty()) {
        std::cout << (notion == spast::Notion::super ? "SUPER_STABLE\n" : "WEAKLY_STABLE\n");
        return 0;
    }
    for (const spast::BlockingPair& bp : blocking)
        std::cout << "BLOCKING " << bp.student + 1 << " " << bp.project + 1 << " "
                  << spast::block_kind_name(bp.kind) << "\n";
    return 2;
}

int cmd_oracle(const std::string& path, const std::string& notion_name, long long budget,
               const std::string& out) {
    spast::Instance inst = spast::read_instance_file(path);
    spast::EnumerationBudget eb;
    eb.max_nodes = budget;
    std::vector<spast::Matching> matchings = notion_name == "weak"
                                                 ? spast::all_weakly_stable(inst, eb)
                                                 : spast::all_super_stable(inst, eb);
    std::string text = "# " + std::to_string(matchings.size()) + " matchings\n";
    for (const spast::Matching& m : matchings) {
        text += spast::serialize_matching(m);
        text += "\n";
    }
    write_output(out, text);
    return 0;
}

int cmd_ipcheck(const std::string& path, long long budget) {
    spast::Instance inst = spast::read_instance_file(path);
    spast::EnumerationBudget eb;
    eb.max_nodes = budget;
    std::vector<spast::Matching> by_ip = spast::feasible_matchings_by_enumeration(inst, eb);
    std::vector<spast::Matching> by_oracle = spast::all_super_stable(inst, eb);
    bool solver_found = spast::solve(inst).found;

    std::cout << "ip_feasible " << by_ip.size() << "\n";
    std::cout << "oracle_super_stable " << by_oracle.size() << "\n";
    std::cout << "solver_found " << (solver_found ? 1 : 0) << "\n";
    bool agree = by_ip == by_oracle && solver_found == !by_oracle.empty();
    std::cout << (agree ? "AGREE\n" : "DISAGREE\n");
    return agree ? 0 : 2;
}

int cmd_lpexport(const std::string& path, const std::string& out) {
    spast::Instance inst = spast::read_instance_file(path);
    write_output(out, spast::export_lp(spast::build_model(inst)));
    return 0;
}

int cmd_clone(const std::string& path, const std::string& out) {
    spast::Instance inst = spast::read_instance_file(path);
    write_output(out, spast::serialize_instance(spast::clone_to_hrt(inst)));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Student-Project Allocation with ties: super-stability toolkit"};
    app.require_subcommand(1);

    std::string inst_path, matching_path, out_path;
    std::string notion = "super";
    bool trace = false, check = false, alternate = false, crosscheck = false;
    long long budget = 10'000'000;
    int experiment_id = 1;
    spast::ExperimentOptions exp_opt;
    std::vector<int> n1_grid;
    std::vector<int> pref_grid;
    std::vector<double> tie_grid;
    int bench_trials = 50;
    spast::GeneratorConfig gen_cfg;

    CLI::App* solve = app.add_subcommand("solve", "find a super-stable matching or report none");
    solve->add_option("instance", inst_path)->required();
    solve->add_flag("--trace", trace, "print the event trace as comments");
    solve->add_flag("--check", check, "re-verify the output before printing");
    solve->add_flag("--alternate", alternate, "flip the free internal choices");

    CLI::App* chk = app.add_subcommand("check", "verify a matching against an instance");
    chk->add_option("instance", inst_path)->required();
    chk->add_option("matching", matching_path)->required();
    chk->add_option("--notion", notion, "super or weak")
        ->check(CLI::IsMember({"super", "weak"}));

    CLI::App* oracle = app.add_subcommand("oracle", "enumerate all stable matchings");
    oracle->add_option("instance", inst_path)->required();
    oracle->add_option("--notion", notion)->check(CLI::IsMember({"super", "weak"}));
    oracle->add_option("--budget", budget, "search-tree node cap");
    oracle->add_option("-o,--out", out_path);

    CLI::App* ipcheck = app.add_subcommand("ipcheck", "cross-check solver, oracle and the IP model");
    ipcheck->add_option("instance", inst_path)->required();
    ipcheck->add_option("--budget", budget);

    CLI::App* lpexport = app.add_subcommand("lpexport", "write the IP model in LP format");
    lpexport->add_option("instance", inst_path)->required();
    lpexport->add_option("-o,--out", out_path);

    CLI::App* clone = app.add_subcommand("clone", "re-encode as Hospitals/Residents with ties");
    clone->add_option("instance", inst_path)->required();
    clone->add_option("-o,--out", out_path);

    CLI::App* generate = app.add_subcommand("generate", "emit a random instance");
    generate->add_option("--n1", gen_cfg.n1, "students")->required();
    generate->add_option("--n2", gen_cfg.n2, "projects (default n1/2)");
    generate->add_option("--n3", gen_cfg.n3, "lecturers (default n1/5)");
    generate->add_option("--total-capacity", gen_cfg.total_capacity, "default 1.5*n1");
    generate->add_option("--pref-len", gen_cfg.pref_len, "student list length")->required();
    generate->add_option("--tds", gen_cfg.t_ds, "student tie density");
    generate->add_option("--tdl", gen_cfg.t_dl, "lecturer tie density");
    generate->add_option("--seed", gen_cfg.seed);
    generate->add_option("-o,--out", out_path);

    CLI::App* experiment = app.add_subcommand("experiment", "proportion studies, CSV output");
    experiment->add_option("--exp", experiment_id, "1, 2 or 3")->check(CLI::Range(1, 3));
    experiment->add_option("--n1", n1_grid, "instance sizes");
    experiment->add_option("--pref", pref_grid, "list lengths (experiment 2)");
    experiment->add_option("--ties", tie_grid, "tie densities (experiment 3)");
    experiment->add_option("--trials", exp_opt.trials);
    experiment->add_option("--seed", exp_opt.seed);
    experiment->add_option("--threads", exp_opt.threads, "0 = all cores");
    experiment->add_flag("--crosscheck", crosscheck, "verify against the oracle when n1 <= 8");
    experiment->add_option("-o,--out", out_path);

    CLI::App* bench = app.add_subcommand("bench", "mean solve times, CSV output");
    bench->add_option("--n1", n1_grid);
    bench->add_option("--trials", bench_trials);
    bench->add_option("--seed", exp_opt.seed);
    bench->add_option("--threads", exp_opt.threads);
    bench->add_option("-o,--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed())
            return cmd_solve(inst_path, trace, check, alternate);
        if (chk->parsed())
            return cmd_check(inst_path, matching_path, notion);
        if (oracle->parsed())
            return cmd_oracle(inst_path, notion, budget, out_path);
        if (ipcheck->parsed())
            return cmd_ipcheck(inst_path, budget);
        if (lpexport->parsed())
            return cmd_lpexport(inst_path, out_path);
        if (clone->parsed())
            return cmd_clone(inst_path, out_path);
        if (generate->parsed()) {
            write_output(out_path, spast::serialize_instance(spast::generate(gen_cfg)));
            return 0;
        }
        if (experiment->parsed()) {
            exp_opt.crosscheck = crosscheck;
            if (n1_grid.empty()) {
                if (experiment_id == 3)
                    n1_grid = {100, 200, 300};
                else
                    for (int n1 = 100; n1 <= 1000; n1 += 100)
                        n1_grid.push_back(n1);
            }
            std::vector<spast::ExperimentRow> rows;
            if (experiment_id == 1) {
                rows = spast::run_experiment_1(n1_grid, exp_opt);
            } else if (experiment_id == 2) {
                if (pref_grid.empty())
                    pref_grid = {5, 10, 15, 20, 25, 30};
                rows = spast::run_experiment_2(n1_grid, pref_grid, exp_opt);
            } else {
                if (tie_grid.empty())
                    for (int step = 0; step <= 10; ++step)
                        tie_grid.push_back(step * 0.005);
                rows = spast::run_experiment_3(n1_grid, tie_grid, exp_opt);
            }
            write_output(out_path, spast::experiment_csv(rows));
            return 0;
        }
        if (bench->parsed()) {
            if (n1_grid.empty())
                for (int n1 = 100; n1 <= 1000; n1 += 100)
                    n1_grid.push_back(n1);
            write_output(out_path,
                         spast::bench_csv(spast::run_bench(n1_grid, bench_trials, exp_opt.seed,
                                                           exp_opt.threads)));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
