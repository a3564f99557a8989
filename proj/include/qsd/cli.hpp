// cli.hpp — command-line front end: subcommand parsing, dispatch, exit codes
// (0 success, 1 config error, 2 any per-row error)
#pragma once

#include <fstream>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sweep.hpp"

namespace qsd::cli {

namespace detail {

inline void add_common_options(CLI::App* sub, RunConfig& cfg, std::string& format) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", cfg.out_path, "output path (default stdout)");
    sub->add_option("--tail-eps", cfg.tail_eps,
                    "Poisson tail mass dropped when truncating Fock space")
        ->capture_default_str();
}

inline void add_theta_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--theta-min", cfg.theta_min, "grid start (radians)")
        ->capture_default_str();
    sub->add_option("--theta-max", cfg.theta_max, "grid end, excluded (radians)")
        ->capture_default_str();
    sub->add_option("--theta-steps", cfg.theta_steps, "number of grid points")
        ->capture_default_str();
}

inline void add_n_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--n-min", cfg.n_min, "smallest ensemble size")
        ->capture_default_str();
    sub->add_option("--n-max", cfg.n_max, "largest ensemble size")
        ->capture_default_str();
}

inline int emit_and_exit_code(const RunConfig& cfg, std::ostream& out,
                              const std::vector<RowOutcome>& rows) {
    if (cfg.format == OutputFormat::Csv)
        write_reports_csv(out, rows);
    else
        write_reports_json(out, rows);
    for (const RowOutcome& row : rows)
        if (!row.ok())
            return 2;
    return 0;
}

inline int emit_and_exit_code(const RunConfig& cfg, std::ostream& out,
                              const std::vector<McRow>& rows) {
    if (cfg.format == OutputFormat::Csv)
        write_mc_csv(out, rows);
    else
        write_mc_json(out, rows);
    for (const McRow& row : rows)
        if (!row.ok() || !row.pass)
            return 2;
    return 0;
}

} // namespace detail

// args without the program name, e.g. {"two-qubit", "--theta-steps", "10"}
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"minimum-error discrimination probabilities and Fano-inequality "
                 "bounds for qubit and coherent-state ensembles"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "csv";
    std::string mc_scenario = "sym-qubit";

    CLI::App* two = app.add_subcommand(
        "two-qubit", "sweep two equiprobable qubit states over theta");
    detail::add_theta_options(two, cfg);
    detail::add_common_options(two, cfg, format);

    CLI::App* symq = app.add_subcommand(
        "sym-qubit", "sweep N >= 3 symmetric qubit states");
    detail::add_n_options(symq, cfg);
    detail::add_common_options(symq, cfg, format);

    CLI::App* symc = app.add_subcommand(
        "sym-coherent", "sweep N >= 2 symmetric coherent states over (N, mu)");
    detail::add_n_options(symc, cfg);
    symc->add_option("--mu", cfg.mu_values,
                     "mean photon number (repeatable; default 0.05 0.1 0.2)");
    detail::add_common_options(symc, cfg, format);

    CLI::App* mc = app.add_subcommand(
        "mc-check", "verify analytic error probabilities by sampling");
    mc->add_option("--scenario", mc_scenario, "scenario grid to verify")
        ->check(CLI::IsMember({"two-qubit", "sym-qubit", "sym-coherent"}))
        ->capture_default_str();
    detail::add_theta_options(mc, cfg);
    detail::add_n_options(mc, cfg);
    mc->add_option("--mu", cfg.mu_values,
                   "mean photon number (repeatable; default 0.05 0.1 0.2)");
    mc->add_option("--trials", cfg.trials, "trials per grid point")
        ->capture_default_str();
    mc->add_option("--seed", cfg.seed, "base RNG seed")->capture_default_str();
    detail::add_common_options(mc, cfg, format);

    std::vector<std::string> argv_store;
    argv_store.push_back("qsd");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const std::string& a : argv_store)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;

    const bool is_mc = mc->parsed();
    const std::string scenario =
        is_mc ? mc_scenario
              : (two->parsed() ? "two-qubit"
                               : (symq->parsed() ? "sym-qubit" : "sym-coherent"));
    if (scenario == "two-qubit") {
        cfg.scenario = Scenario::TwoQubit;
    } else if (scenario == "sym-qubit") {
        cfg.scenario = Scenario::SymQubit;
    } else {
        cfg.scenario = Scenario::SymCoherent;
        CLI::App* src = is_mc ? mc : symc;
        if (!src->count("--n-min"))
            cfg.n_min = 2;
        if (!src->count("--n-max"))
            cfg.n_max = 16;
        if (cfg.mu_values.empty())
            cfg.mu_values = {0.05, 0.1, 0.2};
    }

    try {
        std::ofstream file;
        std::ostream* os = &out;
        if (!cfg.out_path.empty()) {
            file.open(cfg.out_path);
            if (!file)
                throw ConfigError("cannot open output path: " + cfg.out_path);
            os = &file;
        }
        if (is_mc)
            return detail::emit_and_exit_code(cfg, *os, run_montecarlo_check(cfg));
        return detail::emit_and_exit_code(cfg, *os, run_scenario(cfg));
    } catch (const ConfigError& ex) {
        err << "error: " << ex.what() << '\n';
        return 1;
    }
}

inline int run(int argc, const char* const* argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

} // namespace qsd::cli
