// sweep.hpp — parameter sweeps over the three scenarios, Monte-Carlo
// verification runs, and CSV/JSON emission
#pragma once

#include <cstdint>
#include <cstdio>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "errors.hpp"
#include "montecarlo.hpp"

namespace qsd {

enum class Scenario { TwoQubit, SymQubit, SymCoherent };
enum class OutputFormat { Csv, Json };

inline const char* scenario_name(Scenario s) {
    switch (s) {
        case Scenario::TwoQubit:    return "two-qubit";
        case Scenario::SymQubit:    return "sym-qubit";
        case Scenario::SymCoherent: return "sym-coherent";
    }
    return "?";
}

struct RunConfig {
    Scenario scenario = Scenario::TwoQubit;
    // two-qubit grid: theta_steps points from theta_min, endpoint excluded
    double theta_min = 0.0;
    double theta_max = std::numbers::pi / 4;
    int theta_steps = 50;
    // sym-qubit / sym-coherent grid
    int n_min = 3;
    int n_max = 10;
    std::vector<double> mu_values;  // sym-coherent
    double tail_eps = kDefaultTailEps;
    // Monte-Carlo verification
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 12345;
    // output
    OutputFormat format = OutputFormat::Csv;
    std::string out_path;           // empty -> stdout
};

inline void validate_config(const RunConfig& cfg) {
    if (!(cfg.tail_eps > 0.0 && cfg.tail_eps <= 1e-6))
        throw ConfigError("tail_eps must lie in (0, 1e-6]");
    switch (cfg.scenario) {
        case Scenario::TwoQubit:
            if (cfg.theta_steps < 1)
                throw ConfigError("theta grid needs at least one point");
            if (!(cfg.theta_min >= 0.0 && cfg.theta_max <= std::numbers::pi / 4 &&
                  cfg.theta_min <= cfg.theta_max))
                throw ConfigError("theta grid must lie within [0, pi/4]");
            break;
        case Scenario::SymQubit:
            if (cfg.n_min < 3 || cfg.n_max < cfg.n_min)
                throw ConfigError("sym-qubit sweep needs 3 <= n-min <= n-max");
            break;
        case Scenario::SymCoherent:
            if (cfg.n_min < 2 || cfg.n_max < cfg.n_min)
                throw ConfigError("sym-coherent sweep needs 2 <= n-min <= n-max");
            if (cfg.mu_values.empty())
                throw ConfigError("sym-coherent sweep needs at least one --mu");
            break;
    }
}

inline std::vector<double> theta_grid(const RunConfig& cfg) {
    std::vector<double> grid(cfg.theta_steps);
    const double step = (cfg.theta_max - cfg.theta_min) / cfg.theta_steps;
    for (int k = 0; k < cfg.theta_steps; ++k)
        grid[k] = cfg.theta_min + k * step;
    return grid;
}

// One sweep row: either a finished report or a per-row error record carrying
// the parameter echo. Boundary points that violate ensemble invariants
// (theta = pi/4, mu <= 0) land here instead of aborting the sweep.
struct RowOutcome {
    BoundReport report;
    std::string error;

    bool ok() const { return error.empty(); }
};

inline std::vector<RowOutcome> run_two_qubit(const RunConfig& cfg) {
    validate_config(cfg);
    std::vector<RowOutcome> rows;
    for (double theta : theta_grid(cfg)) {
        RowOutcome row;
        row.report.scenario = scenario_name(Scenario::TwoQubit);
        row.report.n = 2;
        row.report.theta = theta;
        try {
            row.report = two_qubit_report(theta);
        } catch (const Error& ex) {
            row.error = ex.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::vector<RowOutcome> run_sym_qubit(const RunConfig& cfg) {
    validate_config(cfg);
    std::vector<RowOutcome> rows;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        RowOutcome row;
        row.report.scenario = scenario_name(Scenario::SymQubit);
        row.report.n = n;
        try {
            row.report = sym_qubit_report(n);
        } catch (const Error& ex) {
            row.error = ex.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::vector<RowOutcome> run_sym_coherent(const RunConfig& cfg) {
    validate_config(cfg);
    std::vector<RowOutcome> rows;
    for (double mu : cfg.mu_values) {
        for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
            RowOutcome row;
            row.report.scenario = scenario_name(Scenario::SymCoherent);
            row.report.n = n;
            row.report.mu = mu;
            try {
                row.report = sym_coherent_report(n, mu, cfg.tail_eps);
            } catch (const Error& ex) {
                row.error = ex.what();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

inline std::vector<RowOutcome> run_scenario(const RunConfig& cfg) {
    switch (cfg.scenario) {
        case Scenario::TwoQubit:    return run_two_qubit(cfg);
        case Scenario::SymQubit:    return run_sym_qubit(cfg);
        case Scenario::SymCoherent: return run_sym_coherent(cfg);
    }
    throw ConfigError("unknown scenario");
}

// Analytic-vs-empirical record for one grid point.
struct McRow {
    std::string scenario;
    int n = 0;
    std::optional<double> theta;
    std::optional<double> mu;
    std::uint64_t seed = 0;
    double analytic_p_err = 0.0;
    TrialRecord record;
    bool pass = false;
    std::string error;

    bool ok() const { return error.empty(); }
};

// Replays the scenario grid, simulating each point with a per-point seed
// derived as seed + grid index so runs stay deterministic.
inline std::vector<McRow> run_montecarlo_check(const RunConfig& cfg) {
    validate_config(cfg);
    if (cfg.trials < 1)
        throw ConfigError("mc-check needs trials >= 1");
    std::vector<McRow> rows;
    std::uint64_t index = 0;
    auto run_point = [&](int n, std::optional<double> theta, std::optional<double> mu) {
        McRow row;
        row.scenario = scenario_name(cfg.scenario);
        row.n = n;
        row.theta = theta;
        row.mu = mu;
        row.seed = cfg.seed + index++;
        try {
            Ensemble e = theta ? two_qubit_pair(*theta, 0.5)
                       : mu    ? symmetric_coherent(n, *mu, cfg.tail_eps)
                               : symmetric_qubits(n);
            Pom m = theta ? helstrom_projective(e) : square_root_measurement(e);
            const CondTable t = cond_table(e, m);
            row.analytic_p_err = error_probability(t);
            row.record = simulate(t, cfg.trials, row.seed);
            row.pass = within_mc_tolerance(row.analytic_p_err, row.record);
        } catch (const Error& ex) {
            row.error = ex.what();
        }
        rows.push_back(std::move(row));
    };
    switch (cfg.scenario) {
        case Scenario::TwoQubit:
            for (double theta : theta_grid(cfg))
                run_point(2, theta, std::nullopt);
            break;
        case Scenario::SymQubit:
            for (int n = cfg.n_min; n <= cfg.n_max; ++n)
                run_point(n, std::nullopt, std::nullopt);
            break;
        case Scenario::SymCoherent:
            for (double mu : cfg.mu_values)
                for (int n = cfg.n_min; n <= cfg.n_max; ++n)
                    run_point(n, std::nullopt, mu);
            break;
    }
    return rows;
}

// ---------------------------------------------------------------------------
// emission: CSV and JSON carry the same values; floats at 12 significant
// digits in CSV, undefined quantities as empty fields / null
// ---------------------------------------------------------------------------

inline std::string fmt12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

inline std::string fmt12(std::optional<double> x) {
    return x ? fmt12(*x) : std::string{};
}

inline const std::vector<std::string>& report_columns() {
    static const std::vector<std::string> cols = {
        "scenario", "n", "theta", "mu", "fock_levels", "p_err_min", "p_fano1",
        "p_fano2", "p_weak1", "p_weak2", "chi", "h_cond", "d1", "d2", "error"};
    return cols;
}

inline void write_reports_csv(std::ostream& out, const std::vector<RowOutcome>& rows) {
    const auto& cols = report_columns();
    for (std::size_t c = 0; c < cols.size(); ++c)
        out << cols[c] << (c + 1 < cols.size() ? "," : "\n");
    for (const RowOutcome& row : rows) {
        const BoundReport& r = row.report;
        if (row.ok())
            check_report_ordering(r);
        out << r.scenario << ',' << r.n << ',' << fmt12(r.theta) << ','
            << fmt12(r.mu) << ',' << (r.fock_levels ? std::to_string(*r.fock_levels) : "");
        if (row.ok()) {
            out << ',' << fmt12(r.p_err_min) << ',' << fmt12(r.p_fano1) << ','
                << fmt12(r.p_fano2) << ',' << fmt12(r.p_weak1) << ','
                << fmt12(r.p_weak2) << ',' << fmt12(r.chi) << ','
                << fmt12(r.h_cond) << ',' << fmt12(r.d1) << ',' << fmt12(r.d2)
                << ",\n";
        } else {
            out << ",,,,,,,,,,\"" << row.error << "\"\n";
        }
    }
}

inline nlohmann::json report_to_json(const RowOutcome& row) {
    const BoundReport& r = row.report;
    nlohmann::json j;
    auto put = [&j](const char* key, const auto& opt) {
        if (opt)
            j[key] = *opt;
        else
            j[key] = nullptr;
    };
    j["scenario"] = r.scenario;
    j["n"] = r.n;
    put("theta", r.theta);
    put("mu", r.mu);
    put("fock_levels", r.fock_levels);
    if (!row.ok()) {
        j["error"] = row.error;
        return j;
    }
    check_report_ordering(r);
    j["p_err_min"] = r.p_err_min;
    j["p_fano1"] = r.p_fano1;
    j["p_fano2"] = r.p_fano2;
    put("p_weak1", r.p_weak1);
    put("p_weak2", r.p_weak2);
    j["chi"] = r.chi;
    j["h_cond"] = r.h_cond;
    put("d1", r.d1);
    put("d2", r.d2);
    return j;
}

inline void write_reports_json(std::ostream& out, const std::vector<RowOutcome>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const RowOutcome& row : rows)
        arr.push_back(report_to_json(row));
    out << arr.dump(2) << '\n';
}

inline void write_mc_csv(std::ostream& out, const std::vector<McRow>& rows) {
    out << "scenario,n,theta,mu,trials,seed,rng,analytic_p_err,empirical_p_err,"
           "std_err,pass,error\n";
    for (const McRow& r : rows) {
        out << r.scenario << ',' << r.n << ',' << fmt12(r.theta) << ','
            << fmt12(r.mu) << ',';
        if (r.ok()) {
            out << r.record.trials << ',' << r.seed << ',' << kRngName << ','
                << fmt12(r.analytic_p_err) << ',' << fmt12(r.record.empirical_p_err)
                << ',' << fmt12(r.record.std_err) << ','
                << (r.pass ? "true" : "false") << ",\n";
        } else {
            out << ",,,,,,," << '"' << r.error << "\"\n";
        }
    }
}

inline void write_mc_json(std::ostream& out, const std::vector<McRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const McRow& r : rows) {
        nlohmann::json j;
        j["scenario"] = r.scenario;
        j["n"] = r.n;
        j["theta"] = r.theta ? nlohmann::json(*r.theta) : nlohmann::json(nullptr);
        j["mu"] = r.mu ? nlohmann::json(*r.mu) : nlohmann::json(nullptr);
        if (r.ok()) {
            j["trials"] = r.record.trials;
            j["seed"] = r.seed;
            j["rng"] = kRngName;
            j["analytic_p_err"] = r.analytic_p_err;
            j["empirical_p_err"] = r.record.empirical_p_err;
            j["std_err"] = r.record.std_err;
            j["pass"] = r.pass;
        } else {
            j["error"] = r.error;
        }
        arr.push_back(j);
    }
    out << arr.dump(2) << '\n';
}

} // namespace qsd
