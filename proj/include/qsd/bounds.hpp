// bounds.hpp — Helstrom bound, Fano-inequality error bounds and their weak
// variants, relative-difference diagnostics, per-scenario reports
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "ensembles.hpp"
#include "entropy.hpp"
#include "errors.hpp"
#include "measurement.hpp"

namespace qsd {

inline constexpr double kFanoTolerance = 1e-12;  // absolute tolerance on p
inline constexpr int    kFanoMaxIter   = 200;

// Left-hand side of Fano's inequality: H_bin(p) + p log2(n-1).
// Concave on [0, 1], maximum log2(n) at p = (n-1)/n.
inline double fano_lhs(double p, int n) {
    return binary_entropy(p) + (n > 2 ? p * std::log2(n - 1.0) : 0.0);
}

struct FanoSolution {
    double lower_root = 0.0;            // NaN when infeasible
    std::optional<double> upper_root;   // present when the bound interval ends before p = 1
    double rhs = 0.0;
    int n = 2;
    bool feasible = true;
};

// Smallest p with H_bin(p) + p log2(n-1) = rhs, by bisection on the rising
// branch [0, (n-1)/n]. rhs <= 0 gives root 0; rhs above the maximum log2(n)
// (beyond round-off) is infeasible. The second, falling-branch root is
// reported when rhs exceeds the value at p = 1, i.e. log2(n-1).
inline FanoSolution fano_lower_root(double rhs, int n) {
    if (n < 2)
        throw OutOfRange("fano_lower_root: need n >= 2");
    if (!std::isfinite(rhs))
        throw OutOfRange("fano_lower_root: rhs must be finite");
    FanoSolution sol;
    sol.rhs = rhs;
    sol.n = n;
    if (rhs <= 0.0) {
        sol.lower_root = 0.0;
        return sol;
    }
    const double log_n = std::log2(static_cast<double>(n));
    if (rhs > log_n + 1e-12) {
        sol.feasible = false;
        sol.lower_root = std::numeric_limits<double>::quiet_NaN();
        return sol;
    }
    const double target = std::min(rhs, log_n);
    const double p_star = (n - 1.0) / n;
    double lo = 0.0, hi = p_star;
    for (int it = 0; it < kFanoMaxIter && hi - lo > kFanoTolerance; ++it) {
        const double mid = 0.5 * (lo + hi);
        (fano_lhs(mid, n) < target ? lo : hi) = mid;
    }
    sol.lower_root = 0.5 * (lo + hi);
    if (target > fano_lhs(1.0, n)) {
        lo = p_star;
        hi = 1.0;
        for (int it = 0; it < kFanoMaxIter && hi - lo > kFanoTolerance; ++it) {
            const double mid = 0.5 * (lo + hi);
            (fano_lhs(mid, n) > target ? lo : hi) = mid;
        }
        sol.upper_root = 0.5 * (lo + hi);
    }
    return sol;
}

// p_err^min for two states: (1 - sqrt(1 - 4 p0 p1 |overlap|^2)) / 2
inline double helstrom_bound(double p0, Complex overlap) {
    if (!(p0 > 0.0 && p0 < 1.0))
        throw OutOfRange("helstrom_bound: p0 must lie in (0, 1)");
    const double lam2 = std::norm(overlap);
    if (lam2 > 1.0 + 1e-12)
        throw OutOfRange("helstrom_bound: |overlap| must not exceed 1");
    const double arg = std::max(0.0, 1.0 - 4.0 * p0 * (1.0 - p0) * lam2);
    return 0.5 * (1.0 - std::sqrt(arg));
}

// p_err = 1 - sum_i p_i P(i|i), under the guess-equals-outcome rule
inline double error_probability(const CondTable& t) {
    if (t.n_states() != t.n_outcomes())
        throw ShapeMismatch("error_probability: table must be square");
    double p_cor = 0.0;
    for (int i = 0; i < t.n_states(); ++i)
        p_cor += t.priors[i] * t.p_given(i, i);
    const double p_err = std::clamp(1.0 - p_cor, 0.0, 1.0);
    return p_err < kProbFloor ? 0.0 : p_err;
}

// Solves Fano's inequality with the measurement's own conditional entropy;
// this is the measurement-dependent bound p_err^(1).
inline FanoSolution fano_bound_from_measurement(const Ensemble& e, const Pom& m) {
    return fano_lower_root(conditional_entropy(cond_table(e, m)), e.size());
}

// Measurement-independent variant via the Holevo bound: rhs = H(i) - chi;
// this is p_err^(2).
inline FanoSolution fano_holevo_bound(const Ensemble& e) {
    return fano_lower_root(shannon_entropy(e.priors) - holevo_chi(e), e.size());
}

// Appendix-style weak variants (H_bin <= 1 dropped from the lhs):
// p_err >= (rhs - 1)/log2(n-1), clamped below at 0.
inline std::pair<double, double> weak_fano_bounds(double rhs1, double rhs2, int n) {
    if (n <= 2)
        throw OutOfRange("weak_fano_bounds: need n >= 3");
    const double l = std::log2(n - 1.0);
    return {std::max(0.0, (rhs1 - 1.0) / l), std::max(0.0, (rhs2 - 1.0) / l)};
}

// One parameter point's bundle of bounds and diagnostics.
struct BoundReport {
    std::string scenario;               // "two-qubit" | "sym-qubit" | "sym-coherent"
    int n = 0;
    std::optional<double> theta;        // two-qubit
    std::optional<double> mu;           // sym-coherent
    std::optional<int> fock_levels;     // sym-coherent: Fock cutoff n_max used
    double p_err_min = 0.0;
    double p_fano1 = 0.0;
    double p_fano2 = 0.0;
    std::optional<double> p_weak1;      // n >= 3 only (log2(n-1) > 0)
    std::optional<double> p_weak2;
    double chi = 0.0;
    double h_cond = 0.0;
    std::optional<double> d1;           // |p_fano_l - p_err_min| / p_err_min,
    std::optional<double> d2;           // undefined when p_err_min = 0
};

namespace detail {

inline BoundReport assemble_report(std::string scenario, const Ensemble& e,
                                   const Pom& m) {
    const CondTable t = cond_table(e, m);
    BoundReport r;
    r.scenario = std::move(scenario);
    r.n = e.size();
    r.h_cond = conditional_entropy(t);
    r.chi = holevo_chi(e);
    r.p_err_min = error_probability(t);
    r.p_fano1 = fano_lower_root(r.h_cond, r.n).lower_root;
    const double rhs2 = shannon_entropy(e.priors) - r.chi;
    r.p_fano2 = fano_lower_root(rhs2, r.n).lower_root;
    if (r.n >= 3) {
        const auto [w1, w2] = weak_fano_bounds(r.h_cond, rhs2, r.n);
        r.p_weak1 = w1;
        r.p_weak2 = w2;
    }
    if (r.p_err_min > 0.0) {
        r.d1 = std::abs(r.p_fano1 - r.p_err_min) / r.p_err_min;
        r.d2 = std::abs(r.p_fano2 - r.p_err_min) / r.p_err_min;
    }
    return r;
}

} // namespace detail

// Scenario builders use the minimum-error measurement of each family.

inline BoundReport two_qubit_report(double theta) {
    const Ensemble e = two_qubit_pair(theta, 0.5);
    BoundReport r = detail::assemble_report("two-qubit", e, helstrom_projective(e));
    r.theta = theta;
    return r;
}

inline BoundReport sym_qubit_report(int n) {
    const Ensemble e = symmetric_qubits(n);
    return detail::assemble_report("sym-qubit", e, square_root_measurement(e));
}

inline BoundReport sym_coherent_report(int n, double mu,
                                       double tail_eps = kDefaultTailEps) {
    const Ensemble e = symmetric_coherent(n, mu, tail_eps);
    BoundReport r = detail::assemble_report("sym-coherent", e, square_root_measurement(e));
    r.mu = mu;
    r.fock_levels = static_cast<int>(e.dim()) - 1;
    return r;
}

// Ordering invariants every report must satisfy; re-checked at emission.
inline void check_report_ordering(const BoundReport& r) {
    const double tol = 1e-9;
    auto in_unit = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (!in_unit(r.p_err_min) || !in_unit(r.p_fano1) || !in_unit(r.p_fano2))
        throw Error("check_report_ordering: probability outside [0, 1]");
    if (r.p_fano1 > r.p_err_min + tol)
        throw Error("check_report_ordering: p_fano1 exceeds p_err_min");
    if (r.p_fano2 > r.p_fano1 + tol)
        throw Error("check_report_ordering: p_fano2 exceeds p_fano1");
    if (r.p_weak1 && *r.p_weak1 > r.p_fano1 + tol)
        throw Error("check_report_ordering: weak variant exceeds p_fano1");
    if (r.p_weak2 && *r.p_weak2 > r.p_fano2 + tol)
        throw Error("check_report_ordering: weak variant exceeds p_fano2");
    if (r.d1 && r.d2 && *r.d2 < *r.d1 - tol)
        throw Error("check_report_ordering: d2 below d1");
}

} // namespace qsd
