// montecarlo.hpp — empirical verification of conditional probability tables by
// sampling preparation and measurement outcomes
#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "measurement.hpp"

namespace qsd {

inline constexpr const char* kRngName = "splitmix64";

// Counter-based 64-bit generator (Steele, Lea, Flood 2014): plenty of
// statistical quality at the 1e6..1e8 trial scale and trivially reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1) with 53 random bits
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

struct TrialRecord {
    std::uint64_t trials = 0;
    std::uint64_t errors = 0;
    double empirical_p_err = 0.0;
    double std_err = 0.0;  // sqrt(p(1-p)/trials)
};

namespace detail {

// cumulative distribution for inverse-CDF sampling; renormalized so the last
// bucket is exactly 1 (rows may sum to 1 +- 1e-9 after clamping)
inline std::vector<double> make_cdf(const std::vector<double>& w) {
    std::vector<double> cdf(w.size());
    double cum = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        cum += w[k];
        cdf[k] = cum;
    }
    for (double& c : cdf)
        c /= cum;
    cdf.back() = 1.0;
    return cdf;
}

inline std::size_t sample(const std::vector<double>& cdf, double u) {
    std::size_t k = 0;
    while (k + 1 < cdf.size() && u >= cdf[k])
        ++k;
    return k;
}

} // namespace detail

// Draw i ~ priors, then j ~ P(.|i); count j != i. Single stream, so the
// record is bitwise reproducible for a fixed seed.
inline TrialRecord simulate(const CondTable& t, std::uint64_t trials,
                            std::uint64_t seed) {
    if (trials < 1)
        throw OutOfRange("simulate: need at least one trial");
    const int ns = t.n_states();
    const std::vector<double> prior_cdf = detail::make_cdf(t.priors);
    std::vector<std::vector<double>> row_cdf(ns);
    for (int i = 0; i < ns; ++i) {
        std::vector<double> row(t.n_outcomes());
        for (int j = 0; j < t.n_outcomes(); ++j)
            row[j] = t.p_given(i, j);
        row_cdf[i] = detail::make_cdf(row);
    }
    SplitMix64 rng(seed);
    TrialRecord rec;
    rec.trials = trials;
    for (std::uint64_t k = 0; k < trials; ++k) {
        const std::size_t i = detail::sample(prior_cdf, rng.uniform());
        const std::size_t j = detail::sample(row_cdf[i], rng.uniform());
        if (j != i)
            ++rec.errors;
    }
    rec.empirical_p_err = static_cast<double>(rec.errors) / static_cast<double>(trials);
    rec.std_err = std::sqrt(rec.empirical_p_err * (1.0 - rec.empirical_p_err) /
                            static_cast<double>(trials));
    return rec;
}

inline TrialRecord simulate(const Ensemble& e, const Pom& m, std::uint64_t trials,
                            std::uint64_t seed) {
    return simulate(cond_table(e, m), trials, seed);
}

// Agreement at n_sigma standard errors; the 1e-12 floor covers the
// zero-variance case of perfectly distinguishable states.
inline bool within_mc_tolerance(double analytic_p_err, const TrialRecord& rec,
                                double n_sigma = 5.0) {
    return std::abs(rec.empirical_p_err - analytic_p_err) <=
           n_sigma * rec.std_err + 1e-12;
}

} // namespace qsd
