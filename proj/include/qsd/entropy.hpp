// entropy.hpp — Shannon/von Neumann entropies, mutual information, Holevo
// information. All logarithms base 2; everything in bits.
#pragma once

#include <cmath>
#include <vector>

#include "ensembles.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "measurement.hpp"

namespace qsd {

// probabilities below this count as exact zeros inside entropy sums
inline constexpr double kProbFloor = 1e-15;

inline double entropy_term(double p) {
    return p > kProbFloor ? -p * std::log2(p) : 0.0;
}

inline void check_prob_vector(const std::vector<double>& p, const char* where) {
    double sum = 0.0;
    for (double x : p) {
        if (x < -kProbFloor || !std::isfinite(x))
            throw OutOfRange(std::string(where) + ": probabilities must be nonnegative");
        sum += x;
    }
    if (std::abs(sum - 1.0) > kPriorSumTol)
        throw OutOfRange(std::string(where) + ": probabilities must sum to 1");
}

// H = -sum p log2 p, with 0 log2 0 = 0
inline double shannon_entropy(const std::vector<double>& p) {
    check_prob_vector(p, "shannon_entropy");
    double h = 0.0;
    for (double x : p)
        h += entropy_term(x);
    return h;
}

inline double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw OutOfRange("binary_entropy: p must lie in [0, 1]");
    return entropy_term(p) + entropy_term(1.0 - p);
}

// H(i|j) = -sum_{i,j} p_i P(j|i) log2[ P(j|i) p_i / q_j ]
inline double conditional_entropy(const CondTable& t) {
    double h = 0.0;
    for (int i = 0; i < t.n_states(); ++i)
        for (int j = 0; j < t.n_outcomes(); ++j) {
            const double joint = t.priors[i] * t.p_given(i, j);
            if (joint > kProbFloor)
                h -= joint * std::log2(joint / t.outcome_marginals[j]);
        }
    return h;
}

// I(i:j) = sum_{i,j} p_i P(j|i) log2[ P(j|i) / q_j ]; equals H(i) - H(i|j)
inline double mutual_information(const CondTable& t) {
    double info = 0.0;
    for (int i = 0; i < t.n_states(); ++i)
        for (int j = 0; j < t.n_outcomes(); ++j) {
            const double joint = t.priors[i] * t.p_given(i, j);
            if (joint > kProbFloor)
                info += joint * std::log2(joint / (t.priors[i] * t.outcome_marginals[j]));
        }
    return info;
}

// S(rho) = -Tr[rho log2 rho] over the spectrum, zero eigenvalues contributing 0
inline double von_neumann_entropy(const Matrix& rho) {
    if (rho.rows() != rho.cols() || max_abs(rho - rho.adjoint()) > kHermTol)
        throw NotDensityOperator("von_neumann_entropy: not Hermitian");
    const HermEigen eig = herm_eig(rho);
    if (eig.eigenvalues.minCoeff() < -kPomPositivityTol)
        throw NotDensityOperator("von_neumann_entropy: negative eigenvalue");
    if (std::abs(eig.eigenvalues.sum() - 1.0) > kNormTol)
        throw NotDensityOperator("von_neumann_entropy: trace differs from 1");
    double s = 0.0;
    for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k)
        s += entropy_term(std::max(0.0, eig.eigenvalues[k]));
    return s;
}

// chi = S(rho) - sum_i p_i S(rho_i); the second term vanishes for pure states
inline double holevo_chi(const Ensemble& e) {
    return von_neumann_entropy(average_density(e));
}

// Entropy of the Poisson distribution with mean mu, summed until cumulative
// mass reaches 1 - tail_eps. For mu >= 10 this approaches log2 sqrt(2 pi e mu).
inline double poisson_entropy(double mu, double tail_eps = kDefaultTailEps) {
    if (!(mu > 0.0))
        throw OutOfRange("poisson_entropy: mean must be positive");
    if (!(tail_eps > 0.0 && tail_eps < 1.0))
        throw OutOfRange("poisson_entropy: tail_eps must lie in (0, 1)");
    double h = 0.0, cum = 0.0;
    for (int n = 0; cum < 1.0 - tail_eps; ++n) {
        const double p = poisson_pmf(mu, n);
        cum += p;
        h += entropy_term(p);
    }
    return h;
}

} // namespace qsd
