// measurement.hpp — probability operator measures (POMs) and conditional
// probability tables P(j|i)
#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "ensembles.hpp"
#include "errors.hpp"
#include "matrix.hpp"

namespace qsd {

inline constexpr double kPomPositivityTol   = 1e-10;
inline constexpr double kPomCompletenessTol = 1e-9;
inline constexpr double kRowSumTol          = 1e-9;
inline constexpr double kProbEntryTol       = 1e-12;

struct Pom {
    std::vector<Matrix> elements;  // one per outcome
    Matrix support;                // projector onto the span of the ensemble
};

struct PomCheck {
    double min_eigenvalue;          // over all elements
    double completeness_residual;   // max |sum_j Pi_j - support|
};

inline PomCheck check_pom(const Pom& m) {
    if (m.elements.empty())
        throw ShapeMismatch("check_pom: empty POM");
    double min_eig = 0.0;
    Matrix total = Matrix::Zero(m.support.rows(), m.support.cols());
    for (const Matrix& pi : m.elements) {
        min_eig = std::min(min_eig, herm_eig(pi).eigenvalues.minCoeff());
        total += pi;
    }
    return PomCheck{min_eig, max_abs(total - m.support)};
}

inline void validate_pom(const Pom& m) {
    const PomCheck c = check_pom(m);
    if (c.min_eigenvalue < -kPomPositivityTol)
        throw Error("validate_pom: element eigenvalue " +
                    std::to_string(c.min_eigenvalue) + " below positivity tolerance");
    if (c.completeness_residual > kPomCompletenessTol)
        throw Error("validate_pom: completeness residual " +
                    std::to_string(c.completeness_residual) + " on the support");
}

// Optimal von Neumann measurement for two equiprobable qubit states: projectors
// onto the positive/negative eigenspaces of (rho_0 - rho_1)/2. For the
// cos/sin parametrization these are |0><0| and |1><1|.
inline Pom helstrom_projective(const Ensemble& e) {
    if (e.size() != 2)
        throw UnsupportedEnsemble("helstrom_projective: exactly two states required");
    if (e.basis() != BasisKind::Qubit || e.dim() != 2)
        throw UnsupportedEnsemble("helstrom_projective: qubit ensembles only");
    if (std::abs(e.priors[0] - 0.5) > kPriorSumTol ||
        std::abs(e.priors[1] - 0.5) > kPriorSumTol)
        throw UnsupportedEnsemble("helstrom_projective: equal priors required");

    const Matrix x =
        0.5 * (state_projector(e.states[0]) - state_projector(e.states[1]));
    const HermEigen eig = herm_eig(x);
    Matrix pi0 = Matrix::Zero(2, 2), pi1 = Matrix::Zero(2, 2);
    for (Eigen::Index k = 0; k < 2; ++k) {
        const Matrix vk = eig.eigenvectors.col(k) * eig.eigenvectors.col(k).adjoint();
        (eig.eigenvalues[k] >= 0.0 ? pi0 : pi1) += vk;
    }
    Pom m{{std::move(pi0), std::move(pi1)}, Matrix::Identity(2, 2)};
    validate_pom(m);
    return m;
}

// Square-root measurement Pi_j = rho^{-1/2} rho_j rho^{-1/2} / N, built as
// outer products of rho^{-1/2}|psi_j> so each element is PSD by construction.
// Complete on the support of rho (equals the identity when rho has full rank).
inline Pom square_root_measurement(const Ensemble& e) {
    const int n = e.size();
    for (double p : e.priors)
        if (std::abs(p - 1.0 / n) > kPriorSumTol)
            throw UnsupportedEnsemble("square_root_measurement: equiprobable states required");

    const Matrix rho = average_density(e);
    const Matrix inv_sqrt =
        matrix_function(rho, [](double x) { return 1.0 / std::sqrt(x); });
    Pom m;
    m.support = support_projector(rho);
    m.elements.reserve(n);
    for (int j = 0; j < n; ++j) {
        const CVector v = inv_sqrt * e.states[j].amplitudes;
        Matrix pi = (v * v.adjoint()) / static_cast<double>(n);
        m.elements.push_back((pi + pi.adjoint()) / 2.0);
    }
    validate_pom(m);
    return m;
}

struct CondTable {
    Eigen::MatrixXd p_given;               // (i, j) -> P(j|i)
    std::vector<double> priors;            // p_i
    std::vector<double> outcome_marginals; // q_j = sum_i P(j|i) p_i

    int n_states() const { return static_cast<int>(p_given.rows()); }
    int n_outcomes() const { return static_cast<int>(p_given.cols()); }
};

// P(j|i) = <psi_i|Pi_j|psi_i>, rows clamped to [0,1] and checked row-stochastic
inline CondTable cond_table(const Ensemble& e, const Pom& m) {
    if (m.elements.front().rows() != e.dim())
        throw DimMismatch("cond_table: POM and ensemble dimensions differ");
    const int ns = e.size();
    const int no = static_cast<int>(m.elements.size());
    CondTable t;
    t.p_given.resize(ns, no);
    t.priors = e.priors;
    for (int i = 0; i < ns; ++i) {
        double row_sum = 0.0;
        for (int j = 0; j < no; ++j) {
            const CVector& psi = e.states[i].amplitudes;
            double p = std::real(psi.dot(m.elements[j] * psi));
            if (p < -kProbEntryTol || p > 1.0 + kProbEntryTol)
                throw Error("cond_table: probability entry " + std::to_string(p) +
                            " outside [0,1] tolerance");
            p = std::clamp(p, 0.0, 1.0);
            t.p_given(i, j) = p;
            row_sum += p;
        }
        if (std::abs(row_sum - 1.0) > kRowSumTol)
            throw Error("cond_table: row " + std::to_string(i) +
                        " sums to " + std::to_string(row_sum));
    }
    t.outcome_marginals.assign(no, 0.0);
    for (int j = 0; j < no; ++j)
        for (int i = 0; i < ns; ++i)
            t.outcome_marginals[j] += t.priors[i] * t.p_given(i, j);
    return t;
}

} // namespace qsd
