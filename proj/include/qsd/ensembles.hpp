// ensembles.hpp — the three state families: two qubit states, symmetric qubits,
// symmetric coherent states in a truncated Fock space
#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace qsd {

inline constexpr double kNormTol         = 1e-9;
inline constexpr double kPriorSumTol     = 1e-12;
inline constexpr double kDistinguishTol  = 1e-12;  // reject |<i|j>| >= 1 - this
inline constexpr int    kDefaultFockCap  = 512;
inline constexpr double kDefaultTailEps  = 1e-12;

enum class BasisKind { Qubit, Fock };

struct PureState {
    CVector amplitudes;
    BasisKind basis = BasisKind::Qubit;

    Eigen::Index dim() const { return amplitudes.size(); }
};

// <a|b>
inline Complex overlap(const PureState& a, const PureState& b) {
    if (a.dim() != b.dim())
        throw DimMismatch("overlap: states live in different spaces");
    return a.amplitudes.dot(b.amplitudes);
}

// |psi><psi|
inline Matrix state_projector(const PureState& s) {
    return s.amplitudes * s.amplitudes.adjoint();
}

struct Ensemble {
    std::vector<PureState> states;
    std::vector<double> priors;

    int size() const { return static_cast<int>(states.size()); }
    Eigen::Index dim() const { return states.front().dim(); }
    BasisKind basis() const { return states.front().basis; }
};

inline Ensemble make_ensemble(std::vector<PureState> states, std::vector<double> priors) {
    if (states.size() < 2)
        throw InvalidEnsemble("make_ensemble: need at least two states");
    if (states.size() != priors.size())
        throw InvalidEnsemble("make_ensemble: one prior per state required");
    const Eigen::Index d = states.front().dim();
    const BasisKind basis = states.front().basis;
    double prior_sum = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i].dim() != d || states[i].basis != basis)
            throw InvalidEnsemble("make_ensemble: states must share basis and dimension");
        if (std::abs(states[i].amplitudes.norm() - 1.0) > kNormTol)
            throw InvalidEnsemble("make_ensemble: state " + std::to_string(i) +
                                  " is not unit norm");
        if (priors[i] < 0.0)
            throw InvalidEnsemble("make_ensemble: negative prior");
        prior_sum += priors[i];
    }
    if (std::abs(prior_sum - 1.0) > kPriorSumTol)
        throw InvalidEnsemble("make_ensemble: priors do not sum to 1");
    for (std::size_t i = 0; i < states.size(); ++i)
        for (std::size_t k = i + 1; k < states.size(); ++k)
            if (std::abs(overlap(states[i], states[k])) >= 1.0 - kDistinguishTol)
                throw InvalidEnsemble("make_ensemble: states " + std::to_string(i) +
                                      " and " + std::to_string(k) +
                                      " are indistinguishable");
    return Ensemble{std::move(states), std::move(priors)};
}

// |psi_0> = cos(theta)|0> + sin(theta)|1>, |psi_1> with the roles swapped;
// overlap sin(2 theta)
inline Ensemble two_qubit_pair(double theta, double p0) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi / 4))
        throw OutOfRange("two_qubit_pair: theta must lie in [0, pi/4]");
    if (!(p0 > 0.0 && p0 < 1.0))
        throw OutOfRange("two_qubit_pair: p0 must lie in (0, 1)");
    const double c = std::cos(theta), s = std::sin(theta);
    PureState psi0{(CVector(2) << c, s).finished(), BasisKind::Qubit};
    PureState psi1{(CVector(2) << s, c).finished(), BasisKind::Qubit};
    return make_ensemble({std::move(psi0), std::move(psi1)}, {p0, 1.0 - p0});
}

// |psi_i> = cos(i pi/n)|0> + sin(i pi/n)|1>, equiprobable
inline Ensemble symmetric_qubits(int n) {
    if (n < 2)
        throw OutOfRange("symmetric_qubits: need n >= 2");
    std::vector<PureState> states;
    states.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double a = i * std::numbers::pi / n;
        states.push_back(PureState{
            (CVector(2) << std::cos(a), std::sin(a)).finished(), BasisKind::Qubit});
    }
    return make_ensemble(std::move(states), std::vector<double>(n, 1.0 / n));
}

// Poisson pmf via logs; n_max can exceed the double-factorial overflow point
inline double poisson_pmf(double mu, int n) {
    return std::exp(-mu + n * std::log(mu) - std::lgamma(n + 1.0));
}

// Smallest n with cumulative Poisson(mu) mass >= 1 - tail_eps.
inline int coherent_fock_cutoff(double mu, double tail_eps,
                                int max_levels = kDefaultFockCap) {
    double cum = 0.0;
    for (int n = 0; n <= max_levels; ++n) {
        cum += poisson_pmf(mu, n);
        if (cum >= 1.0 - tail_eps)
            return n;
    }
    throw TruncationOverflow("coherent_fock_cutoff: required Fock cutoff exceeds " +
                             std::to_string(max_levels) + " levels");
}

// n equiprobable coherent states sqrt(mu) e^{i 2*pi*i/n}, expanded over Fock
// levels 0..n_max and renormalized after truncation. All states share the
// cutoff computed from mu alone so they live in one space.
inline Ensemble symmetric_coherent(int n, double mu, double tail_eps = kDefaultTailEps,
                                   int max_levels = kDefaultFockCap) {
    if (n < 2)
        throw OutOfRange("symmetric_coherent: need n >= 2");
    if (!(mu > 0.0))
        throw OutOfRange("symmetric_coherent: mean photon number must be positive");
    if (!(tail_eps > 0.0 && tail_eps <= 1e-6))
        throw OutOfRange("symmetric_coherent: tail_eps must lie in (0, 1e-6]");
    const int n_max = coherent_fock_cutoff(mu, tail_eps, max_levels);
    const Eigen::Index d = n_max + 1;
    const double dphi = 2.0 * std::numbers::pi / n;
    std::vector<PureState> states;
    states.reserve(n);
    for (int i = 0; i < n; ++i) {
        CVector a(d);
        for (Eigen::Index m = 0; m < d; ++m) {
            const double mag =
                std::exp(-mu / 2 + 0.5 * m * std::log(mu) - 0.5 * std::lgamma(m + 1.0));
            a[m] = std::polar(mag, i * dphi * m);
        }
        a /= a.norm();
        states.push_back(PureState{std::move(a), BasisKind::Fock});
    }
    return make_ensemble(std::move(states), std::vector<double>(n, 1.0 / n));
}

// rho = sum_i p_i |psi_i><psi_i|
inline Matrix average_density(const Ensemble& e) {
    Matrix rho = Matrix::Zero(e.dim(), e.dim());
    for (std::size_t i = 0; i < e.states.size(); ++i)
        rho += e.priors[i] * state_projector(e.states[i]);
    return (rho + rho.adjoint()) / 2.0;
}

// Stepping unitary of the symmetric qubit family: exp(-i (2 pi/n) Y/2),
// a plane rotation by pi/n. Its n-th power is -I (global phase).
inline Matrix qubit_rotation_unitary(int n) {
    if (n < 2)
        throw OutOfRange("qubit_rotation_unitary: need n >= 2");
    const double a = std::numbers::pi / n;
    Matrix u(2, 2);
    u << std::cos(a), -std::sin(a),
         std::sin(a),  std::cos(a);
    return u;
}

// Stepping unitary of the symmetric coherent family on the truncated space:
// exp(i (2 pi/n) a†a) = diag(e^{i 2 pi m/n})
inline Matrix phase_shift_unitary(int n, Eigen::Index dim) {
    if (n < 2)
        throw OutOfRange("phase_shift_unitary: need n >= 2");
    Matrix u = Matrix::Zero(dim, dim);
    for (Eigen::Index m = 0; m < dim; ++m)
        u(m, m) = std::polar(1.0, 2.0 * std::numbers::pi * m / n);
    return u;
}

} // namespace qsd
