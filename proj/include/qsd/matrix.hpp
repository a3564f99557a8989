// matrix.hpp — dense complex matrices, Hermitian eigendecomposition, matrix functions
#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <optional>
#include <utility>

#include "errors.hpp"

namespace qsd {

using Complex = std::complex<double>;
using Matrix  = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

// max |m - m†| entrywise below this is treated as round-off and symmetrized away
inline constexpr double kHermTol = 1e-10;

// eigenvalues below kRankCutoffScale * lambda_max count as numerical null space
inline constexpr double kRankCutoffScale = 1e-12;

inline double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline void require_square(const Matrix& m, const char* where) {
    if (m.rows() == 0 || m.rows() != m.cols())
        throw DimMismatch(std::string(where) + ": matrix must be square and non-empty");
    if (!m.allFinite())
        throw DomainError(std::string(where) + ": matrix has non-finite entries");
}

// Eigenvalues ascending; eigenvector columns orthonormal.
struct HermEigen {
    RVector eigenvalues;
    Matrix  eigenvectors;
};

inline HermEigen herm_eig(const Matrix& m, double tol = kHermTol) {
    require_square(m, "herm_eig");
    if (max_abs(m - m.adjoint()) > tol)
        throw NotHermitian("herm_eig: matrix is not Hermitian within tolerance");
    const Matrix sym = (m + m.adjoint()) / 2.0;  // absorb round-off from products
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
    if (solver.info() != Eigen::Success)
        throw NoConvergence("herm_eig: eigensolver did not converge");
    return HermEigen{solver.eigenvalues(), solver.eigenvectors()};
}

// f applied to the spectrum: V diag(f(lambda_k) if lambda_k > cutoff else 0) V†.
// Default cutoff is kRankCutoffScale times the largest eigenvalue, so the
// numerically singular part of a PSD matrix maps to its null space.
template <class F>
Matrix matrix_function(const Matrix& m, F&& f,
                       std::optional<double> rank_cutoff = std::nullopt) {
    const HermEigen eig = herm_eig(m);
    const double cutoff = rank_cutoff
        ? *rank_cutoff
        : kRankCutoffScale * std::max(0.0, eig.eigenvalues.maxCoeff());
    CVector g(eig.eigenvalues.size());
    for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
        const double lam = eig.eigenvalues[k];
        if (lam > cutoff) {
            const double y = f(lam);
            if (!std::isfinite(y))
                throw DomainError("matrix_function: f undefined on retained eigenvalue");
            g[k] = y;
        } else {
            g[k] = 0.0;
        }
    }
    Matrix out = eig.eigenvectors * g.asDiagonal() * eig.eigenvectors.adjoint();
    return (out + out.adjoint()) / 2.0;
}

// Projector onto the span of eigenvectors above the relative cutoff.
inline Matrix support_projector(const Matrix& m,
                                std::optional<double> rank_cutoff = std::nullopt) {
    return matrix_function(m, [](double) { return 1.0; }, rank_cutoff);
}

// Tr(a b), computed entrywise in O(d^2)
inline Complex trace_product(const Matrix& a, const Matrix& b) {
    require_square(a, "trace_product");
    require_square(b, "trace_product");
    if (a.rows() != b.rows())
        throw DimMismatch("trace_product: dimension mismatch");
    return a.cwiseProduct(b.transpose()).sum();
}

// For PSD arguments the imaginary part is round-off; drop it.
inline double real_trace_product(const Matrix& a, const Matrix& b) {
    return trace_product(a, b).real();
}

} // namespace qsd
