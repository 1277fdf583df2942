#pragma once

#include <cmath>
#include <cstddef>

#include "rk/jacobi.hpp"
#include "rk/linalg.hpp"
#include "rk/matrix.hpp"

namespace rk {

/// Extreme singular values of A; rank_deficient is set when
/// σ_min² < 1e−13·σ_max² (equivalently λ_min < 1e−13·λ_max on the Gram
/// spectrum), in which case ‖A⁻¹‖ and R are not meaningful.
struct SigmaPair {
    double sigma_min = 0.0;
    double sigma_max = 0.0;
    bool rank_deficient = false;
};

/// λ_min/λ_max ratio below which A is reported rank deficient.
inline constexpr double kRankDeficiencyTol = 1e-13;

/// Hermitian Gram matrix A*A (n×n).
template <ScalarType T>
Matrix<T> gram(const Matrix<T>& a) {
    const std::size_t n = a.cols();
    Matrix<T> g(n, n);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto row = a.row(i);
        for (std::size_t j = 0; j < n; ++j) {
            const T cj = conj_of(row[j]);
            for (std::size_t k = j; k < n; ++k) g(j, k) += cj * row[k];
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        g(j, j) = T(real_part(g(j, j))); // exact Hermitian diagonal
        for (std::size_t k = j + 1; k < n; ++k) g(k, j) = conj_of(g(j, k));
    }
    return g;
}

/// σ_min and σ_max via a cyclic Jacobi eigendecomposition of the Gram matrix.
/// Requires m ≥ n. Rank deficiency is flagged, never silently turned into
/// R = ∞ downstream.
template <ScalarType T>
SigmaPair sigma_extremes(const Matrix<T>& a) {
    if (a.rows() < a.cols()) {
        throw DimensionError("sigma_extremes: matrix must have at least as many rows as columns");
    }
    auto eig = hermitian_eigen(gram(a));
    double lam_min = eig.eigenvalues.front();
    double lam_max = eig.eigenvalues.back();
    if (lam_min < 0.0) lam_min = 0.0; // rounding in the Gram accumulation
    if (lam_max < 0.0) lam_max = 0.0;
    const bool deficient = lam_max == 0.0 || lam_min < kRankDeficiencyTol * lam_max;
    return SigmaPair{std::sqrt(lam_min), std::sqrt(lam_max), deficient};
}

/// Minimizer of ‖Av − c‖₂ via A† = (A*A)⁻¹A*, computed from the same Gram
/// eigendecomposition machinery that backs sigma_extremes.
/// Throws RankDeficientError when the pseudoinverse is not defined.
template <ScalarType T>
Vector<T> least_squares_solve(const Matrix<T>& a, const Vector<T>& c) {
    if (a.rows() < a.cols()) {
        throw DimensionError("least_squares_solve: matrix must have at least as many rows as columns");
    }
    if (c.size() != a.rows()) {
        throw DimensionError("least_squares_solve: right-hand side length mismatch");
    }
    const std::size_t n = a.cols();
    JacobiOptions opt;
    opt.want_vectors = true;
    auto eig = hermitian_eigen(gram(a), opt);
    const double lam_max = eig.eigenvalues.back();
    if (lam_max <= 0.0 || eig.eigenvalues.front() < kRankDeficiencyTol * lam_max) {
        throw RankDeficientError("least_squares_solve: matrix is rank deficient");
    }

    const Vector<T> y = adjoint_multiply(a, c);
    // w = Λ⁻¹ V* y, result = V w
    Vector<T> w(n);
    for (std::size_t j = 0; j < n; ++j) {
        T acc{};
        for (std::size_t k = 0; k < n; ++k) acc += conj_of(eig.vectors(k, j)) * y[k];
        w[j] = acc / eig.eigenvalues[j];
    }
    Vector<T> x(n);
    for (std::size_t k = 0; k < n; ++k) {
        T acc{};
        for (std::size_t j = 0; j < n; ++j) acc += eig.vectors(k, j) * w[j];
        x[k] = acc;
    }
    return x;
}

} // namespace rk
