#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "rk/linalg.hpp"
#include "rk/matrix.hpp"

namespace rk {

struct JacobiOptions {
    /// Converged when the off-diagonal Frobenius norm drops below
    /// rel_off_tol·‖H‖_F (‖H‖_F is invariant under the rotations).
    double rel_off_tol = 1e-14;
    int max_sweeps = 30;
    bool want_vectors = false;
};

/// Eigenvalues ascending; vectors.column(j) pairs with eigenvalues[j] when
/// requested (H = V Λ V*).
template <ScalarType T>
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    Matrix<T> vectors;
    int sweeps = 0;
};

namespace detail {

template <ScalarType T>
double off_diagonal_norm_sq(const Matrix<T>& h) {
    double acc = 0.0;
    for (std::size_t p = 0; p < h.rows(); ++p)
        for (std::size_t q = p + 1; q < h.cols(); ++q) acc += 2.0 * abs_sq(h(p, q));
    return acc;
}

} // namespace detail

/// Cyclic Jacobi eigensolver for a Hermitian matrix. Each rotation zeroes one
/// off-diagonal pair with a unitary plane rotation carrying the phase of
/// h_pq, so the same code covers real symmetric and complex Hermitian input.
/// Throws ConvergenceError if the sweep budget is exhausted.
template <ScalarType T>
EigenDecomposition<T> hermitian_eigen(Matrix<T> h, const JacobiOptions& opt = {}) {
    if (h.rows() != h.cols()) {
        throw DimensionError("hermitian_eigen: matrix must be square");
    }
    const std::size_t n = h.rows();
    const double norm_f = std::sqrt(frobenius_sq(h));
    const double off_tol_sq =
        (opt.rel_off_tol * norm_f) * (opt.rel_off_tol * norm_f);

    EigenDecomposition<T> out{std::vector<double>(n),
                              opt.want_vectors ? Matrix<T>::identity(n) : Matrix<T>(1, 1)};
    Matrix<T>& v = out.vectors;

    int sweep = 0;
    while (detail::off_diagonal_norm_sq(h) > off_tol_sq) {
        if (sweep == opt.max_sweeps) {
            throw ConvergenceError("hermitian_eigen: no convergence in " +
                                   std::to_string(opt.max_sweeps) + " sweeps");
        }
        ++sweep;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const T hpq = h(p, q);
                const double r = abs_of(hpq);
                if (r == 0.0) continue;

                const T phase = hpq / r; // e^{iθ} with h_pq = r·e^{iθ}; ±1 in real mode
                const double alpha = real_part(h(p, p));
                const double beta = real_part(h(q, q));
                const double tau = (beta - alpha) / (2.0 * r);
                // smaller-magnitude root of t² + 2τt − 1 = 0
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const T hkp = h(k, p);
                    const T hkq = h(k, q);
                    h(k, p) = c * hkp - s * conj_of(phase) * hkq;
                    h(k, q) = s * phase * hkp + c * hkq;
                    h(p, k) = conj_of(h(k, p));
                    h(q, k) = conj_of(h(k, q));
                }
                h(p, p) = T(alpha - t * r);
                h(q, q) = T(beta + t * r);
                h(p, q) = T(0);
                h(q, p) = T(0);

                if (opt.want_vectors) {
                    for (std::size_t k = 0; k < n; ++k) {
                        const T vkp = v(k, p);
                        const T vkq = v(k, q);
                        v(k, p) = c * vkp - s * conj_of(phase) * vkq;
                        v(k, q) = s * phase * vkp + c * vkq;
                    }
                }
            }
        }
    }
    out.sweeps = sweep;

    for (std::size_t j = 0; j < n; ++j) out.eigenvalues[j] = real_part(h(j, j));

    // sort ascending, carrying eigenvector columns along
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return out.eigenvalues[a] < out.eigenvalues[b];
    });
    std::vector<double> sorted(n);
    for (std::size_t j = 0; j < n; ++j) sorted[j] = out.eigenvalues[order[j]];
    out.eigenvalues = std::move(sorted);
    if (opt.want_vectors) {
        Matrix<T> vs(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) vs(k, j) = v(k, order[j]);
        out.vectors = std::move(vs);
    }
    return out;
}

} // namespace rk
