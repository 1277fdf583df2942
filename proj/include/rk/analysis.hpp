#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include "rk/linalg.hpp"
#include "rk/matrix.hpp"
#include "rk/spectrum.hpp"

namespace rk {

/// The theoretical quantities for one (A, r) pair:
///   R = ‖A⁻¹‖²‖A‖²_F = ‖A‖²_F/σ_min²   (scaled condition number; ≥ n)
///   γ = max_i |r_i|/‖a_i‖₂              (noise magnitude; 0 without noise)
///   threshold = √R·γ                    (limiting error of the noisy method)
/// When rank_deficient is set, kappa/R/threshold are NaN rather than ∞.
struct AnalysisReport {
    double sigma_min = 0.0;
    double sigma_max = 0.0;
    double kappa = 0.0;
    double R = 0.0;
    double gamma = 0.0;
    double threshold = 0.0;
    double frobenius_sq = 0.0;
    bool rank_deficient = false;
};

/// γ = max_i |r_i|/‖a_i‖₂. A zero row is admissible only where r_i = 0.
template <ScalarType T>
double compute_gamma(const Matrix<T>& a, const Vector<T>& r) {
    if (r.size() != a.rows()) {
        throw DimensionError("compute_gamma: noise length does not match row count");
    }
    double gamma = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double nsq = row_norm_sq(a, i);
        const double ri = abs_of(r[i]);
        if (nsq == 0.0) {
            if (ri != 0.0) {
                throw DomainError("compute_gamma: zero row " + std::to_string(i) +
                                  " carries nonzero noise");
            }
            continue;
        }
        const double ratio = ri / std::sqrt(nsq);
        if (ratio > gamma) gamma = ratio;
    }
    return gamma;
}

/// R = ‖A‖²_F/σ_min². Throws RankDeficientError when σ_min is numerically zero.
template <ScalarType T>
double compute_R(const Matrix<T>& a) {
    const SigmaPair sp = sigma_extremes(a);
    if (sp.rank_deficient) {
        throw RankDeficientError("compute_R: matrix is rank deficient");
    }
    return frobenius_sq(a) / (sp.sigma_min * sp.sigma_min);
}

template <ScalarType T>
AnalysisReport analyze(const Matrix<T>& a, const Vector<T>* noise = nullptr) {
    AnalysisReport rep;
    rep.frobenius_sq = frobenius_sq(a);
    const SigmaPair sp = sigma_extremes(a);
    rep.sigma_min = sp.sigma_min;
    rep.sigma_max = sp.sigma_max;
    rep.rank_deficient = sp.rank_deficient;
    rep.gamma = noise != nullptr ? compute_gamma(a, *noise) : 0.0;
    if (sp.rank_deficient) {
        rep.kappa = std::numeric_limits<double>::quiet_NaN();
        rep.R = std::numeric_limits<double>::quiet_NaN();
        rep.threshold = std::numeric_limits<double>::quiet_NaN();
    } else {
        rep.kappa = sp.sigma_max / sp.sigma_min;
        rep.R = rep.frobenius_sq / (sp.sigma_min * sp.sigma_min);
        rep.threshold = std::sqrt(rep.R) * rep.gamma;
    }
    return rep;
}

/// (1 − 1/R)^k · init_err_sq: the expected squared-error decay of the
/// noise-free randomized method. Requires R > 1.
double noiseless_bound(double R, double init_err_sq, std::uint64_t k);

/// (1 − 1/R)^{k/2} · init_err + √R·γ: the expected-error curve of the noisy
/// randomized method, with init_err = ‖x₀ − x‖₂. Nonincreasing in k; the
/// limit is the threshold √R·γ. Requires R > 1 and γ ≥ 0.
double noisy_bound(double R, double gamma, double init_err, std::uint64_t k);

struct PerturbationDiagnostic {
    double lhs;           // ‖x − x̂‖₂/‖x‖₂ with x̂ = A†(b + r), b = Ax
    double rhs_classical; // κ(A)·‖r‖₂/‖Ax‖₂
    double rhs_kaczmarz;  // κ(A)·max_i √n·|r_i|/(‖a_i‖₂‖x‖₂)
};

/// Compares the least-squares perturbation error against the classical bound
/// and its Kaczmarz-flavored counterpart. lhs ≤ rhs_classical always holds.
template <ScalarType T>
PerturbationDiagnostic perturbation_diagnostic(const Matrix<T>& a, const Vector<T>& r,
                                               const Vector<T>& x) {
    if (x.size() != a.cols()) {
        throw DimensionError("perturbation_diagnostic: solution length mismatch");
    }
    if (r.size() != a.rows()) {
        throw DimensionError("perturbation_diagnostic: noise length mismatch");
    }
    const double x_norm = norm<T>(x);
    if (x_norm == 0.0) {
        throw DomainError("perturbation_diagnostic: x must be nonzero");
    }
    const SigmaPair sp = sigma_extremes(a);
    if (sp.rank_deficient) {
        throw RankDeficientError("perturbation_diagnostic: matrix is rank deficient");
    }
    const double kappa = sp.sigma_max / sp.sigma_min;

    Vector<T> b = multiply(a, x);
    Vector<T> perturbed = b;
    for (std::size_t i = 0; i < perturbed.size(); ++i) perturbed[i] += r[i];
    const Vector<T> xhat = least_squares_solve(a, perturbed);

    PerturbationDiagnostic d;
    d.lhs = distance<T>(x, xhat) / x_norm;
    d.rhs_classical = kappa * norm<T>(r) / norm<T>(b);
    d.rhs_kaczmarz =
        kappa * std::sqrt(static_cast<double>(a.cols())) * compute_gamma(a, r) / x_norm;
    return d;
}

} // namespace rk
