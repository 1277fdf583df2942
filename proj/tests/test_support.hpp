#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rk/linalg.hpp"
#include "rk/matrix.hpp"
#include "rk/rng.hpp"

namespace rktest {

inline bool rel_close(double a, double b, double tol) {
    const double diff = std::abs(a - b);
    const double scale = std::max(std::abs(a), std::abs(b));
    return diff <= tol * scale || diff == 0.0;
}

inline bool close_abs_or_rel(double a, double b, double abs_tol, double rel_tol) {
    const double diff = std::abs(a - b);
    return diff <= abs_tol || diff <= rel_tol * std::max(std::abs(a), std::abs(b));
}

template <rk::ScalarType T>
T random_entry(rk::RngStream& rng) {
    if constexpr (std::same_as<T, rk::Complex>) {
        const double re = rng.normal();
        const double im = rng.normal();
        return rk::Complex(re, im);
    } else {
        return rng.normal();
    }
}

template <rk::ScalarType T>
rk::Matrix<T> random_matrix(rk::RngStream& rng, std::size_t m, std::size_t n) {
    rk::Matrix<T> a(m, n);
    for (T& e : a.mutable_data()) e = random_entry<T>(rng);
    return a;
}

template <rk::ScalarType T>
rk::Vector<T> random_vector(rk::RngStream& rng, std::size_t n) {
    rk::Vector<T> v(n);
    for (T& e : v) e = random_entry<T>(rng);
    return v;
}

/// Right-hand side that makes x the exact solution of every hyperplane
/// equation <a_i, x> = b_i (coincides with Ax in the real case).
template <rk::ScalarType T>
rk::Vector<T> hyperplane_rhs(const rk::Matrix<T>& a, const rk::Vector<T>& x) {
    rk::Vector<T> b(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) b[i] = rk::inner<T>(a.row(i), x);
    return b;
}

/// Regularized upper incomplete gamma Q(a, x) = Γ(a,x)/Γ(a), via the power
/// series for P when x < a+1 and a modified Lentz continued fraction
/// otherwise.
inline double gamma_q(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw std::invalid_argument("gamma_q domain");
    if (x == 0.0) return 1.0;
    const double log_prefactor = -x + a * std::log(x) - std::lgamma(a);
    if (x < a + 1.0) {
        double ap = a;
        double sum = 1.0 / a;
        double del = sum;
        for (int i = 0; i < 1000; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * 1e-16) break;
        }
        return 1.0 - sum * std::exp(log_prefactor);
    }
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 1000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(log_prefactor) * h;
}

/// P(χ²_df ≥ stat).
inline double chi_square_pvalue(double stat, double df) {
    return gamma_q(0.5 * df, 0.5 * stat);
}

/// Goodness-of-fit statistic of observed counts against probabilities p.
inline double chi_square_stat(const std::vector<std::uint64_t>& counts,
                              const std::vector<double>& p, double total) {
    double stat = 0.0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (p[i] == 0.0) continue;
        const double expected = total * p[i];
        const double diff = static_cast<double>(counts[i]) - expected;
        stat += diff * diff / expected;
    }
    return stat;
}

} // namespace rktest
