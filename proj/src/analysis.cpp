#include "rk/analysis.hpp"

#include <cmath>

#include "rk/errors.hpp"

namespace rk {

namespace {

// (1 − 1/R)^p computed as exp(p·log1p(−1/R)) so long exponents keep their
// geometric decay per step.
double decay_pow(double R, double p) {
    return std::exp(p * std::log1p(-1.0 / R));
}

void require_rate_domain(double R) {
    if (!(R > 1.0)) {
        throw DomainError("bound requires R > 1 (R = 1 means exact one-step convergence)");
    }
}

} // namespace

double noiseless_bound(double R, double init_err_sq, std::uint64_t k) {
    require_rate_domain(R);
    if (init_err_sq < 0.0) {
        throw DomainError("noiseless_bound: initial squared error must be nonnegative");
    }
    return decay_pow(R, static_cast<double>(k)) * init_err_sq;
}

double noisy_bound(double R, double gamma, double init_err, std::uint64_t k) {
    require_rate_domain(R);
    if (gamma < 0.0) {
        throw DomainError("noisy_bound: gamma must be nonnegative");
    }
    if (init_err < 0.0) {
        throw DomainError("noisy_bound: initial error must be nonnegative");
    }
    return decay_pow(R, 0.5 * static_cast<double>(k)) * init_err + std::sqrt(R) * gamma;
}

} // namespace rk
