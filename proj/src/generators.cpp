#include "rk/generators.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rk/errors.hpp"
#include "rk/linalg.hpp"

namespace rk {

std::string_view ensemble_name(EnsembleKind kind) {
    switch (kind) {
        case EnsembleKind::Gaussian: return "gaussian";
        case EnsembleKind::Bernoulli01: return "bernoulli";
        case EnsembleKind::PartialFourier: return "fourier";
    }
    return "unknown";
}

EnsembleKind parse_ensemble_kind(std::string_view name) {
    if (name == "gaussian") return EnsembleKind::Gaussian;
    if (name == "bernoulli") return EnsembleKind::Bernoulli01;
    if (name == "fourier") return EnsembleKind::PartialFourier;
    throw ConfigError("unknown ensemble kind '" + std::string(name) +
                      "' (expected gaussian|bernoulli|fourier)");
}

void EnsembleSpec::validate() const {
    if (n < 1 || m < n) {
        throw DimensionError("ensemble requires m >= n >= 1, got m=" + std::to_string(m) +
                             " n=" + std::to_string(n));
    }
    if (kind == EnsembleKind::PartialFourier && n % 2 == 0) {
        throw ConfigError("partial Fourier requires odd n (frequencies -(n-1)/2..(n-1)/2), got n=" +
                          std::to_string(n));
    }
}

namespace {

void require_kind(const EnsembleSpec& spec, EnsembleKind kind) {
    spec.validate();
    if (spec.kind != kind) {
        throw ConfigError(std::string("generator mismatch: spec kind is ") +
                          std::string(ensemble_name(spec.kind)));
    }
}

} // namespace

Matrix<double> gen_gaussian(const EnsembleSpec& spec) {
    require_kind(spec, EnsembleKind::Gaussian);
    RngStream rng(spec.seed, spec.stream_id);
    Matrix<double> a(spec.m, spec.n);
    auto data = a.mutable_data();
    for (double& e : data) e = rng.normal();
    return a;
}

Matrix<double> gen_bernoulli01(const EnsembleSpec& spec) {
    require_kind(spec, EnsembleKind::Bernoulli01);
    RngStream rng(spec.seed, spec.stream_id);
    Matrix<double> a(spec.m, spec.n);
    auto data = a.mutable_data();
    for (double& e : data) e = rng.uniform01() < 0.5 ? 1.0 : 0.0;
    return a;
}

Matrix<Complex> gen_partial_fourier(const EnsembleSpec& spec) {
    require_kind(spec, EnsembleKind::PartialFourier);
    RngStream rng(spec.seed, spec.stream_id);
    Matrix<Complex> a(spec.m, spec.n);
    const std::int64_t half = static_cast<std::int64_t>((spec.n - 1) / 2);
    for (std::size_t j = 0; j < spec.m; ++j) {
        const double two_pi_t = 2.0 * std::numbers::pi * rng.uniform01();
        for (std::int64_t k = -half; k <= half; ++k) {
            a(j, static_cast<std::size_t>(k + half)) =
                std::polar(1.0, static_cast<double>(k) * two_pi_t);
        }
    }
    return a;
}

AnyMatrix generate(const EnsembleSpec& spec) {
    switch (spec.kind) {
        case EnsembleKind::Gaussian: return gen_gaussian(spec);
        case EnsembleKind::Bernoulli01: return gen_bernoulli01(spec);
        case EnsembleKind::PartialFourier: return gen_partial_fourier(spec);
    }
    throw ConfigError("unknown ensemble kind");
}

template <ScalarType T>
Vector<T> gen_noise(std::size_t m, double norm, RngStream& rng) {
    if (m == 0) {
        throw DimensionError("gen_noise: length must be at least 1");
    }
    if (norm < 0.0) {
        throw DomainError("gen_noise: norm must be nonnegative");
    }
    Vector<T> r(m);
    if (norm == 0.0) return r;
    for (;;) {
        for (T& e : r) {
            if constexpr (std::same_as<T, Complex>) {
                const double re = rng.normal();
                const double im = rng.normal();
                e = Complex(re, im);
            } else {
                e = rng.normal();
            }
        }
        const double drawn = rk::norm<T>(r);
        if (drawn > 0.0) {
            const double scale = norm / drawn;
            for (T& e : r) e *= scale;
            return r;
        }
        // zero draw (probability 0): redraw
    }
}

template Vector<double> gen_noise<double>(std::size_t, double, RngStream&);
template Vector<Complex> gen_noise<Complex>(std::size_t, double, RngStream&);

} // namespace rk
