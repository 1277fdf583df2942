#pragma once

#include <cstdint>
#include <string_view>

#include "rk/matrix.hpp"
#include "rk/rng.hpp"

namespace rk {

enum class EnsembleKind { Gaussian, Bernoulli01, PartialFourier };

std::string_view ensemble_name(EnsembleKind kind);

/// Parses "gaussian" | "bernoulli" | "fourier"; throws ConfigError otherwise.
EnsembleKind parse_ensemble_kind(std::string_view name);

/// Seeded description of one test-matrix ensemble draw. Partial Fourier
/// requires odd n (frequencies k = −(n−1)/2 … (n−1)/2).
struct EnsembleSpec {
    EnsembleKind kind;
    std::size_t m = 0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;

    void validate() const;
};

/// i.i.d. standard normal entries (Marsaglia polar draws from the stream).
Matrix<double> gen_gaussian(const EnsembleSpec& spec);

/// Entries in {0,1}, each 1 with probability ½.
Matrix<double> gen_bernoulli01(const EnsembleSpec& spec);

/// Row j holds exp(2πi·k·t_j) for k = −(n−1)/2..(n−1)/2 in ascending-k column
/// order, with t_j i.i.d. uniform on [0,1) — nonuniformly spaced sampling of
/// bandlimited signals.
Matrix<Complex> gen_partial_fourier(const EnsembleSpec& spec);

/// Dispatches on spec.kind.
AnyMatrix generate(const EnsembleSpec& spec);

/// Gaussian-direction noise rescaled so ‖r‖₂ equals `norm` exactly. Complex
/// mode draws i.i.d. real and imaginary parts.
template <ScalarType T>
Vector<T> gen_noise(std::size_t m, double norm, RngStream& rng);

extern template Vector<double> gen_noise<double>(std::size_t, double, RngStream&);
extern template Vector<Complex> gen_noise<Complex>(std::size_t, double, RngStream&);

} // namespace rk
