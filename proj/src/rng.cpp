#include "rk/rng.hpp"

#include <cmath>

namespace rk {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_state(std::uint64_t seed, std::uint64_t stream_id) {
    const std::uint64_t a = finalize(seed + kGamma);
    const std::uint64_t b = finalize(stream_id + 0x8CB92BA72F3D8DD7ULL);
    return finalize(a ^ b);
}

} // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : state_(derive_state(seed, stream_id)) {}

std::uint64_t RngStream::next_u64() {
    state_ += kGamma;
    return finalize(state_);
}

double RngStream::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform01() - 1.0;
        v = 2.0 * uniform01() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
}

} // namespace rk
