#pragma once

#include <cstdint>

namespace rk {

/// Deterministic 64-bit random stream: SplitMix64 (Steele–Lea–Flood), one
/// independent stream per (seed, stream-id) pair, derived by hashing both
/// through the SplitMix64 finalizer. Identical (seed, stream-id) produces the
/// identical sequence on every platform and thread count; distinct stream-ids
/// give statistically independent streams. Period 2⁶⁴ per stream.
///
/// Single-owner mutable: use one stream per concurrent trial.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

    std::uint64_t next_u64();

    /// Uniform on [0,1) with full 53-bit mantissa resolution.
    double uniform01();

    /// Standard normal via the Marsaglia polar method (the second variate of
    /// each accepted pair is cached, so draws stay deterministic per stream).
    double normal();

  private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace rk
