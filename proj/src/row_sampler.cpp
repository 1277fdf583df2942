#include "rk/row_sampler.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "rk/errors.hpp"

namespace rk {

RowSampler RowSampler::from_weights(const std::vector<double>& weights) {
    if (weights.empty()) {
        throw ConfigError("sampler requires at least one weight");
    }
    if (weights.size() > std::numeric_limits<std::uint32_t>::max()) {
        throw ConfigError("sampler supports at most 2^32-1 rows");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const double w = weights[i];
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw ConfigError("weight " + std::to_string(i) + " is negative or not finite");
        }
        total += w;
    }
    if (total <= 0.0) {
        throw ConfigError("degenerate weights: all rows have zero norm");
    }

    const std::size_t m = weights.size();
    RowSampler s;
    s.probs_.resize(m);
    s.cell_prob_.assign(m, 1.0);
    s.alias_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        s.probs_[i] = weights[i] / total;
        s.alias_[i] = static_cast<std::uint32_t>(i);
    }

    // two-worklist alias construction
    std::vector<double> scaled(m);
    std::vector<std::uint32_t> small, large;
    small.reserve(m);
    large.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        scaled[i] = s.probs_[i] * static_cast<double>(m);
        (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
    }
    while (!small.empty() && !large.empty()) {
        const std::uint32_t lo = small.back();
        small.pop_back();
        const std::uint32_t hi = large.back();
        s.cell_prob_[lo] = scaled[lo];
        s.alias_[lo] = hi;
        scaled[hi] -= 1.0 - scaled[lo];
        if (scaled[hi] < 1.0) {
            large.pop_back();
            small.push_back(hi);
        }
    }
    // leftovers are exactly 1 up to rounding
    for (const std::uint32_t i : small) s.cell_prob_[i] = 1.0;
    for (const std::uint32_t i : large) s.cell_prob_[i] = 1.0;
    return s;
}

std::vector<double> RowSampler::reconstructed_probabilities() const {
    const double inv_m = 1.0 / static_cast<double>(size());
    std::vector<double> p(size(), 0.0);
    for (std::size_t i = 0; i < size(); ++i) {
        p[i] += cell_prob_[i] * inv_m;
        if (cell_prob_[i] < 1.0) p[alias_[i]] += (1.0 - cell_prob_[i]) * inv_m;
    }
    return p;
}

std::size_t RowSampler::draw(RngStream& rng) const {
    const double u = rng.uniform01() * static_cast<double>(size());
    std::size_t cell = static_cast<std::size_t>(u);
    if (cell >= size()) cell = size() - 1;
    const double frac = u - static_cast<double>(cell);
    return frac < cell_prob_[cell] ? cell : alias_[cell];
}

} // namespace rk
