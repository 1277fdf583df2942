#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rk/linalg.hpp"
#include "rk/matrix.hpp"
#include "rk/rng.hpp"

namespace rk {

/// O(1) weighted sampler over row indices with p_i = ‖a_i‖²/‖A‖²_F, backed by
/// an alias table built with the standard two-worklist construction (O(m)).
/// Zero-weight rows are allowed and are never drawn; an all-zero weight
/// vector is rejected. Immutable after build, safe to share across trials.
class RowSampler {
  public:
    static RowSampler from_weights(const std::vector<double>& weights);

    template <ScalarType T>
    static RowSampler from_matrix(const Matrix<T>& a) {
        std::vector<double> w(a.rows());
        for (std::size_t i = 0; i < a.rows(); ++i) w[i] = row_norm_sq(a, i);
        return from_weights(w);
    }

    std::size_t size() const { return probs_.size(); }

    /// Normalized input probability p_i.
    double probability(std::size_t i) const { return probs_[i]; }
    const std::vector<double>& probabilities() const { return probs_; }

    /// Per-index probabilities implied by the alias table itself; matches
    /// probabilities() up to float rounding (tested to 1e−12).
    std::vector<double> reconstructed_probabilities() const;

    std::size_t draw(RngStream& rng) const;

  private:
    std::vector<double> probs_;     // normalized weights
    std::vector<double> cell_prob_; // acceptance threshold per cell
    std::vector<std::uint32_t> alias_;
};

} // namespace rk
