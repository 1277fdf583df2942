#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <span>
#include <thread>
#include <utility>
#include <vector>

#include "rk/linalg.hpp"
#include "rk/matrix.hpp"
#include "rk/row_sampler.hpp"

namespace rk {

enum class ScheduleKind { Cyclic, Randomized };

/// Row visit order: cyclic (rows 1..m repeating) or randomized with
/// probabilities ‖a_i‖²/‖A‖²_F carried by a RowSampler.
class Schedule {
  public:
    static Schedule cyclic() { return Schedule(ScheduleKind::Cyclic, std::nullopt); }
    static Schedule randomized(RowSampler sampler) {
        return Schedule(ScheduleKind::Randomized, std::move(sampler));
    }

    ScheduleKind kind() const { return kind_; }
    const RowSampler& sampler() const { return *sampler_; }

  private:
    Schedule(ScheduleKind kind, std::optional<RowSampler> sampler)
        : kind_(kind), sampler_(std::move(sampler)) {}

    ScheduleKind kind_;
    std::optional<RowSampler> sampler_;
};

struct SolveConfig {
    std::uint64_t max_iters = 0;
    std::uint64_t record_every = 1;
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;
};

struct TrajectoryPoint {
    std::uint64_t iteration;
    double error; // ‖x_k − x_ref‖₂
};

template <ScalarType T>
struct Trajectory {
    std::vector<TrajectoryPoint> points; // iteration indices strictly increasing
    Vector<T> final_x;
    std::uint64_t rows_visited = 0;

    double final_error() const { return points.back().error; }
};

namespace detail {

// One hyperplane projection, in place. Callers have validated shapes and a
// nonzero row norm.
template <ScalarType T>
void project_row_inplace(std::span<T> x, std::span<const T> row, const T& b_i,
                         double row_nsq) {
    T coeff = b_i;
    for (std::size_t j = 0; j < row.size(); ++j) coeff -= conj_of(row[j]) * x[j];
    coeff /= row_nsq;
    for (std::size_t j = 0; j < row.size(); ++j) x[j] += coeff * row[j];
}

} // namespace detail

/// x ↦ x + (b_i − ⟨a_i, x⟩)/‖a_i‖² · a_i, the orthogonal projection of x onto
/// {y : ⟨a_i, y⟩ = b_i}. The correction is parallel to a_i and the result
/// satisfies ⟨a_i, result⟩ = b_i up to rounding.
template <ScalarType T>
Vector<T> project_row(Vector<T> x, const Matrix<T>& a, std::size_t i, const T& b_i) {
    auto row = a.row(i);
    if (x.size() != row.size()) {
        throw DimensionError("project_row: iterate length does not match column count");
    }
    const double nsq = norm_sq(row);
    if (nsq == 0.0) {
        throw ZeroRowError("project_row: row " + std::to_string(i) + " is zero");
    }
    detail::project_row_inplace(std::span<T>(x), row, b_i, nsq);
    return x;
}

/// Kaczmarz iteration with a fixed iteration budget. Applies the project_row
/// update max_iters times following the schedule and records
/// ‖x_k − x_ref‖₂ at k = 0, every record_every-th iteration, and at the final
/// iteration. Deterministic given (seed, stream-id). Row norms are
/// precomputed once (O(mn)) and reused across iterations.
///
/// There is no residual stopping rule: a noisy right-hand side need not be
/// consistent, so the iterates approach a threshold rather than a point.
template <ScalarType T>
Trajectory<T> run(const Matrix<T>& a, const Vector<T>& rhs, const Vector<T>& x0,
                  const Schedule& schedule, const SolveConfig& cfg, const Vector<T>& x_ref) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (rhs.size() != m) {
        throw DimensionError("run: right-hand side length does not match row count");
    }
    if (x0.size() != n || x_ref.size() != n) {
        throw DimensionError("run: iterate length does not match column count");
    }
    if (cfg.record_every == 0) {
        throw ConfigError("run: record_every must be at least 1");
    }
    if (schedule.kind() == ScheduleKind::Randomized && schedule.sampler().size() != m) {
        throw ConfigError("run: sampler was built for " +
                          std::to_string(schedule.sampler().size()) + " rows, matrix has " +
                          std::to_string(m));
    }

    std::vector<double> row_nsq(m);
    for (std::size_t i = 0; i < m; ++i) row_nsq[i] = row_norm_sq(a, i);

    Trajectory<T> out;
    out.points.reserve(static_cast<std::size_t>(cfg.max_iters / cfg.record_every) + 2);
    Vector<T> x = x0;
    out.points.push_back({0, distance<T>(x, x_ref)});

    RngStream rng(cfg.seed, cfg.stream_id);
    for (std::uint64_t k = 1; k <= cfg.max_iters; ++k) {
        const std::size_t i = schedule.kind() == ScheduleKind::Cyclic
                                  ? static_cast<std::size_t>((k - 1) % m)
                                  : schedule.sampler().draw(rng);
        if (row_nsq[i] == 0.0) {
            throw ZeroRowError("run: row " + std::to_string(i) + " is zero");
        }
        detail::project_row_inplace(std::span<T>(x), a.row(i), rhs[i], row_nsq[i]);
        if (k % cfg.record_every == 0 || k == cfg.max_iters) {
            out.points.push_back({k, distance<T>(x, x_ref)});
        }
    }
    out.final_x = std::move(x);
    out.rows_visited = cfg.max_iters;
    return out;
}

/// Independent randomized runs on one system: trial t ∈ {1..trials} uses
/// stream-id t. Trials may execute concurrently; the result is a pure
/// function of (inputs, seed, trial index), independent of thread count.
template <ScalarType T>
std::vector<Trajectory<T>> run_batch(const Matrix<T>& a, const Vector<T>& rhs,
                                     const Vector<T>& x0, const SolveConfig& cfg,
                                     std::size_t trials, const Vector<T>& x_ref,
                                     unsigned threads = 0) {
    if (trials == 0) {
        throw ConfigError("run_batch: trials must be at least 1");
    }
    const Schedule schedule = Schedule::randomized(RowSampler::from_matrix(a));

    std::vector<Trajectory<T>> results(trials);
    unsigned nthreads = threads == 0 ? std::thread::hardware_concurrency() : threads;
    if (nthreads == 0) nthreads = 1;
    if (nthreads > trials) nthreads = static_cast<unsigned>(trials);

    std::atomic<std::size_t> cursor{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned w = 0; w < nthreads; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t t = cursor.fetch_add(1);
                if (t >= trials) return;
                try {
                    SolveConfig trial_cfg = cfg;
                    trial_cfg.stream_id = t + 1;
                    results[t] = run(a, rhs, x0, schedule, trial_cfg, x_ref);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
    return results;
}

} // namespace rk
