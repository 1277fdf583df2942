#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "rk/generators.hpp"
#include "rk/solver.hpp"

namespace rk {

/// One of the paper-style Monte Carlo studies: `trials` independent systems
/// drawn from the ensemble, each solved with the randomized schedule for
/// `iters` iterations against homogeneous data (x = 0, b = 0) with fresh
/// noise of exact norm `noise_norm` and a random initial iterate of norm
/// `init_norm` (so the error trajectory is nontrivial).
struct ExperimentSpec {
    EnsembleKind kind = EnsembleKind::Gaussian;
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t trials = 1;
    std::uint64_t iters = 6000;
    std::uint64_t record_every = 100;
    double noise_norm = 0.02;
    std::uint64_t master_seed = 0;
    double init_norm = 1.0;
    bool complex_noise = true; // partial Fourier only: draw complex noise
    unsigned threads = 0;      // 0 = hardware concurrency

    void validate() const;
};

struct TrialRecord {
    std::size_t trial = 0; // 1-based
    double R = 0.0;
    double gamma = 0.0;
    double threshold = 0.0; // √R·γ
    double final_error = 0.0;
    std::vector<TrajectoryPoint> points;
    std::vector<double> bounds; // noisy_bound at each recorded iteration
};

struct ExperimentResult {
    ExperimentSpec spec;
    std::vector<TrialRecord> trials;
    double mean_R = 0.0;
    double mean_threshold = 0.0;
    double fraction_within_threshold = 0.0; // final_error ≤ threshold
};

/// Runs all trials (concurrently when threads allow). Trial t derives its
/// matrix, noise, initial iterate, and solver streams from
/// (master_seed, 4t..4t+3), so output is a pure function of the spec,
/// independent of scheduling.
ExperimentResult run_experiment(const ExperimentSpec& spec);

/// summary.csv: one row per trial `trial,R,gamma,threshold,final_error`.
std::string summary_csv(const ExperimentResult& result);

/// trajectories.csv: `trial,iter,error,noisy_bound` rows for every trial.
std::string trajectories_csv(const ExperimentResult& result);

/// Same schema as trajectories.csv for a single run.
std::string trajectory_csv(std::size_t trial, const std::vector<TrajectoryPoint>& points,
                           const std::vector<double>& bounds);

/// Writes summary.csv and trajectories.csv under out_dir (created if absent),
/// each via an atomic temp-file rename.
void write_experiment_csvs(const ExperimentResult& result, const std::filesystem::path& out_dir);

} // namespace rk
