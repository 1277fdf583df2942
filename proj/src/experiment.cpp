#include "rk/experiment.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "rk/analysis.hpp"
#include "rk/errors.hpp"
#include "rk/io.hpp"

namespace rk {

void ExperimentSpec::validate() const {
    EnsembleSpec probe{kind, m, n, master_seed, 0};
    probe.validate();
    if (trials < 1) {
        throw ConfigError("experiment requires at least one trial");
    }
    if (iters < 1) {
        throw ConfigError("experiment requires at least one iteration");
    }
    if (record_every < 1) {
        throw ConfigError("record_every must be at least 1");
    }
    if (noise_norm < 0.0) {
        throw DomainError("noise norm must be nonnegative");
    }
    if (init_norm < 0.0) {
        throw DomainError("initial iterate norm must be nonnegative");
    }
}

namespace {

// Stream-id layout per 1-based trial t: matrix, noise, x0, solver.
constexpr std::uint64_t kStreamsPerTrial = 4;

template <ScalarType T>
Matrix<T> trial_matrix(const ExperimentSpec& spec, std::size_t trial);

template <>
Matrix<double> trial_matrix<double>(const ExperimentSpec& spec, std::size_t trial) {
    EnsembleSpec es{spec.kind, spec.m, spec.n, spec.master_seed, kStreamsPerTrial * trial};
    return spec.kind == EnsembleKind::Gaussian ? gen_gaussian(es) : gen_bernoulli01(es);
}

template <>
Matrix<Complex> trial_matrix<Complex>(const ExperimentSpec& spec, std::size_t trial) {
    EnsembleSpec es{spec.kind, spec.m, spec.n, spec.master_seed, kStreamsPerTrial * trial};
    return gen_partial_fourier(es);
}

template <ScalarType T>
Vector<T> trial_noise(const ExperimentSpec& spec, std::size_t trial) {
    RngStream rng(spec.master_seed, kStreamsPerTrial * trial + 1);
    if constexpr (std::same_as<T, Complex>) {
        if (!spec.complex_noise) {
            Vector<double> real_noise = gen_noise<double>(spec.m, spec.noise_norm, rng);
            Vector<Complex> r(spec.m);
            for (std::size_t i = 0; i < spec.m; ++i) r[i] = Complex(real_noise[i], 0.0);
            return r;
        }
    }
    return gen_noise<T>(spec.m, spec.noise_norm, rng);
}

template <ScalarType T>
TrialRecord run_trial(const ExperimentSpec& spec, std::size_t trial) {
    const Matrix<T> a = trial_matrix<T>(spec, trial);
    const Vector<T> noise = trial_noise<T>(spec, trial);

    RngStream x0_rng(spec.master_seed, kStreamsPerTrial * trial + 2);
    const Vector<T> x0 = gen_noise<T>(spec.n, spec.init_norm, x0_rng);
    const Vector<T> x_ref(spec.n); // homogeneous system: x = 0, b = 0

    const AnalysisReport report = analyze(a, &noise);
    if (report.rank_deficient) {
        throw RankDeficientError("trial " + std::to_string(trial) +
                                 ": generated matrix is rank deficient");
    }

    SolveConfig cfg;
    cfg.max_iters = spec.iters;
    cfg.record_every = spec.record_every;
    cfg.seed = spec.master_seed;
    cfg.stream_id = kStreamsPerTrial * trial + 3;
    Trajectory<T> traj =
        run(a, noise, x0, Schedule::randomized(RowSampler::from_matrix(a)), cfg, x_ref);

    TrialRecord rec;
    rec.trial = trial;
    rec.R = report.R;
    rec.gamma = report.gamma;
    rec.threshold = report.threshold;
    rec.final_error = traj.final_error();
    rec.bounds.reserve(traj.points.size());
    const double init_err = traj.points.front().error;
    for (const TrajectoryPoint& p : traj.points) {
        rec.bounds.push_back(noisy_bound(report.R, report.gamma, init_err, p.iteration));
    }
    rec.points = std::move(traj.points);
    return rec;
}

template <ScalarType T>
void run_all_trials(const ExperimentSpec& spec, std::vector<TrialRecord>& out) {
    unsigned nthreads = spec.threads == 0 ? std::thread::hardware_concurrency() : spec.threads;
    if (nthreads == 0) nthreads = 1;
    if (nthreads > spec.trials) nthreads = static_cast<unsigned>(spec.trials);

    std::atomic<std::size_t> cursor{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned w = 0; w < nthreads; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t idx = cursor.fetch_add(1);
                if (idx >= spec.trials) return;
                try {
                    out[idx] = run_trial<T>(spec, idx + 1);
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
}

} // namespace

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    spec.validate();
    ExperimentResult result;
    result.spec = spec;
    result.trials.resize(spec.trials);
    if (spec.kind == EnsembleKind::PartialFourier) {
        run_all_trials<Complex>(spec, result.trials);
    } else {
        run_all_trials<double>(spec, result.trials);
    }

    double sum_R = 0.0;
    double sum_threshold = 0.0;
    std::size_t within = 0;
    for (const TrialRecord& rec : result.trials) {
        sum_R += rec.R;
        sum_threshold += rec.threshold;
        if (rec.final_error <= rec.threshold) ++within;
    }
    const double count = static_cast<double>(spec.trials);
    result.mean_R = sum_R / count;
    result.mean_threshold = sum_threshold / count;
    result.fraction_within_threshold = static_cast<double>(within) / count;
    return result;
}

std::string summary_csv(const ExperimentResult& result) {
    std::string out = "trial,R,gamma,threshold,final_error\n";
    for (const TrialRecord& rec : result.trials) {
        out += std::to_string(rec.trial);
        out += ',';
        out += format_entry(rec.R);
        out += ',';
        out += format_entry(rec.gamma);
        out += ',';
        out += format_entry(rec.threshold);
        out += ',';
        out += format_entry(rec.final_error);
        out += '\n';
    }
    return out;
}

namespace {

void append_trajectory_rows(std::string& out, std::size_t trial,
                            const std::vector<TrajectoryPoint>& points,
                            const std::vector<double>& bounds) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        out += std::to_string(trial);
        out += ',';
        out += std::to_string(points[i].iteration);
        out += ',';
        out += format_entry(points[i].error);
        out += ',';
        out += format_entry(bounds[i]);
        out += '\n';
    }
}

} // namespace

std::string trajectories_csv(const ExperimentResult& result) {
    std::string out = "trial,iter,error,noisy_bound\n";
    for (const TrialRecord& rec : result.trials) {
        append_trajectory_rows(out, rec.trial, rec.points, rec.bounds);
    }
    return out;
}

std::string trajectory_csv(std::size_t trial, const std::vector<TrajectoryPoint>& points,
                           const std::vector<double>& bounds) {
    if (points.size() != bounds.size()) {
        throw DimensionError("trajectory_csv: bounds length does not match points");
    }
    std::string out = "trial,iter,error,noisy_bound\n";
    append_trajectory_rows(out, trial, points, bounds);
    return out;
}

void write_experiment_csvs(const ExperimentResult& result, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    write_text_atomic(out_dir / "summary.csv", summary_csv(result));
    write_text_atomic(out_dir / "trajectories.csv", trajectories_csv(result));
}

} // namespace rk
