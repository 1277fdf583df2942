// rk: randomized Kaczmarz solver and experiment harness.
//
// Subcommands: generate | analyze | solve | experiment. All randomness is
// driven by explicit (seed, stream) flags, so every output is reproducible
// byte for byte.

#include <cstdint>
#include <iostream>
#include <limits>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "rk/analysis.hpp"
#include "rk/errors.hpp"
#include "rk/experiment.hpp"
#include "rk/generators.hpp"
#include "rk/io.hpp"
#include "rk/solver.hpp"
#include "rk/spectrum.hpp"

namespace {

struct GenerateArgs {
    std::string kind;
    std::size_t m = 0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    std::string out;
};

void cmd_generate(const GenerateArgs& args) {
    rk::EnsembleSpec spec{rk::parse_ensemble_kind(args.kind), args.m, args.n, args.seed,
                          args.stream};
    rk::write_matrix(args.out, rk::generate(spec));
}

struct AnalyzeArgs {
    std::string matrix;
    std::string noise;
};

void print_value(std::string_view key, double value) {
    std::cout << key << "=" << rk::format_entry(value) << "\n";
}

void cmd_analyze(const AnalyzeArgs& args) {
    const rk::AnyMatrix any_a = rk::read_matrix(args.matrix);
    std::visit(
        [&](const auto& a) {
            using T = typename std::decay_t<decltype(a)>::value_type;
            rk::Vector<T> noise;
            bool have_noise = false;
            if (!args.noise.empty()) {
                rk::AnyVector any_r = rk::read_vector(args.noise);
                if (rk::field_of_any(any_r) != a.field()) {
                    throw rk::DimensionError("noise field does not match matrix field");
                }
                noise = std::get<rk::Vector<T>>(std::move(any_r));
                have_noise = true;
            }
            const rk::AnalysisReport rep = rk::analyze(a, have_noise ? &noise : nullptr);
            print_value("sigma_min", rep.sigma_min);
            print_value("sigma_max", rep.sigma_max);
            if (rep.rank_deficient) {
                std::cout << "rank_deficient=true\n";
                return;
            }
            print_value("kappa", rep.kappa);
            print_value("R", rep.R);
            print_value("gamma", rep.gamma);
            print_value("threshold", rep.threshold);
        },
        any_a);
}

struct SolveArgs {
    std::string matrix;
    std::string rhs;
    bool homogeneous = false;
    std::string noise;
    double noise_norm = -1.0; // < 0 means unset
    std::string schedule = "random";
    std::uint64_t iters = 0;
    std::uint64_t record_every = 1;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    double init_norm = 1.0;
    std::string out;
};

// Stream-id layout mirrors the experiment harness: solver uses the base
// stream, noise base+1, the homogeneous initial iterate base+2.
void cmd_solve(const SolveArgs& args) {
    if (args.homogeneous == !args.rhs.empty()) {
        throw rk::ConfigError("pass exactly one of --rhs or --homogeneous");
    }
    if (!args.noise.empty() && args.noise_norm >= 0.0) {
        throw rk::ConfigError("pass at most one of --noise or --noise-norm");
    }

    const rk::AnyMatrix any_a = rk::read_matrix(args.matrix);
    std::visit(
        [&](const auto& a) {
            using T = typename std::decay_t<decltype(a)>::value_type;
            const std::size_t m = a.rows();
            const std::size_t n = a.cols();

            rk::Vector<T> b(m);
            rk::Vector<T> x_ref(n);
            rk::Vector<T> x0(n);
            if (args.homogeneous) {
                rk::RngStream x0_rng(args.seed, args.stream + 2);
                x0 = rk::gen_noise<T>(n, args.init_norm, x0_rng);
            } else {
                rk::AnyVector any_b = rk::read_vector(args.rhs);
                if (rk::field_of_any(any_b) != a.field()) {
                    throw rk::DimensionError("right-hand side field does not match matrix field");
                }
                b = std::get<rk::Vector<T>>(std::move(any_b));
                // Reference solution of the clean system for error recording.
                // The solver's equations are <a_i, y> = b_i (conjugate-linear
                // inner product), i.e. conj(A)y = b, so the complex reference
                // is the conjugate of the least-squares solution against
                // conj(b). Real systems reduce to A† b.
                if constexpr (std::same_as<T, rk::Complex>) {
                    rk::Vector<T> b_conj(m);
                    for (std::size_t i = 0; i < m; ++i) b_conj[i] = std::conj(b[i]);
                    x_ref = rk::least_squares_solve(a, b_conj);
                    for (auto& e : x_ref) e = std::conj(e);
                } else {
                    x_ref = rk::least_squares_solve(a, b);
                }
            }

            rk::Vector<T> noise(m);
            bool have_noise = false;
            if (!args.noise.empty()) {
                rk::AnyVector any_r = rk::read_vector(args.noise);
                if (rk::field_of_any(any_r) != a.field()) {
                    throw rk::DimensionError("noise field does not match matrix field");
                }
                noise = std::get<rk::Vector<T>>(std::move(any_r));
                have_noise = true;
            } else if (args.noise_norm >= 0.0) {
                rk::RngStream noise_rng(args.seed, args.stream + 1);
                noise = rk::gen_noise<T>(m, args.noise_norm, noise_rng);
                have_noise = true;
            }

            rk::Vector<T> rhs = b;
            if (have_noise) {
                if (noise.size() != m) {
                    throw rk::DimensionError("noise length does not match row count");
                }
                for (std::size_t i = 0; i < m; ++i) rhs[i] += noise[i];
            }

            rk::Schedule schedule = args.schedule == "cyclic"
                                        ? rk::Schedule::cyclic()
                                        : rk::Schedule::randomized(rk::RowSampler::from_matrix(a));

            rk::SolveConfig cfg;
            cfg.max_iters = args.iters;
            cfg.record_every = args.record_every;
            cfg.seed = args.seed;
            cfg.stream_id = args.stream;
            const rk::Trajectory<T> traj = rk::run(a, rhs, x0, schedule, cfg, x_ref);

            const rk::AnalysisReport rep = rk::analyze(a, have_noise ? &noise : nullptr);
            std::vector<double> bounds;
            bounds.reserve(traj.points.size());
            const double init_err = traj.points.front().error;
            for (const rk::TrajectoryPoint& p : traj.points) {
                bounds.push_back(rep.rank_deficient
                                     ? std::numeric_limits<double>::quiet_NaN()
                                     : rk::noisy_bound(rep.R, rep.gamma, init_err, p.iteration));
            }
            rk::write_text_atomic(args.out, rk::trajectory_csv(1, traj.points, bounds));
        },
        any_a);
}

struct ExperimentArgs {
    std::string kind;
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t trials = 0;
    std::uint64_t iters = 6000;
    std::uint64_t record_every = 100;
    double noise_norm = 0.02;
    std::uint64_t seed = 0;
    double init_norm = 1.0;
    bool real_noise = false;
    unsigned threads = 0;
    std::string out_dir;
};

void cmd_experiment(const ExperimentArgs& args) {
    rk::ExperimentSpec spec;
    spec.kind = rk::parse_ensemble_kind(args.kind);
    spec.m = args.m;
    spec.n = args.n;
    spec.trials = args.trials;
    spec.iters = args.iters;
    spec.record_every = args.record_every;
    spec.noise_norm = args.noise_norm;
    spec.master_seed = args.seed;
    spec.init_norm = args.init_norm;
    spec.complex_noise = !args.real_noise;
    spec.threads = args.threads;

    const rk::ExperimentResult result = rk::run_experiment(spec);
    rk::write_experiment_csvs(result, args.out_dir);
    print_value("mean_R", result.mean_R);
    print_value("mean_threshold", result.mean_threshold);
    print_value("fraction_within_threshold", result.fraction_within_threshold);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"randomized Kaczmarz solver and experiment harness"};
    app.require_subcommand(1);

    GenerateArgs gen;
    CLI::App* generate = app.add_subcommand("generate", "draw a seeded test matrix (rkmat)");
    generate->add_option("--kind", gen.kind, "ensemble: gaussian|bernoulli|fourier")->required();
    generate->add_option("--m", gen.m, "row count")->required();
    generate->add_option("--n", gen.n, "column count (odd for fourier)")->required();
    generate->add_option("--seed", gen.seed, "seed (default 0)");
    generate->add_option("--stream", gen.stream, "stream id (default 0)");
    generate->add_option("--out", gen.out, "output rkmat path")->required();
    generate->callback([&] { cmd_generate(gen); });

    AnalyzeArgs ana;
    CLI::App* analyze =
        app.add_subcommand("analyze", "report sigma_min/sigma_max/kappa/R/gamma/threshold");
    analyze->add_option("--matrix", ana.matrix, "rkmat path")->required();
    analyze->add_option("--noise", ana.noise, "rkvec noise path (gamma is 0 without it)");
    analyze->callback([&] { cmd_analyze(ana); });

    SolveArgs sol;
    CLI::App* solve = app.add_subcommand("solve", "run one Kaczmarz solve, write trajectory CSV");
    solve->add_option("--matrix", sol.matrix, "rkmat path")->required();
    solve->add_option("--rhs", sol.rhs, "rkvec right-hand side b (error is recorded against the "
                                        "least-squares solution of the clean system)");
    solve->add_flag("--homogeneous", sol.homogeneous,
                    "use b = 0 with reference solution x = 0 and a random initial iterate "
                    "of norm --init-norm");
    solve->add_option("--noise", sol.noise, "rkvec noise r added to the right-hand side");
    solve->add_option("--noise-norm", sol.noise_norm,
                      "draw Gaussian noise rescaled to this exact norm");
    solve->add_option("--schedule", sol.schedule, "random|cyclic (default random)")
        ->check(CLI::IsMember({"random", "cyclic"}));
    solve->add_option("--iters", sol.iters, "iteration budget")->required();
    solve->add_option("--record-every", sol.record_every, "recording stride (default 1)");
    solve->add_option("--seed", sol.seed, "seed (default 0)");
    solve->add_option("--stream", sol.stream, "base stream id (default 0)");
    solve->add_option("--init-norm", sol.init_norm,
                      "norm of the homogeneous initial iterate (default 1)");
    solve->add_option("--out", sol.out, "output CSV path")->required();
    solve->callback([&] { cmd_solve(sol); });

    ExperimentArgs exp;
    CLI::App* experiment =
        app.add_subcommand("experiment", "multi-trial study, write summary/trajectories CSVs");
    experiment->add_option("--kind", exp.kind, "ensemble: gaussian|bernoulli|fourier")->required();
    experiment->add_option("--m", exp.m, "row count")->required();
    experiment->add_option("--n", exp.n, "column count (odd for fourier)")->required();
    experiment->add_option("--trials", exp.trials, "number of trials")->required();
    experiment->add_option("--iters", exp.iters, "iterations per trial (default 6000)");
    experiment->add_option("--record-every", exp.record_every, "recording stride (default 100)");
    experiment->add_option("--noise-norm", exp.noise_norm, "noise norm per trial (default 0.02)");
    experiment->add_option("--seed", exp.seed, "master seed (default 0)");
    experiment->add_option("--init-norm", exp.init_norm,
                           "norm of the initial iterate (default 1)");
    experiment->add_flag("--real-noise", exp.real_noise,
                         "draw real noise for the fourier ensemble instead of complex");
    experiment->add_option("--threads", exp.threads, "worker threads (default: hardware)");
    experiment->add_option("--out-dir", exp.out_dir, "output directory")->required();
    experiment->callback([&] { cmd_experiment(exp); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const rk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
