// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "rk/analysis.hpp"
#include "rk/experiment.hpp"
#include "rk/generators.hpp"
#include "rk/io.hpp"
#include "rk/solver.hpp"
#include "rk/spectrum.hpp"
#include "sigma_oracle.hpp"
#include "test_support.hpp"

using rk::Complex;
using rk::Matrix;
using rk::Vector;

namespace {

int g_failures = 0;

double seconds_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void report(int index, const std::string& name, bool ok, const std::string& detail,
            double elapsed) {
    if (!ok) ++g_failures;
    std::printf("[%s] criterion %d: %s (%s, %.2fs)\n", ok ? "PASS" : "FAIL", index, name.c_str(),
                detail.c_str(), elapsed);
    std::fflush(stdout);
}

// ---------------------------------------------------------------------------
// 1. Identity sharpness: I_100, b = 0, r = all-ones, 5000 iterations,
//    20 seeds; the iterates reach r and sit at distance sqrt(R)*gamma = 10
//    from the unperturbed solution x = 0. Runtime < 5 s.
void criterion_identity_sharpness() {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = 100;
    const auto eye = Matrix<double>::identity(n);
    const Vector<double> noise(n, 1.0);

    rk::SolveConfig cfg;
    cfg.max_iters = 5000;
    cfg.record_every = 5000;
    cfg.seed = 424242;
    const auto batch = rk::run_batch(eye, noise, Vector<double>(n), cfg, 20, Vector<double>(n));

    double mean_dist_to_noise = 0.0;
    double mean_dist_to_x = 0.0;
    for (const auto& traj : batch) {
        mean_dist_to_noise += rk::distance<double>(traj.final_x, noise);
        mean_dist_to_x += traj.final_error();
    }
    mean_dist_to_noise /= 20.0;
    mean_dist_to_x /= 20.0;

    const double elapsed = seconds_since(start);
    const bool ok = mean_dist_to_noise <= 1e-6 && std::abs(mean_dist_to_x - 10.0) <= 0.02 * 10.0 &&
                    elapsed < 5.0;
    report(1, "identity sharpness",
           ok,
           "mean|x-r|=" + fmt(mean_dist_to_noise) + " mean|x-0|=" + fmt(mean_dist_to_x) +
               " target 10 +/- 2%",
           elapsed);
}

// ---------------------------------------------------------------------------
// Shared body of the three Monte Carlo studies.
struct StudyOutcome {
    double mean_R;
    double pass_rate; // final_error <= 1.25 * threshold
    double elapsed;
};

StudyOutcome run_study(rk::EnsembleKind kind, std::size_t m, std::size_t n,
                       std::uint64_t master_seed) {
    const auto start = std::chrono::steady_clock::now();
    rk::ExperimentSpec spec;
    spec.kind = kind;
    spec.m = m;
    spec.n = n;
    spec.trials = 100;
    spec.iters = 6000;
    spec.record_every = 100;
    spec.noise_norm = 0.02;
    spec.master_seed = master_seed;
    const auto result = rk::run_experiment(spec);

    std::size_t within = 0;
    for (const auto& rec : result.trials) {
        if (rec.final_error <= 1.25 * rec.threshold) ++within;
    }
    return StudyOutcome{result.mean_R, static_cast<double>(within) / 100.0,
                        seconds_since(start)};
}

// 2. Gaussian study: mean R in [130, 196] (163.2 +/- 20%), >= 90% of trials
//    end at or below 1.25x their threshold. Runtime < 3 min.
void criterion_gaussian_study() {
    const auto o = run_study(rk::EnsembleKind::Gaussian, 2000, 100, 20260810);
    const bool ok =
        o.mean_R >= 130.0 && o.mean_R <= 196.0 && o.pass_rate >= 0.90 && o.elapsed < 180.0;
    report(2, "Gaussian study 2000x100",
           ok,
           "mean R=" + fmt(o.mean_R) + " in [130,196], pass rate=" + fmt(o.pass_rate),
           o.elapsed);
}

// 3. Partial Fourier study: mean R in [321, 536] (428.6 +/- 25%), same
//    pass-rate requirement. Runtime < 3 min.
void criterion_fourier_study() {
    const auto o = run_study(rk::EnsembleKind::PartialFourier, 700, 101, 20260810);
    const bool ok =
        o.mean_R >= 321.0 && o.mean_R <= 536.0 && o.pass_rate >= 0.90 && o.elapsed < 180.0;
    report(3, "partial Fourier study 700x101",
           ok,
           "mean R=" + fmt(o.mean_R) + " in [321,536], pass rate=" + fmt(o.pass_rate),
           o.elapsed);
}

// 4. Bernoulli study: mean R in [122, 203] (162.4 +/- 25%) at 2000x100.
void criterion_bernoulli_study() {
    const auto o = run_study(rk::EnsembleKind::Bernoulli01, 2000, 100, 20260810);
    const bool ok = o.mean_R >= 122.0 && o.mean_R <= 203.0;
    report(4, "Bernoulli study 2000x100",
           ok,
           "mean R=" + fmt(o.mean_R) + " vs [122,203], pass rate=" + fmt(o.pass_rate),
           o.elapsed);
}

// ---------------------------------------------------------------------------
// 5. Noiseless rate bound: Gaussian 50x10 consistent system, 500 trials,
//    200 iterations: mean ||x_k - x||^2 <= (1 - 1/R)^k ||x0 - x||^2 * 1.1 at
//    every recorded k. Runtime < 30 s.
void criterion_noiseless_rate() {
    const auto start = std::chrono::steady_clock::now();
    const auto a =
        rk::gen_gaussian(rk::EnsembleSpec{rk::EnsembleKind::Gaussian, 50, 10, 515, 0});
    rk::RngStream xrng(515, 1);
    const auto x = rktest::random_vector<double>(xrng, 10);
    const auto b = rktest::hyperplane_rhs(a, x);
    const double R = rk::compute_R(a);
    const double init_err_sq = rk::norm_sq<double>(x); // x0 = 0

    rk::SolveConfig cfg;
    cfg.max_iters = 200;
    cfg.record_every = 1;
    cfg.seed = 515;
    const auto batch = rk::run_batch(a, b, Vector<double>(10), cfg, 500, x);

    bool ok = true;
    double worst_ratio = 0.0;
    std::uint64_t worst_k = 0;
    for (std::size_t p = 0; p < batch[0].points.size(); ++p) {
        double mean_sq = 0.0;
        for (const auto& traj : batch) mean_sq += traj.points[p].error * traj.points[p].error;
        mean_sq /= static_cast<double>(batch.size());
        const std::uint64_t k = batch[0].points[p].iteration;
        const double bound = rk::noiseless_bound(R, init_err_sq, k) * 1.1;
        const double ratio = mean_sq / bound;
        if (ratio > worst_ratio) {
            worst_ratio = ratio;
            worst_k = k;
        }
        ok = ok && mean_sq <= bound;
    }
    const double elapsed = seconds_since(start);
    ok = ok && elapsed < 30.0;
    report(5, "noiseless rate bound (Eq. 1)",
           ok,
           "R=" + fmt(R) + ", worst mean/bound=" + fmt(worst_ratio) + " at k=" +
               std::to_string(worst_k),
           elapsed);
}

// ---------------------------------------------------------------------------
// 6. One-step contraction: fixed predecessor, 1e5 sampled single steps;
//    the empirical mean of ||x_k - x||^2 matches the exact conditional
//    expectation within 2% and stays below (1 - 1/R)||x_{k-1} - x||^2 * 1.02.
void criterion_one_step_contraction() {
    const auto start = std::chrono::steady_clock::now();
    const auto a =
        rk::gen_gaussian(rk::EnsembleSpec{rk::EnsembleKind::Gaussian, 200, 20, 616, 0});
    rk::RngStream vec_rng(616, 1);
    const auto x = rktest::random_vector<double>(vec_rng, 20);
    const auto z = rktest::random_vector<double>(vec_rng, 20);
    const auto b = rktest::hyperplane_rhs(a, x);
    const double R = rk::compute_R(a);
    const double base_sq = rk::abs_sq(rk::distance<double>(z, x));

    // exact conditional expectation by enumerating every row
    const double fro = rk::frobenius_sq(a);
    double exact = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const auto proj = rk::project_row(z, a, i, b[i]);
        exact += (rk::row_norm_sq(a, i) / fro) * rk::abs_sq(rk::distance<double>(proj, x));
    }

    const auto sampler = rk::RowSampler::from_matrix(a);
    rk::RngStream draw_rng(616, 2);
    const std::size_t samples = 100000;
    double empirical = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
        const std::size_t i = sampler.draw(draw_rng);
        const auto proj = rk::project_row(z, a, i, b[i]);
        empirical += rk::abs_sq(rk::distance<double>(proj, x));
    }
    empirical /= static_cast<double>(samples);

    const double elapsed = seconds_since(start);
    const bool ok = std::abs(empirical - exact) <= 0.02 * exact &&
                    empirical <= (1.0 - 1.0 / R) * base_sq * 1.02;
    report(6, "one-step contraction (Lemma 2)",
           ok,
           "empirical/exact=" + fmt(empirical / exact) +
               ", empirical/(1-1/R)base=" + fmt(empirical / ((1.0 - 1.0 / R) * base_sq)),
           elapsed);
}

// ---------------------------------------------------------------------------
// 7. Geometry suite: hyperplane shift (Lemma 1) and the Pythagoras identity
//    from the proof of Theorem 1, to 1e-10 relative, on 1000 random real and
//    1000 random complex instances.
template <rk::ScalarType T>
std::size_t geometry_violations(std::uint64_t seed) {
    rk::RngStream rng(seed, 0);
    std::size_t violations = 0;
    for (int inst = 0; inst < 1000; ++inst) {
        const auto a = rktest::random_matrix<T>(rng, 5, 7);
        const auto x = rktest::random_vector<T>(rng, 7);
        const auto b = rktest::hyperplane_rhs(a, x);
        const auto z = rktest::random_vector<T>(rng, 7);
        const T r_i = rktest::random_entry<T>(rng);
        const std::size_t i = static_cast<std::size_t>(inst) % 5;

        const auto clean = rk::project_row(z, a, i, b[i]);
        const auto noisy = rk::project_row(z, a, i, b[i] + r_i);

        // shift: noisy - clean = (r_i/||a_i||^2) a_i
        const double nsq = rk::row_norm_sq(a, i);
        const T alpha = r_i / nsq;
        double shift_dev_sq = 0.0;
        for (std::size_t j = 0; j < 7; ++j)
            shift_dev_sq += rk::abs_sq(noisy[j] - clean[j] - alpha * a(i, j));
        const double shift_scale = rk::abs_of(alpha) * std::sqrt(nsq);
        if (std::sqrt(shift_dev_sq) > 1e-10 * shift_scale) ++violations;

        // Pythagoras: ||x_k* - x||^2 = ||x_k - x||^2 + ||alpha a_i||^2
        const double lhs = rk::abs_sq(rk::distance<T>(noisy, x));
        const double rhs = rk::abs_sq(rk::distance<T>(clean, x)) + rk::abs_sq(r_i) / nsq;
        if (!rktest::rel_close(lhs, rhs, 1e-10)) ++violations;
    }
    return violations;
}

void criterion_geometry_suite() {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t bad_real = geometry_violations<double>(717);
    const std::size_t bad_complex = geometry_violations<Complex>(718);
    const double elapsed = seconds_since(start);
    report(7, "geometry suite (Lemma 1 + Pythagoras)",
           bad_real == 0 && bad_complex == 0,
           "violations real=" + std::to_string(bad_real) +
               " complex=" + std::to_string(bad_complex) + " of 2x1000",
           elapsed);
}

// ---------------------------------------------------------------------------
// 8. Sigma oracle equivalence: Jacobi sigma extremes match the
//    characteristic-polynomial bisection oracle on 50 random 8x5 matrices to
//    1e-8 relative, and R(I_n) = n exactly for n in {1, 10, 100}.
void criterion_sigma_oracle() {
    const auto start = std::chrono::steady_clock::now();
    std::size_t mismatches = 0;
    double worst = 0.0;
    for (std::uint64_t inst = 0; inst < 50; ++inst) {
        rk::RngStream rng(818 + inst, 0);
        const auto a = rktest::random_matrix<double>(rng, 8, 5);
        const auto jac = rk::sigma_extremes(a);
        const auto orc = rktest::oracle_sigma_extremes(a);
        const double dev = std::max(std::abs(jac.sigma_min - orc.sigma_min) / orc.sigma_min,
                                    std::abs(jac.sigma_max - orc.sigma_max) / orc.sigma_max);
        worst = std::max(worst, dev);
        if (dev > 1e-8) ++mismatches;
    }

    bool identity_exact = true;
    for (const std::size_t n : {std::size_t{1}, std::size_t{10}, std::size_t{100}}) {
        identity_exact =
            identity_exact && rk::compute_R(Matrix<double>::identity(n)) == static_cast<double>(n);
    }

    const double elapsed = seconds_since(start);
    report(8, "sigma oracle equivalence",
           mismatches == 0 && identity_exact,
           "worst relative deviation=" + fmt(worst) + " over 50 matrices, R(I_n)=n exact: " +
               (identity_exact ? "yes" : "no"),
           elapsed);
}

// ---------------------------------------------------------------------------
// 9. Sampler distribution and pipeline determinism: chi-square goodness of
//    fit on 1e6 draws passes at significance 1e-6 for m in {2, 10, 2000}, and
//    the experiment pipeline is byte-identical across runs and thread counts.
void criterion_sampler_and_determinism() {
    const auto start = std::chrono::steady_clock::now();

    bool chi_ok = true;
    std::string chi_detail;
    for (const std::size_t m : {std::size_t{2}, std::size_t{10}, std::size_t{2000}}) {
        rk::RngStream gen(919 + m, 0);
        const auto a = rktest::random_matrix<double>(gen, m, 5);
        const auto sampler = rk::RowSampler::from_matrix(a);
        rk::RngStream draw_rng(920, 1);
        std::vector<std::uint64_t> counts(m, 0);
        const std::size_t draws = 1000000;
        for (std::size_t s = 0; s < draws; ++s) ++counts[sampler.draw(draw_rng)];
        const double stat =
            rktest::chi_square_stat(counts, sampler.probabilities(), static_cast<double>(draws));
        const double p = rktest::chi_square_pvalue(stat, static_cast<double>(m - 1));
        chi_ok = chi_ok && p >= 1e-6;
        if (!chi_detail.empty()) chi_detail += " ";
        chi_detail += "p(m=" + std::to_string(m) + ")=" + fmt(p);
    }

    rk::ExperimentSpec spec;
    spec.kind = rk::EnsembleKind::Gaussian;
    spec.m = 100;
    spec.n = 10;
    spec.trials = 6;
    spec.iters = 400;
    spec.record_every = 50;
    spec.noise_norm = 0.01;
    spec.master_seed = 99;
    spec.threads = 1;
    const auto serial = rk::run_experiment(spec);
    spec.threads = 4;
    const auto parallel = rk::run_experiment(spec);

    const auto dir = std::filesystem::temp_directory_path() / "rk_acceptance_det";
    std::filesystem::remove_all(dir);
    rk::write_experiment_csvs(serial, dir / "a");
    rk::write_experiment_csvs(parallel, dir / "b");
    const bool bytes_ok =
        rk::read_text(dir / "a" / "summary.csv") == rk::read_text(dir / "b" / "summary.csv") &&
        rk::read_text(dir / "a" / "trajectories.csv") ==
            rk::read_text(dir / "b" / "trajectories.csv") &&
        rk::summary_csv(serial) == rk::summary_csv(parallel);
    std::filesystem::remove_all(dir);

    const double elapsed = seconds_since(start);
    report(9, "sampler chi-square + pipeline determinism",
           chi_ok && bytes_ok,
           chi_detail + ", byte-identical across thread counts: " + (bytes_ok ? "yes" : "no"),
           elapsed);
}

} // namespace

int main() {
    criterion_identity_sharpness();
    criterion_gaussian_study();
    criterion_fourier_study();
    criterion_bernoulli_study();
    criterion_noiseless_rate();
    criterion_one_step_contraction();
    criterion_geometry_suite();
    criterion_sigma_oracle();
    criterion_sampler_and_determinism();

    std::printf("%d of 9 criteria passed\n", 9 - g_failures);
    return g_failures;
}
