// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Covers the approximation identities, Monte Carlo success rates, the
// deterministic geometry suites, the lower-bound separation,
// runtime scaling windows, and structural invariants.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "meanest/baselines.hpp"
#include "meanest/core_ops.hpp"
#include "meanest/fastgd.hpp"
#include "meanest/harness.hpp"
#include "meanest/instances.hpp"
#include "meanest/minsum.hpp"
#include "meanest/sampling.hpp"

using namespace meanest;
using testgen::at_distance;
using testgen::make_event_e;
using testgen::make_gamma_good;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
};

double now_s() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

double point_dist(const Point& a, const Point& b) {
    return distance(std::span<const double>(a), std::span<const double>(b));
}

void expect(Outcome& out, bool ok, const std::string& what) {
    if (!ok) {
        out.pass = false;
        out.detail << " [" << what << "]";
    }
}

double success_rate(const InstanceSpec& inst, const std::string& estimator,
                    const std::string& preset, int depth, std::size_t trials,
                    std::uint64_t seed,
                    std::optional<std::size_t> empirical_samples = {}) {
    ExperimentSpec spec;
    spec.instance = inst;
    spec.estimators = {estimator};
    spec.config.eps = 0.5;
    spec.config.delta = 0.1;
    spec.config.seed = seed;
    spec.config.depth = depth;
    spec.preset = preset;
    spec.trials = trials;
    spec.empirical_samples = empirical_samples;
    return run_experiment(spec).summaries.front().success_rate;
}

InstanceSpec lower_bound_spec() {
    InstanceSpec inst;
    inst.kind = "two_point_lb";
    inst.params = {{"n", 100}, {"eps", 0.5}};
    return inst;
}

InstanceSpec gaussian_spec() {
    InstanceSpec inst;
    inst.kind = "gaussian";
    inst.params = {{"n", 2000}, {"d", 32}, {"sigma", 1.0}};
    inst.seed = 2027;
    return inst;
}

// ---- criteria -------------------------------------------------------------

Outcome c1_decomposition() {
    Outcome out;
    Rng rng(901);
    for (int rep = 0; rep < 1000; ++rep) {
        const std::size_t n = 1 + rng.uniform_index(200);
        const std::size_t d = 1 + rng.uniform_index(32);
        const PointSet A = testgen::gaussian_cloud(
            n, d, rng, rng.uniform(0.1, 10.0), rng.uniform(-50.0, 50.0));
        const Point c = testgen::random_point(d, rng, 20.0);
        auto [lhs, rhs] = decomposition_check(A, c);
        if (std::abs(lhs - rhs) > 1e-9 * std::max(1.0, std::abs(lhs))) {
            expect(out, false, "pair " + std::to_string(rep));
            break;
        }
    }
    return out;
}

Outcome c2_expected_deviation() {
    Outcome out;
    const Instance inst = gen_gaussian(1000, 5, 1.0, 902);
    const std::size_t s = 10;
    const std::size_t batches = 100'000;
    const Rng base(903);
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < batches; ++i) {
        const Point mu_hat =
            empirical_mean_estimate(inst.points, s, base.substream(i));
        sum_sq += squared_distance(mu_hat, inst.oracle.mean);
    }
    const double observed = sum_sq / static_cast<double>(batches);
    const double expected =
        inst.oracle.opt / (static_cast<double>(inst.oracle.n) * static_cast<double>(s));
    out.detail << " observed/expected=" << observed / expected;
    expect(out, std::abs(observed - expected) <= 0.05 * expected, "5% window");
    return out;
}

Outcome c3_fastgd_success() {
    Outcome out;
    const double lb = success_rate(lower_bound_spec(), "fastgd", "practical", 1,
                                   1000, 904);
    out.detail << " lower_bound=" << lb;
    expect(out, lb >= 0.90, "two_point_lb rate");

    const double gauss = success_rate(gaussian_spec(), "fastgd", "practical", 1,
                                      1000, 905);
    out.detail << " gaussian_d32=" << gauss;
    expect(out, gauss >= 0.90, "gaussian rate");

    const double paper = success_rate(lower_bound_spec(), "fastgd", "paper", 1,
                                      50, 906);
    out.detail << " paper_smoke=" << paper;
    expect(out, paper == 1.0, "paper-constant smoke");
    return out;
}

Outcome c4_minsum_success() {
    Outcome out;
    for (const int depth : {0, 1}) {
        const double lb = success_rate(lower_bound_spec(), "minsum", "practical",
                                       depth, 1000, 907 + depth);
        out.detail << " lb_depth" << depth << "=" << lb;
        expect(out, lb >= 0.90, "two_point_lb depth " + std::to_string(depth));
        const double gauss = success_rate(gaussian_spec(), "minsum", "practical",
                                          depth, 1000, 909 + depth);
        out.detail << " gauss_depth" << depth << "=" << gauss;
        expect(out, gauss >= 0.90, "gaussian depth " + std::to_string(depth));
    }
    return out;
}

Outcome c5_gmom_success() {
    Outcome out;
    const double lb =
        success_rate(lower_bound_spec(), "gmom", "practical", 1, 1000, 911);
    out.detail << " lower_bound=" << lb;
    expect(out, lb >= 0.90, "two_point_lb rate");
    const double gauss =
        success_rate(gaussian_spec(), "gmom", "practical", 1, 1000, 912);
    out.detail << " gaussian_d32=" << gauss;
    expect(out, gauss >= 0.90, "gaussian rate");
    return out;
}

Outcome c6_geometry_suites() {
    Outcome out;
    const std::size_t kCases = 500;
    Rng rng(913);
    int case_id = 0;
    std::size_t fail_grad = 0, fail_contract = 0, fail_ball = 0, fail_init = 0;
    for (const std::size_t m : {std::size_t{10}, std::size_t{50}, std::size_t{200}}) {
        for (std::size_t rep = 0; rep < kCases; ++rep, ++case_id) {
            const std::size_t dim = 1 + rng.uniform_index(8);
            const double r = std::pow(10.0, rng.uniform(-3.0, 2.0));
            const auto cfg = make_event_e(m, dim, r, case_id, rng);
            const double md = static_cast<double>(m);

            // far-query gradient norm
            const Point far_q = at_distance(
                cfg.mu, cfg.r * std::pow(10.0, rng.uniform(1.0 + 1e-3, 3.0)), rng);
            const Point far_g = geo_median_gradient(far_q, cfg.candidates);
            if (!(norm(far_g) > 0.3 * md)) ++fail_grad;

            // contraction outside the 10r ball
            const Point q =
                at_distance(cfg.mu, cfg.r * rng.uniform(10.0 + 1e-6, 5000.0), rng);
            const Point g = geo_median_gradient(q, cfg.candidates);
            if (norm(g) <= 0.0) {
                ++fail_contract;
            } else {
                const Point next = line_median_step(q, g, cfg.candidates);
                if (!(point_dist(next, cfg.mu) <=
                      0.7 * point_dist(q, cfg.mu) * (1.0 + 1e-9)))
                    ++fail_contract;
            }

            // steps from inside the ball stay within 11r
            const Point c = at_distance(cfg.mu, cfg.r * rng.uniform(0.0, 10.0), rng);
            const Point cg = geo_median_gradient(c, cfg.candidates);
            Point stepped = c;
            if (norm(cg) >= gradient_stop_threshold(m))
                stepped = line_median_step(c, cg, cfg.candidates);
            if (!(point_dist(stepped, cfg.mu) <= 11.0 * cfg.r * (1.0 + 1e-9)))
                ++fail_ball;

            // initialization radius
            const Point start = coordinate_median(cfg.candidates);
            if (!(point_dist(start, cfg.mu) <= md * cfg.r)) ++fail_init;
        }
    }

    std::size_t fail_winner = 0, fail_recursion = 0;
    for (const std::size_t m : {std::size_t{10}, std::size_t{50}, std::size_t{200}}) {
        for (std::size_t rep = 0; rep < kCases; ++rep, ++case_id) {
            const std::size_t dim = 1 + rng.uniform_index(6);
            const double gammaR = std::pow(10.0, rng.uniform(-2.0, 2.0));

            // winner quality with floor(0.3 m) adversaries
            std::vector<std::size_t> bad_at;
            while (bad_at.size() < 3 * m / 10) {
                const std::size_t idx = rng.uniform_index(m);
                if (std::find(bad_at.begin(), bad_at.end(), idx) == bad_at.end())
                    bad_at.push_back(idx);
            }
            const auto cfg = make_gamma_good(m, dim, gammaR, bad_at, case_id, rng);
            const Point winner = compute_winner(cfg.candidates);
            if (!(point_dist(winner, cfg.mu) <= 5.0 * gammaR * (1.0 + 1e-12)))
                ++fail_winner;

            // recursive quality at depths one and two
            for (const int depth : {1, 2}) {
                const std::size_t bad_count = static_cast<std::size_t>(
                    std::pow(0.3, depth + 1) * static_cast<double>(m));
                std::vector<std::size_t> rec_bad;
                if (rep % 2 == 0) {
                    for (std::size_t i = 0; i < bad_count; ++i)
                        rec_bad.push_back(i);  // concentrated
                } else {
                    while (rec_bad.size() < bad_count) {
                        const std::size_t idx = rng.uniform_index(m);
                        if (std::find(rec_bad.begin(), rec_bad.end(), idx) ==
                            rec_bad.end())
                            rec_bad.push_back(idx);
                    }
                }
                const auto rcfg =
                    make_gamma_good(m, dim, gammaR, rec_bad, case_id, rng);
                const Point o = minsum_select(rcfg.candidates, depth);
                if (!(point_dist(o, rcfg.mu) <=
                      std::pow(5.0, depth + 1) * gammaR * (1.0 + 1e-12)))
                    ++fail_recursion;
            }
        }
    }

    out.detail << " failures: grad=" << fail_grad
               << " contract=" << fail_contract << " ball=" << fail_ball
               << " init=" << fail_init << " winner=" << fail_winner
               << " recursion=" << fail_recursion;
    expect(out, fail_grad == 0, "gradient-norm cases");
    expect(out, fail_contract == 0, "contraction cases");
    expect(out, fail_ball == 0, "11r-ball cases");
    expect(out, fail_init == 0, "initialization cases");
    expect(out, fail_winner == 0, "winner cases");
    expect(out, fail_recursion == 0, "recursion cases");
    return out;
}

Outcome c7_empirical_gap() {
    Outcome out;
    InstanceSpec inst;
    inst.kind = "empirical_mean_lb";
    inst.params = {{"total", 160000}, {"sample_size", 40}, {"eps", 0.05}};
    ExperimentSpec spec;
    spec.instance = inst;
    spec.estimators = {"empirical"};
    spec.config.eps = 0.05;
    spec.config.delta = 0.1;
    spec.config.seed = 915;
    spec.trials = 10'000;
    spec.empirical_samples = 40;
    const double failure =
        1.0 - run_experiment(spec).summaries.front().success_rate;
    out.detail << " failure_rate=" << failure;
    expect(out, failure >= 0.15, "failure floor");
    return out;
}

Outcome c8_scaling_slopes() {
    Outcome out;
    BenchSpec spec;  // {256, 1024, 4096}, d=16, 5 reps
    spec.seed = 916;
    const auto series = run_scaling_bench(spec);
    for (const BenchSeries& s : series) out.detail << ' ' << s.aggregator << '=' << s.slope;
    expect(out, series[0].slope >= 1.8 && series[0].slope <= 2.2,
           "compute_winner window");
    expect(out, series[1].slope >= 1.3 && series[1].slope <= 1.7,
           "minsum depth-1 window");
    expect(out, series[2].slope >= 0.9 && series[2].slope <= 1.3,
           "fastgd window");
    return out;
}

Outcome c9_structural() {
    Outcome out;
    Rng rng(917);

    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t m = 1 + rng.uniform_index(60);
        const std::size_t d = 1 + rng.uniform_index(5);
        const PointSet P = testgen::gaussian_cloud(m, d, rng);

        // depth-0 equivalence and membership
        expect(out, minsum_select(P, 0) == compute_winner(P), "depth-0 equiv");
        for (const int depth : {1, 2}) {
            const Point o = minsum_select(P, depth);
            bool member = false;
            for (std::size_t i = 0; i < m && !member; ++i)
                member = P.row_point(i) == o;
            expect(out, member, "membership");
        }

        // iterates on their lines
        const auto [point, trace] = fastgd(P, 2);
        for (std::size_t j = 1; j < trace.iterates.size(); ++j) {
            const Point g = geo_median_gradient(trace.iterates[j - 1], P);
            const double gnorm = norm(g);
            if (gnorm <= 0.0) {
                expect(out, false, "zero gradient mid-run");
                continue;
            }
            Point step(d);
            for (std::size_t k = 0; k < d; ++k)
                step[k] = trace.iterates[j][k] - trace.iterates[j - 1][k];
            const double along = dot(step, g) / gnorm;
            double off2 = 0.0;
            for (std::size_t k = 0; k < d; ++k) {
                const double resid = step[k] - along * g[k] / gnorm;
                off2 += resid * resid;
            }
            expect(out, std::sqrt(off2) <= 1e-9 * std::max(1.0, norm(step)),
                   "iterate off line");
        }
    }

    // whole-suite determinism under a fixed seed
    ExperimentSpec spec;
    spec.instance = lower_bound_spec();
    spec.estimators = {"fastgd", "minsum", "gmom", "empirical", "coordmed"};
    spec.config.eps = 0.5;
    spec.config.delta = 0.1;
    spec.config.seed = 918;
    spec.trials = 50;
    const ExperimentReport a = run_experiment(spec);
    spec.threads = 4;
    const ExperimentReport b = run_experiment(spec);
    bool identical = a.trials.size() == b.trials.size();
    for (std::size_t i = 0; identical && i < a.trials.size(); ++i) {
        identical = a.trials[i].trial_id == b.trials[i].trial_id &&
                    a.trials[i].estimator == b.trials[i].estimator &&
                    a.trials[i].approx_ratio == b.trials[i].approx_ratio &&
                    a.trials[i].success == b.trials[i].success &&
                    a.trials[i].samples == b.trials[i].samples;
    }
    expect(out, identical, "determinism across schedules");
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double budget_s;  // 0: no stated budget
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"C1 decomposition identity", 5.0, c1_decomposition},
        {"C2 expected squared deviation", 30.0, c2_expected_deviation},
        {"C3 fastgd success rate", 60.0, c3_fastgd_success},
        {"C4 minsum success rate", 60.0, c4_minsum_success},
        {"C5 gmom success rate", 60.0, c5_gmom_success},
        {"C6 deterministic geometry suites", 0.0, c6_geometry_suites},
        {"C7 empirical-mean insufficiency", 0.0, c7_empirical_gap},
        {"C8 complexity slopes", 120.0, c8_scaling_slopes},
        {"C9 structural invariants", 0.0, c9_structural},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const double t0 = now_s();
        Outcome out = c.run();
        const double elapsed = now_s() - t0;
        if (c.budget_s > 0.0 && elapsed >= c.budget_s) {
            out.pass = false;
            out.detail << " [over budget " << c.budget_s << "s]";
        }
        std::printf("[%s] %s (%.2fs)%s\n", out.pass ? "PASS" : "FAIL", c.name,
                    elapsed, out.detail.str().c_str());
        if (!out.pass) ++failures;
    }
    return failures;
}
