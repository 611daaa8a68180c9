// Acceptance suite: one numbered check per line, each with its pinned
// tolerance. Exits nonzero when anything fails. Individual criteria can be
// selected by passing their numbers as arguments.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fracdiff/agents.hpp"
#include "fracdiff/green.hpp"
#include "fracdiff/mittag_leffler.hpp"
#include "fracdiff/riesz.hpp"
#include "fracdiff/stable.hpp"
#include "fracdiff/stats.hpp"

using namespace fracdiff;

namespace {

constexpr double kPi = 3.14159265358979323846;

int g_failures = 0;
bool g_criterion_ok[12] = {true, true, true, true, true, true,
                           true, true, true, true, true, true};
bool g_criterion_ran[12] = {};

void report(int criterion, bool ok, const std::string& what) {
    std::printf("%s [%2d] %s\n", ok ? "pass" : "FAIL", criterion, what.c_str());
    std::fflush(stdout);
    g_criterion_ran[criterion] = true;
    if (!ok) {
        ++g_failures;
        g_criterion_ok[criterion] = false;
    }
}

double elapsed_s(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

GridSpec baseline_grid() { return GridSpec{-3.0, 3.0, 300, 199, 0.005}; }

double gaussian_bump(double x) { return std::exp(-x * x / (2.0 * 0.2 * 0.2)); }

double normal_cdf(double x, double var) { return 0.5 * std::erfc(-x / std::sqrt(2.0 * var)); }
double cauchy_cdf(double x) { return 0.5 + std::atan(x) / kPi; }

// --- 1: exact alpha = 2 reduction --------------------------------------------

void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    GridSpec grid = baseline_grid();
    const double diffusion = 0.02;
    auto kernel = build_kernel(2.0, grid, diffusion);
    double s = diffusion * grid.tau() / (grid.h() * grid.h());
    double worst_entry = 0.0;
    for (int i = 0; i <= grid.cells; ++i) {
        double expect = 0.0;
        if (i == grid.mid()) expect = 1.0 - 2.0 * s;
        else if (std::abs(i - grid.mid()) == 1) expect = s;
        worst_entry = std::max(worst_entry, std::abs(kernel.stencil[i] - expect));
    }
    report(1, worst_entry <= 1e-14,
           "alpha=2 kernel equals the classical heat stencil (max dev " +
               std::to_string(worst_entry) + ")");

    auto snaps = solve(grid, 2.0, diffusion, gaussian_bump, {grid.final_time});
    const auto& last = snaps.back().values;
    double sigma2 = 0.2 * 0.2 + 2.0 * diffusion * grid.final_time;
    double linf = 0.0;
    for (int i = 0; i <= grid.cells; ++i) {
        double x = grid.x(i);
        double exact = 0.0;
        for (int j = -2; j <= 2; ++j) {
            double y = x + j * (grid.b - grid.a);
            exact += 0.2 / std::sqrt(sigma2) * std::exp(-y * y / (2.0 * sigma2));
        }
        linf = std::max(linf, std::abs(last[i] - exact));
    }
    report(1, linf <= 1e-3,
           "alpha=2 baseline run matches the wrapped Gaussian (Linf " + std::to_string(linf) +
               ")");
    double dt = elapsed_s(t0);
    report(1, dt < 5.0, "runtime " + std::to_string(dt) + " s < 5 s");
}

// --- 2: Grunwald identities ---------------------------------------------------

double grunwald_gamma_oracle(double alpha, int j) {
    double arg = alpha - j + 1.0;
    double lg_den;
    int sign_den = 1;
    if (arg > 0.0) {
        lg_den = std::lgamma(arg);
    } else {
        double sp = std::sin(kPi * arg);
        sign_den = (sp < 0.0) ? -1 : 1;
        lg_den = std::log(kPi / std::abs(sp)) - std::lgamma(1.0 - arg);
    }
    double mag = std::exp(std::lgamma(alpha + 1.0) - lg_den - std::lgamma(j + 1.0));
    return ((j % 2) ? -1.0 : 1.0) * sign_den * mag;
}

void criterion_2() {
    bool ok_g1 = true, ok_gamma = true, ok_partial = true;
    for (double alpha : {1.2, 1.5, 1.8}) {
        auto g = grunwald_coefficients(alpha, 200);
        if (g[1] != -alpha) ok_g1 = false;
        for (int j = 0; j <= 50; ++j) {
            double oracle = grunwald_gamma_oracle(alpha, j);
            double rel = std::abs(g[j] - oracle) / std::max(std::abs(oracle), 1e-300);
            if (rel > 1e-10) ok_gamma = false;
        }
        double sum = g[0] + g[1] + g[2];
        double prev = std::abs(sum);
        for (int j = 3; j <= 200; ++j) {
            sum += g[j];
            if (std::abs(sum) > prev + 1e-18) ok_partial = false;
            prev = std::abs(sum);
        }
    }
    auto g2 = grunwald_coefficients(2.0, 8);
    bool ok_binom = g2[0] == 1.0 && g2[1] == -2.0 && g2[2] == 1.0;
    for (int j = 3; j <= 8; ++j) ok_binom = ok_binom && g2[j] == 0.0;

    report(2, ok_g1, "g_1 = -alpha exactly");
    report(2, ok_binom, "alpha=2 row is [1,-2,1,0,...]");
    report(2, ok_gamma, "recurrence vs Gamma formula, rel 1e-10, j <= 50");
    report(2, ok_partial, "partial sums |sum g_j| decreasing for J >= 2");
}

// --- 3: circulant equivalence -------------------------------------------------

void criterion_3() {
    std::mt19937 rng(2718);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    double worst = 0.0;
    for (int m : {16, 64, 300}) {
        GridSpec grid{-3.0, 3.0, m, 10, 0.0001};
        auto kernel = build_kernel(1.5, grid, 1.0);
        DensityField f;
        f.grid = grid;
        f.values.resize(m + 1);
        for (auto& v : f.values) v = unif(rng);
        auto a = step(f, kernel);
        auto b = step_fft(f, kernel);
        for (int i = 0; i <= m; ++i) worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
    }
    report(3, worst <= 1e-10,
           "direct and DFT stepping agree, M in {16,64,300} (max dev " + std::to_string(worst) +
               ")");

    GridSpec grid{-3.0, 3.0, 60, 10, 0.0001};
    auto kernel = build_kernel(1.5, grid, 1.0);
    DensityField f;
    f.grid = grid;
    f.values.resize(61);
    for (int i = 0; i <= 60; ++i) f.values[i] = gaussian_bump(grid.x(i)) + 0.1 * unif(rng);
    const int n = 61, shift = 17;
    DensityField shifted;
    shifted.grid = grid;
    shifted.values.resize(n);
    for (int i = 0; i < n; ++i) shifted.values[i] = f.values[(i + shift) % n];
    auto a = step(shifted, kernel);
    auto b = step(f, kernel);
    double worst_shift = 0.0;
    for (int i = 0; i < n; ++i)
        worst_shift = std::max(worst_shift, std::abs(a.values[i] - b.values[(i + shift) % n]));
    report(3, worst_shift <= 1e-12,
           "translation equivariance (max dev " + std::to_string(worst_shift) + ")");
}

// --- 4: stability diagnostic ---------------------------------------------------

void criterion_4() {
    GridSpec grid = baseline_grid();
    double g_reg = growth_factor(build_kernel(1.99, grid, 0.02));
    double g_frac = growth_factor(build_kernel(1.5, grid, 1.0));
    report(4, g_reg <= 1.0 + 1e-12,
           "alpha=1.99, D=0.02 growth factor " + std::to_string(g_reg) + " <= 1");
    report(4, g_frac <= 1.0 + 1e-12,
           "alpha=1.5, D=1 growth factor " + std::to_string(g_frac) + " <= 1");
    // measured on the first green build; pinned as regression values
    report(4, std::abs(g_reg - 0.99999999944157514) <= 1e-9,
           "alpha=1.99 growth factor matches its pinned value 0.99999999944157514");
    report(4, std::abs(g_frac - 0.99999808051149586) <= 1e-9,
           "alpha=1.5 growth factor matches its pinned value 0.99999808051149586");
}

// --- 5: stable sampler ----------------------------------------------------------

void criterion_5() {
    auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = 100000;
    double worst_cf = 0.0;
    for (double alpha : {1.0, 1.5, 2.0}) {
        StableParams p{alpha, 0.0, 1.0, 0.0};
        RandomStream rng(20240 + (int)(10 * alpha), 0);
        auto xs = sample_stable(p, rng, n);
        for (int i = 1; i <= 20; ++i) {
            double t = 0.15 * i;
            auto diff = empirical_cf(std::span<const double>(xs), t) -
                        characteristic_function(p, t);
            worst_cf = std::max(worst_cf, std::abs(diff));
        }
    }
    report(5, worst_cf <= 0.02,
           "empirical CF within 0.02 of the stable CF over 20 probes (worst " +
               std::to_string(worst_cf) + ")");

    RandomStream g_rng(31337, 0);
    auto gs = sample_stable({2.0, 0.0, 1.0, 0.0}, g_rng, n);
    double ks_gauss = ks_statistic(gs, [](double x) { return normal_cdf(x, 2.0); });
    report(5, ks_gauss <= 0.01,
           "alpha=2 sample vs Normal(0,2): KS " + std::to_string(ks_gauss));

    EllipticalParams cauchy_law{1.0, 1.0, 0.0, 1.0, 0.0, 0.0};
    RandomStream c_rng(424242, 0);
    auto zs = sample_subgaussian_2d(cauchy_law, c_rng, n);
    std::vector<double> xs(zs.size());
    for (std::size_t i = 0; i < zs.size(); ++i) xs[i] = zs[i].x;
    double ks_cauchy = ks_statistic(xs, cauchy_cdf);
    report(5, ks_cauchy <= 0.01,
           "alpha=1 subgaussian marginal vs Cauchy: KS " + std::to_string(ks_cauchy));
    double dt = elapsed_s(t0);
    report(5, dt < 10.0, "runtime " + std::to_string(dt) + " s < 10 s");
}

// --- 6: oracle closed forms -----------------------------------------------------

void criterion_6() {
    double worst0 = 0.0;
    for (double alpha : {1.0, 1.25, 1.5, 1.75, 2.0}) {
        double target = std::tgamma(1.0 + 1.0 / alpha) / kPi;
        worst0 = std::max(worst0, std::abs(levy_pdf(alpha, 0.0) - target));
    }
    report(6, worst0 <= 1e-8,
           "levy_pdf(alpha, 0) vs Gamma(1+1/alpha)/pi (worst " + std::to_string(worst0) + ")");

    double worst_cauchy = 0.0;
    for (double x = -10.0; x <= 10.0; x += 0.5)
        worst_cauchy =
            std::max(worst_cauchy, std::abs(levy_pdf(1.0, x) - 1.0 / (kPi * (1.0 + x * x))));
    report(6, worst_cauchy <= 1e-8,
           "alpha=1 pdf vs Cauchy on [-10,10] (worst " + std::to_string(worst_cauchy) + ")");

    double worst_mass = 0.0;
    for (double alpha : {1.0, 1.5, 2.0}) {
        const double cut = 40.0;
        const int n = 1600;
        const double h = cut / n;
        double mass = levy_pdf(alpha, 0.0) + levy_pdf(alpha, cut);
        for (int i = 1; i < n; ++i) mass += levy_pdf(alpha, i * h) * ((i % 2) ? 4.0 : 2.0);
        mass *= 2.0 * h / 3.0;
        double c = std::tgamma(1.0 + alpha) * std::sin(kPi * alpha / 2.0) / kPi;
        mass += 2.0 * c / alpha * std::pow(cut, -alpha); // analytic tail beyond the cut
        worst_mass = std::max(worst_mass, std::abs(mass - 1.0));
    }
    report(6, worst_mass <= 1e-4,
           "normalization with analytic tail (worst " + std::to_string(worst_mass) + ")");

    double worst_green = 0.0;
    for (double alpha : {1.2, 1.5, 2.0})
        for (double x : {0.0, 0.7, 2.0})
            worst_green = std::max(
                worst_green, std::abs(green_pdf(alpha, 1.0, x, 0.6) - scaled_green(alpha, x, 0.6)));
    report(6, worst_green <= 1e-6,
           "green_pdf at beta=1 vs scaled_green (worst " + std::to_string(worst_green) + ")");
}

// --- 7: Mittag-Leffler -----------------------------------------------------------

void criterion_7() {
    double worst_exp = 0.0;
    for (double x = -5.0; x <= 5.0; x += 0.1)
        worst_exp = std::max(worst_exp, std::abs(ml(1.0, x) - std::exp(x)));
    report(7, worst_exp <= 1e-10, "ml(1, x) vs e^x on [-5, 5] (worst " + std::to_string(worst_exp) + ")");

    bool ok_one = true;
    for (double beta : {0.2, 0.5, 0.8, 1.0, 1.5, 2.0})
        if (ml(beta, 0.0) != 1.0) ok_one = false;
    report(7, ok_one, "ml(beta, 0) = 1 exactly");

    double worst_poisson = 0.0;
    for (double t : {0.5, 1.5, 3.0}) {
        for (int n = 0; n <= 25; ++n) {
            double poisson = std::exp(-t + n * std::log(t) - std::lgamma(n + 1.0));
            worst_poisson = std::max(worst_poisson,
                                     std::abs(jump_count_pmf(1.0, t, n) - poisson));
        }
    }
    report(7, worst_poisson <= 1e-10,
           "jump-count law at beta=1 vs Poisson (worst " + std::to_string(worst_poisson) + ")");

    double worst_norm = 0.0;
    for (double beta : {0.5, 0.8, 1.0}) {
        for (double t : {1.0, 2.0, 3.0}) {
            double total = 0.0;
            for (int n = 0; n <= 400; ++n) {
                double p = jump_count_pmf(beta, t, n);
                total += p;
                if (n > 5 && p < 1e-12) break;
            }
            worst_norm = std::max(worst_norm, std::abs(total - 1.0));
        }
    }
    report(7, worst_norm <= 1e-6,
           "sum_n P(n, t) = 1 for t <= 3 (worst " + std::to_string(worst_norm) + ")");
}

// --- 8: micro-macro consistency ----------------------------------------------------

void criterion_8() {
    auto t0 = std::chrono::steady_clock::now();
    AgentConfig cfg;
    cfg.alpha = 1.5;
    cfg.dt = 1e-3;
    cfg.final_time = 1.0;
    cfg.count = 100000;
    cfg.seed = 777;
    cfg.snapshot_times = {1.0};
    auto snaps = run_ensemble(cfg);
    std::vector<double> xs(cfg.count);
    for (std::size_t i = 0; i < cfg.count; ++i) xs[i] = snaps.back().positions[i].x;

    LevyCdfTable cdf(1.5, 25.0, 20);
    double ks = ks_statistic(xs, [&cdf](double x) { return cdf(x); });
    report(8, ks <= 0.02,
           "alpha=1.5 ensemble x-marginal vs scaled_green(1.5, ., 1): KS " + std::to_string(ks));
    double dt = elapsed_s(t0);
    report(8, dt < 60.0, "runtime " + std::to_string(dt) + " s < 60 s");
}

// --- 9: CTRW diffusive limit ---------------------------------------------------------

void criterion_9() {
    const double rate = 1.0, horizon = 1000.0, alpha = 1.5;
    const std::size_t count = 10000;
    auto xs = ctrw_simulate(rate, alpha, 1.0, horizon, count, 4242);
    double rescale = std::pow(rate * horizon, -1.0 / alpha);
    for (double& x : xs) x *= rescale;
    LevyCdfTable cdf(alpha, 25.0, 20);
    double ks = ks_statistic(xs, [&cdf](double x) { return cdf(x); });
    report(9, ks <= 0.05,
           "rescaled CTRW positions vs levy_pdf(1.5): KS " + std::to_string(ks));
}

// --- 10: qualitative reproduction of the figure comparisons --------------------------

void criterion_10() {
    GridSpec grid = baseline_grid();
    auto frac = solve(grid, 1.5, 1.0, gaussian_bump, {grid.final_time}).back();
    auto reg = solve(grid, 1.99, 0.02, gaussian_bump, {grid.final_time}).back();
    double tail_frac = 0.0, tail_reg = 0.0;
    for (int i = 0; i <= grid.cells; ++i) {
        if (std::abs(grid.x(i)) > 1.5) {
            tail_frac += frac.values[i] * grid.h();
            tail_reg += reg.values[i] * grid.h();
        }
    }
    report(10, tail_frac > tail_reg,
           "macro tail mass beyond |x| > 1.5: alpha=1.5 " + std::to_string(tail_frac) +
               " > alpha=1.99 " + std::to_string(tail_reg));
    double peak_frac = *std::max_element(frac.values.begin(), frac.values.end());
    double peak_reg = *std::max_element(reg.values.begin(), reg.values.end());
    report(10, peak_frac < peak_reg,
           "macro peak: alpha=1.5 " + std::to_string(peak_frac) + " < alpha=1.99 " +
               std::to_string(peak_reg));

    AgentConfig fcfg;
    fcfg.alpha = 1.5;
    fcfg.dt = 1e-8;
    fcfg.final_time = 1e-4;
    fcfg.count = 100;
    fcfg.snapshot_times = {1e-4};
    AgentConfig rcfg = fcfg;
    rcfg.alpha = 2.0;
    rcfg.q11 = rcfg.q22 = 0.02;
    int frac_wins = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        fcfg.seed = seed;
        rcfg.seed = seed + 10000;
        auto pf = run_ensemble(fcfg).back().positions;
        auto pr = run_ensemble(rcfg).back().positions;
        auto count_outliers = [](const std::vector<Vec2>& ps) {
            std::vector<double> x(ps.size()), y(ps.size());
            for (std::size_t i = 0; i < ps.size(); ++i) {
                x[i] = ps[i].x;
                y[i] = ps[i].y;
            }
            return boxplot_stats(x).outlier_count + boxplot_stats(y).outlier_count;
        };
        if (count_outliers(pf) > count_outliers(pr)) ++frac_wins;
    }
    report(10, frac_wins > 10,
           "agent Tukey outliers, alpha=1.5 > alpha=2 in " + std::to_string(frac_wins) +
               "/20 seeds (majority required)");
}

// --- 11: mass behavior -----------------------------------------------------------------

void criterion_11() {
    auto run = [](const GridSpec& g) {
        auto snaps = solve(g, 1.5, 1.0, gaussian_bump, {g.final_time});
        double m0 = total_mass(snaps.front());
        double m1 = total_mass(snaps.back());
        return std::abs((m1 - m0) / m0);
    };
    double loss_small = run(baseline_grid());
    double loss_large = run(GridSpec{-6.0, 6.0, 600, 199, 0.005});
    report(11, loss_large <= loss_small,
           "relative mass change: (-6,6) " + std::to_string(loss_large) + " <= (-3,3) " +
               std::to_string(loss_small));
    report(11, loss_small > 0.0,
           "dissipation exists on the baseline grid (change " + std::to_string(loss_small) +
               "), exact conservation not claimed");
}

} // namespace

int main(int argc, char** argv) {
    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
    auto want = [&wanted](int n) { return wanted.empty() || wanted.count(n) > 0; };

    if (want(1)) criterion_1();
    if (want(2)) criterion_2();
    if (want(3)) criterion_3();
    if (want(4)) criterion_4();
    if (want(5)) criterion_5();
    if (want(6)) criterion_6();
    if (want(7)) criterion_7();
    if (want(8)) criterion_8();
    if (want(9)) criterion_9();
    if (want(10)) criterion_10();
    if (want(11)) criterion_11();

    std::printf("----\n");
    for (int c = 1; c <= 11; ++c)
        if (g_criterion_ran[c])
            std::printf("%s criterion %d\n", g_criterion_ok[c] ? "PASS" : "FAIL", c);
    if (g_failures > 0) {
        std::printf("acceptance: %d check(s) failed\n", g_failures);
        return 1;
    }
    std::printf("acceptance: all criteria passed\n");
    return 0;
}
