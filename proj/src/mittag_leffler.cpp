#include "fracdiff/mittag_leffler.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "fracdiff/errors.hpp"

namespace fracdiff {

namespace {

constexpr long double kPiL = 3.141592653589793238462643383279503L;

// sin(pi x) with argument reduction so large x stays accurate.
long double sinpi(long double x) {
    long double n = std::floor(x);
    long double r = x - n; // [0, 1)
    long double s = (r <= 0.5L) ? std::sin(kPiL * r) : std::sin(kPiL * (1.0L - r));
    long double parity = (std::fmod(n, 2.0L) == 0.0L) ? 1.0L : -1.0L;
    return parity * s;
}

// 1 / Gamma(1 - y) for y > 0 via reflection: Gamma(y) sin(pi y) / pi.
// Exactly zero when y is a positive integer (the Gamma pole).
long double inv_gamma_one_minus(long double y) {
    long double sp = sinpi(y);
    if (sp == 0.0L) return 0.0L;
    long double lg = std::lgamma(y);
    if (lg > 11300.0L) return 0.0L; // Gamma overflow: term is astronomically small anyway
    return std::exp(lg) * sp / kPiL;
}

// lgamma(beta n + 1) is re-read across thousands of series evaluations with
// the same beta (quadrature of Mittag-Leffler integrands), so memoize per beta.
thread_local double g_cache_beta = -1.0;
thread_local std::vector<long double> g_cache_lg;

long double lgamma_beta_n(double beta, int n) {
    if (g_cache_beta != beta) {
        g_cache_beta = beta;
        g_cache_lg.clear();
    }
    while ((int)g_cache_lg.size() <= n)
        g_cache_lg.push_back(
            std::lgamma((long double)beta * (long double)g_cache_lg.size() + 1.0L));
    return g_cache_lg[n];
}

// log n! with the same treatment
thread_local std::vector<long double> g_cache_lfact{0.0L};

long double log_factorial(int n) {
    while ((int)g_cache_lfact.size() <= n)
        g_cache_lfact.push_back(g_cache_lfact.back() +
                                std::log((long double)g_cache_lfact.size()));
    return g_cache_lfact[n];
}

// Algebraic expansion of E_beta(-x) for large x. The term magnitudes wobble
// near the Gamma poles before the factorial divergence sets in, so optimal
// truncation tracks the running minimum and returns the partial sum frozen
// there once the terms clearly grow again.
double ml_asymptotic_negative(double beta, double x, const MLEvalConfig& cfg) {
    long double sum = 0.0L;
    long double min_mag = HUGE_VALL;
    long double sum_at_min = 0.0L;
    long double lx = std::log((long double)x);
    int k_cap = std::min(cfg.max_terms, (int)(11000.0 / beta));
    for (int k = 1; k <= k_cap; ++k) {
        long double ig = inv_gamma_one_minus((long double)beta * k);
        if (ig == 0.0L) continue;
        long double mag = std::exp(-k * lx) * std::fabs(ig);
        if (mag > 100.0L * min_mag) break; // factorial divergence
        sum += ((k % 2) ? 1.0L : -1.0L) * std::exp(-k * lx) * ig;
        if (mag <= min_mag) {
            min_mag = mag;
            sum_at_min = sum;
        }
        if (mag < (long double)cfg.tolerance * std::fabs(sum)) return (double)sum;
    }
    return (double)sum_at_min;
}

double ml_taylor(double beta, double z, const MLEvalConfig& cfg) {
    long double sum = 1.0L; // n = 0 term
    long double lz = std::log(std::fabs((long double)z));
    long double sign = (z >= 0.0) ? 1.0L : -1.0L;
    long double prev_mag = HUGE_VALL;
    bool decaying = false;
    for (int n = 1; n <= cfg.max_terms; ++n) {
        long double mag = std::exp(n * lz - lgamma_beta_n(beta, n));
        long double term = ((n % 2) ? sign : 1.0L) * mag;
        sum += term;
        if (mag < prev_mag) decaying = true;
        if (decaying && mag <= (long double)cfg.tolerance * (1.0L + std::fabs(sum)))
            return (double)sum;
        prev_mag = mag;
    }
    throw eval_error("ml: Taylor series did not converge within max_terms", (double)sum);
}

} // namespace

void MLEvalConfig::validate() const {
    if (!(series_cutoff > 0.0)) throw domain_error("ml config: series_cutoff must be positive");
    if (!(tolerance > 0.0)) throw domain_error("ml config: tolerance must be positive");
    if (max_terms < 10) throw domain_error("ml config: max_terms must be >= 10");
}

double ml(double beta, double z, const MLEvalConfig& cfg) {
    cfg.validate();
    if (!(beta > 0.0)) throw domain_error("ml: beta must be positive");
    if (!(beta <= 2.0)) throw domain_error("ml: beta must lie in (0, 2]");
    if (!std::isfinite(z)) throw domain_error("ml: z must be finite");
    if (z == 0.0) return 1.0;
    if (beta == 1.0) return std::exp(z); // E_1 collapses to the exponential
    double cap = std::min(cfg.series_cutoff, std::pow(25.0, beta));
    if (z > 0.0 || -z <= cap) return ml_taylor(beta, z, cfg);
    return ml_asymptotic_negative(beta, -z, cfg);
}

double ml_derivative(double beta, int n, double z, const MLEvalConfig& cfg) {
    cfg.validate();
    if (!(beta > 0.0)) throw domain_error("ml_derivative: beta must be positive");
    if (!(beta <= 2.0)) throw domain_error("ml_derivative: beta must lie in (0, 2]");
    if (n < 0) throw domain_error("ml_derivative: order must be >= 0");
    if (!std::isfinite(z)) throw domain_error("ml_derivative: z must be finite");
    if (n == 0) return ml(beta, z, cfg);
    if (z == 0.0) {
        // only the m = 0 term survives: n! / Gamma(beta n + 1)
        return (double)std::exp(std::lgamma((long double)n + 1.0L) -
                                 std::lgamma((long double)beta * n + 1.0L));
    }

    // sum_m (m+n)!/m! z^m / Gamma(beta (m+n) + 1), per-term in log space
    long double lz = std::log(std::fabs((long double)z));
    long double sign = (z >= 0.0) ? 1.0L : -1.0L;
    long double sum = 0.0L;
    long double prev_mag = HUGE_VALL;
    bool decaying = false;
    for (int m = 0; m <= cfg.max_terms; ++m) {
        long double lmag = log_factorial(m + n) - log_factorial(m) -
                           lgamma_beta_n(beta, m + n) + m * lz;
        long double mag = std::exp(lmag);
        long double term = ((m % 2) ? sign : 1.0L) * mag;
        sum += term;
        if (mag < prev_mag) decaying = true;
        if (decaying && mag <= (long double)cfg.tolerance * (1.0L + std::fabs(sum)))
            return (double)sum;
        prev_mag = mag;
    }
    throw eval_error("ml_derivative: series did not converge within max_terms", (double)sum);
}

double jump_count_pmf(double beta, double t, int n, const MLEvalConfig& cfg) {
    cfg.validate();
    if (!(beta > 0.0) || !(beta <= 1.0))
        throw domain_error("jump_count_pmf: beta must lie in (0, 1]");
    if (!(t >= 0.0)) throw domain_error("jump_count_pmf: t must be non-negative");
    if (n < 0) throw domain_error("jump_count_pmf: n must be >= 0");
    if (t == 0.0) return (n == 0) ? 1.0 : 0.0;

    // P(n,t) = sum_m (-1)^m C(m+n, n) t^(beta (m+n)) / Gamma(beta (m+n) + 1),
    // identical to t^(beta n)/n! E^(n)(-t^beta) with the prefactor folded in.
    long double lt = std::log((long double)t);
    long double lgn = log_factorial(n);
    long double sum = 0.0L;
    long double prev_mag = HUGE_VALL;
    bool decaying = false;
    for (int m = 0; m <= cfg.max_terms; ++m) {
        long double lmag = log_factorial(m + n) - log_factorial(m) - lgn +
                           (long double)beta * (m + n) * lt - lgamma_beta_n(beta, m + n);
        long double mag = std::exp(lmag);
        sum += ((m % 2) ? -1.0L : 1.0L) * mag;
        if (mag < prev_mag) decaying = true;
        if (decaying && mag <= (long double)cfg.tolerance * (1.0L + std::fabs(sum)))
            return (double)sum;
        prev_mag = mag;
    }
    throw eval_error("jump_count_pmf: series did not converge within max_terms", (double)sum);
}

} // namespace fracdiff
