#ifndef FRACDIFF_MITTAG_LEFFLER_HPP
#define FRACDIFF_MITTAG_LEFFLER_HPP

namespace fracdiff {

struct MLEvalConfig {
    double series_cutoff = 5.0; // |z| threshold for pure Taylor summation
    int max_terms = 2000;
    double tolerance = 1e-17; // term-magnitude stopping rule

    void validate() const; // throws domain_error
};

// E_beta(z) = sum z^n / Gamma(beta n + 1), beta in (0, 2].
//
// Taylor summation in extended precision up to min(series_cutoff, 25^beta);
// the beta-dependent cap keeps the alternating-series cancellation below
// ~10^11 so long double retains ~8 digits. Below that cap on the negative
// axis the standard algebraic expansion sum (-1)^(k+1) x^-k / Gamma(1-beta k)
// takes over, truncated at its smallest term. E_1 = exp is used directly:
// the algebraic expansion is identically zero at beta = 1.
double ml(double beta, double z, const MLEvalConfig& cfg = {});

// n-th derivative: sum_m (m+n)!/m! z^m / Gamma(beta (m+n) + 1).
double ml_derivative(double beta, int n, double z, const MLEvalConfig& cfg = {});

// CTRW jump-count law P(n, t) = t^(beta n)/n! * E_beta^(n)(-t^beta) for
// beta in (0, 1]; the Poisson law at beta = 1. Summed in log space so the
// factorial and power factors never overflow separately.
double jump_count_pmf(double beta, double t, int n, const MLEvalConfig& cfg = {});

} // namespace fracdiff

#endif
