#ifndef FRACDIFF_GREEN_HPP
#define FRACDIFF_GREEN_HPP

#include <vector>

namespace fracdiff {

struct QuadratureConfig {
    double k_max = 0.0;    // Fourier truncation; 0 = pick from alpha, beta, t
    int panels = 64;       // minimum panel count before adaptivity
    double abs_tol = 1e-10;

    void validate() const; // throws domain_error
};

struct GreenDiagnostics {
    double tail_estimate = 0.0;   // added analytic tail beyond k_max
    bool slow_decay_warning = false;
};

// Gaussian fundamental solution (1 / (2 sqrt(pi t))) exp(-x^2 / 4t).
double gaussian_green(double x, double t);

// Symmetric Levy stable density L_alpha(x) = (1/pi) int_0^inf cos(kx) e^{-k^alpha} dk.
double levy_pdf(double alpha, double x, const QuadratureConfig& cfg = {});

// CDF by Gil-Pelaez inversion: 1/2 + (1/pi) int_0^inf sin(kx)/k e^{-k^alpha} dk.
double levy_cdf(double alpha, double x, const QuadratureConfig& cfg = {});

// Space-fractional Green function at beta = 1: t^{-1/alpha} L_alpha(x t^{-1/alpha}).
double scaled_green(double alpha, double x, double t, const QuadratureConfig& cfg = {});

// General-beta Green function (1/pi) int_0^inf cos(kx) E_beta(-k^alpha t^beta) dk.
// For beta < 1 the integrand decays only algebraically; the truncated tail is
// estimated from the Mittag-Leffler asymptotics and added, with a warning in
// diag when the estimate exceeds abs_tol.
double green_pdf(double alpha, double beta, double x, double t, const QuadratureConfig& cfg = {},
                 GreenDiagnostics* diag = nullptr);

// u(x_i, t) = h sum_j G(x_i - x_j, t) phi0_j (trapezoid-in-cells convolution
// on a uniform grid of spacing h). coarse_warning is set when h > t^{1/alpha},
// i.e. the kernel is narrower than the grid.
std::vector<double> convolve_initial(double alpha, double t, const std::vector<double>& phi0,
                                     double h, const QuadratureConfig& cfg = {},
                                     bool* coarse_warning = nullptr);

// Tabulated CDF of the symmetric stable law with unit scale, for fast repeated
// evaluation (KS tests). Power-law tails are attached analytically beyond the
// table, anchored to the quadrature CDF at the cut.
class LevyCdfTable {
public:
    LevyCdfTable(double alpha, double cut = 30.0, int points_per_unit = 40,
                 const QuadratureConfig& cfg = {});
    double operator()(double x) const;
    double alpha() const { return alpha_; }

private:
    double alpha_;
    double cut_;
    double step_;
    std::vector<double> values_; // F on the uniform grid [-cut, cut]
    double tail_coeff_;          // 1 - F(cut) = tail_coeff * cut^-alpha at the cut
};

} // namespace fracdiff

#endif
