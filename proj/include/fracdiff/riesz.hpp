#ifndef FRACDIFF_RIESZ_HPP
#define FRACDIFF_RIESZ_HPP

#include <functional>
#include <vector>

namespace fracdiff {

// Uniform space-time lattice on [a, b] x [0, T]. The cell count must be even
// so the midpoint index M/2 is integral; x_M and x_0 are treated as adjacent
// (the domain closes into a circle).
struct GridSpec {
    double a = -3.0;
    double b = 3.0;
    int cells = 300;      // M
    int steps = 199;      // N
    double final_time = 0.005;

    double h() const { return (b - a) / cells; }
    double tau() const { return final_time / steps; }
    double x(int i) const { return a + i * h(); }
    int mid() const { return cells / 2; }

    void validate() const; // throws domain_error
};

// Grunwald weights and the circulant update row of the explicit scheme
// U_i^{n+1} = <w, P_{i,M} U^n>.
struct SchemeKernel {
    double alpha = 2.0;
    double c_alpha = -0.5;      // 1 / (2 cos(alpha pi / 2))
    double r = 0.0;             // D tau c_alpha / h^alpha
    std::vector<double> g;      // g_0 .. g_{M/2+1}
    std::vector<double> w;      // w_0 .. w_{M/2+1}
    std::vector<double> stencil; // length M+1, symmetric about index M/2

    int cells() const { return (int)stencil.size() - 1; }
};

struct DensityField {
    std::vector<double> values; // length M+1
    GridSpec grid;
    int step_index = 0;
};

// g_0 = 1, g_j = g_{j-1} (j - 1 - alpha) / j; equals
// (-1)^j Gamma(alpha+1) / (Gamma(alpha-j+1) Gamma(j+1)) without touching Gamma.
std::vector<double> grunwald_coefficients(double alpha, int count);

// w_0 = (alpha/2) g_0, w_j = (alpha/2) g_j + ((2-alpha)/2) g_{j-1}
// (shifted-operator weights with p = 1, q = 0).
std::vector<double> scheme_weights(double alpha, int count);

// Builds the length-(M+1) circulant row by accumulating both one-sided sums
// of the scheme at the midpoint. alpha in (1, 2]; alpha = 2 reproduces the
// classical three-point heat stencil.
SchemeKernel build_kernel(double alpha, const GridSpec& grid, double diffusion);

// Index map placing grid index i at the midpoint: perm[j] = (j + i - M/2) mod (M+1).
std::vector<int> permutation_indices(int i, int cells);

// One explicit step by direct permuted dot products, and the equivalent
// circular cross-correlation through the DFT.
DensityField step(const DensityField& field, const SchemeKernel& kernel);
DensityField step_fft(const DensityField& field, const SchemeKernel& kernel);

// Iterates from U^0_i = phi0(x_i); snapshot times round to the nearest step.
// Aborts with instability_error when max|U| exceeds 1e6 x the initial max.
std::vector<DensityField> solve(const GridSpec& grid, double alpha, double diffusion,
                                const std::function<double(double)>& phi0,
                                const std::vector<double>& snapshot_times);

// h * sum U_i (rectangle rule); trapezoid weights on request.
double total_mass(const DensityField& field, bool trapezoid = false);

// Magnitudes of the M+1 circulant eigenvalues (DFT of the update row).
std::vector<double> amplification_spectrum(const SchemeKernel& kernel);
double growth_factor(const SchemeKernel& kernel); // max magnitude

} // namespace fracdiff

#endif
