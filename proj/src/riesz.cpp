#include "fracdiff/riesz.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "fracdiff/errors.hpp"
#include "fracdiff/fft.hpp"

namespace fracdiff {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_scheme_alpha(double alpha) {
    if (!(alpha > 1.0) || !(alpha <= 2.0))
        throw domain_error("riesz: alpha must lie in (1, 2]");
}

} // namespace

void GridSpec::validate() const {
    if (!(b > a)) throw domain_error("grid: b must exceed a");
    if (cells <= 0 || cells % 2 != 0) throw domain_error("grid: cell count must be positive and even");
    if (steps <= 0) throw domain_error("grid: step count must be positive");
    if (!(final_time > 0.0)) throw domain_error("grid: final time must be positive");
}

std::vector<double> grunwald_coefficients(double alpha, int count) {
    check_scheme_alpha(alpha);
    if (count < 0) throw domain_error("grunwald: count must be >= 0");
    std::vector<double> g(count + 1);
    g[0] = 1.0;
    for (int j = 1; j <= count; ++j) g[j] = g[j - 1] * ((double)j - 1.0 - alpha) / (double)j;
    return g;
}

std::vector<double> scheme_weights(double alpha, int count) {
    check_scheme_alpha(alpha);
    if (count < 1) throw domain_error("scheme_weights: count must be >= 1");
    std::vector<double> g = grunwald_coefficients(alpha, count);
    std::vector<double> w(count + 1);
    w[0] = 0.5 * alpha * g[0];
    for (int j = 1; j <= count; ++j)
        w[j] = 0.5 * alpha * g[j] + 0.5 * (2.0 - alpha) * g[j - 1];
    return w;
}

SchemeKernel build_kernel(double alpha, const GridSpec& grid, double diffusion) {
    check_scheme_alpha(alpha);
    grid.validate();
    if (!(diffusion > 0.0)) throw domain_error("build_kernel: diffusion must be positive");

    const int m = grid.cells;
    const int m2 = grid.mid();
    SchemeKernel k;
    k.alpha = alpha;
    k.c_alpha = 1.0 / (2.0 * std::cos(alpha * kPi / 2.0));
    k.r = diffusion * grid.tau() * k.c_alpha / std::pow(grid.h(), alpha);
    k.g = grunwald_coefficients(alpha, m2 + 1);
    k.w = scheme_weights(alpha, m2 + 1);

    // Accumulate both sums of the midpoint update: the left sum contributes
    // w_{1-d} to the coefficient of U_{M2+d} (d <= 1), the right sum w_{d+1}
    // (d >= -1); identity adds 1 at d = 0.
    k.stencil.assign(m + 1, 0.0);
    for (int d = -m2; d <= m2; ++d) {
        double coeff = 0.0;
        if (d <= 1) coeff += k.w[1 - d];
        if (d >= -1) coeff += k.w[d + 1];
        k.stencil[m2 + d] = ((d == 0) ? 1.0 : 0.0) - k.r * coeff;
    }
    return k;
}

std::vector<int> permutation_indices(int i, int cells) {
    if (cells <= 0 || cells % 2 != 0) throw domain_error("permutation: cell count must be positive and even");
    if (i < 0 || i > cells) throw domain_error("permutation: index out of range");
    const int n = cells + 1;
    const int m2 = cells / 2;
    std::vector<int> perm(n);
    for (int j = 0; j < n; ++j) perm[j] = ((j + i - m2) % n + n) % n;
    return perm;
}

DensityField step(const DensityField& field, const SchemeKernel& kernel) {
    const int n = (int)field.values.size();
    if (n != (int)kernel.stencil.size())
        throw domain_error("step: field and kernel sizes disagree");
    for (double v : field.values)
        if (!std::isfinite(v)) throw domain_error("step: non-finite state");
    const int m2 = (n - 1) / 2;
    DensityField out;
    out.grid = field.grid;
    out.step_index = field.step_index + 1;
    out.values.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        int base = i - m2;
        for (int j = 0; j < n; ++j) {
            int idx = base + j;
            if (idx < 0) idx += n;
            else if (idx >= n) idx -= n;
            acc += kernel.stencil[j] * field.values[idx];
        }
        out.values[i] = acc;
    }
    return out;
}

DensityField step_fft(const DensityField& field, const SchemeKernel& kernel) {
    const int n = (int)field.values.size();
    if (n != (int)kernel.stencil.size())
        throw domain_error("step_fft: field and kernel sizes disagree");
    const int m2 = (n - 1) / 2;
    // out_i = sum_d rot[d] U_{(i+d) mod n} with rot[d] = stencil[(m2+d) mod n]
    // is a circular cross-correlation: out = IDFT(DFT(U) . conj(DFT(rot))).
    std::vector<std::complex<double>> u(n), rot(n);
    for (int i = 0; i < n; ++i) u[i] = field.values[i];
    for (int d = 0; d < n; ++d) rot[d] = kernel.stencil[(m2 + d) % n];
    auto fu = dft(u, false);
    auto fr = dft(rot, false);
    for (int i = 0; i < n; ++i) fu[i] *= std::conj(fr[i]);
    auto res = dft(fu, true);
    DensityField out;
    out.grid = field.grid;
    out.step_index = field.step_index + 1;
    out.values.resize(n);
    for (int i = 0; i < n; ++i) out.values[i] = res[i].real();
    return out;
}

std::vector<DensityField> solve(const GridSpec& grid, double alpha, double diffusion,
                                const std::function<double(double)>& phi0,
                                const std::vector<double>& snapshot_times) {
    grid.validate();
    SchemeKernel kernel = build_kernel(alpha, grid, diffusion);

    std::vector<int> snap_steps;
    snap_steps.push_back(0); // t = 0 always included
    for (double t : snapshot_times) {
        if (t < -0.5 * grid.tau() || t > grid.final_time + 0.5 * grid.tau())
            throw domain_error("solve: snapshot time outside [0, T]");
        int s = (int)std::lround(t / grid.tau());
        snap_steps.push_back(std::clamp(s, 0, grid.steps));
    }
    std::sort(snap_steps.begin(), snap_steps.end());
    snap_steps.erase(std::unique(snap_steps.begin(), snap_steps.end()), snap_steps.end());

    DensityField u;
    u.grid = grid;
    u.step_index = 0;
    u.values.resize(grid.cells + 1);
    double init_max = 0.0;
    for (int i = 0; i <= grid.cells; ++i) {
        u.values[i] = phi0(grid.x(i));
        init_max = std::max(init_max, std::abs(u.values[i]));
    }
    double abort_level = 1e6 * std::max(init_max, 1e-300);

    std::vector<DensityField> out;
    std::size_t next_snap = 0;
    if (snap_steps[next_snap] == 0) {
        out.push_back(u);
        ++next_snap;
    }
    for (int n = 1; n <= grid.steps && next_snap < snap_steps.size(); ++n) {
        u = step(u, kernel);
        double mx = 0.0;
        for (double v : u.values) mx = std::max(mx, std::abs(v));
        if (mx > abort_level) {
            std::ostringstream msg;
            msg << "solve: instability detected at step " << n << " (max |U| = " << mx << ")";
            throw instability_error(msg.str(), n, mx);
        }
        if (n == snap_steps[next_snap]) {
            out.push_back(u);
            ++next_snap;
        }
    }
    return out;
}

double total_mass(const DensityField& field, bool trapezoid) {
    double h = field.grid.h();
    double acc = 0.0;
    for (double v : field.values) acc += v;
    if (trapezoid && field.values.size() >= 2)
        acc -= 0.5 * (field.values.front() + field.values.back());
    return h * acc;
}

std::vector<double> amplification_spectrum(const SchemeKernel& kernel) {
    const int n = (int)kernel.stencil.size();
    const int m2 = (n - 1) / 2;
    std::vector<std::complex<double>> rot(n);
    for (int d = 0; d < n; ++d) rot[d] = kernel.stencil[(m2 + d) % n];
    auto spec = dft(rot, false);
    std::vector<double> mags(n);
    for (int i = 0; i < n; ++i) mags[i] = std::abs(spec[i]);
    return mags;
}

double growth_factor(const SchemeKernel& kernel) {
    auto mags = amplification_spectrum(kernel);
    return *std::max_element(mags.begin(), mags.end());
}

} // namespace fracdiff
