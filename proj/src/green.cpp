#include "fracdiff/green.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "fracdiff/errors.hpp"
#include "fracdiff/mittag_leffler.hpp"
#include "fracdiff/quadrature.hpp"

namespace fracdiff {

namespace {

constexpr double kPi = 3.14159265358979323846;

// k beyond which exp(-(k^alpha) s) < 1e-16
double exp_cutoff(double alpha, double s) {
    return std::pow(36.85 / s, 1.0 / alpha);
}

// int_0^K envelope(k) trig(kx) dk on the substituted variable k = v^2, which
// turns the k^alpha cusp at the origin into a smooth v^(2 alpha). Chunks are
// cut at the phase grid v_j = sqrt(j pi / (2|x|)) so no panel spans more than
// a quarter oscillation period.
double fourier_integral(const std::function<double(double)>& envelope, double x, double k_max,
                        double tol, int min_panels, bool sinc,
                        const std::vector<double>& k_cuts = {}, double noise_rel = 5e-14) {
    double vmax = std::sqrt(k_max);
    std::vector<double> cuts;
    cuts.push_back(0.0);
    double ax = std::abs(x);
    if (ax > 0.0) {
        for (std::size_t j = 1; j < 4'000'000; ++j) {
            double v = std::sqrt((double)j * kPi / (2.0 * ax));
            if (v >= vmax) break;
            cuts.push_back(v);
        }
    }
    double step = vmax / std::max(min_panels, 16);
    for (double v = step; v < vmax; v += step) cuts.push_back(v);
    // envelope seam points (branch switches inside the integrand) become
    // panel edges, otherwise the bisection can never meet its tolerance
    for (double k : k_cuts)
        if (k > 0.0 && k < k_max) cuts.push_back(std::sqrt(k));
    cuts.push_back(vmax);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [vmax](double a, double b) { return b - a < 1e-12 * vmax; }),
               cuts.end());
    if (cuts.back() < vmax) cuts.back() = vmax;

    auto f = [&envelope, x, sinc](double v) {
        double k = v * v;
        double e = envelope(k);
        if (sinc) {
            // sin(kx)/k dk = 2 sin(v^2 x) / v dv; smooth through v = 0
            return (v > 0.0) ? 2.0 * e * std::sin(k * x) / v : 0.0;
        }
        return 2.0 * v * e * std::cos(k * x);
    };

    double share = tol / (double)(cuts.size() - 1);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        acc += adaptive_quad(f, cuts[i], cuts[i + 1], share, 16, noise_rel);
    return acc;
}

void check_alpha(double alpha) {
    if (!(alpha > 0.0) || !(alpha <= 2.0))
        throw domain_error("green: alpha must lie in (0, 2]");
}

double sinpi_d(double x) {
    double n = std::floor(x);
    double r = x - n;
    double s = (r <= 0.5) ? std::sin(kPi * r) : std::sin(kPi * (1.0 - r));
    return (std::fmod(n, 2.0) == 0.0) ? s : -s;
}

// 1 / Gamma(1 - y), exact zero at positive integer y.
double inv_gamma_one_minus(double y) {
    double sp = sinpi_d(y);
    if (sp == 0.0) return 0.0;
    return std::exp(std::lgamma(y)) * sp / kPi;
}

// C_p(a) = int_a^inf cos(u) u^-p du, p > 0.
double cos_tail_integral(double p, double a);

double cos_tail_ibp(double p, double a, int depth) {
    // C_p(a) = -sin(a) a^-p + p cos(a) a^-(p+1) - p (p+1) C_{p+2}(a)
    double head = -std::sin(a) * std::pow(a, -p) + p * std::cos(a) * std::pow(a, -p - 1.0);
    if (depth <= 0) return head; // dropped term is O(a^-(p+2))
    return head - p * (p + 1.0) * cos_tail_ibp(p + 2.0, a, depth - 1);
}

double cos_tail_low_series(double p, double a) {
    // int_a^1 cos(u) u^-p du as a Taylor series in u; terms fall like 1/(2m)!
    double acc = 0.0;
    double inv_fact = 1.0;
    for (int m = 0; m <= 16; ++m) {
        if (m > 0) inv_fact /= (2.0 * m - 1.0) * (2.0 * m);
        double q = 2.0 * m - p; // integrate u^q
        double piece;
        if (std::abs(q + 1.0) < 1e-12) {
            piece = -std::log(a);
        } else {
            piece = (1.0 - std::pow(a, q + 1.0)) / (q + 1.0);
        }
        acc += ((m % 2) ? -1.0 : 1.0) * inv_fact * piece;
    }
    return acc;
}

double cos_tail_integral(double p, double a) {
    const double kFar = 40.0;
    if (a >= kFar) return cos_tail_ibp(p, a, 3);
    auto f = [p](double u) { return std::cos(u) * std::pow(u, -p); };
    if (a >= 1.0)
        return adaptive_quad_chunked(f, a, kFar, 1e-13, kPi / 2.0, 4) + cos_tail_ibp(p, kFar, 3);
    return cos_tail_low_series(p, a) + adaptive_quad_chunked(f, 1.0, kFar, 1e-13, kPi / 2.0, 4) +
           cos_tail_ibp(p, kFar, 3);
}

// int_K^inf cos(kx) E_beta(-k^alpha t^beta) dk estimated from the algebraic
// expansion of E_beta; throws eval_error when the x = 0 integral diverges.
double ml_fourier_tail(double alpha, double beta, double x, double t, double k_cut) {
    double acc = 0.0;
    double prev_mag = HUGE_VAL;
    for (int j = 1; j <= 6; ++j) {
        double ig = inv_gamma_one_minus(beta * j);
        if (ig == 0.0) continue;
        double c = ((j % 2) ? 1.0 : -1.0) * std::pow(t, -beta * j) * ig;
        double p = alpha * j;
        double piece;
        if (x == 0.0) {
            if (p <= 1.0)
                throw eval_error("green_pdf: inverse transform diverges at x = 0 for alpha <= 1, beta < 1",
                                 0.0);
            piece = c * std::pow(k_cut, 1.0 - p) / (p - 1.0);
        } else {
            double ax = std::abs(x);
            piece = c * std::pow(ax, p - 1.0) * cos_tail_integral(p, k_cut * ax);
        }
        double mag = std::abs(piece);
        if (mag >= prev_mag) break;
        prev_mag = mag;
        acc += piece;
        if (mag < 1e-16) break;
    }
    return acc;
}

} // namespace

void QuadratureConfig::validate() const {
    if (k_max < 0.0) throw domain_error("quadrature: k_max must be >= 0");
    if (panels < 16) throw domain_error("quadrature: panels must be >= 16");
    if (!(abs_tol > 0.0)) throw domain_error("quadrature: abs_tol must be positive");
}

double gaussian_green(double x, double t) {
    if (!(t > 0.0)) throw domain_error("gaussian_green: t must be positive");
    return std::exp(-x * x / (4.0 * t)) / (2.0 * std::sqrt(kPi * t));
}

double levy_pdf(double alpha, double x, const QuadratureConfig& cfg) {
    check_alpha(alpha);
    cfg.validate();
    double k_max = (cfg.k_max > 0.0) ? cfg.k_max : exp_cutoff(alpha, 1.0);
    auto envelope = [alpha](double k) { return std::exp(-std::pow(k, alpha)); };
    return fourier_integral(envelope, x, k_max, cfg.abs_tol, cfg.panels, false) / kPi;
}

double levy_cdf(double alpha, double x, const QuadratureConfig& cfg) {
    check_alpha(alpha);
    cfg.validate();
    double k_max = (cfg.k_max > 0.0) ? cfg.k_max : exp_cutoff(alpha, 1.0);
    auto envelope = [alpha](double k) { return std::exp(-std::pow(k, alpha)); };
    return 0.5 + fourier_integral(envelope, x, k_max, cfg.abs_tol, cfg.panels, true) / kPi;
}

double scaled_green(double alpha, double x, double t, const QuadratureConfig& cfg) {
    check_alpha(alpha);
    if (!(t > 0.0)) throw domain_error("scaled_green: t must be positive");
    double s = std::pow(t, -1.0 / alpha);
    return s * levy_pdf(alpha, x * s, cfg);
}

double green_pdf(double alpha, double beta, double x, double t, const QuadratureConfig& cfg,
                 GreenDiagnostics* diag) {
    check_alpha(alpha);
    if (!(beta > 0.0) || !(beta <= 1.0))
        throw domain_error("green_pdf: beta must lie in (0, 1]");
    if (!(t > 0.0)) throw domain_error("green_pdf: t must be positive");
    cfg.validate();
    if (diag) *diag = GreenDiagnostics{};

    double tb = std::pow(t, beta);
    if (beta == 1.0) {
        double k_max = (cfg.k_max > 0.0) ? cfg.k_max : exp_cutoff(alpha, t);
        auto envelope = [alpha, t](double k) { return std::exp(-std::pow(k, alpha) * t); };
        return fourier_integral(envelope, x, k_max, cfg.abs_tol, cfg.panels, false) / kPi;
    }

    MLEvalConfig mlc;
    auto envelope = [alpha, beta, tb, &mlc](double k) {
        return ml(beta, -std::pow(k, alpha) * tb, mlc);
    };
    // cut where the argument of E_beta is deep in its algebraic regime
    double k_max = (cfg.k_max > 0.0) ? cfg.k_max : std::pow(60.0 / tb, 1.0 / alpha);
    // the ml() Taylor/asymptotic switch leaves a ~1e-8 step in the envelope;
    // align it with a panel edge
    double seam_y = std::min(mlc.series_cutoff, std::pow(25.0, beta));
    double k_seam = std::pow(seam_y / tb, 1.0 / alpha);
    // near its Taylor cap the Mittag-Leffler series only retains ~8 digits
    double body =
        fourier_integral(envelope, x, k_max, cfg.abs_tol, cfg.panels, false, {k_seam}, 1e-7);
    double tail = ml_fourier_tail(alpha, beta, x, t, k_max);
    if (diag) {
        diag->tail_estimate = std::abs(tail) / kPi;
        diag->slow_decay_warning = std::abs(tail) / kPi > cfg.abs_tol;
    }
    return (body + tail) / kPi;
}

std::vector<double> convolve_initial(double alpha, double t, const std::vector<double>& phi0,
                                     double h, const QuadratureConfig& cfg, bool* coarse_warning) {
    check_alpha(alpha);
    if (!(t > 0.0)) throw domain_error("convolve_initial: t must be positive");
    if (!(h > 0.0)) throw domain_error("convolve_initial: grid spacing must be positive");
    if (phi0.empty()) throw domain_error("convolve_initial: empty initial data");
    for (double v : phi0)
        if (v < 0.0 || !std::isfinite(v))
            throw domain_error("convolve_initial: initial density must be non-negative and finite");
    if (coarse_warning) *coarse_warning = h > std::pow(t, 1.0 / alpha);

    std::size_t n = phi0.size();
    std::vector<double> kernel(n);
    for (std::size_t d = 0; d < n; ++d) kernel[d] = scaled_green(alpha, (double)d * h, t, cfg);
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t d = (i > j) ? i - j : j - i;
            double w = (j == 0 || j + 1 == n) ? 0.5 : 1.0; // trapezoid ends
            acc += w * kernel[d] * phi0[j];
        }
        out[i] = acc * h;
    }
    return out;
}

LevyCdfTable::LevyCdfTable(double alpha, double cut, int points_per_unit,
                           const QuadratureConfig& cfg)
    : alpha_(alpha), cut_(cut) {
    check_alpha(alpha);
    if (!(cut > 0.0) || points_per_unit < 1)
        throw domain_error("LevyCdfTable: bad table parameters");
    int half = (int)std::lround(cut * points_per_unit);
    step_ = cut / half;
    values_.assign(2 * half + 1, 0.0);
    for (int i = 0; i <= half; ++i) {
        double f = levy_cdf(alpha, i * step_, cfg);
        values_[half + i] = f;
        values_[half - i] = 1.0 - f; // symmetry
    }
    double tail = 1.0 - values_.back();
    tail_coeff_ = std::max(tail, 0.0) * std::pow(cut, alpha);
}

double LevyCdfTable::operator()(double x) const {
    if (x >= cut_) return 1.0 - tail_coeff_ * std::pow(x, -alpha_);
    if (x <= -cut_) return tail_coeff_ * std::pow(-x, -alpha_);
    double pos = (x + cut_) / step_;
    std::size_t i = (std::size_t)pos;
    if (i + 1 >= values_.size()) return values_.back();
    double frac = pos - (double)i;
    return values_[i] * (1.0 - frac) + values_[i + 1] * frac;
}

} // namespace fracdiff
