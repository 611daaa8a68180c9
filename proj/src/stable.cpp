#include "fracdiff/stable.hpp"

#include <cmath>
#include <sstream>

#include "fracdiff/errors.hpp"

namespace fracdiff {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = 1.57079632679489661923;

// Phi of the S1 characteristic function. tan(pi*alpha/2) vanishes
// identically at alpha = 2, so return the exact zero there; otherwise
// tan(pi) rounding would leak a spurious beta dependence.
double skew_phase(double alpha, double t) {
    if (alpha == 2.0) return 0.0;
    if (alpha == 1.0) return -(2.0 / kPi) * std::log(std::abs(t));
    return std::tan(kHalfPi * alpha);
}

double cholesky_l11(const EllipticalParams& p) { return std::sqrt(p.q11); }
double cholesky_l21(const EllipticalParams& p) { return p.q12 / std::sqrt(p.q11); }
double cholesky_l22(const EllipticalParams& p) {
    return std::sqrt(p.q22 - p.q12 * p.q12 / p.q11);
}

} // namespace

void StableParams::validate() const {
    if (!(alpha > 0.0) || !(alpha <= 2.0))
        throw domain_error("stable: alpha must lie in (0, 2]");
    if (!(beta >= -1.0) || !(beta <= 1.0))
        throw domain_error("stable: beta must lie in [-1, 1]");
    if (!(sigma > 0.0)) throw domain_error("stable: sigma must be positive");
    if (!std::isfinite(mu)) throw domain_error("stable: mu must be finite");
}

void EllipticalParams::validate() const {
    if (!(alpha > 0.0) || !(alpha <= 2.0))
        throw domain_error("elliptical: alpha must lie in (0, 2]");
    if (!(q11 > 0.0) || !(q11 * q22 - q12 * q12 > 0.0))
        throw domain_error("elliptical: Q must be symmetric positive definite");
    if (!std::isfinite(mu_x) || !std::isfinite(mu_y))
        throw domain_error("elliptical: mu must be finite");
}

std::complex<double> characteristic_function(const StableParams& params, double t) {
    params.validate();
    if (!std::isfinite(t)) throw domain_error("stable: t must be finite");
    std::complex<double> phase(0.0, t * params.mu);
    if (t == 0.0) return std::exp(phase);
    double sgn = (t > 0.0) ? 1.0 : -1.0;
    double amp = std::pow(std::abs(params.sigma * t), params.alpha);
    std::complex<double> exponent =
        phase - amp * std::complex<double>(1.0, -params.beta * sgn * skew_phase(params.alpha, t));
    return std::exp(exponent);
}

double sample_stable_one(const StableParams& params, RandomStream& stream) {
    const double alpha = params.alpha;
    const double beta = params.beta;
    double v = stream.next_angle();       // uniform (-pi/2, pi/2)
    double w = stream.next_exponential(); // unit exponential

    double x;
    if (alpha == 1.0) {
        // CMS log-branch; reduces to tan(V) for beta = 0.
        double a = kHalfPi + beta * v;
        x = (2.0 / kPi) * (a * std::tan(v) - beta * std::log((kHalfPi * w * std::cos(v)) / a));
        double shift = (beta == 0.0) ? 0.0 : (2.0 / kPi) * beta * params.sigma * std::log(params.sigma);
        return params.sigma * x + shift + params.mu;
    }

    double tan_half = (alpha == 2.0) ? 0.0 : std::tan(kHalfPi * alpha);
    if (beta == 0.0 || tan_half == 0.0) {
        // symmetric branch: sin(aV)/cos(V)^(1/a) * (cos((1-a)V)/W)^((1-a)/a)
        x = std::sin(alpha * v) / std::pow(std::cos(v), 1.0 / alpha) *
            std::pow(std::cos((1.0 - alpha) * v) / w, (1.0 - alpha) / alpha);
    } else {
        double b = std::atan(beta * tan_half) / alpha;
        double s = std::pow(1.0 + beta * beta * tan_half * tan_half, 0.5 / alpha);
        x = s * std::sin(alpha * (v + b)) / std::pow(std::cos(v), 1.0 / alpha) *
            std::pow(std::cos(v - alpha * (v + b)) / w, (1.0 - alpha) / alpha);
    }
    return params.sigma * x + params.mu;
}

std::vector<double> sample_stable(const StableParams& params, RandomStream& stream, std::size_t n) {
    params.validate();
    if (n == 0) throw domain_error("stable: sample count must be >= 1");
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(sample_stable_one(params, stream));
    return out;
}

double one_sided_scale(double alpha_target) {
    if (!(alpha_target > 0.0) || !(alpha_target < 2.0))
        throw domain_error(
            "one-sided stable: alpha_target must lie in (0, 2); at alpha = 2 the mixing "
            "scale degenerates to zero, use the Gaussian special case instead");
    return std::pow(std::cos(kPi * alpha_target / 4.0), 2.0 / alpha_target);
}

double sample_one_sided_one(double alpha_target, RandomStream& stream) {
    StableParams p{alpha_target / 2.0, 1.0, one_sided_scale(alpha_target), 0.0};
    return sample_stable_one(p, stream);
}

std::vector<double> sample_one_sided(double alpha_target, RandomStream& stream, std::size_t n) {
    StableParams p{alpha_target / 2.0, 1.0, one_sided_scale(alpha_target), 0.0};
    if (n == 0) throw domain_error("one-sided stable: sample count must be >= 1");
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(sample_stable_one(p, stream));
    return out;
}

Vec2 sample_subgaussian_2d_one(const EllipticalParams& params, RandomStream& stream) {
    const double l11 = cholesky_l11(params);
    const double l21 = cholesky_l21(params);
    const double l22 = cholesky_l22(params);
    auto [g1, g2] = stream.next_normal_pair();
    if (params.alpha == 2.0) {
        // Gaussian endpoint: plain N(mu, Q).
        return {params.mu_x + l11 * g1, params.mu_y + l21 * g1 + l22 * g2};
    }
    double s = sample_one_sided_one(params.alpha, stream);
    double m = std::sqrt(2.0 * s);
    return {params.mu_x + m * l11 * g1, params.mu_y + m * (l21 * g1 + l22 * g2)};
}

std::vector<Vec2> sample_subgaussian_2d(const EllipticalParams& params, RandomStream& stream,
                                        std::size_t n) {
    params.validate();
    if (n == 0) throw domain_error("subgaussian: sample count must be >= 1");
    std::vector<Vec2> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(sample_subgaussian_2d_one(params, stream));
    return out;
}

std::complex<double> empirical_cf(std::span<const double> samples, double t) {
    if (samples.empty()) throw domain_error("empirical_cf: empty sample");
    double re = 0.0, im = 0.0;
    for (double x : samples) {
        re += std::cos(t * x);
        im += std::sin(t * x);
    }
    double n = static_cast<double>(samples.size());
    return {re / n, im / n};
}

std::complex<double> empirical_cf(std::span<const Vec2> samples, Vec2 t) {
    if (samples.empty()) throw domain_error("empirical_cf: empty sample");
    double re = 0.0, im = 0.0;
    for (const Vec2& p : samples) {
        double dot = t.x * p.x + t.y * p.y;
        re += std::cos(dot);
        im += std::sin(dot);
    }
    double n = static_cast<double>(samples.size());
    return {re / n, im / n};
}

} // namespace fracdiff
