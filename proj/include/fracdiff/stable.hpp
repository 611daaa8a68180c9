#ifndef FRACDIFF_STABLE_HPP
#define FRACDIFF_STABLE_HPP

#include <complex>
#include <span>
#include <vector>

#include "fracdiff/rng.hpp"

namespace fracdiff {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// Four-parameter stable law in the "S1" convention: the characteristic
// function is exp(i t mu - |sigma t|^alpha (1 - i beta sgn(t) Phi(t))) with
// Phi = tan(pi alpha / 2) for alpha != 1 and -(2/pi) log|t| at alpha = 1.
struct StableParams {
    double alpha = 2.0;  // stability index, (0, 2]
    double beta = 0.0;   // skewness, [-1, 1]
    double sigma = 1.0;  // scale, > 0
    double mu = 0.0;     // location

    void validate() const; // throws domain_error
};

// 2-d elliptical (subgaussian) stable family: CF exp(i t.mu - |t^T Q t|^(alpha/2)).
// Q is symmetric positive definite, stored as (q11, q12, q22).
struct EllipticalParams {
    double alpha = 2.0;
    double q11 = 1.0;
    double q12 = 0.0;
    double q22 = 1.0;
    double mu_x = 0.0;
    double mu_y = 0.0;

    void validate() const;
};

std::complex<double> characteristic_function(const StableParams& params, double t);

// One draw / n draws via the Chambers-Mallows-Stuck transform. sigma and mu
// are applied as final affine operations, so scaling a standard draw and
// drawing with a scale from the same stream agree bit for bit.
double sample_stable_one(const StableParams& params, RandomStream& stream);
std::vector<double> sample_stable(const StableParams& params, RandomStream& stream, std::size_t n);

// Scale of the positive mixing variable S for the subgaussian construction.
double one_sided_scale(double alpha_target);

// S ~ Stable(alpha/2, beta=1, (cos(pi alpha/4))^(2/alpha), 0); strictly positive.
// alpha_target must lie in (0, 2); the Gaussian endpoint has no mixing law.
double sample_one_sided_one(double alpha_target, RandomStream& stream);
std::vector<double> sample_one_sided(double alpha_target, RandomStream& stream, std::size_t n);

// z = sqrt(2 s) L g + mu with L the Cholesky factor of Q and g a standard
// normal pair; the factor 2 makes the law match the elliptical CF above
// (the mixing identity holds against N(0, 2Q)). alpha = 2 draws plain
// multivariate normal N(mu, Q).
Vec2 sample_subgaussian_2d_one(const EllipticalParams& params, RandomStream& stream);
std::vector<Vec2> sample_subgaussian_2d(const EllipticalParams& params, RandomStream& stream,
                                        std::size_t n);

// (1/n) sum exp(i <t, x_j>); throws on an empty sample.
std::complex<double> empirical_cf(std::span<const double> samples, double t);
std::complex<double> empirical_cf(std::span<const Vec2> samples, Vec2 t);

} // namespace fracdiff

#endif
