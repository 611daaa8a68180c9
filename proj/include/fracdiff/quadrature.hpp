#ifndef FRACDIFF_QUADRATURE_HPP
#define FRACDIFF_QUADRATURE_HPP

#include <functional>

namespace fracdiff {

// Adaptive panel integration: 16-point Gauss-Legendre per panel, bisection
// until the two-half refinement agrees with the parent to the panel's
// tolerance share. noise_rel is the integrand's own relative evaluation
// noise: refinement is abandoned once the disagreement falls below it
// (demanding more would recurse forever on rounding jitter).
double adaptive_quad(const std::function<double(double)>& f, double a, double b, double abs_tol,
                     int max_depth = 24, double noise_rel = 5e-14);

// Same, but [a, b] is first chopped into panels no longer than max_len
// (half-period splitting for cos(freq x)-type oscillation) and never fewer
// than min_panels pieces.
double adaptive_quad_chunked(const std::function<double(double)>& f, double a, double b,
                             double abs_tol, double max_len, int min_panels);

} // namespace fracdiff

#endif
