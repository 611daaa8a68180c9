#ifndef FRACDIFF_STATS_HPP
#define FRACDIFF_STATS_HPP

#include <functional>
#include <span>
#include <vector>

namespace fracdiff {

struct BoxplotStats {
    double median = 0.0;
    double q1 = 0.0;
    double q3 = 0.0;
    double iqr = 0.0;
    double whisker_lo = 0.0;
    double whisker_hi = 0.0;
    long outlier_count = 0;
};

struct Histogram {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> density; // normalized by total count: integrates to the in-range fraction
};

// Linear-interpolation quantile (type 7) on a sorted copy.
double quantile(std::vector<double> data, double q);

// Tukey boxplot: whiskers at the most extreme data within 1.5 IQR of the
// quartiles, outliers beyond them.
BoxplotStats boxplot_stats(std::span<const double> data);

// Uniform left-closed bins; each value at lo <= x < hi lands in
// floor((x - lo)/width). Density = count / (n * width).
Histogram histogram(std::span<const double> data, double lo, double hi, int bins);

// Exact one-sample Kolmogorov-Smirnov statistic against a CDF.
double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf);

// Two-sample Kolmogorov-Smirnov statistic.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

// L1 distance between two densities tabulated on the same uniform grid.
double l1_distance(std::span<const double> f, std::span<const double> g, double width);

} // namespace fracdiff

#endif
