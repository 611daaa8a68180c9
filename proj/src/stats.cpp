#include "fracdiff/stats.hpp"

#include <algorithm>
#include <cmath>

#include "fracdiff/errors.hpp"

namespace fracdiff {

double quantile(std::vector<double> data, double q) {
    if (data.empty()) throw domain_error("quantile: empty data");
    if (!(q >= 0.0) || !(q <= 1.0)) throw domain_error("quantile: q must lie in [0, 1]");
    std::sort(data.begin(), data.end());
    double h = q * (double)(data.size() - 1);
    std::size_t lo = (std::size_t)h;
    if (lo + 1 >= data.size()) return data.back();
    double frac = h - (double)lo;
    return data[lo] * (1.0 - frac) + data[lo + 1] * frac;
}

BoxplotStats boxplot_stats(std::span<const double> data) {
    if (data.empty()) throw domain_error("boxplot_stats: empty data");
    std::vector<double> sorted(data.begin(), data.end());
    std::sort(sorted.begin(), sorted.end());

    auto q_sorted = [&sorted](double q) {
        double h = q * (double)(sorted.size() - 1);
        std::size_t lo = (std::size_t)h;
        if (lo + 1 >= sorted.size()) return sorted.back();
        double frac = h - (double)lo;
        return sorted[lo] * (1.0 - frac) + sorted[lo + 1] * frac;
    };

    BoxplotStats s;
    s.q1 = q_sorted(0.25);
    s.median = q_sorted(0.5);
    s.q3 = q_sorted(0.75);
    s.iqr = s.q3 - s.q1;
    double fence_lo = s.q1 - 1.5 * s.iqr;
    double fence_hi = s.q3 + 1.5 * s.iqr;
    s.whisker_lo = s.q3;
    s.whisker_hi = s.q1;
    for (double x : sorted) {
        if (x >= fence_lo) {
            s.whisker_lo = x;
            break;
        }
    }
    for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
        if (*it <= fence_hi) {
            s.whisker_hi = *it;
            break;
        }
    }
    for (double x : sorted)
        if (x < fence_lo || x > fence_hi) ++s.outlier_count;
    return s;
}

Histogram histogram(std::span<const double> data, double lo, double hi, int bins) {
    if (bins < 2) throw domain_error("histogram: bins must be >= 2");
    if (!(hi > lo)) throw domain_error("histogram: degenerate range");
    Histogram h;
    h.lo = lo;
    h.hi = hi;
    h.density.assign(bins, 0.0);
    if (data.empty()) throw domain_error("histogram: empty data");
    double width = (hi - lo) / bins;
    for (double x : data) {
        if (x < lo || x >= hi) continue;
        int idx = (int)((x - lo) / width);
        if (idx >= bins) idx = bins - 1; // rounding guard at the right edge
        h.density[idx] += 1.0;
    }
    double norm = 1.0 / ((double)data.size() * width);
    for (double& d : h.density) d *= norm;
    return h;
}

double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf) {
    if (sample.empty()) throw domain_error("ks_statistic: empty sample");
    std::sort(sample.begin(), sample.end());
    double n = (double)sample.size();
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        double f = cdf(sample[i]);
        d = std::max(d, std::abs((double)(i + 1) / n - f));
        d = std::max(d, std::abs(f - (double)i / n));
    }
    return d;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw domain_error("ks_two_sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        // advance both CDFs through the whole tie group before comparing
        double v = std::min(a[i], b[j]);
        while (i < a.size() && a[i] == v) ++i;
        while (j < b.size() && b[j] == v) ++j;
        double fa = (double)i / (double)a.size();
        double fb = (double)j / (double)b.size();
        d = std::max(d, std::abs(fa - fb));
    }
    return d;
}

double l1_distance(std::span<const double> f, std::span<const double> g, double width) {
    if (f.size() != g.size() || f.empty()) throw domain_error("l1_distance: size mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) acc += std::abs(f[i] - g[i]);
    return acc * width;
}

} // namespace fracdiff
