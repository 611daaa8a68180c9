#include <doctest.h>

#include <cmath>
#include <vector>

#include "fracdiff/errors.hpp"
#include "fracdiff/rng.hpp"
#include "fracdiff/stats.hpp"

using namespace fracdiff;

TEST_CASE("boxplot on a five-point sample") {
    std::vector<double> xs{1, 2, 3, 4, 5};
    auto s = boxplot_stats(xs);
    CHECK(s.median == 3.0);
    CHECK(s.q1 == 2.0);
    CHECK(s.q3 == 4.0);
    CHECK(s.iqr == 2.0);
    CHECK(s.whisker_lo == 1.0);
    CHECK(s.whisker_hi == 5.0);
    CHECK(s.outlier_count == 0);
}

TEST_CASE("boxplot flags Tukey outliers") {
    std::vector<double> xs{1, 2, 3, 4, 5, 40.0, -40.0};
    auto s = boxplot_stats(xs);
    CHECK(s.outlier_count == 2);
    CHECK(s.whisker_hi <= s.q3 + 1.5 * s.iqr);
    CHECK(s.whisker_lo >= s.q1 - 1.5 * s.iqr);
    std::vector<double> empty;
    CHECK_THROWS_AS(boxplot_stats(empty), domain_error);
}

TEST_CASE("boxplot median of a symmetric sample is near zero") {
    RandomStream r(5, 0);
    std::vector<double> xs(20001);
    for (auto& x : xs) x = r.next_normal_pair().first;
    auto s = boxplot_stats(xs);
    CHECK(std::abs(s.median) < 3.0 * 1.2533 / std::sqrt((double)xs.size()));
}

TEST_CASE("quantile type-7 interpolation") {
    std::vector<double> xs{10, 20, 30, 40};
    CHECK(quantile(xs, 0.0) == 10.0);
    CHECK(quantile(xs, 1.0) == 40.0);
    CHECK(quantile(xs, 0.5) == 25.0);
    CHECK_THROWS_AS(quantile({}, 0.5), domain_error);
}

TEST_CASE("histogram: left-closed bins, density normalization") {
    // single atom at 0 on (-1, 1) with 2 bins: 0 belongs to the right bin [0, 1)
    std::vector<double> zeros{0.0, 0.0, 0.0};
    auto h = histogram(zeros, -1.0, 1.0, 2);
    CHECK(h.density[0] == 0.0);
    CHECK(h.density[1] == doctest::Approx(1.0));
    double mass = (h.density[0] + h.density[1]) * 1.0;
    CHECK(mass == doctest::Approx(1.0));

    CHECK_THROWS_AS(histogram(zeros, 1.0, 1.0, 2), domain_error);
    CHECK_THROWS_AS(histogram(zeros, -1.0, 1.0, 1), domain_error);
}

TEST_CASE("histogram of uniform draws is flat") {
    RandomStream r(9, 0);
    std::vector<double> xs(100000);
    for (auto& x : xs) x = r.next_unit();
    auto h = histogram(xs, 0.0, 1.0, 20);
    for (double d : h.density) CHECK(d == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("ks statistic against an exact CDF") {
    // sample at exact quantiles of U(0,1) gives the minimal 1/(2n) discrepancy
    std::vector<double> xs;
    int n = 100;
    for (int i = 0; i < n; ++i) xs.push_back((i + 0.5) / n);
    double d = ks_statistic(xs, [](double x) { return std::min(1.0, std::max(0.0, x)); });
    CHECK(d == doctest::Approx(0.5 / n).epsilon(1e-9));
}

TEST_CASE("two-sample ks: identical samples have zero distance") {
    std::vector<double> a{0.1, 0.5, 0.9, 1.4};
    CHECK(ks_two_sample(a, a) == 0.0);
    std::vector<double> b{10.0, 11.0};
    CHECK(ks_two_sample(a, b) == 1.0); // disjoint supports
}

TEST_CASE("two-sample ks on same-law draws stays below the 99% band") {
    RandomStream r1(21, 0), r2(22, 0);
    std::vector<double> a(50000), b(50000);
    for (auto& x : a) x = r1.next_normal_pair().first;
    for (auto& x : b) x = r2.next_normal_pair().first;
    double crit = 1.63 * std::sqrt(2.0 / 50000.0);
    CHECK(ks_two_sample(a, b) < crit);
}

TEST_CASE("l1 distance") {
    std::vector<double> f{1.0, 2.0, 3.0};
    std::vector<double> g{1.5, 1.5, 3.0};
    CHECK(l1_distance(f, g, 0.5) == doctest::Approx(0.5));
    std::vector<double> short_g{1.0};
    CHECK_THROWS_AS(l1_distance(f, short_g, 0.5), domain_error);
}
