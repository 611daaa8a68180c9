#include <doctest.h>

#include <cmath>
#include <vector>

#include "fracdiff/rng.hpp"

using fracdiff::RandomStream;

TEST_CASE("identical (seed, stream) reproduces the sequence bit-exactly") {
    RandomStream a(42, 7), b(42, 7);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("distinct streams from one seed differ") {
    RandomStream a(42, 0), b(42, 1);
    int same = 0;
    for (int i = 0; i < 1000; ++i)
        if (a.next_u64() == b.next_u64()) ++same;
    CHECK(same == 0);
}

TEST_CASE("unit draws stay inside their intervals") {
    RandomStream r(1, 0);
    for (int i = 0; i < 100000; ++i) {
        double u = r.next_unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        double v = r.next_unit_open();
        CHECK(v > 0.0);
        CHECK(v < 1.0);
    }
}

TEST_CASE("uniform moments look uniform") {
    RandomStream r(3, 5);
    const int n = 200000;
    double mean = 0.0, m2 = 0.0;
    for (int i = 0; i < n; ++i) {
        double u = r.next_unit();
        mean += u;
        m2 += u * u;
    }
    mean /= n;
    m2 /= n;
    CHECK(mean == doctest::Approx(0.5).epsilon(0.01));
    CHECK(m2 == doctest::Approx(1.0 / 3.0).epsilon(0.01));
}

TEST_CASE("normal pair has unit variance and no correlation") {
    RandomStream r(11, 0);
    const int n = 100000;
    double sx = 0, sxx = 0, syy = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        auto [x, y] = r.next_normal_pair();
        sx += x;
        sxx += x * x;
        syy += y * y;
        sxy += x * y;
    }
    CHECK(std::abs(sx / n) < 0.02);
    CHECK(sxx / n == doctest::Approx(1.0).epsilon(0.02));
    CHECK(syy / n == doctest::Approx(1.0).epsilon(0.02));
    CHECK(std::abs(sxy / n) < 0.02);
}
