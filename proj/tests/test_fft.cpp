#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "fracdiff/errors.hpp"
#include "fracdiff/fft.hpp"

using namespace fracdiff;
using cplx = std::complex<double>;

namespace {

// quadratic-time reference transform
std::vector<cplx> dft_naive(const std::vector<cplx>& x, bool inverse) {
    const double two_pi = 6.28318530717958647692;
    std::size_t n = x.size();
    std::vector<cplx> out(n);
    double dir = inverse ? 1.0 : -1.0;
    for (std::size_t k = 0; k < n; ++k) {
        cplx acc{0.0, 0.0};
        for (std::size_t m = 0; m < n; ++m) {
            double ang = dir * two_pi * (double)(k * m % n) / (double)n;
            acc += x[m] * cplx{std::cos(ang), std::sin(ang)};
        }
        out[k] = inverse ? acc / (double)n : acc;
    }
    return out;
}

} // namespace

TEST_CASE("dft matches the naive transform on power-of-two and odd lengths") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (std::size_t n : {8u, 16u, 17u, 31u, 301u}) {
        std::vector<cplx> x(n);
        for (auto& v : x) v = {unif(rng), unif(rng)};
        auto fast = dft(x, false);
        auto slow = dft_naive(x, false);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(std::abs(fast[i] - slow[i]) <= 1e-10 * (double)n);
    }
}

TEST_CASE("dft inverse is a roundtrip") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (std::size_t n : {16u, 21u, 301u}) {
        std::vector<cplx> x(n);
        for (auto& v : x) v = {unif(rng), unif(rng)};
        auto back = dft(dft(x, false), true);
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(back[i] - x[i]) <= 1e-12);
    }
}

TEST_CASE("dft preserves energy (Parseval)") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::vector<cplx> x(97);
    double time_energy = 0.0;
    for (auto& v : x) {
        v = {unif(rng), unif(rng)};
        time_energy += std::norm(v);
    }
    auto f = dft(x, false);
    double freq_energy = 0.0;
    for (const auto& v : f) freq_energy += std::norm(v);
    CHECK(freq_energy / (double)x.size() == doctest::Approx(time_energy).epsilon(1e-12));
}

TEST_CASE("fft_pow2 rejects non-power-of-two sizes") {
    std::vector<cplx> x(12, {1.0, 0.0});
    CHECK_THROWS_AS(fft_pow2(x, false), domain_error);
}
