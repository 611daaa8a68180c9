#include "fracdiff/fft.hpp"

#include <cmath>

#include "fracdiff/errors.hpp"

namespace fracdiff {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

} // namespace

void fft_pow2(std::vector<std::complex<double>>& a, bool inverse) {
    std::size_t n = a.size();
    if (!is_pow2(n)) throw domain_error("fft_pow2: size must be a power of two");
    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        double ang = 2.0 * kPi / (double)len * (inverse ? 1.0 : -1.0);
        std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                std::complex<double> u = a[i + j];
                std::complex<double> v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse) {
        for (auto& x : a) x /= (double)n;
    }
}

std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& input,
                                      bool inverse) {
    std::size_t n = input.size();
    if (n == 0) return {};
    if (is_pow2(n)) {
        auto a = input;
        fft_pow2(a, inverse);
        return a;
    }
    // Bluestein: X_k = b_k* sum_m (x_m b_m*) b_{k-m}, b_m = exp(i pi m^2 / n)
    double dir = inverse ? 1.0 : -1.0;
    std::vector<std::complex<double>> chirp(n);
    for (std::size_t m = 0; m < n; ++m) {
        // m^2 mod 2n avoids precision loss in the phase for large m
        std::size_t m2 = (m * m) % (2 * n);
        double ang = dir * kPi * (double)m2 / (double)n;
        chirp[m] = {std::cos(ang), std::sin(ang)};
    }
    std::size_t l = next_pow2(2 * n - 1);
    std::vector<std::complex<double>> a(l, {0.0, 0.0}), b(l, {0.0, 0.0});
    for (std::size_t m = 0; m < n; ++m) a[m] = input[m] * chirp[m];
    for (std::size_t m = 0; m < n; ++m) {
        b[m] = std::conj(chirp[m]);
        if (m > 0) b[l - m] = std::conj(chirp[m]);
    }
    fft_pow2(a, false);
    fft_pow2(b, false);
    for (std::size_t i = 0; i < l; ++i) a[i] *= b[i];
    fft_pow2(a, true);
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * chirp[k];
    if (inverse) {
        for (auto& x : out) x /= (double)n;
    }
    return out;
}

} // namespace fracdiff
