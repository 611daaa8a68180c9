#ifndef FRACDIFF_FFT_HPP
#define FRACDIFF_FFT_HPP

#include <complex>
#include <vector>

namespace fracdiff {

// In-place radix-2 FFT; size must be a power of two. inverse applies the
// conjugate transform and the 1/n factor.
void fft_pow2(std::vector<std::complex<double>>& data, bool inverse);

// DFT of arbitrary length via Bluestein's chirp-z embedding.
std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& input, bool inverse);

} // namespace fracdiff

#endif
