#ifndef FRACDIFF_RNG_HPP
#define FRACDIFF_RNG_HPP

#include <cmath>
#include <cstdint>
#include <utility>

namespace fracdiff {

// Counter-based stream built on the SplitMix64 output function. A stream is
// fully determined by (seed, stream_id): the key is hashed from both, and
// each draw finalizes key + n*gamma. Distinct stream ids give statistically
// independent sequences, so ensembles can hand one stream per agent and stay
// reproducible under any execution order.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0)
        : seed_(seed), stream_id_(stream_id), counter_(0) {
        std::uint64_t k = mix(seed + 0x9e3779b97f4a7c15ULL);
        key_ = mix(k ^ (stream_id * 0xda942042e4dd58b5ULL + 0xa0761d6478bd642fULL));
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    std::uint64_t next_u64() {
        ++counter_;
        return mix(key_ + counter_ * 0x9e3779b97f4a7c15ULL);
    }

    // uniform on [0, 1), 53 random bits
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform on the open interval (0, 1); safe to feed into log()
    double next_unit_open() {
        return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
    }

    // uniform on (-pi/2, pi/2)
    double next_angle() {
        const double pi = 3.14159265358979323846;
        return pi * (next_unit_open() - 0.5);
    }

    double next_exponential() { return -std::log(next_unit_open()); }

    // Box-Muller pair, N(0,1) each; two uniforms per pair keeps the draw
    // count per sample fixed (no rejection), which the counter design needs.
    std::pair<double, double> next_normal_pair() {
        const double two_pi = 6.28318530717958647692;
        double u1 = next_unit_open();
        double u2 = next_unit_open();
        double r = std::sqrt(-2.0 * std::log(u1));
        return {r * std::cos(two_pi * u2), r * std::sin(two_pi * u2)};
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t counter_;
    std::uint64_t key_;
};

} // namespace fracdiff

#endif
