#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <vector>

namespace clonot::rng {

// splitmix64 scrambler; one 64-bit state word, full period.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a ^ (b + 0x9E3779B97F4A7C15ull + (a << 6) + (a >> 2));
    return splitmix64_next(s);
}

// Keyed substream derivation: identical (seed, path) always yields the same
// substream seed, independent of thread count or evaluation order.
inline std::uint64_t derive(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = seed;
    for (std::uint64_t p : path)
        s = mix(s, p);
    return s;
}

// Deterministic random stream. Not cryptographic.
class Stream {
public:
    explicit Stream(std::uint64_t seed) : state_(seed) {
        splitmix64_next(state_);  // decorrelate adjacent seeds
    }

    std::uint64_t next_u64() { return splitmix64_next(state_); }

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller; second deviate cached.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 1.0 - uniform();  // (0, 1]
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double t = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(t);
        has_spare_ = true;
        return r * std::cos(t);
    }

    std::complex<double> gaussian_complex() {
        double re = gaussian();
        double im = gaussian();
        return {re, im};
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Uniform sample from the probability simplex (flat Dirichlet), d >= 1.
inline std::vector<double> simplex_uniform(Stream& stream, int d) {
    std::vector<double> p(static_cast<std::size_t>(d));
    double total = 0.0;
    for (double& x : p) {
        x = -std::log(1.0 - stream.uniform());
        total += x;
    }
    for (double& x : p)
        x /= total;
    return p;
}

}  // namespace clonot::rng
