#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace gabor {

/// SplitMix64 finalizer. Used to derive independent substream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Deterministic per-index substream seed. Independent of evaluation order,
/// so parallel workers can process indices in any interleaving and still
/// reproduce the single-threaded result bit for bit.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index + 1));
}

/// Seeded PRNG used for every randomized quantity in the library.
///
/// The engine is std::mt19937_64, whose output sequence is fully pinned by the
/// standard, and all distributions are implemented here by hand (the standard
/// library distribution objects are not portable across implementations).
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0, 1].
    double uniform01_open_low() { return 1.0 - uniform01(); }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Standard normal via Box-Muller (cosine branch; two uniforms per draw).
    double gaussian() {
        double u1 = uniform01_open_low();
        double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Uniform integer in [0, n) by rejection, bias-free.
    std::uint64_t uniform_below(std::uint64_t n) {
        if (n == 0) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    std::uint64_t next_u64() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

}  // namespace gabor
