#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <utility>

namespace geobench {

// splitmix64: tiny, fast, and stable across platforms and standard-library
// versions. Seeded pipeline stages rely on its output being reproducible
// byte-for-byte, which std::shuffle and the std distributions do not promise.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, bound) via rejection sampling.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % bound;
    }

    // Uniform in [0, 1) with 53 bits of precision.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Standard normal via Box-Muller.
    double next_normal() {
        double u1 = next_double();
        double u2 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    // Rayleigh(sigma) via inverse CDF.
    double next_rayleigh(double sigma) {
        double u = next_double();
        return sigma * std::sqrt(-2.0 * std::log1p(-u));
    }

    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::uint64_t state_;
};

// Derives an independent stream from (seed, key), e.g. per-country or
// per-record generators that do not disturb each other.
inline SeededRng derive_rng(std::uint64_t seed, std::uint64_t key) {
    SeededRng mixer(seed ^ (key * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL));
    return SeededRng(mixer.next_u64());
}

}  // namespace geobench
