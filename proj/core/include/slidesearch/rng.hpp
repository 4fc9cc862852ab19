#pragma once

#include <cassert>
#include <cstdint>
#include <random>

namespace slidesearch {

/// splitmix64 finalizer; used to derive independent substream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Deterministic RNG. std::mt19937_64 output is pinned by the standard,
/// and all value mappings here are written out explicitly, so a given
/// seed produces the same stream on every platform (the std::*
/// distribution classes make no such promise).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Independent stream for (seed, salt); salted streams do not overlap
    /// in practice because the engine states start far apart.
    static Rng substream(std::uint64_t seed, std::uint64_t salt) {
        return Rng(mix64(seed ^ mix64(salt + 0x5851f42d4c957f2dull)));
    }

    std::uint64_t next_u64() { return engine_(); }

    /// Unbiased draw in [0, n). Lemire multiply-shift with rejection.
    std::uint64_t below(std::uint64_t n) {
        assert(n > 0);
        unsigned __int128 m = static_cast<unsigned __int128>(engine_()) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            const std::uint64_t threshold = -n % n;  // 2^64 mod n
            while (lo < threshold) {
                m = static_cast<unsigned __int128>(engine_()) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Uniform double in [0, 1), 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace slidesearch
