#pragma once

#include <cmath>
#include <cstdint>

namespace stairconv {

// Deterministic substream derivation: every consumer of randomness owns a
// generator seeded by a hash of (root seed, stream ids). Results therefore do
// not depend on scheduling or worker count, only on the ids.

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t mix_seed(uint64_t seed, uint64_t a = 0, uint64_t b = 0, uint64_t c = 0) {
    uint64_t s = seed;
    uint64_t h = splitmix64(s);
    s ^= a + 0x9e3779b97f4a7c15ULL;
    h ^= splitmix64(s);
    s ^= b + 0xd1b54a32d192ed03ULL;
    h ^= splitmix64(s);
    s ^= c + 0x8cb92ba72f3d8dd7ULL;
    h ^= splitmix64(s);
    return h;
}

/// xoshiro256++ (Blackman & Vigna, public domain reference implementation).
class Xoshiro256 {
public:
    using result_type = uint64_t;

    explicit Xoshiro256(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }

    static constexpr uint64_t min() { return 0; }
    static constexpr uint64_t max() { return ~0ULL; }

    uint64_t operator()() {
        const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0,1) with 53 random bits.
    double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [0, n).
    uint64_t below(uint64_t n) {
        // Rejection-free would bias for huge n; n here is small (population
        // sizes, index ranges), so the modulo bias is negligible but we still
        // reject to keep streams exactly uniform.
        uint64_t threshold = (~n + 1) % n;  // = 2^64 mod n
        for (;;) {
            uint64_t r = (*this)();
            if (r >= threshold) return r % n;
        }
    }

    /// Standard normal via Box-Muller (one value per call; spare discarded
    /// to keep per-call stream usage fixed).
    double gaussian();

private:
    static constexpr uint64_t rotl(uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    uint64_t s_[4];
};

inline double Xoshiro256::gaussian() {
    // Marsaglia polar method, fixed draw count via rejection loop.
    for (;;) {
        double u = 2.0 * uniform01() - 1.0;
        double v = 2.0 * uniform01() - 1.0;
        double r2 = u * u + v * v;
        if (r2 > 0.0 && r2 < 1.0) {
            return u * std::sqrt(-2.0 * std::log(r2) / r2);
        }
    }
}

}  // namespace stairconv
