// Seeded randomness with bit-reproducible results. std::mt19937_64 has a
// standardized output sequence; the bounded/real draws below avoid
// std::*_distribution, whose mappings differ between standard libraries.
#ifndef NOVBOTT_RNG_HPP
#define NOVBOTT_RNG_HPP

#include <cstdint>
#include <random>

namespace novbott {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed), seed_mix_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, bound); bound > 0. Rejection sampling keeps it unbiased.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    // Uniform on [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // Uniform on [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double real(double lo, double hi) { return lo + (hi - lo) * unit(); }

    // Derives an independent stream, so per-degree work is schedule-invariant.
    Rng fork(std::uint64_t stream) const {
        std::uint64_t h = seed_mix_ ^ (0x9e3779b97f4a7c15ULL + stream);
        h ^= h >> 30;
        h *= 0xbf58476d1ce4e5b9ULL;
        h ^= h >> 27;
        h *= 0x94d049bb133111ebULL;
        h ^= h >> 31;
        return Rng(h);
    }

    static Rng forked(std::uint64_t seed, std::uint64_t stream) {
        return Rng(seed).fork(stream);
    }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_mix_;
};

}  // namespace novbott

#endif
