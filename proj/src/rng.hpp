#ifndef ABMEQL_RNG_HPP
#define ABMEQL_RNG_HPP

#include <cstdint>

namespace abmeql {

// SplitMix64 finalizer. Used for seed expansion and replicate-seed derivation.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed for replicate k of an ensemble. Deterministic in (master_seed, k), so
// ensembles reproduce bit-for-bit regardless of how replicates are scheduled.
inline std::uint64_t replicate_seed(std::uint64_t master_seed, std::uint64_t k) {
    return mix64(master_seed ^ mix64(k));
}

// xoshiro256** (Blackman & Vigna). Small, fast, and identical output on every
// platform, which the byte-for-byte trace reproducibility guarantee relies on.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) {
            sm += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = sm;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on the open interval (0,1): (k + 1/2) * 2^-53 with k in [0, 2^53).
    // Never returns 0 or 1, so log(uniform_open()) is always finite.
    double uniform_open() {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Unbiased integer in [0, n), n >= 1. Rejection sampling on the top range.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        std::uint64_t x;
        do {
            x = next();
        } while (x < threshold);
        return x % n;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t state_[4];
};

} // namespace abmeql

#endif
