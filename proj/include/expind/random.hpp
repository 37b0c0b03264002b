#pragma once

// Seeded randomness with a fixed, platform-independent output sequence.

#include <cstdint>

namespace expind {

inline constexpr std::uint64_t splitmix64_step(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Stateless mix of a key tuple; any (seed, a, b, c) can be evaluated in isolation.
inline constexpr std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                                            std::uint64_t c = 0) {
    std::uint64_t s = seed;
    std::uint64_t h = splitmix64_step(s);
    s = h ^ a;
    h = splitmix64_step(s);
    s = h ^ b;
    h = splitmix64_step(s);
    s = h ^ c;
    return splitmix64_step(s);
}

/// Uniform integer in [0, bound) from a 64-bit word (multiply-shift; bias below 2^-40 for bound < 2^24).
inline constexpr std::uint64_t scale_to(std::uint64_t word, std::uint64_t bound) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(word) * bound) >> 64);
}

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() { return splitmix64_step(state_); }
    std::uint64_t below(std::uint64_t bound) { return scale_to(next(), bound); }

private:
    std::uint64_t state_;
};

}  // namespace expind
