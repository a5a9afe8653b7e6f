#pragma once

#include <cstdint>

namespace dcount {

// SplitMix64 (Steele, Lea & Flood / xorshift.di.unimi.it). Chosen as the
// seeding contract for `verify` because it is tiny, fully specified, and
// trivially reproducible in any language. Draws in [0, n) are taken as
// next() % n; the selection sweeps are testing sweeps, so the modulo bias
// (< 2^-44 for n <= 2^20) is irrelevant, and the sequence stays bit-exact
// across implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish draw in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

// Deterministic substream seed for a (tag, a, b) slot of a sweep, so sweep
// parts can be reordered or parallelized without changing the draws.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t a,
                                 std::uint64_t b) {
    SplitMix64 g(seed ^ (tag * 0x9E3779B97F4A7C15ULL));
    g.next();
    SplitMix64 h(g.next() ^ (a * 0xBF58476D1CE4E5B9ULL) ^ (b * 0x94D049BB133111EBULL));
    return h.next();
}

}  // namespace dcount
