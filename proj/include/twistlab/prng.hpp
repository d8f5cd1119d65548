#pragma once

#include <cstdint>

namespace twistlab {

/// SplitMix64: tiny deterministic generator for the seeded property checks.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound).
    uint64_t below(uint64_t bound) { return bound ? next() % bound : 0; }

    /// Small signed rational with numerator in [-max, max] and denominator in [1, dmax].
    long long int_in(long long lo, long long hi) {
        return lo + (long long)below((uint64_t)(hi - lo + 1));
    }

private:
    uint64_t state_;
};

} // namespace twistlab
