#pragma once

#include <cstdint>

#include "gaborfock/log_complex.hpp"

namespace gaborfock {

// Deterministic 64-bit generator (splitmix64).  Used instead of <random>
// because byte-identical output for a given seed is part of the CLI
// contract, and standard-library distributions are not bit-stable across
// implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform over the centered square [-half, half]^2
    cplx square(double half) {
        double re = uniform(-half, half);
        return {re, uniform(-half, half)};
    }

private:
    std::uint64_t state_;
};

} // namespace gaborfock
