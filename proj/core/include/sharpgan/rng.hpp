#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace sharpgan {

/// Counter-based deterministic generator (splitmix64 core). Bit-identical
/// across platforms and thread counts; no global state.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [-1, 1].
    double next_signed_unit() { return 2.0 * next_double() - 1.0; }

    /// Uniform integer in [lo, hi] inclusive.
    int64_t next_int(int64_t lo, int64_t hi) {
        const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<int64_t>(next_u64() % span);
    }

    /// Uniform real in [lo, hi).
    double next_real(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

private:
    uint64_t state_;
};

}  // namespace sharpgan
