#pragma once

#include <cstdint>
#include <random>

namespace polyext {

/// Deterministic random source. Doubles are produced from raw 64-bit draws
/// rather than std::uniform_real_distribution, so sequences are identical
/// across standard library implementations.
class Rng {
  public:
    explicit Rng(uint64_t seed) : engine_(mix(seed)) {}

    /// Independent stream for (seed, index); parallel and serial restart
    /// schedules see the same per-restart sequences.
    static Rng stream(uint64_t seed, uint64_t index) {
        return Rng(mix(seed + 0x9E3779B97F4A7C15ULL * (index + 1)));
    }

    uint64_t next() { return engine_(); }

    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(next() % span);
    }

  private:
    static uint64_t mix(uint64_t x) {  // splitmix64 finalizer
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    std::mt19937_64 engine_;
};

}  // namespace polyext
