#pragma once

#include <cstdint>
#include <random>

namespace mgh {

// Seed-derived random source.  mt19937_64 output is fixed by the standard;
// the integer draw is hand-rolled because std distributions are not portable
// across library implementations, and every corpus here must be reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [lo, hi], inclusive.
    int uniform(int lo, int hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t r = engine_();
        while (r >= limit) r = engine_();
        return lo + static_cast<int>(r % span);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace mgh
