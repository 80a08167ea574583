#pragma once

#include <cstdint>
#include <random>

namespace scc {

// Seeded deterministic generator. All randomized code in the library draws
// through this wrapper so that a fixed seed reproduces the same run on any
// platform (mt19937_64 output is pinned by the standard; the derived draws
// below avoid distribution classes, whose sequences are not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_unit() < p; }

    // Uniform in [0, n); unbiased via rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = (0 - n) % n;
        std::uint64_t x = engine_();
        while (x < limit)
            x = engine_();
        return x % n;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace scc
