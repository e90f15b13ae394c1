#pragma once

#include <cstdint>

namespace cqms {

// Counter-based deterministic generator. Output i is a pure function of
// (seed, i), so randomized suites reproduce bit-for-bit across platforms
// and runs regardless of call order.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed = 0) : seed_(seed) {}

    std::uint64_t next_u64() { return value_at(counter_++); }

    /// Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) { return n ? next_u64() % n : 0; }

    std::uint64_t value_at(std::uint64_t counter) const {
        std::uint64_t z = seed_ + (counter + 1) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t seed_ = 0;
    std::uint64_t counter_ = 0;
};

} // namespace cqms
