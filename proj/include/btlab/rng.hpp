#pragma once

#include <cstdint>
#include <random>

namespace btlab {

// Seeded generator with hand-rolled uniform draws. std::mt19937_64 output is
// specified bit-for-bit by the standard, and avoiding the distribution
// classes keeps every sweep byte-reproducible across standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    // Uniform on [0, n), unbiased by rejection.
    uint64_t below(uint64_t n) {
        uint64_t limit = ~uint64_t(0) - ~uint64_t(0) % n;
        uint64_t v;
        do { v = eng_(); } while (v >= limit);
        return v % n;
    }

    // Uniform on [lo, hi] inclusive.
    int64_t range(int64_t lo, int64_t hi) {
        return lo + (int64_t)below((uint64_t)(hi - lo + 1));
    }

    double real() {   // [0, 1)
        return (double)(eng_() >> 11) * 0x1.0p-53;
    }

    bool coin() { return eng_() & 1; }

private:
    std::mt19937_64 eng_;
};

}  // namespace btlab
