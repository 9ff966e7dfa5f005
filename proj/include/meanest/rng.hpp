#pragma once

#include <cmath>
#include <cstdint>

namespace meanest {

/// Counter-based pseudo-random stream (splitmix64 core).
///
/// The i-th output is a pure function of (key, i), so streams are splittable:
/// substream(k) derives an independent stream keyed by the parent seed and k.
/// Batch generation and Monte Carlo trials each get their own substream and
/// therefore produce identical results regardless of execution order.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : key_(seed) {}

    /// Independent child stream for batch/trial index `idx`.
    Rng substream(std::uint64_t idx) const {
        return Rng(mix64(key_ ^ (kGolden * (idx + 1))));
    }

    std::uint64_t next_u64() { return mix64(key_ + (++counter_) * kGolden); }

    /// Uniform in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform index in [0, n). Multiply-shift; bias is O(n / 2^64).
    std::size_t uniform_index(std::size_t n) {
        using u128 = unsigned __int128;
        return static_cast<std::size_t>(
            (static_cast<u128>(next_u64()) * static_cast<u128>(n)) >> 64);
    }

    double uniform(double lo, double hi) {
        return lo + next_double() * (hi - lo);
    }

    /// Box-Muller normal deviate.
    double normal(double mean = 0.0, double stddev = 1.0) {
        double u1 = next_double();
        if (u1 < 0x1.0p-60) u1 = 0x1.0p-60;
        const double u2 = next_double();
        const double z = std::sqrt(-2.0 * std::log(u1)) *
                         std::cos(2.0 * 3.14159265358979323846 * u2);
        return mean + z * stddev;
    }

    static std::uint64_t mix64(std::uint64_t x) {
        x ^= x >> 30;
        x *= 0xBF58476D1CE4E5B9ull;
        x ^= x >> 27;
        x *= 0x94D049BB133111EBull;
        x ^= x >> 31;
        return x;
    }

private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace meanest
