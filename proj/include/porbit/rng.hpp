// SplitMix64: counter-based 64-bit generator with stream splitting.
//
// The state advances by a fixed Weyl increment and every output is a hash
// of the current counter, so a generator is fully determined by its seed.
// Independent streams are derived by hashing (seed, stream-id) pairs, which
// keeps per-task results reproducible no matter how work is scheduled
// across threads.

#pragma once

#include <cstdint>
#include <cmath>
#include <initializer_list>
#include <numbers>

namespace porbit {

namespace detail {

// Finalizer from the SplitMix64 reference implementation.
inline constexpr std::uint64_t avalanche64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace detail

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : seed_(seed), state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return detail::avalanche64(state_);
    }

    /// Seed of stream `id` derived from `seed`: avalanche of the mixed pair.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t id) {
        return detail::avalanche64(seed + 0x9e3779b97f4a7c15ULL * (id + 1));
    }

    static std::uint64_t derive(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
        for (std::uint64_t id : path) seed = derive(seed, id);
        return seed;
    }

    /// Generator for an independent child stream. Splitting depends only on
    /// the seed, never on how far this generator has advanced.
    SplitMix64 split(std::uint64_t id) const { return SplitMix64(derive(seed_, id)); }

    std::uint64_t seed() const { return seed_; }

    /// Uniform double in [0, 1), 53 significant bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller; the paired deviate is cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 1.0 - uniform();  // (0, 1]
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    /// Unbiased integer in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

private:
    std::uint64_t seed_;
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace porbit
