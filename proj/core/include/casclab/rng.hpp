#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>

namespace casclab {

/// splitmix64 finalizer; also used to derive substream ids.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic substream derivation: substream(base, id) is the stream key
/// for child `id` of stream `base`. Chaining these gives a stable per-work-unit
/// stream regardless of execution order, e.g.
///   substream(substream(substream(master, TAG_SHOCK), realization), shock).
inline std::uint64_t substream(std::uint64_t base, std::uint64_t id) {
    return mix64(base ^ (0x9e3779b97f4a7c15ULL + mix64(id)));
}

inline std::uint64_t hash_double_bits(double v) {
    std::uint64_t bits = 0;
    std::memcpy(&bits, &v, sizeof bits);
    return mix64(bits);
}

// Stream tags for the experiment harness (arbitrary distinct constants).
inline constexpr std::uint64_t kStreamGraph = 0x67726170686e6574ULL;
inline constexpr std::uint64_t kStreamThresholds = 0x7468726573686f6cULL;
inline constexpr std::uint64_t kStreamShock = 0x73686f636b736565ULL;
inline constexpr std::uint64_t kStreamSweep = 0x7377656570766c75ULL;

/// xoshiro256** keyed by (seed, stream_id). Identical keys reproduce identical
/// draws on every platform; distinct stream_ids give independent streams.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream_id) {
        std::uint64_t x = mix64(seed) ^ mix64(stream_id ^ 0x5851f42d4c957f2dULL);
        for (auto& w : state_) {
            x = mix64(x);
            w = x;
        }
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform in [0, 1) with 53-bit resolution.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound); bound > 0. Rejection keeps it unbiased.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = -bound % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    bool bernoulli(double p) { return next_double() < p; }

    /// Poisson via Knuth multiplication; fine for the small lambdas used here.
    std::uint64_t poisson(double lambda) {
        const double limit = std::exp(-lambda);
        std::uint64_t k = 0;
        double p = 1.0;
        do {
            ++k;
            p *= next_double();
        } while (p > limit);
        return k - 1;
    }

    /// Poisson conditioned on a strictly positive draw.
    std::uint64_t zero_truncated_poisson(double lambda) {
        for (;;) {
            const std::uint64_t k = poisson(lambda);
            if (k >= 1) return k;
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::array<std::uint64_t, 4> state_{};
};

} // namespace casclab
