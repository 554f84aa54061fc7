#pragma once

#include <cstdint>

namespace caif {

// All randomness is drawn from named substreams derived from the master seed,
// so the number of draws taken from one stream can never shift the values
// seen by another. This is what makes runs bit-reproducible regardless of
// thread count, and lets reference implementations replay individual streams.
inline std::uint64_t splitmix_next(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Deterministic combination of a seed with a stream/run label.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t s = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
    return splitmix_next(s);
}

class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), state_(seed) {}

    /// Child stream keyed off this stream's seed; independent of draws taken.
    RngStream derive(std::uint64_t salt) const { return RngStream(mix_seed(seed_, salt)); }

    std::uint64_t next_u64() { return splitmix_next(state_); }

    /// Uniform double in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Unbiased uniform integer in [0, n). Requires n >= 1.
    std::uint32_t next_below(std::uint32_t n) {
        const std::uint64_t threshold = (0 - static_cast<std::uint64_t>(n)) % n;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return static_cast<std::uint32_t>(r % n);
        }
    }

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::uint64_t state_;
};

// Stream labels. Values are part of the reproducibility contract: changing
// them changes every seeded result.
enum class StreamLabel : std::uint64_t {
    Layout = 1,
    StartPositions = 2,
    SenseA = 3,
    SenseB = 4,
    TieA = 5,
    TieB = 6,
    Bootstrap = 7,
};

inline RngStream labeled_stream(std::uint64_t seed, StreamLabel label) {
    return RngStream(mix_seed(seed, static_cast<std::uint64_t>(label)));
}

}  // namespace caif
