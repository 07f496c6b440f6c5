#pragma once

#include <cstdint>

namespace crush {

// Stream key purpose tags. Streams with distinct keys are statistically
// independent, so parallel schedules cannot change results: every (purpose,
// level, sample) triple always sees the same sequence for a given masterSeed.
enum class StreamPurpose : std::uint64_t {
    generic = 0,
    monteCarlo = 1,
    levelSample = 2,
    uniformity = 3,
};

// Keyed random stream: xoshiro256** seeded through a splitmix64 chain over
// (masterSeed, purpose, levelIndex, sampleIndex). Construction is cheap enough
// to derive one stream per sample.
class RngStream {
public:
    RngStream(std::uint64_t masterSeed, StreamPurpose purpose, std::uint64_t levelIndex = 0,
              std::uint64_t sampleIndex = 0)
        : masterSeed_(masterSeed) {
        std::uint64_t z = masterSeed;
        z = mix(z + 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(purpose));
        z = mix(z + 0x9e3779b97f4a7c15ull + levelIndex);
        z = mix(z + 0x9e3779b97f4a7c15ull + sampleIndex);
        for (auto& s : state_) {
            z += 0x9e3779b97f4a7c15ull;
            s = mix(z);
        }
    }

    std::uint64_t master_seed() const { return masterSeed_; }

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

    // Unbiased uniform draw from [0, n), n >= 1 (Lemire multiply-shift with
    // rejection; the rejection loop keeps the distribution exactly uniform).
    std::uint32_t below(std::uint32_t n) {
        std::uint64_t m = (next_u64() >> 32) * std::uint64_t(n);
        auto low = std::uint32_t(m);
        if (low < n) {
            const std::uint32_t threshold = std::uint32_t(0u - n) % n;
            while (low < threshold) {
                m = (next_u64() >> 32) * std::uint64_t(n);
                low = std::uint32_t(m);
            }
        }
        return std::uint32_t(m >> 32);
    }

    // Uniform in [0, 1) with 53 random bits.
    double unit_real() { return double(next_u64() >> 11) * 0x1.0p-53; }

private:
    static std::uint64_t rotl(std::uint64_t x, int r) { return (x << r) | (x >> (64 - r)); }

    // splitmix64 finalizer; good avalanche, standard seeding practice.
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t masterSeed_;
    std::uint64_t state_[4];
};

}  // namespace crush
