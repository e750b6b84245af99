#pragma once

#include <cstdint>

namespace ordclust {

/// Deterministic 64-bit generator (SplitMix64). All sampling in the library
/// goes through this engine so that streams are bit-identical across
/// platforms; the standard-library engines are avoided because their
/// distribution adaptors are implementation-defined.
class Rng {
 public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in (0, 1); never returns an exact endpoint.
    double next_open() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound) by rejection; unbiased.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0ULL - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

 private:
    std::uint64_t state_;
};

/// Derives an independent stream from (seed, tag). Streams with distinct
/// tags behave as unrelated generators, which keeps every operation a pure
/// function of (inputs, seed) even when it draws from several logical
/// sources.
inline Rng substream(std::uint64_t seed, std::uint64_t tag) {
    Rng mixer(seed ^ (0x94d049bb133111ebULL * (tag + 1)));
    return Rng(mixer.next_u64());
}

}  // namespace ordclust
