#pragma once

#include <cstdint>

namespace sunbranch {

/// SplitMix64: seedable 64-bit generator (golden-ratio increment followed by
/// an avalanche finalizer). Chosen for cross-platform byte stability; all
/// randomized output of the library derives from it, never from platform
/// library distributions.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1), 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Standard normal pair via the Box-Muller transform of two uniforms.
    /// The first uniform is shifted into (0, 1] so the logarithm is finite.
    void next_gaussian_pair(double& z0, double& z1);

private:
    std::uint64_t state_;
};

/// Generator for sample `index` of a batch with the given seed. Each sample
/// owns an independent stream, so batches are identical for every thread
/// count and can be produced in any order.
SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t index);

} // namespace sunbranch
