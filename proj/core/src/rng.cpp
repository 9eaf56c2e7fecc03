#include "sunbranch/rng.hpp"

#include <cmath>
#include <numbers>

namespace sunbranch {

void SplitMix64::next_gaussian_pair(double& z0, double& z1) {
    const double u1 = static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; // (0, 1]
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    z0 = r * std::cos(t);
    z1 = r * std::sin(t);
}

SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t index) {
    // Derive the stream state the way SplitMix64 derives split children: mix
    // the batch seed with a golden-ratio multiple of the sample index, then
    // run the finalizer once so neighbouring indices decorrelate.
    SplitMix64 g(seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
    g.next();
    return g;
}

} // namespace sunbranch
