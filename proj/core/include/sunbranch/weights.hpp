#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sunbranch/errors.hpp"

namespace sunbranch {

/// Dominant weight of U(n) in Young coordinates: weakly decreasing,
/// nonnegative integer row lengths. Immutable value type; the invariants are
/// checked once at construction and every operation may rely on them.
class YoungWeight {
public:
    explicit YoungWeight(std::vector<std::int64_t> parts);
    YoungWeight(std::initializer_list<std::int64_t> parts)
        : YoungWeight(std::vector<std::int64_t>(parts)) {}

    int rank() const { return static_cast<int>(parts_.size()); }
    std::int64_t part(int i) const { return parts_[static_cast<std::size_t>(i)]; }
    const std::vector<std::int64_t>& parts() const { return parts_; }

    /// True when the last part is zero (no full columns left).
    bool su_normalized() const { return parts_.back() == 0; }

    std::int64_t sum() const;

    bool operator==(const YoungWeight&) const = default;
    auto operator<=>(const YoungWeight&) const = default;

private:
    std::vector<std::int64_t> parts_;
};

/// Weight components in the fundamental-weight basis: the n-1 consecutive
/// differences of Young coordinates. Dominant means all labels >= 0.
class DynkinLabel {
public:
    explicit DynkinLabel(std::vector<std::int64_t> labels);
    DynkinLabel(std::initializer_list<std::int64_t> labels)
        : DynkinLabel(std::vector<std::int64_t>(labels)) {}

    int size() const { return static_cast<int>(labels_.size()); }
    std::int64_t label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
    const std::vector<std::int64_t>& labels() const { return labels_; }

    bool operator==(const DynkinLabel&) const = default;
    auto operator<=>(const DynkinLabel&) const = default;

private:
    std::vector<std::int64_t> labels_;
};

/// Weakly decreasing real vector: an eigenvalue list or a real kernel
/// argument.
class RealSpectrum {
public:
    explicit RealSpectrum(std::vector<double> values);
    RealSpectrum(std::initializer_list<double> values)
        : RealSpectrum(std::vector<double>(values)) {}

    int rank() const { return static_cast<int>(values_.size()); }
    double value(int i) const { return values_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& values() const { return values_; }

    bool operator==(const RealSpectrum&) const = default;

private:
    std::vector<double> values_;
};

// ---------------------------------------------------------------------------
// Coordinate conversions and basic invariants
// ---------------------------------------------------------------------------

/// labels[i] = parts[i] - parts[i+1].
DynkinLabel young_to_dynkin(const YoungWeight& w);

/// SU-normalized weight with parts[i] = sum of labels[i..]. Rejects negative
/// labels.
YoungWeight dynkin_to_young(const DynkinLabel& d);

/// {n-1, n-2, ..., 1, 0}.
YoungWeight weyl_vector(int n);

/// Subtract the last part from every part (delete full columns).
YoungWeight su_normalize(const YoungWeight& w);

/// b_i - b_{n-1}: the spacings of a spectrum, last entry zero.
RealSpectrum spacings(const RealSpectrum& b);

/// prod_{i<j} (x_i - x_j); zero iff two entries coincide. The span overload
/// accepts entries in any order (the product is antisymmetric under swaps).
double vandermonde(const RealSpectrum& x);
double vandermonde(std::span<const double> x);

/// Weyl dimension formula dim = Delta(alpha + rho) / Delta(rho), evaluated in
/// checked 128-bit integer arithmetic.
std::int64_t weyl_dimension(const YoungWeight& alpha);

// ---------------------------------------------------------------------------
// Small helpers used throughout the library
// ---------------------------------------------------------------------------

/// Entrywise sum of two weights of equal rank.
YoungWeight add(const YoungWeight& a, const YoungWeight& b);

/// Entrywise multiple s*w, s >= 0.
YoungWeight scale(const YoungWeight& w, std::int64_t s);

/// The weight viewed as a real spectrum.
RealSpectrum to_spectrum(const YoungWeight& w);

std::string to_string(const YoungWeight& w);
std::string to_string(const DynkinLabel& d);
std::string to_string(const RealSpectrum& s);

} // namespace sunbranch
