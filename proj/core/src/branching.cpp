#include "sunbranch/branching.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "sunbranch/checked_int.hpp"
#include "sunbranch/kernels.hpp"

namespace sunbranch {

namespace {

constexpr double kIntegralityTol = 1e-9;

void require_su_normalized(const YoungWeight& alpha, const char* who) {
    if (!alpha.su_normalized()) {
        throw InvalidArgumentError(std::string(who) +
                                   ": alpha must be SU-normalized (last part zero)");
    }
    if (alpha.rank() < 2) {
        throw InvalidArgumentError(std::string(who) + ": rank must be at least 2");
    }
}

/// Visit every dominant gamma of rank m with gamma_{m} = 0 and
/// gamma_1 <= bound, in no particular order.
void for_each_dominant(int m, std::int64_t bound,
                       const std::function<void(const std::vector<std::int64_t>&)>& visit) {
    std::vector<std::int64_t> gamma(static_cast<std::size_t>(m), 0);
    std::function<void(int, std::int64_t)> rec = [&](int pos, std::int64_t upper) {
        if (pos == m - 1) {
            visit(gamma);
            return;
        }
        for (std::int64_t v = upper; v >= 0; --v) {
            gamma[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, v);
        }
        gamma[static_cast<std::size_t>(pos)] = 0;
    };
    rec(0, bound);
}

std::int64_t kernel_multiplicity(const RealSpectrum& shifted_alpha,
                                 const YoungWeight& gamma, const YoungWeight& rho_sub) {
    const double v = kbar(shifted_alpha, to_spectrum(add(gamma, rho_sub)));
    const double r = std::round(v);
    if (std::abs(v - r) > kIntegralityTol || r < 0.0) {
        throw InternalConsistencyError("branch_su: kernel value " + std::to_string(v) +
                                       " is not a nonnegative integer at gamma " +
                                       to_string(gamma));
    }
    return static_cast<std::int64_t>(r);
}

} // namespace

BranchingTable branch_su(const YoungWeight& alpha) {
    require_su_normalized(alpha, "branch_su");
    const int n = alpha.rank();
    const RealSpectrum shifted = to_spectrum(add(alpha, weyl_vector(n)));
    const YoungWeight rho_sub = weyl_vector(n - 1);

    std::vector<BranchingEntry> entries;
    // Any gamma with positive multiplicity lies in the closed support polytope
    // of alpha itself, whose first coordinate is bounded by alpha_1.
    for_each_dominant(n - 1, alpha.part(0), [&](const std::vector<std::int64_t>& parts) {
        const YoungWeight gamma(parts);
        const std::int64_t m = kernel_multiplicity(shifted, gamma, rho_sub);
        if (m > 0) entries.push_back({gamma, m});
    });
    return BranchingTable(alpha, std::move(entries));
}

std::int64_t count_constituents(const YoungWeight& alpha) {
    require_su_normalized(alpha, "count_constituents");
    const int n = alpha.rank();
    std::int64_t count = 0;
    for_each_dominant(n - 1, alpha.part(0), [&](const std::vector<std::int64_t>& gamma) {
        std::int64_t hi = INT64_MAX;
        std::int64_t lo = INT64_MIN;
        for (int i = 0; i < n - 1; ++i) {
            hi = std::min(hi, alpha.part(i) - gamma[static_cast<std::size_t>(i)]);
            lo = std::max(lo, alpha.part(i + 1) - gamma[static_cast<std::size_t>(i)]);
        }
        if (lo <= hi) ++count;
    });
    return count;
}

std::int64_t max_multiplicity(const YoungWeight& alpha) {
    require_su_normalized(alpha, "max_multiplicity");
    const DynkinLabel dynkin = young_to_dynkin(alpha);
    std::int64_t least = INT64_MAX;
    for (auto l : dynkin.labels()) least = std::min(least, l);
    return least + 1;
}

std::vector<StretchPoint> stretch_profile(const YoungWeight& alpha, const YoungWeight& gamma,
                                          std::int64_t s_max,
                                          const std::vector<std::int64_t>& gamma_dynkin_offset) {
    require_su_normalized(alpha, "stretch_profile");
    if (!gamma.su_normalized() || gamma.rank() != alpha.rank() - 1) {
        throw InvalidArgumentError(
            "stretch_profile: gamma must be SU-normalized of rank alpha rank - 1");
    }
    if (s_max < 1) throw InvalidArgumentError("stretch_profile: s_max must be >= 1");
    if (!gamma_dynkin_offset.empty() &&
        gamma_dynkin_offset.size() != static_cast<std::size_t>(gamma.rank() - 1)) {
        throw InvalidArgumentError("stretch_profile: offset size must match gamma labels");
    }

    const int n = alpha.rank();
    const YoungWeight rho = weyl_vector(n);
    const YoungWeight rho_sub = weyl_vector(n - 1);
    const DynkinLabel gamma_dynkin = young_to_dynkin(gamma);

    std::vector<StretchPoint> out;
    out.reserve(static_cast<std::size_t>(s_max));
    for (std::int64_t s = 1; s <= s_max; ++s) {
        std::vector<std::int64_t> labels(gamma_dynkin.labels());
        for (std::size_t i = 0; i < labels.size(); ++i) {
            labels[i] = checked_narrow(checked_mul(labels[i], s));
            if (!gamma_dynkin_offset.empty()) {
                labels[i] = checked_narrow(checked_add(labels[i], gamma_dynkin_offset[i]));
            }
        }
        const YoungWeight gamma_s = dynkin_to_young(DynkinLabel(std::move(labels)));
        const RealSpectrum shifted = to_spectrum(add(scale(alpha, s), rho));
        out.push_back({s, kernel_multiplicity(shifted, gamma_s, rho_sub)});
    }
    return out;
}

std::vector<PatternPoint> multiplicity_pattern(const YoungWeight& alpha, std::int64_t s) {
    if (alpha.rank() != 4) {
        throw InvalidArgumentError("multiplicity_pattern: alpha must have rank 4");
    }
    require_su_normalized(alpha, "multiplicity_pattern");
    if (s < 1) throw InvalidArgumentError("multiplicity_pattern: s must be >= 1");

    const BranchingTable table = branch_su(scale(alpha, s));
    std::vector<PatternPoint> out;
    out.reserve(table.size());
    for (const auto& e : table.entries()) {
        out.push_back({young_to_dynkin(e.gamma), e.multiplicity});
    }
    return out;
}

} // namespace sunbranch
