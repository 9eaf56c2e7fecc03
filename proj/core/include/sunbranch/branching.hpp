#pragma once

#include <cstdint>
#include <vector>

#include "sunbranch/branching_table.hpp"
#include "sunbranch/weights.hpp"

namespace sunbranch {

/// SU(n) -> SU(n-1) branching from the interval kernel: the multiplicity of
/// gamma is kbar(alpha + rho_n; gamma + rho_{n-1}), evaluated for every
/// dominant normalized gamma with gamma_1 <= alpha_1 and rounded after an
/// integrality check (tolerance 1e-9; a miss raises
/// InternalConsistencyError). Zero entries are omitted.
BranchingTable branch_su(const YoungWeight& alpha);

/// Number of constituents of the decomposition: dominant normalized integer
/// gamma with max_i(alpha_{i+1} - gamma_i) <= min_i(alpha_i - gamma_i). These
/// are exactly the gamma whose rho-shift lies strictly inside the support
/// polytope of kbar(alpha + rho_n, .), so the count equals the number of
/// entries of branch_su(alpha).
std::int64_t count_constituents(const YoungWeight& alpha);

/// Largest multiplicity in the decomposition: one plus the smallest Dynkin
/// label of alpha.
std::int64_t max_multiplicity(const YoungWeight& alpha);

struct StretchPoint {
    std::int64_t s;
    std::int64_t multiplicity;
};

/// Multiplicity of s*gamma inside s*alpha for s = 1..s_max. The optional
/// Dynkin-label offset is added to s*gamma before the evaluation, which
/// expresses profiles like gamma(s) = s*gamma - 1 that probe the kernel away
/// from its plateau.
std::vector<StretchPoint> stretch_profile(
    const YoungWeight& alpha, const YoungWeight& gamma, std::int64_t s_max,
    const std::vector<std::int64_t>& gamma_dynkin_offset = {});

struct PatternPoint {
    DynkinLabel gamma;
    std::int64_t multiplicity;
};

/// Branching table of s*alpha keyed by Dynkin labels, for the rank-4 case
/// (two-label points suitable for plotting the nested multiplicity layers).
std::vector<PatternPoint> multiplicity_pattern(const YoungWeight& alpha, std::int64_t s);

} // namespace sunbranch
