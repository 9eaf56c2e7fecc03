#pragma once

#include <cstdint>
#include <vector>

#include "sunbranch/branching_table.hpp"
#include "sunbranch/weights.hpp"

namespace sunbranch {

/// Gelfand-Tsetlin pattern: triangular integer array whose rows interlace,
/// row j (from the top) of length n-j. Counts one basis vector of the irrep
/// labelled by the top row.
class GTPattern {
public:
    explicit GTPattern(std::vector<std::vector<std::int64_t>> rows);

    const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }
    YoungWeight top() const { return YoungWeight(rows_.front()); }

    static bool valid(const std::vector<std::vector<std::int64_t>>& rows);

    bool operator==(const GTPattern&) const = default;

private:
    std::vector<std::vector<std::int64_t>> rows_;
};

/// All integer beta of rank n-1 with alpha_i >= beta_i >= alpha_{i+1}, in
/// descending lexicographic order. Count = prod_i (alpha_i - alpha_{i+1} + 1).
std::vector<YoungWeight> enumerate_interlacing(const YoungWeight& alpha);

/// Number of Gelfand-Tsetlin patterns with the given top row, by a recursion
/// over interlacing rows memoized on the normalized weight. Agrees with
/// weyl_dimension.
std::int64_t gt_count(const YoungWeight& alpha);

/// Full pattern enumeration; size equals the irrep dimension, so reserve it
/// for small weights.
std::vector<GTPattern> enumerate_gt_patterns(const YoungWeight& alpha);

/// U(n) -> U(n-1): every interlacing weight with multiplicity one.
BranchingTable branch_u(const YoungWeight& alpha);

/// SU(n) -> SU(n-1) by interlacing and column deletion: multiplicity of gamma
/// is the number of interlacing beta whose normalization equals gamma.
/// Requires SU-normalized input.
BranchingTable branch_su_oracle(const YoungWeight& alpha);

} // namespace sunbranch
