#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sunbranch/weights.hpp"

namespace sunbranch {

struct BranchingEntry {
    YoungWeight gamma;
    std::int64_t multiplicity;

    bool operator==(const BranchingEntry&) const = default;
};

/// Decomposition of a restricted irrep: highest weights of the subgroup with
/// their multiplicities. Entries are kept sorted by Young coordinates so that
/// iteration order and serialized output are reproducible.
class BranchingTable {
public:
    BranchingTable(YoungWeight alpha, std::vector<BranchingEntry> entries);

    const YoungWeight& alpha() const { return alpha_; }
    const std::vector<BranchingEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    /// Multiplicity of gamma, zero when absent.
    std::int64_t multiplicity_of(const YoungWeight& gamma) const;

    std::int64_t max_multiplicity() const;

    /// Sum of multiplicity * dim over all entries (checked arithmetic).
    std::int64_t total_dimension() const;

    /// total_dimension() == weyl_dimension(alpha).
    bool dimension_sum_holds() const;

    bool operator==(const BranchingTable&) const = default;

private:
    YoungWeight alpha_;
    std::vector<BranchingEntry> entries_;
};

/// JSON rendering used by the CLI:
/// {"alpha":{"young":[...]},
///  "entries":[{"gamma":{"young":[...]},"dynkin":[...],"mult":m,"dim":d},...],
///  "dim_check":true}
std::string to_json(const BranchingTable& table, int indent = 2);

} // namespace sunbranch
