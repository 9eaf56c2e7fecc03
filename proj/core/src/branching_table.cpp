#include "sunbranch/branching_table.hpp"

#include <algorithm>

#include "json.hpp"

#include "sunbranch/checked_int.hpp"

namespace sunbranch {

BranchingTable::BranchingTable(YoungWeight alpha, std::vector<BranchingEntry> entries)
    : alpha_(std::move(alpha)), entries_(std::move(entries)) {
    for (const auto& e : entries_) {
        if (e.multiplicity < 1) {
            throw InvalidArgumentError("BranchingTable: multiplicities must be positive");
        }
        if (e.gamma.rank() != alpha_.rank() - 1) {
            throw InvalidArgumentError("BranchingTable: entry rank must be alpha rank - 1");
        }
    }
    std::sort(entries_.begin(), entries_.end(),
              [](const BranchingEntry& a, const BranchingEntry& b) { return a.gamma < b.gamma; });
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
        if (entries_[i].gamma == entries_[i + 1].gamma) {
            throw InvalidArgumentError("BranchingTable: duplicate entry");
        }
    }
}

std::int64_t BranchingTable::multiplicity_of(const YoungWeight& gamma) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), gamma,
        [](const BranchingEntry& e, const YoungWeight& g) { return e.gamma < g; });
    if (it != entries_.end() && it->gamma == gamma) return it->multiplicity;
    return 0;
}

std::int64_t BranchingTable::max_multiplicity() const {
    std::int64_t m = 0;
    for (const auto& e : entries_) m = std::max(m, e.multiplicity);
    return m;
}

std::int64_t BranchingTable::total_dimension() const {
    Int128 total = 0;
    for (const auto& e : entries_) {
        total = checked_add(total, checked_mul(e.multiplicity, weyl_dimension(e.gamma)));
    }
    return checked_narrow(total);
}

bool BranchingTable::dimension_sum_holds() const {
    return total_dimension() == weyl_dimension(alpha_);
}

std::string to_json(const BranchingTable& table, int indent) {
    nlohmann::ordered_json j;
    j["alpha"] = {{"young", table.alpha().parts()}};
    auto entries = nlohmann::ordered_json::array();
    for (const auto& e : table.entries()) {
        nlohmann::ordered_json je;
        je["gamma"] = {{"young", e.gamma.parts()}};
        je["dynkin"] = e.gamma.rank() >= 2 ? young_to_dynkin(e.gamma).labels()
                                           : std::vector<std::int64_t>{};
        je["mult"] = e.multiplicity;
        je["dim"] = weyl_dimension(e.gamma);
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    j["dim_check"] = table.dimension_sum_holds();
    return j.dump(indent);
}

} // namespace sunbranch
