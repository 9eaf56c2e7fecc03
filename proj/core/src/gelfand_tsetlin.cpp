#include "sunbranch/gelfand_tsetlin.hpp"

#include <map>
#include <utility>

#include "sunbranch/checked_int.hpp"

namespace sunbranch {

GTPattern::GTPattern(std::vector<std::vector<std::int64_t>> rows) : rows_(std::move(rows)) {
    if (!valid(rows_)) {
        throw InvalidArgumentError("GTPattern: rows must interlace");
    }
}

bool GTPattern::valid(const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t n = rows.size();
    if (n == 0) return false;
    for (std::size_t j = 0; j < n; ++j) {
        if (rows[j].size() != n - j) return false;
    }
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const auto& upper = rows[j];
        const auto& lower = rows[j + 1];
        for (std::size_t i = 0; i < lower.size(); ++i) {
            if (!(upper[i] >= lower[i] && lower[i] >= upper[i + 1])) return false;
        }
    }
    return true;
}

std::vector<YoungWeight> enumerate_interlacing(const YoungWeight& alpha) {
    const int n = alpha.rank();
    if (n < 2) {
        throw InvalidArgumentError("enumerate_interlacing: rank must be at least 2");
    }
    std::vector<std::int64_t> beta(static_cast<std::size_t>(n - 1));
    for (int i = 0; i < n - 1; ++i) beta[static_cast<std::size_t>(i)] = alpha.part(i);

    std::vector<YoungWeight> out;
    // odometer over [alpha_{i+1}, alpha_i], most significant digit first
    while (true) {
        out.emplace_back(beta);
        int k = n - 2;
        while (k >= 0 && beta[static_cast<std::size_t>(k)] == alpha.part(k + 1)) {
            beta[static_cast<std::size_t>(k)] = alpha.part(k);
            --k;
        }
        if (k < 0) break;
        --beta[static_cast<std::size_t>(k)];
    }
    return out;
}

namespace {

std::int64_t gt_count_memo(const YoungWeight& alpha,
                           std::map<std::vector<std::int64_t>, std::int64_t>& memo) {
    if (alpha.rank() == 1) return 1;
    const YoungWeight key = su_normalize(alpha);
    if (auto it = memo.find(key.parts()); it != memo.end()) return it->second;
    Int128 total = 0;
    for (const auto& beta : enumerate_interlacing(key)) {
        total = checked_add(total, gt_count_memo(beta, memo));
    }
    const std::int64_t count = checked_narrow(total);
    memo.emplace(key.parts(), count);
    return count;
}

void enumerate_patterns_rec(std::vector<std::vector<std::int64_t>>& rows,
                            std::vector<GTPattern>& out) {
    const YoungWeight current(rows.back());
    if (current.rank() == 1) {
        out.emplace_back(rows);
        return;
    }
    for (const auto& beta : enumerate_interlacing(current)) {
        rows.push_back(beta.parts());
        enumerate_patterns_rec(rows, out);
        rows.pop_back();
    }
}

} // namespace

std::int64_t gt_count(const YoungWeight& alpha) {
    // The memo is confined to this call, so concurrent callers never share
    // state and results cannot depend on interleaving.
    std::map<std::vector<std::int64_t>, std::int64_t> memo;
    return gt_count_memo(alpha, memo);
}

std::vector<GTPattern> enumerate_gt_patterns(const YoungWeight& alpha) {
    std::vector<GTPattern> out;
    std::vector<std::vector<std::int64_t>> rows{alpha.parts()};
    enumerate_patterns_rec(rows, out);
    return out;
}

BranchingTable branch_u(const YoungWeight& alpha) {
    std::vector<BranchingEntry> entries;
    for (auto& beta : enumerate_interlacing(alpha)) {
        entries.push_back({std::move(beta), 1});
    }
    return BranchingTable(alpha, std::move(entries));
}

BranchingTable branch_su_oracle(const YoungWeight& alpha) {
    if (!alpha.su_normalized()) {
        throw InvalidArgumentError(
            "branch_su_oracle: alpha must be SU-normalized (last part zero)");
    }
    std::map<std::vector<std::int64_t>, std::int64_t> mult;
    for (const auto& beta : enumerate_interlacing(alpha)) {
        mult[su_normalize(beta).parts()] += 1;
    }
    std::vector<BranchingEntry> entries;
    entries.reserve(mult.size());
    for (auto& [parts, m] : mult) {
        entries.push_back({YoungWeight(parts), m});
    }
    return BranchingTable(alpha, std::move(entries));
}

} // namespace sunbranch
