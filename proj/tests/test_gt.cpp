#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "sunbranch/gelfand_tsetlin.hpp"
#include "sunbranch/kernels.hpp"
#include "sunbranch/rng.hpp"

#include "support/oracles.hpp"

using namespace sunbranch;

namespace {

/// All SU-normalized weights of the given rank with entry sum <= max_sum.
std::vector<YoungWeight> normalized_weights(int rank, std::int64_t max_sum) {
    std::vector<YoungWeight> out;
    std::vector<std::int64_t> parts(static_cast<std::size_t>(rank), 0);
    std::function<void(int, std::int64_t, std::int64_t)> rec = [&](int pos, std::int64_t upper,
                                                                   std::int64_t budget) {
        if (pos == rank - 1) {
            out.emplace_back(parts);
            return;
        }
        for (std::int64_t v = 0; v <= std::min(upper, budget); ++v) {
            parts[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, v, budget - v);
        }
        parts[static_cast<std::size_t>(pos)] = 0;
    };
    // first coordinate unbounded above except by the budget
    for (std::int64_t v = 0; v <= max_sum; ++v) {
        parts[0] = v;
        if (rank == 1) {
            out.emplace_back(parts);
            break;
        }
        rec(1, v, max_sum - v);
    }
    return out;
}

} // namespace

TEST_CASE("enumerate_interlacing worked examples") {
    const auto betas = enumerate_interlacing(YoungWeight({2, 1, 0}));
    REQUIRE(betas.size() == 4);
    CHECK(betas[0] == YoungWeight({2, 1}));
    CHECK(betas[1] == YoungWeight({2, 0}));
    CHECK(betas[2] == YoungWeight({1, 1}));
    CHECK(betas[3] == YoungWeight({1, 0}));

    const auto trivial = enumerate_interlacing(YoungWeight({0, 0}));
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0] == YoungWeight({0}));

    const auto row = enumerate_interlacing(YoungWeight({3, 1}));
    REQUIRE(row.size() == 3);
    CHECK(row[0] == YoungWeight({3}));
    CHECK(row[1] == YoungWeight({2}));
    CHECK(row[2] == YoungWeight({1}));
}

TEST_CASE("enumerate_interlacing count and interlacing property") {
    SplitMix64 rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 4);
        std::vector<std::int64_t> parts(static_cast<std::size_t>(n));
        std::int64_t v = 0;
        for (int i = n - 1; i >= 0; --i) {
            parts[static_cast<std::size_t>(i)] = v;
            v += static_cast<std::int64_t>(rng.next() % 4);
        }
        const YoungWeight alpha(parts);
        const auto betas = enumerate_interlacing(alpha);
        std::int64_t expected = 1;
        for (int i = 0; i + 1 < n; ++i) expected *= alpha.part(i) - alpha.part(i + 1) + 1;
        CHECK(static_cast<std::int64_t>(betas.size()) == expected);
        for (const auto& beta : betas) {
            CHECK(interlaces(to_spectrum(alpha), to_spectrum(beta)));
        }
        for (std::size_t i = 0; i + 1 < betas.size(); ++i) {
            CHECK(betas[i] > betas[i + 1]); // descending lexicographic
        }
    }
}

TEST_CASE("gt_count worked values") {
    CHECK(gt_count(YoungWeight({2, 1, 0})) == 8);
    CHECK(gt_count(YoungWeight({1, 0})) == 2);
    CHECK(gt_count(YoungWeight({6, 4, 3, 0})) == 540);
    CHECK(gt_count(YoungWeight({5})) == 1);
}

TEST_CASE("gt_count equals weyl_dimension and the brute force") {
    for (int n = 2; n <= 5; ++n) {
        for (const auto& alpha : normalized_weights(n, 12)) {
            CHECK(gt_count(alpha) == weyl_dimension(alpha));
        }
    }
    CHECK(gt_count(YoungWeight({3, 2, 1, 0})) ==
          oracles::brute_force_gt_count({3, 2, 1, 0}));
}

TEST_CASE("full pattern enumeration") {
    const auto patterns = enumerate_gt_patterns(YoungWeight({2, 1, 0}));
    CHECK(static_cast<std::int64_t>(patterns.size()) == 8);
    for (const auto& p : patterns) {
        CHECK(GTPattern::valid(p.rows()));
        CHECK(p.top() == YoungWeight({2, 1, 0}));
    }
    CHECK(enumerate_gt_patterns(YoungWeight({6, 4, 3, 0})).size() == 540);
    CHECK_THROWS_AS(GTPattern({{2, 0}, {1}, {0}}), InvalidArgumentError);
}

TEST_CASE("branch_u") {
    const auto table = branch_u(YoungWeight({2, 1, 0}));
    CHECK(table.size() == 4);
    for (const auto& e : table.entries()) CHECK(e.multiplicity == 1);
    CHECK(table.dimension_sum_holds());

    const auto trivial = branch_u(YoungWeight({0, 0, 0}));
    REQUIRE(trivial.size() == 1);
    CHECK(trivial.entries()[0].gamma == YoungWeight({0, 0}));

    const auto two = branch_u(YoungWeight({2, 0}));
    REQUIRE(two.size() == 3);
    CHECK(two.multiplicity_of(YoungWeight({2})) == 1);
    CHECK(two.multiplicity_of(YoungWeight({1})) == 1);
    CHECK(two.multiplicity_of(YoungWeight({0})) == 1);
}

TEST_CASE("branch_su_oracle worked examples") {
    const auto adjoint = branch_su_oracle(YoungWeight({2, 1, 0}));
    REQUIRE(adjoint.size() == 3);
    CHECK(adjoint.multiplicity_of(YoungWeight({0, 0})) == 1);
    CHECK(adjoint.multiplicity_of(YoungWeight({1, 0})) == 2);
    CHECK(adjoint.multiplicity_of(YoungWeight({2, 0})) == 1);
    CHECK(adjoint.dimension_sum_holds());

    const auto big = branch_su_oracle(YoungWeight({6, 4, 3, 0}));
    CHECK(big.size() == 18);
    CHECK(big.multiplicity_of(dynkin_to_young(DynkinLabel({1, 3}))) == 2);
    CHECK(big.multiplicity_of(dynkin_to_young(DynkinLabel({3, 0}))) == 1);
    CHECK(big.multiplicity_of(dynkin_to_young(DynkinLabel({2, 4}))) == 1);
    CHECK(big.dimension_sum_holds());

    const auto trivial = branch_su_oracle(YoungWeight({0, 0, 0}));
    REQUIRE(trivial.size() == 1);
    CHECK(trivial.multiplicity_of(YoungWeight({0, 0})) == 1);

    CHECK_THROWS_AS(branch_su_oracle(YoungWeight({2, 1, 1})), InvalidArgumentError);
}

TEST_CASE("dimension sum rules across the sweep") {
    for (int n = 2; n <= 5; ++n) {
        for (const auto& alpha : normalized_weights(n, 12)) {
            const auto su = branch_su_oracle(alpha);
            CHECK(su.dimension_sum_holds());
            // the restriction sum rule holds for every column shift as well
            for (std::int64_t c : {0, 1, 3}) {
                if (alpha.sum() + c * n > 12 && c > 0) continue;
                std::vector<std::int64_t> parts = alpha.parts();
                for (auto& p : parts) p += c;
                CHECK(branch_u(YoungWeight(parts)).dimension_sum_holds());
            }
        }
    }
}
