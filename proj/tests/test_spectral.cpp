#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "sunbranch/branching.hpp"
#include "sunbranch/gelfand_tsetlin.hpp"
#include "sunbranch/rng.hpp"
#include "sunbranch/spectral.hpp"

#include "support/oracles.hpp"

using namespace sunbranch;

namespace {

/// Random weakly decreasing weight of the given rank, normalized, parts <= 6.
YoungWeight random_weight(SplitMix64& rng, int n) {
    std::vector<std::int64_t> parts(static_cast<std::size_t>(n));
    std::int64_t v = 0;
    for (int i = n - 1; i >= 0; --i) {
        parts[static_cast<std::size_t>(i)] = v;
        v += static_cast<std::int64_t>(rng.next() % 3);
    }
    return su_normalize(YoungWeight(parts));
}

/// Random torus point: well-separated entries summing to zero (within
/// rounding, far below the 1e-12 gate in kirillov_check).
RealSpectrum random_torus_point(SplitMix64& rng, int n) {
    while (true) {
        std::vector<double> t(static_cast<std::size_t>(n));
        double sum = 0.0;
        for (auto& v : t) {
            v = rng.next_unit() * 2.0 - 1.0;
            sum += v;
        }
        for (auto& v : t) v -= sum / n;
        std::sort(t.begin(), t.end(), std::greater<>());
        bool separated = true;
        for (std::size_t i = 0; i + 1 < t.size(); ++i) {
            if (t[i] - t[i + 1] < 1e-3) separated = false;
        }
        if (separated) return RealSpectrum(t);
    }
}

} // namespace

TEST_CASE("hciz rank 1 and normalization") {
    const Complex v = hciz(RealSpectrum({2.0}), {Complex(0.3, 0.4)});
    CHECK(std::abs(v - std::exp(Complex(0.6, 0.8))) <= 1e-14);

    const Complex near_one =
        hciz(RealSpectrum({3, 1, 0}), {Complex(1e-4, 0), Complex(0, 1e-4), Complex(-1e-4, 0)});
    CHECK(std::abs(near_one - 1.0) <= 1e-3);
}

TEST_CASE("hciz rank 2 against the angular quadrature oracle") {
    const Complex lhs = hciz(RealSpectrum({1, 0}), {Complex(0, 0.7), Complex(0, 0)});
    CHECK(std::abs(lhs - oracles::hciz2_quadrature(1, 0, Complex(0, 0.7), Complex(0, 0))) <=
          1e-6);

    SplitMix64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const double a1 = rng.next_unit() * 3.0 + 1.0;
        const double a2 = rng.next_unit();
        const Complex x1(rng.next_unit() - 0.5, rng.next_unit() - 0.5);
        const Complex x2(rng.next_unit() - 0.5 + 2.0, rng.next_unit() - 0.5);
        const Complex got = hciz(RealSpectrum({a1, a2}), {x1, x2});
        CHECK(std::abs(got - oracles::hciz2_quadrature(a1, a2, x1, x2)) <= 1e-6);
    }
}

TEST_CASE("hciz symmetries") {
    SplitMix64 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> a{4.0 + rng.next_unit(), 2.0 + rng.next_unit(), rng.next_unit()};
        ComplexVector x{Complex(0.5 + rng.next_unit(), 0.2), Complex(-1.0, rng.next_unit()),
                        Complex(2.5, -0.7)};
        const RealSpectrum alpha(a);
        const Complex base = hciz(alpha, x);
        // symmetric under permutations of x
        ComplexVector perm{x[2], x[0], x[1]};
        CHECK(std::abs(hciz(alpha, perm) - base) <= 1e-9 * std::abs(base) + 1e-12);
        // symmetric under exchanging the roles of alpha and real x
        std::vector<double> xr{3.1, 1.4, 0.2};
        ComplexVector xc{Complex(xr[0], 0), Complex(xr[1], 0), Complex(xr[2], 0)};
        ComplexVector ac{Complex(a[0], 0), Complex(a[1], 0), Complex(a[2], 0)};
        const Complex lhs = hciz(alpha, xc);
        const Complex rhs = hciz(RealSpectrum(xr), ac);
        CHECK(std::abs(lhs - rhs) <= 1e-9 * std::abs(lhs) + 1e-12);
    }
    CHECK_THROWS_AS(hciz(RealSpectrum({1, 1 - 1e-12, 0}), ComplexVector{1., 2., 3.}),
                    DegenerateArgumentError);
    CHECK_THROWS_AS(hciz(RealSpectrum({2, 1, 0}), ComplexVector{1., 1., 3.}),
                    DegenerateArgumentError);
}

TEST_CASE("schur_poly basics") {
    const Complex x1(0.3, 1.1), x2(-0.8, 0.2);
    CHECK(std::abs(schur_poly(YoungWeight({1, 0}), {x1, x2}) - (x1 + x2)) <= 1e-12);
    CHECK(std::abs(schur_poly(YoungWeight({2, 0}), {x1, x2}) -
                   (x1 * x1 + x1 * x2 + x2 * x2)) <= 1e-12);
    // coincident arguments go through the tableau sum
    CHECK(std::abs(schur_poly(YoungWeight({2, 1, 0}), {1.0, 1.0, 1.0}) - 8.0) == 0.0);
}

TEST_CASE("schur_poly at the identity equals the dimension") {
    // exhaustive over normalized weights with |lambda| <= 10, ranks 2..5;
    // coincident arguments force the chain-sum path, whose term count is the
    // dimension itself
    for (int n = 2; n <= 5; ++n) {
        const ComplexVector ones(static_cast<std::size_t>(n), 1.0);
        std::vector<std::int64_t> parts(static_cast<std::size_t>(n), 0);
        std::function<void(int, std::int64_t, std::int64_t)> rec =
            [&](int pos, std::int64_t upper, std::int64_t budget) {
                if (pos == n - 1) {
                    const YoungWeight lambda(parts);
                    CHECK(std::abs(schur_poly(lambda, ones) -
                                   static_cast<double>(weyl_dimension(lambda))) == 0.0);
                    return;
                }
                for (std::int64_t v = 0; v <= std::min(upper, budget); ++v) {
                    parts[static_cast<std::size_t>(pos)] = v;
                    rec(pos + 1, v, budget - v);
                }
                parts[static_cast<std::size_t>(pos)] = 0;
            };
        for (std::int64_t v = 0; v <= 10; ++v) {
            parts[0] = v;
            rec(1, v, 10 - v);
        }
    }
    // a non-normalized spot check rides on column-shift invariance
    CHECK(std::abs(schur_poly(YoungWeight({4, 3, 2}), ComplexVector(3, 1.0)) -
                   static_cast<double>(weyl_dimension(YoungWeight({4, 3, 2})))) == 0.0);
}

TEST_CASE("restriction identity at random complex points") {
    SplitMix64 rng(16);
    const std::vector<YoungWeight> lambdas{YoungWeight({2, 1, 0}), YoungWeight({4, 2, 1}),
                                           YoungWeight({3, 1, 1, 0}), YoungWeight({5, 3, 0})};
    for (const auto& lambda : lambdas) {
        const int n = lambda.rank();
        const auto u_table = branch_u(lambda);
        for (int trial = 0; trial < 100; ++trial) {
            ComplexVector x(static_cast<std::size_t>(n - 1));
            for (auto& v : x) {
                v = Complex(rng.next_unit() * 2.0 - 1.0, rng.next_unit() * 2.0 - 1.0);
            }
            ComplexVector extended = x;
            extended.push_back(1.0);
            const Complex lhs = schur_poly(lambda, extended);
            Complex rhs = 0.0;
            for (const auto& e : u_table.entries()) {
                rhs += static_cast<double>(e.multiplicity) * schur_poly(e.gamma, x);
            }
            CHECK(std::abs(lhs - rhs) <= 1e-9 * (1.0 + std::abs(lhs)));
        }
    }
}

TEST_CASE("schur_branch_oracle") {
    const auto adjoint = schur_branch_oracle(YoungWeight({2, 1, 0}));
    REQUIRE(adjoint.size() == 3);
    CHECK(adjoint.multiplicity_of(YoungWeight({0, 0})) == 1);
    CHECK(adjoint.multiplicity_of(YoungWeight({1, 0})) == 2);
    CHECK(adjoint.multiplicity_of(YoungWeight({2, 0})) == 1);

    const auto fundamental = schur_branch_oracle(YoungWeight({1, 0, 0}));
    REQUIRE(fundamental.size() == 2);
    CHECK(fundamental.multiplicity_of(YoungWeight({0, 0})) == 1);
    CHECK(fundamental.multiplicity_of(YoungWeight({1, 0})) == 1);

    const auto trivial = schur_branch_oracle(YoungWeight({0, 0, 0}));
    REQUIRE(trivial.size() == 1);
    CHECK(trivial.multiplicity_of(YoungWeight({0, 0})) == 1);
}

TEST_CASE("kirillov relation") {
    // fundamental weight: the character is the plain exponential sum
    {
        const RealSpectrum t({0.4, -0.1, -0.3});
        const YoungWeight alpha({1, 0, 0});
        CHECK(kirillov_check(alpha, t) <= 1e-9);
        Complex lhs = 0.0;
        for (double ti : t.values()) lhs += std::exp(Complex(0, ti));
        ComplexVector torus;
        for (double ti : t.values()) torus.push_back(std::exp(Complex(0, ti)));
        CHECK(std::abs(schur_poly(alpha, torus) - lhs) <= 1e-12);
    }
    CHECK(kirillov_check(YoungWeight({2, 1, 0}), RealSpectrum({0.3, -0.1, -0.2})) <= 1e-9);

    SplitMix64 rng(17);
    CHECK(kirillov_check(YoungWeight({6, 4, 3, 0}), random_torus_point(rng, 4)) <= 1e-8);

    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 3 + static_cast<int>(rng.next() % 2);
        const YoungWeight alpha = random_weight(rng, n);
        worst = std::max(worst, kirillov_check(alpha, random_torus_point(rng, n)));
    }
    CHECK(worst <= 1e-8);

    CHECK_THROWS_AS(kirillov_check(YoungWeight({1, 0}), RealSpectrum({0.3, -0.1})),
                    InvalidArgumentError); // sum != 0
    CHECK_THROWS_AS(kirillov_check(YoungWeight({1, 0}), RealSpectrum({0.0, 0.0})),
                    DegenerateArgumentError);
}

TEST_CASE("lattice sum identity") {
    // rank 3: t = (a, -a) in root-basis coordinates
    const RealSpectrum t3({0.9, -0.9});
    const double r200 = lattice_sum_check(t3, 3, 200);
    CHECK(r200 <= 1e-3);
    // the tail behaves like C/P, so doubling the cutoff halves the residual
    // up to the next-order term
    const double r400 = lattice_sum_check(t3, 3, 400);
    CHECK(r400 <= 0.51 * r200);

    // rank 4: t from a = (0.9, 2.2): t = (0.9, 1.3, -2.2)
    const RealSpectrum t4({1.3, 0.9, -2.2});
    const double s100 = lattice_sum_check(t4, 4, 100);
    CHECK(s100 <= 1e-2);
    CHECK(lattice_sum_check(t4, 4, 200) < s100);

    CHECK_THROWS_AS(lattice_sum_check(t3, 5, 10), InvalidArgumentError);
    CHECK_THROWS_AS(lattice_sum_check(RealSpectrum({0.5, -0.4}), 3, 10),
                    InvalidArgumentError); // sum != 0
    const double two_pi = 2.0 * std::numbers::pi;
    CHECK_THROWS_AS(lattice_sum_check(RealSpectrum({two_pi, -two_pi}), 3, 10),
                    DegenerateArgumentError);
}

TEST_CASE("torus ratio telescopes into a sine product") {
    // Dhat_n(e^{i(t,0)}) / Dhat_{n-1}(e^{it}) against
    // -(2i)^{n-1} sin(a_1/2) (prod sin((a_{k+1}-a_k)/2)) sin(a_{n-2}/2)
    SplitMix64 rng(18);
    for (int n = 3; n <= 5; ++n) {
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<double> a(static_cast<std::size_t>(n - 2));
            for (auto& v : a) v = rng.next_unit() * 4.0 + 0.1;
            std::vector<double> t(static_cast<std::size_t>(n - 1));
            t[0] = a[0];
            for (int i = 1; i + 1 < n - 1; ++i) t[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] - a[static_cast<std::size_t>(i - 1)];
            t[static_cast<std::size_t>(n - 2)] = -a.back();

            const auto dhat = [](const std::vector<double>& v) {
                Complex p = 1.0;
                for (std::size_t i = 0; i < v.size(); ++i) {
                    for (std::size_t j = i + 1; j < v.size(); ++j) {
                        const double d = v[i] - v[j];
                        p *= std::exp(Complex(0, d / 2)) - std::exp(Complex(0, -d / 2));
                    }
                }
                return p;
            };
            std::vector<double> u = t;
            u.push_back(0.0);
            const Complex ratio = dhat(u) / dhat(t);

            Complex sines = std::sin(a[0] / 2);
            for (std::size_t k = 0; k + 1 < a.size(); ++k) {
                sines *= std::sin((a[k + 1] - a[k]) / 2);
            }
            sines *= std::sin(a.back() / 2);
            Complex two_i_pow = 1.0;
            for (int k = 0; k < n - 1; ++k) two_i_pow *= Complex(0, 2);
            const Complex expected = -two_i_pow * sines;
            CHECK(std::abs(ratio - expected) <= 1e-9 * (1.0 + std::abs(expected)));
        }
    }
}
