#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>

#include "sunbranch/kernels.hpp"
#include "sunbranch/minor_mc.hpp"
#include "sunbranch/stats.hpp"

#include "support/oracles.hpp"

using namespace sunbranch;

namespace {

double unitarity_defect(const ComplexMatrix& u) {
    const int n = u.size();
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Complex dot = 0.0;
            for (int k = 0; k < n; ++k) dot += std::conj(u.at(k, i)) * u.at(k, j);
            worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

} // namespace

TEST_CASE("haar_unitary is unitary") {
    SplitMix64 rng(19);
    for (int n : {1, 2, 3, 5, 8}) {
        for (int trial = 0; trial < 20; ++trial) {
            const ComplexMatrix u = haar_unitary(n, rng);
            CHECK(unitarity_defect(u) <= 1e-12);
            CHECK(std::abs(std::abs(determinant(u)) - 1.0) <= 1e-10);
        }
    }
}

TEST_CASE("haar_unitary first-entry moment") {
    // |U_11|^2 is Beta(1, n-1) under the Haar measure: mean 1/n, variance
    // (n-1)/(n^2 (n+1)).
    const int n = 3;
    const int samples = 100000;
    SplitMix64 rng(20);
    double sum = 0.0;
    for (int i = 0; i < samples; ++i) {
        const ComplexMatrix u = haar_unitary(n, rng);
        sum += std::norm(u.at(0, 0));
    }
    const double mean = sum / samples;
    const double sigma = std::sqrt((n - 1.0) / (double(n) * n * (n + 1.0)) / samples);
    CHECK(std::abs(mean - 1.0 / n) <= 3.0 * sigma);
}

TEST_CASE("sample_orbit_point") {
    const RealSpectrum alpha({4, 1, 0});
    SplitMix64 rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        const HermitianMatrix a = sample_orbit_point(alpha, rng);
        CHECK(std::abs(a.trace() - 5.0) <= 1e-10);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                CHECK(a.at(i, j) == std::conj(a.at(j, i)));
            }
        }
        const RealSpectrum ev = hermitian_eigenvalues(a);
        for (int i = 0; i < 3; ++i) {
            CHECK(std::abs(ev.value(i) - alpha.value(i)) <= 1e-9);
        }
    }
}

TEST_CASE("principal_minor") {
    const HermitianMatrix id = HermitianMatrix::diagonal({1, 1, 1, 1});
    const HermitianMatrix sub = principal_minor(id);
    CHECK(sub.size() == 3);
    CHECK(sub.trace() == 3.0);

    const HermitianMatrix d = HermitianMatrix::diagonal({5, 3, 2});
    const HermitianMatrix dm = principal_minor(d);
    CHECK(dm.at(0, 0) == Complex(5.0));
    CHECK(dm.at(1, 1) == Complex(3.0));

    SplitMix64 rng(22);
    const HermitianMatrix a = sample_orbit_point(RealSpectrum({2, 1, 0, -1}), rng);
    for (int k = 0; k < 4; ++k) {
        const HermitianMatrix b = principal_minor(a, k);
        CHECK(std::abs(b.trace() - (a.trace() - a.at(k, k).real())) <= 1e-12);
    }
    CHECK_THROWS_AS(principal_minor(HermitianMatrix::diagonal({1.0})), InvalidArgumentError);
}

TEST_CASE("hermitian_eigenvalues") {
    CHECK(hermitian_eigenvalues(HermitianMatrix::diagonal({3, 1, 0})) ==
          RealSpectrum({3, 1, 0}));

    // 2x2 closed form
    SplitMix64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const double a = rng.next_unit() * 4.0 - 2.0;
        const double c = rng.next_unit() * 4.0 - 2.0;
        const Complex b(rng.next_unit() - 0.5, rng.next_unit() - 0.5);
        ComplexMatrix m(2);
        m.at(0, 0) = a;
        m.at(0, 1) = b;
        m.at(1, 0) = std::conj(b);
        m.at(1, 1) = c;
        const RealSpectrum ev = hermitian_eigenvalues(HermitianMatrix::from_dense(m));
        const double mid = 0.5 * (a + c);
        const double rad = std::sqrt(0.25 * (a - c) * (a - c) + std::norm(b));
        CHECK(std::abs(ev.value(0) - (mid + rad)) <= 1e-12);
        CHECK(std::abs(ev.value(1) - (mid - rad)) <= 1e-12);
    }
}

TEST_CASE("sample_minor_spectrum determinism and interlacing") {
    const RealSpectrum alpha({4, 1, 0});
    const auto batch1 = sample_minor_spectrum(alpha, 2000, 42);
    const auto batch2 = sample_minor_spectrum(alpha, 2000, 42);
    const auto batch4t = sample_minor_spectrum(alpha, 2000, 42, 4);
    REQUIRE(batch1.betas.size() == 2000);
    for (std::size_t i = 0; i < batch1.betas.size(); ++i) {
        // bitwise equality, not approximate: the batch bytes are the contract
        CHECK(std::memcmp(batch1.betas[i].values().data(), batch2.betas[i].values().data(),
                          2 * sizeof(double)) == 0);
        CHECK(std::memcmp(batch1.betas[i].values().data(), batch4t.betas[i].values().data(),
                          2 * sizeof(double)) == 0);
        CHECK(interlaces(alpha, batch1.betas[i], 1e-8));
    }
    const auto other_seed = sample_minor_spectrum(alpha, 2000, 43);
    CHECK(other_seed.betas != batch1.betas);
}

TEST_CASE("rank-2 minors are uniform") {
    const auto batch = sample_minor_spectrum(RealSpectrum({1, 0}), 100000, 42);
    double mean = 0.0;
    for (const auto& beta : batch.betas) mean += beta.value(0);
    mean /= static_cast<double>(batch.count);
    CHECK(std::abs(mean - 0.5) <= 0.005);

    const auto report = density_test(batch, 20);
    CHECK(report.pass);
}

TEST_CASE("moment of the spacing against quadrature") {
    const RealSpectrum alpha({4, 1, 0});
    const auto batch = sample_minor_spectrum(alpha, 200000, 42);
    double mean = 0.0, second = 0.0;
    for (const auto& beta : batch.betas) {
        const double d = beta.value(0) - beta.value(1);
        mean += d;
        second += d * d;
    }
    mean /= static_cast<double>(batch.count);
    second /= static_cast<double>(batch.count);
    const double exact = oracles::integrate_2d(1, 4, 0, 1, [&](double b1, double b2) {
        return (b1 - b2) * baryshnikov_pdf(alpha, RealSpectrum({std::max(b1, b2), std::min(b1, b2)}));
    });
    const double se = std::sqrt((second - mean * mean) / static_cast<double>(batch.count));
    CHECK(std::abs(mean - exact) <= 3.0 * se);
}

TEST_CASE("density test passes for the exact law and fails for the control") {
    const RealSpectrum alpha({4, 1, 0});
    const auto batch = sample_minor_spectrum(alpha, 200000, 42);
    const auto report = density_test(batch, 10);
    CHECK(report.pass);
    CHECK(report.dof >= 50);

    const auto control = sample_uniform_box(alpha, 200000, 42);
    const auto control_report = density_test(control, 10);
    CHECK_FALSE(control_report.pass);
    CHECK(control_report.statistic > 100.0 * control_report.threshold);
}

TEST_CASE("choice of the dropped minor is immaterial") {
    const RealSpectrum alpha({4, 1, 0});
    for (int k = 0; k < 3; ++k) {
        const auto batch = sample_minor_spectrum(alpha, 50000, 42 + k, 1, k);
        CHECK(density_test(batch, 8).pass);
    }
}

TEST_CASE("shift covariance") {
    const RealSpectrum alpha({4, 1, 0});
    const RealSpectrum shifted({6.5, 3.5, 2.5});
    const double c = 2.5;

    // same seed: the rotation sequence is identical, so spectra shift exactly
    const auto base = sample_minor_spectrum(alpha, 5000, 7);
    const auto moved = sample_minor_spectrum(shifted, 5000, 7);
    for (std::size_t i = 0; i < base.betas.size(); ++i) {
        for (int k = 0; k < 2; ++k) {
            CHECK(std::abs(moved.betas[i].value(k) - base.betas[i].value(k) - c) <= 1e-9);
        }
    }

    // independent seeds: compare first moments statistically
    const auto a = sample_minor_spectrum(alpha, 100000, 101);
    const auto b = sample_minor_spectrum(shifted, 100000, 202);
    double ma = 0.0, mb = 0.0, va = 0.0, vb = 0.0;
    for (const auto& beta : a.betas) {
        ma += beta.value(0);
        va += beta.value(0) * beta.value(0);
    }
    for (const auto& beta : b.betas) {
        mb += beta.value(0);
        vb += beta.value(0) * beta.value(0);
    }
    const double n = 100000.0;
    ma /= n;
    mb /= n;
    va = va / n - ma * ma;
    vb = vb / n - mb * mb;
    const double se = std::sqrt((va + vb) / n);
    CHECK(std::abs((mb - c) - ma) <= 3.0 * se);
}
