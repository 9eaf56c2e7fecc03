#pragma once

#include <cstdint>
#include <vector>

#include "sunbranch/linalg.hpp"
#include "sunbranch/rng.hpp"
#include "sunbranch/weights.hpp"

namespace sunbranch {

/// Haar-distributed unitary: Householder QR of a complex Ginibre draw, with
/// the phases of the R diagonal pushed into Q so the distribution is exactly
/// right-invariant.
ComplexMatrix haar_unitary(int n, SplitMix64& rng);

/// Random point U diag(alpha) U* of the conjugation orbit with spectrum alpha.
HermitianMatrix sample_orbit_point(const RealSpectrum& alpha, SplitMix64& rng);

/// Delete row and column `drop` (default: the last index). Requires n >= 2.
HermitianMatrix principal_minor(const HermitianMatrix& a);
HermitianMatrix principal_minor(const HermitianMatrix& a, int drop);

/// Descending eigenvalues by cyclic Jacobi rotations. Converged when the
/// off-diagonal Frobenius norm falls below 1e-12 * ||B||_F; the sweep budget
/// is 30, beyond which ConvergenceError is raised.
RealSpectrum hermitian_eigenvalues(const HermitianMatrix& b);

/// A reproducible batch of minor spectra: fully determined by
/// (alpha, seed, count) and independent of how many threads produced it.
struct SampleBatch {
    RealSpectrum alpha;
    std::uint64_t seed;
    std::int64_t count;
    std::vector<RealSpectrum> betas;
};

/// Sample `count` minor spectra of Haar-random orbit points. Every sample
/// draws from its own generator stream keyed by (seed, index), so the batch
/// is byte-identical for any `threads` value. `drop` selects which
/// row/column to delete (default: the last). Each beta is checked to
/// interlace alpha within 1e-8 and to match the minor trace within 1e-9.
SampleBatch sample_minor_spectrum(const RealSpectrum& alpha, std::int64_t count,
                                  std::uint64_t seed, int threads = 1, int drop = -1);

/// Control batch with coordinates uniform on the interlacing box; used to
/// confirm that the density test has power against a wrong distribution.
SampleBatch sample_uniform_box(const RealSpectrum& alpha, std::int64_t count,
                               std::uint64_t seed);

struct DensityTestReport {
    double statistic = 0.0;
    int dof = 0;
    double threshold = 0.0; // chi-square 0.999 quantile for dof
    bool pass = false;
    std::int64_t samples = 0;
    int cells = 0;  // grid cells before merging
    int groups = 0; // after merging low-expectation cells
};

/// Chi-square goodness of fit of the batch against the exact minor density.
/// The interlacing box is cut into bins^(n-1) cells; expected probabilities
/// come from Gauss-Legendre quadrature of the density (exact, the density is
/// polynomial), cells with expectation below 5 are merged in scan order, and
/// the fit passes when the statistic stays below the 99.9% quantile.
DensityTestReport density_test(const SampleBatch& batch, int bins);

} // namespace sunbranch
