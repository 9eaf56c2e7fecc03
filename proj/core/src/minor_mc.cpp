#include "sunbranch/minor_mc.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "sunbranch/kernels.hpp"
#include "sunbranch/stats.hpp"

namespace sunbranch {

namespace {

constexpr double kInterlacingTol = 1e-8;
constexpr double kTraceTol = 1e-9;
constexpr int kJacobiSweepBudget = 30;

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.size(); ++i) {
        for (int j = 0; j < a.size(); ++j) {
            if (i != j) s += std::norm(a.at(i, j));
        }
    }
    return std::sqrt(s);
}

} // namespace

ComplexMatrix haar_unitary(int n, SplitMix64& rng) {
    if (n < 1) throw InvalidArgumentError("haar_unitary: n must be positive");

    // Complex Ginibre matrix, entries filled row major so the stream layout
    // is pinned down.
    ComplexMatrix a(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double re, im;
            rng.next_gaussian_pair(re, im);
            a.at(i, j) = Complex(re, im);
        }
    }

    // Householder QR; q accumulates the product of reflectors.
    ComplexMatrix q = ComplexMatrix::identity(n);
    std::vector<Complex> v(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        double norm2 = 0.0;
        for (int i = k; i < n; ++i) norm2 += std::norm(a.at(i, k));
        const double norm = std::sqrt(norm2);
        if (norm == 0.0) continue;

        const Complex x0 = a.at(k, k);
        const Complex phase = (std::abs(x0) > 0.0) ? x0 / std::abs(x0) : Complex(1.0);
        const Complex head = x0 + phase * norm; // avoids cancellation
        v[static_cast<std::size_t>(k)] = head;
        for (int i = k + 1; i < n; ++i) v[static_cast<std::size_t>(i)] = a.at(i, k);
        double vn2 = std::norm(head);
        for (int i = k + 1; i < n; ++i) vn2 += std::norm(v[static_cast<std::size_t>(i)]);
        if (vn2 == 0.0) continue;

        for (int j = k; j < n; ++j) {
            Complex w = 0.0;
            for (int i = k; i < n; ++i) {
                w += std::conj(v[static_cast<std::size_t>(i)]) * a.at(i, j);
            }
            w *= 2.0 / vn2;
            for (int i = k; i < n; ++i) a.at(i, j) -= w * v[static_cast<std::size_t>(i)];
        }
        for (int i = 0; i < n; ++i) {
            Complex w = 0.0;
            for (int m = k; m < n; ++m) {
                w += q.at(i, m) * v[static_cast<std::size_t>(m)];
            }
            w *= 2.0 / vn2;
            for (int m = k; m < n; ++m) {
                q.at(i, m) -= w * std::conj(v[static_cast<std::size_t>(m)]);
            }
        }
    }

    // Push the R-diagonal phases into Q (Mezzadri's correction); without it
    // the QR convention would bias the distribution away from Haar.
    for (int k = 0; k < n; ++k) {
        const Complex rkk = a.at(k, k);
        const Complex d = (std::abs(rkk) > 0.0) ? rkk / std::abs(rkk) : Complex(1.0);
        for (int i = 0; i < n; ++i) q.at(i, k) *= d;
    }
    return q;
}

HermitianMatrix sample_orbit_point(const RealSpectrum& alpha, SplitMix64& rng) {
    const int n = alpha.rank();
    const ComplexMatrix u = haar_unitary(n, rng);
    ComplexMatrix ud(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            ud.at(i, j) = u.at(i, j) * alpha.value(j);
        }
    }
    return HermitianMatrix::from_dense(ud * u.adjoint());
}

HermitianMatrix principal_minor(const HermitianMatrix& a) {
    return principal_minor(a, a.size() - 1);
}

HermitianMatrix principal_minor(const HermitianMatrix& a, int drop) {
    const int n = a.size();
    if (n < 2) throw InvalidArgumentError("principal_minor: rank must be at least 2");
    if (drop < 0 || drop >= n) {
        throw InvalidArgumentError("principal_minor: drop index out of range");
    }
    ComplexMatrix b(n - 1);
    for (int i = 0, bi = 0; i < n; ++i) {
        if (i == drop) continue;
        for (int j = 0, bj = 0; j < n; ++j) {
            if (j == drop) continue;
            b.at(bi, bj) = a.at(i, j);
            ++bj;
        }
        ++bi;
    }
    return HermitianMatrix::from_dense(b);
}

RealSpectrum hermitian_eigenvalues(const HermitianMatrix& b) {
    const int n = b.size();
    ComplexMatrix a = b.dense();
    const double scale = b.frobenius_norm();
    if (scale == 0.0) {
        return RealSpectrum(std::vector<double>(static_cast<std::size_t>(n), 0.0));
    }
    const double target = 1e-12 * scale;

    bool converged = false;
    for (int sweep = 0; sweep < kJacobiSweepBudget && !converged; ++sweep) {
        if (off_diagonal_norm(a) <= target) {
            converged = true;
            break;
        }
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = a.at(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;
                const double app = a.at(p, p).real();
                const double aqq = a.at(q, q).real();
                const Complex phase = apq / mag;
                const double tau = (aqq - app) / (2.0 * mag);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                ComplexMatrix j = ComplexMatrix::identity(n);
                j.at(p, p) = c;
                j.at(p, q) = s * phase;
                j.at(q, p) = -s * std::conj(phase);
                j.at(q, q) = c;
                a = j.adjoint() * a * j;
            }
        }
    }
    if (!converged && off_diagonal_norm(a) > target) {
        throw ConvergenceError("hermitian_eigenvalues: sweep budget exhausted");
    }

    std::vector<double> ev(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = a.at(i, i).real();
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return RealSpectrum(std::move(ev));
}

SampleBatch sample_minor_spectrum(const RealSpectrum& alpha, std::int64_t count,
                                  std::uint64_t seed, int threads, int drop) {
    const int n = alpha.rank();
    if (n < 2) throw InvalidArgumentError("sample_minor_spectrum: rank must be >= 2");
    if (count < 1) throw InvalidArgumentError("sample_minor_spectrum: count must be >= 1");
    if (threads < 1) threads = 1;
    if (drop < 0) drop = n - 1;
    if (drop >= n) throw InvalidArgumentError("sample_minor_spectrum: drop out of range");

    std::vector<RealSpectrum> betas(static_cast<std::size_t>(count),
                                    RealSpectrum(std::vector<double>(
                                        static_cast<std::size_t>(n - 1), 0.0)));
    const auto worker = [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t i = lo; i < hi; ++i) {
            SplitMix64 rng = sample_stream(seed, static_cast<std::uint64_t>(i));
            const HermitianMatrix a = sample_orbit_point(alpha, rng);
            const HermitianMatrix b = principal_minor(a, drop);
            RealSpectrum beta = hermitian_eigenvalues(b);
            if (!interlaces(alpha, beta, kInterlacingTol)) {
                throw InternalConsistencyError(
                    "sample_minor_spectrum: sampled spectrum fails interlacing");
            }
            double sum = 0.0;
            for (double v : beta.values()) sum += v;
            if (std::abs(sum - b.trace()) > kTraceTol) {
                throw InternalConsistencyError(
                    "sample_minor_spectrum: eigenvalue sum drifted from the trace");
            }
            betas[static_cast<std::size_t>(i)] = std::move(beta);
        }
    };

    if (threads == 1 || count < 2 * threads) {
        worker(0, count);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
        const std::int64_t chunk = (count + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const std::int64_t lo = t * chunk;
            const std::int64_t hi = std::min<std::int64_t>(count, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, t, lo, hi] {
                try {
                    worker(lo, hi);
                } catch (...) {
                    errors[static_cast<std::size_t>(t)] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }
    return SampleBatch{alpha, seed, count, std::move(betas)};
}

SampleBatch sample_uniform_box(const RealSpectrum& alpha, std::int64_t count,
                               std::uint64_t seed) {
    const int n = alpha.rank();
    if (n < 2) throw InvalidArgumentError("sample_uniform_box: rank must be >= 2");
    if (count < 1) throw InvalidArgumentError("sample_uniform_box: count must be >= 1");
    std::vector<RealSpectrum> betas;
    betas.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
        SplitMix64 rng = sample_stream(seed, static_cast<std::uint64_t>(i));
        std::vector<double> beta(static_cast<std::size_t>(n - 1));
        for (int k = 0; k < n - 1; ++k) {
            const double lo = alpha.value(k + 1);
            const double hi = alpha.value(k);
            beta[static_cast<std::size_t>(k)] = lo + rng.next_unit() * (hi - lo);
        }
        betas.emplace_back(std::move(beta));
    }
    return SampleBatch{alpha, seed, count, std::move(betas)};
}

namespace {

/// Nodes and weights of 8-point Gauss-Legendre quadrature on [-1, 1]; exact
/// for polynomials of degree <= 15, far beyond any Vandermonde factor here.
constexpr int kGlPoints = 8;
constexpr double kGlNode[kGlPoints] = {
    -0.9602898564975362, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
    0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975362};
constexpr double kGlWeight[kGlPoints] = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
    0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};

double cell_probability(const RealSpectrum& alpha, const std::vector<double>& lo,
                        const std::vector<double>& hi) {
    const std::size_t m = lo.size();
    std::vector<int> idx(m, 0);
    std::vector<double> beta(m, 0.0);
    double total = 0.0;
    while (true) {
        double w = 1.0;
        for (std::size_t k = 0; k < m; ++k) {
            const double half = 0.5 * (hi[k] - lo[k]);
            beta[k] = 0.5 * (hi[k] + lo[k]) + half * kGlNode[idx[k]];
            w *= half * kGlWeight[idx[k]];
        }
        std::vector<double> sorted = beta;
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        total += w * baryshnikov_pdf(alpha, RealSpectrum(std::move(sorted)));
        std::size_t k = 0;
        while (k < m && ++idx[k] == kGlPoints) {
            idx[k] = 0;
            ++k;
        }
        if (k == m) break;
    }
    return total;
}

} // namespace

DensityTestReport density_test(const SampleBatch& batch, int bins) {
    const RealSpectrum& alpha = batch.alpha;
    const int n = alpha.rank();
    const int m = n - 1;
    if (bins < 1) throw InvalidArgumentError("density_test: bins must be >= 1");
    if (batch.betas.empty()) throw InvalidArgumentError("density_test: empty batch");
    for (int i = 0; i + 1 < n; ++i) {
        if (alpha.value(i) == alpha.value(i + 1)) {
            throw DegenerateArgumentError("density_test: repeated alpha entries");
        }
    }

    std::int64_t cells = 1;
    for (int k = 0; k < m; ++k) cells *= bins;
    if (cells < 2) throw InvalidArgumentError("density_test: need at least two cells");

    // expected probabilities, cell index row major over the axes
    std::vector<double> expected(static_cast<std::size_t>(cells), 0.0);
    std::vector<double> lo(static_cast<std::size_t>(m)), hi(static_cast<std::size_t>(m));
    for (std::int64_t c = 0; c < cells; ++c) {
        std::int64_t rest = c;
        for (int k = m - 1; k >= 0; --k) {
            const int cell_k = static_cast<int>(rest % bins);
            rest /= bins;
            const double a = alpha.value(k + 1);
            const double b = alpha.value(k);
            const double w = (b - a) / bins;
            lo[static_cast<std::size_t>(k)] = a + cell_k * w;
            hi[static_cast<std::size_t>(k)] = a + (cell_k + 1) * w;
        }
        expected[static_cast<std::size_t>(c)] =
            cell_probability(alpha, lo, hi) * static_cast<double>(batch.count);
    }

    // observed counts
    std::vector<std::int64_t> observed(static_cast<std::size_t>(cells), 0);
    for (const auto& beta : batch.betas) {
        std::int64_t c = 0;
        for (int k = 0; k < m; ++k) {
            const double a = alpha.value(k + 1);
            const double b = alpha.value(k);
            int cell_k = static_cast<int>(std::floor((beta.value(k) - a) / (b - a) * bins));
            cell_k = std::clamp(cell_k, 0, bins - 1);
            c = c * bins + cell_k;
        }
        ++observed[static_cast<std::size_t>(c)];
    }

    // merge cells until every group expects at least 5 counts
    std::vector<double> group_e;
    std::vector<double> group_o;
    double acc_e = 0.0, acc_o = 0.0;
    for (std::int64_t c = 0; c < cells; ++c) {
        acc_e += expected[static_cast<std::size_t>(c)];
        acc_o += static_cast<double>(observed[static_cast<std::size_t>(c)]);
        if (acc_e >= 5.0) {
            group_e.push_back(acc_e);
            group_o.push_back(acc_o);
            acc_e = acc_o = 0.0;
        }
    }
    if (acc_e > 0.0 || acc_o > 0.0) {
        if (group_e.empty()) throw InvalidArgumentError("density_test: too few samples");
        group_e.back() += acc_e;
        group_o.back() += acc_o;
    }
    if (group_e.size() < 2) {
        throw InvalidArgumentError("density_test: all mass merged into one group");
    }

    DensityTestReport report;
    report.samples = batch.count;
    report.cells = static_cast<int>(cells);
    report.groups = static_cast<int>(group_e.size());
    for (std::size_t g = 0; g < group_e.size(); ++g) {
        const double d = group_o[g] - group_e[g];
        report.statistic += d * d / group_e[g];
    }
    report.dof = report.groups - 1;
    report.threshold = chi_square_quantile(0.999, report.dof);
    report.pass = report.statistic <= report.threshold;
    return report;
}

} // namespace sunbranch
