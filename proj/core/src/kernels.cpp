#include "sunbranch/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

#include "sunbranch/checked_int.hpp"

namespace sunbranch {

namespace detail {

bool all_integer(std::span<const double> values) {
    for (double v : values) {
        if (!(std::floor(v) == v) || std::abs(v) > 0x1.0p53) return false;
    }
    return true;
}

double kbar_interval(std::span<const double> alpha, std::span<const double> gamma) {
    const std::size_t m = gamma.size();
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
        hi = std::min(hi, alpha[i] - gamma[i]);
        lo = std::max(lo, alpha[i + 1] - gamma[i]);
    }
    return std::max(0.0, hi - lo);
}

} // namespace detail

namespace {

constexpr double kRealSlack = 1e-12;

double slack_for(std::span<const double> a, std::span<const double> b) {
    return (detail::all_integer(a) && detail::all_integer(b)) ? 0.0 : kRealSlack;
}

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

void check_kernel_args(const RealSpectrum& alpha, const RealSpectrum& gamma) {
    if (gamma.rank() != alpha.rank() - 1) {
        throw InvalidArgumentError("kbar: gamma rank must be alpha rank - 1");
    }
    if (std::abs(alpha.value(alpha.rank() - 1)) > kRealSlack) {
        throw InvalidArgumentError("kbar: alpha must be normalized to alpha_n = 0");
    }
    if (std::abs(gamma.value(gamma.rank() - 1)) > kRealSlack) {
        throw InvalidArgumentError("kbar: gamma must be normalized to gamma_{n-1} = 0");
    }
}

int sign_of(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

/// Exact integer determinant by fraction-free (Bareiss) elimination.
std::int64_t int_det(std::vector<std::int64_t> m, int n) {
    auto at = [&](int i, int j) -> std::int64_t& {
        return m[static_cast<std::size_t>(i * n + j)];
    };
    std::int64_t prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            int p = k + 1;
            while (p < n && at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                const Int128 v =
                    checked_add(checked_mul(at(i, j), at(k, k)),
                                -checked_mul(at(i, k), at(k, j)));
                at(i, j) = checked_narrow(v / prev);
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

} // namespace

bool interlaces(const RealSpectrum& alpha, const RealSpectrum& beta) {
    return interlaces(alpha, beta, slack_for(alpha.values(), beta.values()));
}

bool interlaces(const RealSpectrum& alpha, const RealSpectrum& beta, double slack) {
    if (beta.rank() != alpha.rank() - 1) {
        throw InvalidArgumentError("interlaces: beta rank must be alpha rank - 1");
    }
    for (int i = 0; i < beta.rank(); ++i) {
        if (beta.value(i) > alpha.value(i) + slack) return false;
        if (beta.value(i) < alpha.value(i + 1) - slack) return false;
    }
    return true;
}

double baryshnikov_pdf(const RealSpectrum& alpha, const RealSpectrum& beta) {
    const int n = alpha.rank();
    for (int i = 0; i + 1 < n; ++i) {
        if (alpha.value(i) == alpha.value(i + 1)) {
            throw DegenerateArgumentError("baryshnikov_pdf: repeated alpha entries");
        }
    }
    if (!interlaces(alpha, beta)) return 0.0;
    return factorial(n - 1) * vandermonde(beta) / vandermonde(alpha);
}

double k_sign_det(const RealSpectrum& alpha, const RealSpectrum& beta) {
    const int n = alpha.rank();
    if (beta.rank() != n - 1) {
        throw InvalidArgumentError("k_sign_det: beta rank must be alpha rank - 1");
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n - 1; ++j) {
            if (alpha.value(i) == beta.value(j)) {
                throw NonGenericInputError("k_sign_det: tie alpha_i == beta_j");
            }
        }
    }
    // Entries eps(a_i - b_j) - eps(a_n - b_j) lie in {-2, 0, 2}; pull the
    // factor 2 out of each row so the determinant cancels 2^{n-1} exactly.
    std::vector<std::int64_t> m(static_cast<std::size_t>((n - 1) * (n - 1)));
    for (int i = 0; i < n - 1; ++i) {
        for (int j = 0; j < n - 1; ++j) {
            const int e = sign_of(alpha.value(i) - beta.value(j)) -
                          sign_of(alpha.value(n - 1) - beta.value(j));
            m[static_cast<std::size_t>(i * (n - 1) + j)] = e / 2;
        }
    }
    const std::int64_t d = (n >= 2) ? int_det(std::move(m), n - 1) : 1;
    return factorial(n - 1) * static_cast<double>(d);
}

double kbar(const RealSpectrum& alpha, const RealSpectrum& gamma) {
    check_kernel_args(alpha, gamma);
    return detail::kbar_interval(alpha.values(), gamma.values());
}

double kbar3_closed(const RealSpectrum& alpha, double gamma1) {
    if (alpha.rank() != 3) {
        throw InvalidArgumentError("kbar3_closed: alpha must have rank 3");
    }
    if (std::abs(alpha.value(2)) > kRealSlack) {
        throw InvalidArgumentError("kbar3_closed: alpha_3 must be 0");
    }
    const double a1 = alpha.value(0);
    const double a2 = alpha.value(1);
    const auto half = [&](double g) {
        return 0.5 * (std::abs(a1 - g) - std::abs(a1 - a2 - g) - std::abs(a2 - g));
    };
    return half(gamma1) - half(-gamma1);
}

namespace {

double psi4(const std::array<double, 4>& a, const RealSpectrum& g) {
    const int s = sign_of(a[0] - g.value(0));
    if (s == 0) return 0.0;
    return s * (std::abs(a[1] - g.value(1)) - std::abs(a[2] - g.value(1)) -
                std::abs(a[0] - a[1] - g.value(0) + g.value(1)) +
                std::abs(a[0] - a[2] - g.value(0) + g.value(1)));
}

} // namespace

double kbar4_closed(const RealSpectrum& alpha, const RealSpectrum& gamma) {
    if (alpha.rank() != 4 || gamma.rank() != 3) {
        throw InvalidArgumentError("kbar4_closed: needs rank-4 alpha and rank-3 gamma");
    }
    if (std::abs(alpha.value(3)) > kRealSlack || std::abs(gamma.value(2)) > kRealSlack) {
        throw InvalidArgumentError("kbar4_closed: alpha_4 and gamma_3 must be 0");
    }
    std::array<int, 4> w{0, 1, 2, 3};
    double total = 0.0;
    // iterate S4 in lexicographic order, recomputing the parity each time
    do {
        int inversions = 0;
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                if (w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(j)]) ++inversions;
            }
        }
        const int sign = (inversions % 2 == 0) ? 1 : -1;
        std::array<double, 4> wa{};
        for (int i = 0; i < 4; ++i) {
            wa[static_cast<std::size_t>(i)] = alpha.value(w[static_cast<std::size_t>(i)]) -
                                              alpha.value(w[3]);
        }
        total += sign * psi4(wa, gamma);
    } while (std::next_permutation(w.begin(), w.end()));
    return total / 8.0;
}

KbarSupport::KbarSupport(RealSpectrum alpha) : alpha_(std::move(alpha)) {
    if (std::abs(alpha_.value(alpha_.rank() - 1)) > kRealSlack) {
        throw InvalidArgumentError("KbarSupport: alpha must be normalized to alpha_n = 0");
    }
}

double KbarSupport::margin(const RealSpectrum& gamma) const {
    if (gamma.rank() != alpha_.rank() - 1) {
        throw InvalidArgumentError("KbarSupport: gamma rank must be alpha rank - 1");
    }
    double hi = std::numeric_limits<double>::infinity();
    double lo = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < gamma.rank(); ++i) {
        hi = std::min(hi, alpha_.value(i) - gamma.value(i));
        lo = std::max(lo, alpha_.value(i + 1) - gamma.value(i));
    }
    return hi - lo;
}

bool KbarSupport::contains(const RealSpectrum& gamma) const {
    return margin(gamma) >= -slack_for(alpha_.values(), gamma.values());
}

KbarSupport kbar_support(const RealSpectrum& alpha) { return KbarSupport(alpha); }

double kbar_max(const RealSpectrum& alpha) {
    if (alpha.rank() < 2) {
        throw InvalidArgumentError("kbar_max: rank must be at least 2");
    }
    if (std::abs(alpha.value(alpha.rank() - 1)) > kRealSlack) {
        throw InvalidArgumentError("kbar_max: alpha must be normalized to alpha_n = 0");
    }
    double m = std::numeric_limits<double>::infinity();
    for (int i = 0; i + 1 < alpha.rank(); ++i) {
        m = std::min(m, alpha.value(i) - alpha.value(i + 1));
    }
    return m;
}

} // namespace sunbranch
