#include "sunbranch/spectral.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "sunbranch/gelfand_tsetlin.hpp"

namespace sunbranch {

namespace {

constexpr double kCoincidenceTol = 1e-8;

Complex vandermonde_c(const ComplexVector& x) {
    Complex p = 1.0;
    const int n = static_cast<int>(x.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            p *= x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)];
        }
    }
    return p;
}

Complex ipow(Complex base, std::int64_t e) {
    Complex r = 1.0;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

double superfactorial(int n) {
    double c = 1.0;
    double f = 1.0;
    for (int p = 1; p < n; ++p) {
        f *= p;
        c *= f;
    }
    return c;
}

void require_pairwise_separated(const ComplexVector& x, const char* who) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            if (std::abs(x[i] - x[j]) < kCoincidenceTol) {
                throw DegenerateArgumentError(std::string(who) + ": coincident arguments");
            }
        }
    }
}

void require_pairwise_separated(const RealSpectrum& a, const char* who) {
    for (int i = 0; i < a.rank(); ++i) {
        for (int j = i + 1; j < a.rank(); ++j) {
            if (std::abs(a.value(i) - a.value(j)) < kCoincidenceTol) {
                throw DegenerateArgumentError(std::string(who) + ": coincident arguments");
            }
        }
    }
}

/// Monomial sum over interlacing chains: exponent of x_k is the k-th row-sum
/// difference of the chain.
Complex schur_chain_sum(const YoungWeight& lambda, const ComplexVector& x) {
    if (lambda.rank() == 1) {
        return ipow(x[0], lambda.part(0));
    }
    const std::size_t k = static_cast<std::size_t>(lambda.rank() - 1);
    Complex total = 0.0;
    for (const auto& mu : enumerate_interlacing(lambda)) {
        total += schur_chain_sum(mu, x) * ipow(x[k], lambda.sum() - mu.sum());
    }
    return total;
}

} // namespace

Complex hciz(const RealSpectrum& alpha, const ComplexVector& x) {
    const int n = alpha.rank();
    if (static_cast<int>(x.size()) != n) {
        throw InvalidArgumentError("hciz: alpha and x must have equal rank");
    }
    require_pairwise_separated(alpha, "hciz");
    require_pairwise_separated(x, "hciz");
    if (n == 1) {
        return std::exp(alpha.value(0) * x[0]);
    }
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m.at(i, j) = std::exp(alpha.value(i) * x[static_cast<std::size_t>(j)]);
        }
    }
    return superfactorial(n) * determinant(std::move(m)) /
           (vandermonde(alpha) * vandermonde_c(x));
}

Complex schur_poly(const YoungWeight& lambda, const ComplexVector& x) {
    const int n = lambda.rank();
    if (static_cast<int>(x.size()) != n) {
        throw InvalidArgumentError("schur_poly: lambda and x must have equal rank");
    }
    if (n == 1) return ipow(x[0], lambda.part(0));
    const Complex vd = vandermonde_c(x);
    if (std::abs(vd) < kCoincidenceTol) {
        return schur_chain_sum(lambda, x);
    }
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m.at(i, j) = ipow(x[static_cast<std::size_t>(i)], lambda.part(j) + n - 1 - j);
        }
    }
    return determinant(std::move(m)) / vd;
}

BranchingTable schur_branch_oracle(const YoungWeight& alpha) {
    if (!alpha.su_normalized()) {
        throw InvalidArgumentError(
            "schur_branch_oracle: alpha must be SU-normalized (last part zero)");
    }
    // Restricting to n-1 variables turns each interlacing summand s_beta(x)
    // into det(x)^{beta_{n-1}} times the Schur polynomial of its column
    // reduction; on the subgroup the determinant power is trivial, so only
    // the grouping by reduced weight survives.
    std::map<std::vector<std::int64_t>, std::int64_t> mult;
    const BranchingTable restriction = branch_u(alpha);
    for (const auto& e : restriction.entries()) {
        mult[su_normalize(e.gamma).parts()] += e.multiplicity;
    }
    std::vector<BranchingEntry> entries;
    entries.reserve(mult.size());
    for (auto& [parts, m] : mult) {
        entries.push_back({YoungWeight(parts), m});
    }
    return BranchingTable(alpha, std::move(entries));
}

double kirillov_check(const YoungWeight& alpha, const RealSpectrum& t) {
    const int n = alpha.rank();
    if (t.rank() != n) {
        throw InvalidArgumentError("kirillov_check: alpha and t must have equal rank");
    }
    double sum = 0.0;
    for (double v : t.values()) sum += v;
    if (std::abs(sum) > 1e-12) {
        throw InvalidArgumentError("kirillov_check: t must sum to zero");
    }
    require_pairwise_separated(t, "kirillov_check");

    ComplexVector torus(static_cast<std::size_t>(n));
    ComplexVector it(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        torus[static_cast<std::size_t>(i)] = std::exp(Complex(0.0, t.value(i)));
        it[static_cast<std::size_t>(i)] = Complex(0.0, t.value(i));
    }

    Complex delta_it = 1.0;
    Complex dhat = 1.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double d = t.value(i) - t.value(j);
            delta_it *= Complex(0.0, d);
            dhat *= std::exp(Complex(0.0, d / 2)) - std::exp(Complex(0.0, -d / 2));
        }
    }
    if (std::abs(dhat) < 1e-12) {
        throw DegenerateArgumentError("kirillov_check: torus point on a reflection wall");
    }

    const Complex lhs = schur_poly(alpha, torus);
    const Complex rhs = static_cast<double>(weyl_dimension(alpha)) * delta_it / dhat *
                        hciz(to_spectrum(add(alpha, weyl_vector(n))), it);
    return std::abs(lhs - rhs);
}

double lattice_sum_check(const RealSpectrum& t, int n, int cutoff) {
    if (n != 3 && n != 4) {
        throw InvalidArgumentError("lattice_sum_check: only ranks 3 and 4 are supported");
    }
    if (t.rank() != n - 1) {
        throw InvalidArgumentError("lattice_sum_check: t must have rank n - 1");
    }
    if (cutoff < 1) throw InvalidArgumentError("lattice_sum_check: cutoff must be >= 1");
    double sum = 0.0;
    for (double v : t.values()) sum += v;
    if (std::abs(sum) > 1e-12) {
        throw InvalidArgumentError("lattice_sum_check: t must sum to zero");
    }
    const double two_pi = 2.0 * std::numbers::pi;
    for (double v : t.values()) {
        // every factor t_i + 2*pi*k must stay away from zero
        const double d = std::abs(v - two_pi * std::round(v / two_pi));
        if (d < kCoincidenceTol) {
            throw DegenerateArgumentError("lattice_sum_check: t_i on the lattice");
        }
    }

    // prefactor i^{-(n-1)} Dhat_n(e^{i(t,0)}) / Dhat_{n-1}(e^{it})
    std::vector<double> u(t.values());
    u.push_back(0.0);
    const auto dhat = [](const std::vector<double>& v) {
        Complex p = 1.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            for (std::size_t j = i + 1; j < v.size(); ++j) {
                const double d = v[i] - v[j];
                p *= std::exp(Complex(0.0, d / 2)) - std::exp(Complex(0.0, -d / 2));
            }
        }
        return p;
    };
    const Complex i_pow = ipow(Complex(0.0, 1.0), n - 1);
    const Complex prefactor = dhat(u) / dhat(t.values()) / i_pow;

    // truncated sum of 1 / prod_i (t_i + 2*pi*(p_i - p_{i-1})), p_0 = p_{n-1} = 0
    double s = 0.0;
    if (n == 3) {
        for (int p = -cutoff; p <= cutoff; ++p) {
            s += 1.0 / ((t.value(0) + two_pi * p) * (t.value(1) - two_pi * p));
        }
    } else {
        for (int p1 = -cutoff; p1 <= cutoff; ++p1) {
            const double f1 = t.value(0) + two_pi * p1;
            for (int p2 = -cutoff; p2 <= cutoff; ++p2) {
                s += 1.0 / (f1 * (t.value(1) + two_pi * (p2 - p1)) *
                            (t.value(2) - two_pi * p2));
            }
        }
    }
    return std::abs(prefactor * s - 1.0);
}

} // namespace sunbranch
