#pragma once

#include <span>

#include "sunbranch/weights.hpp"

namespace sunbranch {

/// Closed-inequality interlacing test alpha_i >= beta_i >= alpha_{i+1}.
/// Integer-valued input compares exactly; real input is granted a 1e-12
/// absolute slack. The overload takes an explicit slack.
bool interlaces(const RealSpectrum& alpha, const RealSpectrum& beta);
bool interlaces(const RealSpectrum& alpha, const RealSpectrum& beta, double slack);

/// Density of the minor spectrum on the interlacing body:
/// (n-1)! Delta(beta) / Delta(alpha), zero outside. Requires distinct alpha.
double baryshnikov_pdf(const RealSpectrum& alpha, const RealSpectrum& beta);

/// Sign-determinant form of the interlacing kernel,
/// ((n-1)!/2^{n-1}) det(eps(alpha_i - beta_j) - eps(alpha_n - beta_j)),
/// evaluated in exact integer arithmetic. Equals (n-1)! on strictly
/// interlacing input and 0 on generic non-interlacing input. A tie
/// alpha_i == beta_j raises NonGenericInputError.
double k_sign_det(const RealSpectrum& alpha, const RealSpectrum& beta);

/// The interval kernel: Lebesgue length of the set of last-eigenvalue shifts
/// compatible with interlacing,
///   kbar(alpha; gamma) = max(0, min_i(alpha_i - gamma_i)
///                              - max_i(alpha_{i+1} - gamma_i)).
/// alpha has rank n with alpha_n = 0, gamma rank n-1 with gamma_{n-1} = 0.
/// Continuous and piecewise linear in both arguments.
double kbar(const RealSpectrum& alpha, const RealSpectrum& gamma);

/// Rank-3 closed form
///   (|a1-g| - |a1-a2-g| - |a2-g|)/2 - (g -> -g),
/// an odd function of gamma1 defined for every real gamma1; agrees with
/// kbar(alpha, (gamma1, 0)) for gamma1 >= 0.
double kbar3_closed(const RealSpectrum& alpha, double gamma1);

/// Rank-4 closed form: (1/8) sum over w in S4 of eps_w psi(w(alpha); gamma)
/// with w acting by w(alpha)_i = alpha_{w(i)} - alpha_{w(4)} and eps(0) = 0
/// inside psi. Agrees with kbar on the dominant sector.
double kbar4_closed(const RealSpectrum& alpha, const RealSpectrum& gamma);

/// Support polytope of kbar(alpha, .): closed membership test and the signed
/// margin min_i(alpha_i - gamma_i) - max_i(alpha_{i+1} - gamma_i), so that
/// kbar = max(0, margin) and interior points are exactly those with
/// margin > 0.
class KbarSupport {
public:
    explicit KbarSupport(RealSpectrum alpha);

    const RealSpectrum& alpha() const { return alpha_; }
    bool contains(const RealSpectrum& gamma) const;
    double margin(const RealSpectrum& gamma) const;

private:
    RealSpectrum alpha_;
};

KbarSupport kbar_support(const RealSpectrum& alpha);

/// max over gamma of kbar(alpha, .) = min_i(alpha_i - alpha_{i+1}),
/// with alpha_n = 0 entering as the last spacing.
double kbar_max(const RealSpectrum& alpha);

namespace detail {

/// Interval formula on raw coordinates, no normalization or ordering checks.
/// Shift-invariant in alpha; used by property tests probing that invariance.
double kbar_interval(std::span<const double> alpha, std::span<const double> gamma);

/// True when every entry is integer-valued (and small enough to be exact).
bool all_integer(std::span<const double> values);

} // namespace detail

} // namespace sunbranch
