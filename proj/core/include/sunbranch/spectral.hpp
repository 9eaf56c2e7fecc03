#pragma once

#include <vector>

#include "sunbranch/branching_table.hpp"
#include "sunbranch/linalg.hpp"
#include "sunbranch/weights.hpp"

namespace sunbranch {

using ComplexVector = std::vector<Complex>;

/// Unitary-group orbital integral in its determinant form,
///   (prod_{p=1}^{n-1} p!) det(exp(alpha_i x_j)) / (Delta(alpha) Delta(x)),
/// normalized so the value tends to 1 as x -> 0. Arguments closer than 1e-8
/// pairwise are rejected; there is no confluent handling.
Complex hciz(const RealSpectrum& alpha, const ComplexVector& x);

/// Schur polynomial s_lambda(x). Uses the bialternant determinant ratio and
/// falls back to the Gelfand-Tsetlin monomial sum when |Delta(x)| < 1e-8
/// (exact at coincident points; cost grows with the irrep dimension).
Complex schur_poly(const YoungWeight& lambda, const ComplexVector& x);

/// SU restriction through the classical rule s_lambda(x, 1) = sum of Schur
/// polynomials over interlacing weights: expand, column-reduce, group.
/// Must agree with branch_su and branch_su_oracle.
BranchingTable schur_branch_oracle(const YoungWeight& alpha);

/// Residual |chi_alpha(e^{it}) - Kirillov product| at a torus point with
/// sum(t) = 0, where the right-hand side is
///   dim V_alpha * (Delta_n(it) / Dhat_n(e^{it})) * hciz(alpha + rho; it)
/// with Delta_n(it) = prod_{i<j} i(t_i - t_j) and
/// Dhat_n(e^{it}) = prod_{i<j} (e^{i(t_i-t_j)/2} - e^{-i(t_i-t_j)/2}).
/// The sign and phase conventions are pinned by the rank-2 fundamental
/// weight, where both sides reduce to 2 cos(t_1) analytically.
double kirillov_check(const YoungWeight& alpha, const RealSpectrum& t);

/// Residual |prefactor * truncated coroot-lattice sum - 1| for the torus
/// normalization identity behind the kernel/branching relation. `t` has rank
/// n-1 and sums to zero; the lattice runs over integer boxes |p_j| <= cutoff
/// per direction. Terms decay quadratically, so the residual shrinks as the
/// cutoff grows.
double lattice_sum_check(const RealSpectrum& t, int n, int cutoff);

} // namespace sunbranch
