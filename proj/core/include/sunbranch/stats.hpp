#pragma once

namespace sunbranch {

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double regularized_gamma_p(double a, double x);

/// Quantile of the chi-square distribution with dof degrees of freedom.
double chi_square_quantile(double p, int dof);

} // namespace sunbranch
