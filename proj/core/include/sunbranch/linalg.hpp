#pragma once

#include <complex>
#include <vector>

#include "sunbranch/errors.hpp"

namespace sunbranch {

using Complex = std::complex<double>;

/// Dense complex square matrix, row major. Small and value-semantic; the
/// library only ever handles desk-scale ranks.
class ComplexMatrix {
public:
    explicit ComplexMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {
        if (n < 1) throw InvalidArgumentError("ComplexMatrix: size must be positive");
    }

    static ComplexMatrix identity(int n);

    int size() const { return n_; }

    Complex& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const Complex& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    ComplexMatrix adjoint() const;
    double frobenius_norm() const;

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    int n_;
    std::vector<Complex> a_;
};

/// Determinant by partially pivoted LU elimination.
Complex determinant(ComplexMatrix m);

/// Hermitian matrix. Construction from a dense matrix checks the Hermitian
/// defect against a tolerance and then symmetrizes exactly, so entry(i,j) ==
/// conj(entry(j,i)) holds bitwise afterwards.
class HermitianMatrix {
public:
    explicit HermitianMatrix(int n);

    static HermitianMatrix from_dense(const ComplexMatrix& a, double tol = 1e-12);

    /// Diagonal real matrix diag(values).
    static HermitianMatrix diagonal(const std::vector<double>& values);

    int size() const { return m_.size(); }
    const Complex& at(int i, int j) const { return m_.at(i, j); }
    const ComplexMatrix& dense() const { return m_; }

    double trace() const;
    double frobenius_norm() const { return m_.frobenius_norm(); }

private:
    ComplexMatrix m_;
};

} // namespace sunbranch
