#include "sunbranch/linalg.hpp"

#include <cmath>
#include <utility>

namespace sunbranch {

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(n_);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            m.at(i, j) = std::conj(at(j, i));
        }
    }
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.n_ != b.n_) throw InvalidArgumentError("ComplexMatrix: size mismatch");
    const int n = a.n_;
    ComplexMatrix c(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Complex aik = a.at(i, k);
            if (aik == Complex{}) continue;
            for (int j = 0; j < n; ++j) {
                c.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return c;
}

Complex determinant(ComplexMatrix m) {
    const int n = m.size();
    Complex det = 1.0;
    for (int k = 0; k < n; ++k) {
        int pivot = k;
        double best = std::abs(m.at(k, k));
        for (int i = k + 1; i < n; ++i) {
            if (std::abs(m.at(i, k)) > best) {
                best = std::abs(m.at(i, k));
                pivot = i;
            }
        }
        if (best == 0.0) return 0.0;
        if (pivot != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            det = -det;
        }
        det *= m.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            const Complex f = m.at(i, k) / m.at(k, k);
            for (int j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
        }
    }
    return det;
}

HermitianMatrix::HermitianMatrix(int n) : m_(n) {}

HermitianMatrix HermitianMatrix::from_dense(const ComplexMatrix& a, double tol) {
    const int n = a.size();
    double defect = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            defect = std::max(defect, std::abs(a.at(i, j) - std::conj(a.at(j, i))));
        }
    }
    if (defect > tol) {
        throw InvalidArgumentError("HermitianMatrix: defect " + std::to_string(defect) +
                                   " exceeds tolerance");
    }
    HermitianMatrix h(n);
    for (int i = 0; i < n; ++i) {
        h.m_.at(i, i) = a.at(i, i).real();
        for (int j = i + 1; j < n; ++j) {
            const Complex v = 0.5 * (a.at(i, j) + std::conj(a.at(j, i)));
            h.m_.at(i, j) = v;
            h.m_.at(j, i) = std::conj(v);
        }
    }
    return h;
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& values) {
    HermitianMatrix h(static_cast<int>(values.size()));
    for (int i = 0; i < h.size(); ++i) h.m_.at(i, i) = values[static_cast<std::size_t>(i)];
    return h;
}

double HermitianMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < size(); ++i) t += m_.at(i, i).real();
    return t;
}

} // namespace sunbranch
