#include "isgd/matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "isgd/errors.hpp"

namespace isgd {

Matrix& Matrix::operator+=(const Matrix& o) {
    if (o.n_ != n_) throw DimensionMismatch("matrix dimension mismatch in +=");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (o.n_ != n_) throw DimensionMismatch("matrix dimension mismatch in -=");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

Matrix& Matrix::operator*=(double s) {
    for (auto& v : a_) v *= s;
    return *this;
}

bool Matrix::is_symmetric(double tol) const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (std::abs((*this)(i, j) - (*this)(j, i)) > tol * (1.0 + std::abs((*this)(i, j))))
                return false;
    return true;
}

void Matrix::symmetrize() {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) {
            const double m = 0.5 * ((*this)(i, j) + (*this)(j, i));
            (*this)(i, j) = m;
            (*this)(j, i) = m;
        }
}

void Matrix::add_outer(std::span<const double> v, double scale) {
    if (static_cast<int>(v.size()) != n_) throw DimensionMismatch("add_outer dimension mismatch");
    for (int i = 0; i < n_; ++i) {
        const double vi = scale * v[i];
        double* row = a_.data() + static_cast<std::size_t>(i) * n_;
        for (int j = 0; j < n_; ++j) row[j] += vi * v[j];
    }
}

double Matrix::min_diagonal() const {
    double m = (*this)(0, 0);
    for (int i = 1; i < n_; ++i) m = std::min(m, (*this)(i, i));
    return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    const int n = a.dim();
    if (b.dim() != n) throw DimensionMismatch("matmul dimension mismatch");
    Matrix c(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

void matvec(const Matrix& a, std::span<const double> x, std::span<double> y) {
    const int n = a.dim();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
        throw DimensionMismatch("matvec dimension mismatch");
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
}

Matrix cholesky_lower(const Matrix& a) {
    const int n = a.dim();
    Matrix l(n);
    for (int j = 0; j < n; ++j) {
        double d = a(j, j);
        for (int k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
        if (!(d > 0.0)) throw std::runtime_error("cholesky: matrix not positive definite");
        l(j, j) = std::sqrt(d);
        for (int i = j + 1; i < n; ++i) {
            double s = a(i, j);
            for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            l(i, j) = s / l(j, j);
        }
    }
    return l;
}

void cholesky_solve(const Matrix& lower, std::span<double> x) {
    const int n = lower.dim();
    if (static_cast<int>(x.size()) != n) throw DimensionMismatch("cholesky_solve dimension mismatch");
    for (int i = 0; i < n; ++i) {
        double s = x[i];
        for (int k = 0; k < i; ++k) s -= lower(i, k) * x[k];
        x[i] = s / lower(i, i);
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = x[i];
        for (int k = i + 1; k < n; ++k) s -= lower(k, i) * x[k];
        x[i] = s / lower(i, i);
    }
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

}  // namespace isgd
