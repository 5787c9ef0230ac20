#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace isgd {

/// Dense square matrix, row-major. Small p (<= a few hundred); everything the
/// estimators touch is symmetric, which callers maintain themselves.
class Matrix {
  public:
    Matrix() = default;
    explicit Matrix(int n, double fill = 0.0) : n_(n), a_(static_cast<std::size_t>(n) * n, fill) {}

    static Matrix identity(int n) {
        Matrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int dim() const { return n_; }
    double* data() { return a_.data(); }
    const double* data() const { return a_.data(); }

    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(double s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, double s) { return a *= s; }
    friend Matrix operator*(double s, Matrix a) { return a *= s; }

    bool is_symmetric(double tol = 1e-12) const;
    /// Averages A and A^T in place; used to scrub roundoff after solves.
    void symmetrize();

    /// rank-one update: this += scale * v v^T
    void add_outer(std::span<const double> v, double scale = 1.0);

    double min_diagonal() const;
};

Matrix matmul(const Matrix& a, const Matrix& b);

/// y = A x
void matvec(const Matrix& a, std::span<const double> x, std::span<double> y);

/// Lower Cholesky factor of an SPD matrix; throws std::runtime_error if a
/// pivot is not positive.
Matrix cholesky_lower(const Matrix& a);

/// Solves A x = b in place given the lower Cholesky factor of A.
void cholesky_solve(const Matrix& lower, std::span<double> x);

// small vector helpers
double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);
/// y += alpha * x
void axpy(double alpha, std::span<const double> x, std::span<double> y);

}  // namespace isgd
