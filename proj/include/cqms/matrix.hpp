#pragma once

#include <complex>
#include <vector>

namespace cqms {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major. The workhorse container for operator
/// realizations; sizes here are desk scale (a few thousand at most).
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static DenseMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Complex& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Complex& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    DenseMatrix adjoint() const;
    DenseMatrix transpose_conjugate() const { return adjoint(); }

    DenseMatrix operator+(const DenseMatrix& o) const;
    DenseMatrix operator-(const DenseMatrix& o) const;
    DenseMatrix operator*(const DenseMatrix& o) const;
    DenseMatrix scaled(Complex c) const;

    /// this + c * I (square only).
    DenseMatrix plus_scaled_identity(Complex c) const;

    double frobenius_norm() const;
    double max_abs_entry() const;
    bool all_finite() const;

    /// max |A[i][j] - conj(A[j][i])|; square matrices only.
    double hermitian_defect() const;
    bool is_hermitian(double tol) const { return rows_ == cols_ && hermitian_defect() <= tol; }

    /// (A + A*)/2. Used to scrub roundoff before eigenvalue routines.
    DenseMatrix symmetrized() const;

    /// Keep rows [0, r) and cols [0, c).
    DenseMatrix top_left_block(int r, int c) const;

    /// Kronecker product (this ⊗ other).
    DenseMatrix kronecker(const DenseMatrix& other) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Complex> a_;
};

/// Largest singular value, power iteration on A*A. Relative accuracy is
/// adequate for desk-scale matrices; deterministic start vector.
double operator_norm(const DenseMatrix& m);

/// All eigenvalues of a hermitian matrix, ascending (cyclic Jacobi).
/// Input must be hermitian within tolerance; it is symmetrized first.
std::vector<double> hermitian_eigenvalues(const DenseMatrix& m);

double min_eigenvalue_hermitian(const DenseMatrix& m);
double max_eigenvalue_hermitian(const DenseMatrix& m);

} // namespace cqms
