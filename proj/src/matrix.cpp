#include "cqms/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "cqms/errors.hpp"
#include "cqms/rng.hpp"
#include "cqms/tolerances.hpp"

namespace cqms {

DenseMatrix DenseMatrix::identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = std::conj(at(i, j));
    return r;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInputError("matrix add: shape mismatch");
    DenseMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInputError("matrix sub: shape mismatch");
    DenseMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
    if (cols_ != o.rows_) throw InvalidInputError("matrix mul: shape mismatch");
    DenseMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            Complex aik = at(i, k);
            if (aik == 0.0) continue;
            const Complex* brow = &o.a_[static_cast<size_t>(k) * o.cols_];
            Complex* rrow = &r.a_[static_cast<size_t>(i) * o.cols_];
            for (int j = 0; j < o.cols_; ++j) rrow[j] += aik * brow[j];
        }
    }
    return r;
}

DenseMatrix DenseMatrix::scaled(Complex c) const {
    DenseMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
    return r;
}

DenseMatrix DenseMatrix::plus_scaled_identity(Complex c) const {
    if (rows_ != cols_) throw InvalidInputError("plus_scaled_identity: square matrices only");
    DenseMatrix r = *this;
    for (int i = 0; i < rows_; ++i) r.at(i, i) += c;
    return r;
}

double DenseMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

double DenseMatrix::max_abs_entry() const {
    double s = 0.0;
    for (const auto& z : a_) s = std::max(s, std::abs(z));
    return s;
}

bool DenseMatrix::all_finite() const {
    for (const auto& z : a_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

double DenseMatrix::hermitian_defect() const {
    if (rows_ != cols_) throw InvalidInputError("hermitian_defect: square matrices only");
    double d = 0.0;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j) d = std::max(d, std::abs(at(i, j) - std::conj(at(j, i))));
    return d;
}

DenseMatrix DenseMatrix::symmetrized() const {
    DenseMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = 0.5 * (at(i, j) + std::conj(at(j, i)));
    return r;
}

DenseMatrix DenseMatrix::top_left_block(int r, int c) const {
    if (r > rows_ || c > cols_) throw InvalidInputError("top_left_block: block exceeds matrix");
    DenseMatrix b(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) b.at(i, j) = at(i, j);
    return b;
}

DenseMatrix DenseMatrix::kronecker(const DenseMatrix& other) const {
    DenseMatrix r(rows_ * other.rows_, cols_ * other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            Complex aij = at(i, j);
            if (aij == 0.0) continue;
            for (int p = 0; p < other.rows_; ++p)
                for (int q = 0; q < other.cols_; ++q)
                    r.at(i * other.rows_ + p, j * other.cols_ + q) = aij * other.at(p, q);
        }
    return r;
}

namespace {

void matvec(const DenseMatrix& m, const std::vector<Complex>& x, std::vector<Complex>& y) {
    y.assign(m.rows(), Complex(0.0));
    for (int i = 0; i < m.rows(); ++i) {
        Complex s = 0.0;
        for (int j = 0; j < m.cols(); ++j) s += m.at(i, j) * x[j];
        y[i] = s;
    }
}

void matvec_adjoint(const DenseMatrix& m, const std::vector<Complex>& x, std::vector<Complex>& y) {
    y.assign(m.cols(), Complex(0.0));
    for (int i = 0; i < m.rows(); ++i) {
        Complex xi = std::conj(x[i]);
        if (xi == 0.0) continue;
        for (int j = 0; j < m.cols(); ++j) y[j] += std::conj(m.at(i, j) * xi);
    }
}

double vec_norm(const std::vector<Complex>& v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
}

} // namespace

double operator_norm(const DenseMatrix& m) {
    if (!m.all_finite()) throw InvalidInputError("operator_norm: non-finite entry");
    if (m.rows() == 0 || m.cols() == 0) return 0.0;

    // Deterministic start vector keyed on the shape only.
    CounterRng start(0x9A0442C96AE039F1ull + 31ull * m.rows() + static_cast<std::uint64_t>(m.cols()));
    std::vector<Complex> v(m.cols());
    for (auto& z : v) z = Complex(start.uniform(-1.0, 1.0), start.uniform(-1.0, 1.0));
    double nv = vec_norm(v);
    for (auto& z : v) z /= nv;

    std::vector<Complex> w, u;
    double est = 0.0;
    for (int it = 0; it < tol().power_max_iter; ++it) {
        matvec(m, v, w);          // w = A v
        double sigma = vec_norm(w);
        if (sigma == 0.0) return 0.0;
        matvec_adjoint(m, w, u);  // u = A* w = (A*A) v
        double nu = vec_norm(u);
        if (nu == 0.0) return sigma;
        for (size_t i = 0; i < u.size(); ++i) v[i] = u[i] / nu;
        double prev = est;
        est = sigma;
        if (it > 0 && std::abs(est - prev) <= tol().power_rel_change * std::max(est, 1e-300)) break;
    }
    return est;
}

namespace {

// One cyclic Jacobi pass zeroing A[p][q] with a complex rotation.
// A is hermitian and updated in place.
void jacobi_rotate(DenseMatrix& a, int p, int q) {
    Complex apq = a.at(p, q);
    double abs_apq = std::abs(apq);
    if (abs_apq == 0.0) return;
    double app = a.at(p, p).real();
    double aqq = a.at(q, q).real();
    Complex phase = apq / abs_apq;

    double tau = (aqq - app) / (2.0 * abs_apq);
    double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                            : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
    double c = 1.0 / std::sqrt(1.0 + t * t);
    double s = t * c;

    int n = a.rows();
    // columns: [vp, vq] <- [c*vp - s*conj(phase)*vq, s*phase*vp + c*vq]
    for (int i = 0; i < n; ++i) {
        Complex aip = a.at(i, p);
        Complex aiq = a.at(i, q);
        a.at(i, p) = c * aip - s * std::conj(phase) * aiq;
        a.at(i, q) = s * phase * aip + c * aiq;
    }
    for (int j = 0; j < n; ++j) {
        Complex apj = a.at(p, j);
        Complex aqj = a.at(q, j);
        a.at(p, j) = c * apj - s * phase * aqj;
        a.at(q, j) = s * std::conj(phase) * apj + c * aqj;
    }
    a.at(p, q) = 0.0;
    a.at(q, p) = 0.0;
    a.at(p, p) = Complex(a.at(p, p).real(), 0.0);
    a.at(q, q) = Complex(a.at(q, q).real(), 0.0);
}

double off_diagonal_norm(const DenseMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a.at(i, j));
    return std::sqrt(s);
}

} // namespace

std::vector<double> hermitian_eigenvalues(const DenseMatrix& m) {
    if (!m.all_finite()) throw InvalidInputError("hermitian_eigenvalues: non-finite entry");
    if (m.rows() != m.cols()) throw InvalidInputError("hermitian_eigenvalues: square matrices only");
    if (m.hermitian_defect() > tol().hermitian_abs)
        throw InvalidInputError("hermitian_eigenvalues: input not hermitian within tolerance");

    DenseMatrix a = m.symmetrized();
    int n = a.rows();
    double scale = a.frobenius_norm();
    if (scale == 0.0) return std::vector<double>(n, 0.0);

    for (int sweep = 0; sweep < tol().jacobi_max_sweeps; ++sweep) {
        if (off_diagonal_norm(a) <= tol().jacobi_rel_off * scale) break;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q)
                if (std::abs(a.at(p, q)) > 0.0) jacobi_rotate(a, p, q);
    }

    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = a.at(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

double min_eigenvalue_hermitian(const DenseMatrix& m) {
    return hermitian_eigenvalues(m).front();
}

double max_eigenvalue_hermitian(const DenseMatrix& m) {
    return hermitian_eigenvalues(m).back();
}

} // namespace cqms
