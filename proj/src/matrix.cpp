#include "qcorr/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace qcorr {

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (dim_ != rhs.dim_) throw dimension_error("matrix add: dimension mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (dim_ != rhs.dim_) throw dimension_error("matrix subtract: dimension mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(complexd s) {
    for (auto& v : a_) v *= s;
    return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

complexd ComplexMatrix::trace() const {
    complexd t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::hermiticity_defect() const {
    double worst = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j)
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
}

double ComplexMatrix::max_abs() const {
    double worst = 0.0;
    for (const auto& v : a_) worst = std::max(worst, std::abs(v));
    return worst;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

void ComplexMatrix::assign_product(const ComplexMatrix& L, const ComplexMatrix& R, complexd alpha) {
    if (L.dim_ != dim_ || R.dim_ != dim_) throw dimension_error("matrix product: dimension mismatch");
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            complexd s = 0.0;
            for (int k = 0; k < dim_; ++k) s += L(i, k) * R(k, j);
            (*this)(i, j) = alpha * s;
        }
    }
}

void ComplexMatrix::add_scaled(const ComplexMatrix& M, complexd alpha) {
    if (M.dim_ != dim_) throw dimension_error("matrix axpy: dimension mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += alpha * M.a_[k];
}

void ComplexMatrix::set_zero() { std::fill(a_.begin(), a_.end(), complexd(0.0)); }

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    ComplexMatrix out(lhs.dim());
    out.assign_product(lhs, rhs);
    return out;
}

ComplexMatrix operator*(complexd s, ComplexMatrix m) { return m *= s; }

namespace detail {

void eig2x2(double a, complexd b, double d, double& lo, double& hi) {
    const double mean = 0.5 * (a + d);
    const double rad = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
    lo = mean - rad;
    hi = mean + rad;
}

} // namespace detail

namespace {

// One cyclic Jacobi sweep: annihilate every off-diagonal pair (p, q) in turn.
// Standard complex rotation: with a_pq = r e^{i phi}, tau = (a_qq - a_pp)/(2r),
// t = sign(tau)/(|tau| + sqrt(1 + tau^2)), the unitary differs from identity by
// J_pp = J_qq = c, J_pq = s e^{i phi}, J_qp = -s e^{-i phi}.
void jacobi_sweep(ComplexMatrix& m) {
    const int n = m.dim();
    for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const complexd apq = m(p, q);
            const double r = std::abs(apq);
            if (r == 0.0) continue;
            const complexd phase = apq / r;
            const double tau = (m(q, q).real() - m(p, p).real()) / (2.0 * r);
            const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;

            for (int k = 0; k < n; ++k) {
                const complexd mkp = m(k, p);
                const complexd mkq = m(k, q);
                m(k, p) = c * mkp - s * std::conj(phase) * mkq;
                m(k, q) = s * phase * mkp + c * mkq;
            }
            for (int k = 0; k < n; ++k) {
                const complexd mpk = m(p, k);
                const complexd mqk = m(q, k);
                m(p, k) = c * mpk - s * phase * mqk;
                m(q, k) = s * std::conj(phase) * mpk + c * mqk;
            }
        }
    }
}

double off_diagonal_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

} // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& M, double hermiticity_tol) {
    const int n = M.dim();
    if (n <= 0) throw dimension_error("hermitian_eigenvalues: empty matrix");
    if (M.hermiticity_defect() > hermiticity_tol)
        throw invalid_state_error("hermitian_eigenvalues: matrix is not Hermitian within tolerance");

    if (n == 1) return {M(0, 0).real()};
    if (n == 2) {
        double lo, hi;
        detail::eig2x2(M(0, 0).real(), M(0, 1), M(1, 1).real(), lo, hi);
        return {lo, hi};
    }

    ComplexMatrix work = M;
    // enforce exact Hermiticity of the working copy so the rotations stay unitary
    for (int i = 0; i < n; ++i) {
        work(i, i) = work(i, i).real();
        for (int j = i + 1; j < n; ++j) {
            const complexd avg = 0.5 * (work(i, j) + std::conj(work(j, i)));
            work(i, j) = avg;
            work(j, i) = std::conj(avg);
        }
    }

    const double thresh = 1e-12 * std::max(1.0, work.frobenius_norm());
    for (int sweep = 0; sweep < 60 && off_diagonal_norm(work) > thresh; ++sweep) jacobi_sweep(work);

    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = work(i, i).real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

DensityMatrix::DensityMatrix(ComplexMatrix m, Tolerances tol) : m_(std::move(m)), tol_(tol) {
    if (m_.dim() <= 0) throw dimension_error("DensityMatrix: empty matrix");
    const double hdef = m_.hermiticity_defect();
    if (hdef > tol_.hermiticity)
        throw invalid_state_error("DensityMatrix: Hermiticity defect " + std::to_string(hdef));
    const double tdef = std::abs(m_.trace() - complexd(1.0));
    if (tdef > tol_.trace)
        throw invalid_state_error("DensityMatrix: trace defect " + std::to_string(tdef));
    eig_ = hermitian_eigenvalues(m_, tol_.hermiticity);
    if (eig_.front() < -tol_.positivity)
        throw invalid_state_error("DensityMatrix: negative eigenvalue " + std::to_string(eig_.front()));
}

double xlog2(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

double binary_entropy(double p) {
    const double h = -xlog2(p) - xlog2(1.0 - p);
    return h > 0.0 ? h : 0.0;
}

double entropy_of_spectrum(const std::vector<double>& eigenvalues) {
    double s = 0.0;
    for (double l : eigenvalues) s -= xlog2(std::clamp(l, 0.0, 1.0));
    return s > 0.0 ? s : 0.0;
}

double vn_entropy(const DensityMatrix& rho) {
    double s = 0.0;
    for (double l : rho.eigenvalues()) {
        if (l < -10.0 * rho.tolerances().positivity)
            throw invalid_state_error("vn_entropy: eigenvalue " + std::to_string(l) +
                                      " below the clamping range");
        s -= xlog2(std::clamp(l, 0.0, 1.0));
    }
    return s > 0.0 ? s : 0.0;
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem traced_out) {
    if (rho.dim() != 4) throw dimension_error("partial_trace: expected a 4x4 two-qubit state");
    const ComplexMatrix& r = rho.matrix();
    ComplexMatrix red(2);
    // A-major ordering: composite index = 2*iA + iB
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            complexd s = 0.0;
            for (int k = 0; k < 2; ++k)
                s += (traced_out == Subsystem::B) ? r(2 * i + k, 2 * j + k)
                                                  : r(2 * k + i, 2 * k + j);
            red(i, j) = s;
        }
    }
    return DensityMatrix(std::move(red), rho.tolerances());
}

} // namespace qcorr
