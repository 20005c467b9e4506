#ifndef QCORR_MATRIX_HPP
#define QCORR_MATRIX_HPP

#include <complex>
#include <vector>

#include "qcorr/errors.hpp"

namespace qcorr {

using complexd = std::complex<double>;

/// Small dense complex matrix (row-major). Dimensions stay in single digits
/// here (two qubits, or the three-level ladder with its pseudomode), so no
/// attempt is made at large-dimension performance.
class ComplexMatrix {
public:
    ComplexMatrix() : dim_(0) {}
    explicit ComplexMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {}

    static ComplexMatrix identity(int dim);

    int dim() const noexcept { return dim_; }

    complexd& operator()(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
    const complexd& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(complexd s);

    ComplexMatrix adjoint() const;
    complexd trace() const;

    /// max_ij |a_ij - conj(a_ji)|
    double hermiticity_defect() const;
    /// max_ij |a_ij|
    double max_abs() const;
    double frobenius_norm() const;

    /// this <- alpha * L * R  (dimensions must agree; this must not alias L or R)
    void assign_product(const ComplexMatrix& L, const ComplexMatrix& R, complexd alpha = 1.0);
    /// this += alpha * M
    void add_scaled(const ComplexMatrix& M, complexd alpha);
    void set_zero();

private:
    int dim_;
    std::vector<complexd> a_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(complexd s, ComplexMatrix m);

/// Real eigenvalues of a Hermitian matrix, ascending. 1x1 and 2x2 are closed
/// form; larger dimensions use cyclic Jacobi rotations driven to an
/// off-diagonal norm below 1e-12 (relative to the matrix scale).
/// Throws invalid_state_error if M is not Hermitian within hermiticity_tol.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& M, double hermiticity_tol = 1e-9);

struct Tolerances {
    double hermiticity = 1e-9;
    double trace = 1e-9;
    double positivity = 1e-8;
};

enum class Subsystem { A, B };

/// Validated density operator: Hermitian, unit trace, positive semidefinite
/// within the stored tolerances. Immutable after construction; eigenvalues
/// are computed once at validation time.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix m, Tolerances tol = {});

    const ComplexMatrix& matrix() const noexcept { return m_; }
    int dim() const noexcept { return m_.dim(); }
    const Tolerances& tolerances() const noexcept { return tol_; }
    /// Eigenvalues as validated, ascending.
    const std::vector<double>& eigenvalues() const noexcept { return eig_; }

private:
    ComplexMatrix m_;
    Tolerances tol_;
    std::vector<double> eig_;
};

/// x * log2(x), with the 0*log 0 = 0 convention (and 0 for negative x).
double xlog2(double x);
/// Binary entropy in bits.
double binary_entropy(double p);
/// Entropy in bits of a probability list; entries are clamped to [0,1].
double entropy_of_spectrum(const std::vector<double>& eigenvalues);

/// von Neumann entropy in bits. Eigenvalues in [-10*positivity_tol, 0) are
/// clamped to 0 (integrator round-off); anything below that range throws.
double vn_entropy(const DensityMatrix& rho);

/// Reduced state of the subsystem *kept* after tracing out `traced_out`.
/// rho must be 4x4 with A-major basis order |00>,|01>,|10>,|11>.
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem traced_out);

namespace detail {
/// Eigenvalues of the Hermitian 2x2 [[a, b],[conj(b), d]] (a, d real), ascending.
void eig2x2(double a, complexd b, double d, double& lo, double& hi);
} // namespace detail

} // namespace qcorr

#endif
