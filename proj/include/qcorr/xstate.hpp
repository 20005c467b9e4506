#ifndef QCORR_XSTATE_HPP
#define QCORR_XSTATE_HPP

#include <cstdint>
#include <vector>

#include "qcorr/matrix.hpp"

namespace qcorr {

/// Two-qubit X-form state with real coherences and equal middle populations,
///
///     [ a  0  0  w ]
///     [ 0  b  z  0 ]        basis |00>,|01>,|10>,|11>, A-major
///     [ 0  z  b  0 ]
///     [ w  0  0  d ]
///
/// Five real parameters; a + 2b + d = 1. Both 2x2 blocks must be positive:
/// w^2 <= a d and |z| <= b.
struct XState {
    double a = 1.0;
    double b = 0.0;
    double d = 0.0;
    double w = 0.0;
    double z = 0.0;

    /// Throws invalid_state_error when the invariants fail (trace within 1e-9,
    /// populations >= -1e-12, block positivity within 1e-12).
    void validate() const;

    ComplexMatrix to_matrix() const;
    DensityMatrix to_density_matrix(Tolerances tol = {}) const;

    /// Closed-form eigenvalues {(a+d)/2 +- sqrt((a-d)^2/4 + w^2), b +- z}, ascending.
    std::vector<double> eigenvalues() const;

    /// Entropy in bits of the full state, from the closed-form spectrum.
    double entropy() const;
    /// Entropy in bits of either marginal (both equal diag(a+b, b+d)).
    double marginal_entropy() const;
    /// Tr rho^2 = a^2 + d^2 + 2(b^2 + w^2 + z^2).
    double purity() const;
};

/// Samples a valid XState: (a, b, d) uniform on the simplex a + 2b + d = 1,
/// then w uniform in [-sqrt(ad), sqrt(ad)] and z uniform in [-b, b]. Stays
/// exactly inside the positivity region. The generator is engine-portable:
/// uniforms are built directly from the raw 64-bit stream.
class XStateSampler {
public:
    explicit XStateSampler(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    XState next();
    /// Uniform double in [0, 1).
    double uniform();

private:
    std::uint64_t state_;
};

} // namespace qcorr

#endif
