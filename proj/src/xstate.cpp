#include "qcorr/xstate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qcorr {

void XState::validate() const {
    const double trace_defect = std::abs(a + 2.0 * b + d - 1.0);
    if (trace_defect > 1e-9)
        throw invalid_state_error("XState: trace defect " + std::to_string(trace_defect));
    if (a < -1e-12 || b < -1e-12 || d < -1e-12)
        throw invalid_state_error("XState: negative population");
    if (w * w > a * d + 1e-12)
        throw invalid_state_error("XState: outer block not positive (w^2 > a d)");
    if (std::abs(z) > b + 1e-12)
        throw invalid_state_error("XState: inner block not positive (|z| > b)");
}

ComplexMatrix XState::to_matrix() const {
    ComplexMatrix m(4);
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = b;
    m(3, 3) = d;
    m(0, 3) = w;
    m(3, 0) = w;
    m(1, 2) = z;
    m(2, 1) = z;
    return m;
}

DensityMatrix XState::to_density_matrix(Tolerances tol) const {
    validate();
    return DensityMatrix(to_matrix(), tol);
}

std::vector<double> XState::eigenvalues() const {
    double lo, hi;
    detail::eig2x2(a, complexd(w), d, lo, hi);
    std::vector<double> eig{lo, hi, b + z, b - z};
    std::sort(eig.begin(), eig.end());
    return eig;
}

double XState::entropy() const { return entropy_of_spectrum(eigenvalues()); }

double XState::marginal_entropy() const { return binary_entropy(a + b); }

double XState::purity() const { return a * a + d * d + 2.0 * (b * b + w * w + z * z); }

// splitmix64; chosen over std::uniform_real_distribution so the stream is
// identical on every platform/toolchain.
static std::uint64_t splitmix64(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double XStateSampler::uniform() {
    return static_cast<double>(splitmix64(state_) >> 11) * 0x1.0p-53;
}

XState XStateSampler::next() {
    XState x;
    // marginal of a on the triangle {a in [0,1], 0 <= b <= (1-a)/2} is prop. to (1-a)
    x.a = 1.0 - std::sqrt(1.0 - uniform());
    x.b = uniform() * 0.5 * (1.0 - x.a);
    x.d = 1.0 - x.a - 2.0 * x.b;
    if (x.d < 0.0) x.d = 0.0;
    x.w = (2.0 * uniform() - 1.0) * std::sqrt(std::max(x.a * x.d, 0.0));
    x.z = (2.0 * uniform() - 1.0) * x.b;
    return x;
}

} // namespace qcorr
