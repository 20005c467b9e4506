#ifndef QCORR_RESERVOIR_HPP
#define QCORR_RESERVOIR_HPP

#include "qcorr/errors.hpp"

namespace qcorr {

enum class CouplingRegime { strong, weak };

/// Lorentzian reservoir: gamma0 sets the system relaxation scale (tau_R ~
/// 1/gamma0), lambda the spectral width / bath memory (tau_B ~ 1/lambda).
/// Strong coupling means tau_R < 2 tau_B, i.e. gamma0 > lambda/2; there the
/// decay amplitude oscillates and revivals occur.
struct ReservoirParams {
    double gamma0 = 1.0;
    double lambda = 0.01;

    void validate() const {
        if (!(gamma0 > 0.0) || !(lambda > 0.0))
            throw std::domain_error("ReservoirParams: gamma0 and lambda must be positive");
    }

    CouplingRegime regime() const {
        return gamma0 > 0.5 * lambda ? CouplingRegime::strong : CouplingRegime::weak;
    }
};

/// Bell-like initial state alpha|00> + sqrt(1 - alpha^2)|11>, parametrized by
/// the |00> population alpha^2.
struct BellLikeInitial {
    double alpha2 = 0.5;

    void validate() const {
        if (!(alpha2 >= 0.0 && alpha2 <= 1.0))
            throw std::domain_error("BellLikeInitial: alpha2 outside [0, 1]");
    }
};

} // namespace qcorr

#endif
