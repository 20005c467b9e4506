#ifndef QCORR_ERRORS_HPP
#define QCORR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qcorr {

/// A matrix handed to an operation violates the state invariants it requires
/// (Hermiticity, unit trace, positivity) beyond the stated tolerance.
class invalid_state_error : public std::runtime_error {
public:
    explicit invalid_state_error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands have incompatible or unsupported dimensions.
class dimension_error : public std::invalid_argument {
public:
    explicit dimension_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Requested quantity is undefined in the given coupling regime.
class unsupported_regime_error : public std::domain_error {
public:
    explicit unsupported_regime_error(const std::string& what) : std::domain_error(what) {}
};

/// The master-equation integration drifted outside its invariants.
class integration_error : public std::runtime_error {
public:
    integration_error(const std::string& what, double t)
        : std::runtime_error(what + " at t = " + std::to_string(t)), time_(t) {}
    double time() const noexcept { return time_; }

private:
    double time_;
};

} // namespace qcorr

#endif
