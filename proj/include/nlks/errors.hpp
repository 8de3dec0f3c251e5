#pragma once

#include <stdexcept>
#include <string>

namespace nlks {

/// Bad configuration or mismatched inputs: wrong grid length, incompatible
/// domains, invalid CLI/config values.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A structural invariant was violated at runtime (broken Hermitian symmetry,
/// mean drift beyond tolerance).
struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Time integration produced a non-finite or runaway state.
class BlowUpError : public std::runtime_error {
public:
    BlowUpError(const std::string& what, double time)
        : std::runtime_error(what + " (t = " + std::to_string(time) + ")"), time_(time) {}

    /// Simulation time at which the failure was detected.
    double time() const { return time_; }

private:
    double time_;
};

} // namespace nlks
