#pragma once

#include <vector>

#include "nlks/dynamics.hpp"

namespace nlks {

/// Fourth-order exponential time differencing stepper (Cox-Matthews ETDRK4)
/// for the diagonal stiff linear part.  The phi-function weights are averaged
/// over a unit-radius complex contour around each lambda_k*dt, which stays
/// accurate when lambda_k*dt sits at or near zero.  Immutable after
/// construction; rebuild whenever dt, alpha or the domain changes.
class Etdrk4Stepper {
public:
    Etdrk4Stepper(const LinearSymbol& symbol, double dt,
                  bool dealias = true, bool linear_only = false);

    const DomainConfig& domain() const { return symbol_.domain; }
    const LinearSymbol& symbol() const { return symbol_; }
    double dt() const { return dt_; }
    bool dealias() const { return dealias_; }
    bool linear_only() const { return linear_only_; }

    /// Advances one step of dt.  Exact on the linear flow when the nonlinear
    /// term is disabled.  Throws BlowUpError (carrying t_now + dt) when the
    /// result has a non-finite coefficient or its L2 norm exceeds 1e6.
    SpectralField step(const SpectralField& u, double t_now) const;

private:
    LinearSymbol symbol_;
    double dt_ = 0.0;
    bool dealias_ = true;
    bool linear_only_ = false;
    std::vector<double> exp_full_;  // e^{lambda dt}
    std::vector<double> exp_half_;  // e^{lambda dt/2}
    std::vector<double> w_half_;    // half-step phi1 weight
    std::vector<double> w1_, w2_, w3_;  // final-combination weights
};

/// Free-function form of Etdrk4Stepper::step.
SpectralField step_etdrk4(const SpectralField& u, const Etdrk4Stepper& stepper,
                          double t_now = 0.0);

} // namespace nlks
