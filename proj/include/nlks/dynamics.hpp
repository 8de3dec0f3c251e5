#pragma once

#include <vector>

#include "nlks/field.hpp"

namespace nlks {

/// One trajectory's recipe.
struct SolverParams {
    double alpha = 0.01;     // nonlocal coefficient, >= 0
    double dt = 0.05;        // fixed time step
    double t_end = 100.0;    // horizon; 0 is allowed and records only t = 0
    bool dealias = true;     // 2/3-rule truncation of the quadratic term
    int snapshot_every = 10; // steps between recorded observations
    bool linear_only = false; // drop the nonlinear term (diagnostic runs)

    void validate() const;
};

/// Diagonal Fourier symbol of the linear part: lambda_k = q^2 - q^4 - a|q|^3,
/// stored in FFT index order.  Monotone in alpha: larger alpha damps every
/// mode at least as hard.
struct LinearSymbol {
    DomainConfig domain;
    double alpha = 0.0;
    std::vector<double> lambda;
};

/// Symbol of the classical equation, lambda_k = q^2 - q^4.
LinearSymbol classical_symbol(const DomainConfig& domain);

/// Symbol of the nonlocal equation.  alpha = 0 delegates to classical_symbol,
/// so the local limit shares its exact arithmetic.
LinearSymbol linear_symbol(const DomainConfig& domain, double alpha);

/// Largest retained mode under the 2/3 rule.
int dealias_cutoff(int grid_size);

/// Spectral coefficients of -u u_x = -(u^2)_x / 2, evaluated pseudo-spectrally.
/// With dealias on, modes |k| > N/3 are zeroed before and after the pointwise
/// square, which removes quadratic aliasing exactly.
SpectralField nonlinear_term(const SpectralField& u, bool dealias);

/// Full right-hand side u_t = lambda_k u_k + (-u u_x)_k.
SpectralField rhs(const SpectralField& u, const LinearSymbol& symbol, bool dealias);

} // namespace nlks
