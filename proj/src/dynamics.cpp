#include "nlks/dynamics.hpp"

#include <cmath>

#include "nlks/fourier.hpp"

namespace nlks {

void SolverParams::validate() const {
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw ConfigError("solver: alpha must be finite and >= 0");
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw ConfigError("solver: dt must be finite and positive");
    if (!(t_end >= 0.0) || !std::isfinite(t_end))
        throw ConfigError("solver: t_end must be finite and >= 0");
    if (snapshot_every < 1)
        throw ConfigError("solver: snapshot_every must be >= 1");
}

namespace {

int signed_mode(int index, int n) { return index <= n / 2 ? index : index - n; }

} // namespace

LinearSymbol classical_symbol(const DomainConfig& domain) {
    domain.validate();
    LinearSymbol sym;
    sym.domain = domain;
    sym.alpha = 0.0;
    sym.lambda.resize(static_cast<std::size_t>(domain.grid_size));
    for (int i = 0; i < domain.grid_size; ++i) {
        const double q = domain.wavenumber(signed_mode(i, domain.grid_size));
        const double q2 = q * q;
        sym.lambda[static_cast<std::size_t>(i)] = q2 - q2 * q2;
    }
    sym.lambda[0] = 0.0;
    return sym;
}

LinearSymbol linear_symbol(const DomainConfig& domain, double alpha) {
    if (!(alpha >= 0.0))
        throw ConfigError("linear_symbol: alpha must be >= 0");
    // The local limit is the classical symbol itself, not an alpha-scaled
    // variant of it; this keeps the alpha = 0 trajectory bit-identical to the
    // dedicated classical path.
    if (alpha == 0.0) return classical_symbol(domain);

    domain.validate();
    LinearSymbol sym;
    sym.domain = domain;
    sym.alpha = alpha;
    sym.lambda.resize(static_cast<std::size_t>(domain.grid_size));
    for (int i = 0; i < domain.grid_size; ++i) {
        const double q = domain.wavenumber(signed_mode(i, domain.grid_size));
        const double q2 = q * q;
        const double q_abs = std::abs(q);
        sym.lambda[static_cast<std::size_t>(i)] = q2 - q2 * q2 - alpha * q_abs * q_abs * q_abs;
    }
    sym.lambda[0] = 0.0;
    return sym;
}

int dealias_cutoff(int grid_size) { return grid_size / 3; }

namespace {

void apply_dealias_mask(SpectralField& u) {
    const int n = u.grid_size();
    const int cutoff = dealias_cutoff(n);
    auto c = u.coeffs();
    for (int i = cutoff + 1; i <= n - cutoff - 1; ++i)
        c[static_cast<std::size_t>(i)] = 0.0;
}

} // namespace

SpectralField nonlinear_term(const SpectralField& u, bool dealias) {
    SpectralField work = u;
    if (dealias) apply_dealias_mask(work);

    RealField samples = to_real(work);
    for (double& v : samples.values()) v *= v;

    SpectralField product = to_spectral(samples);
    auto c = product.coeffs();
    const int n = u.grid_size();
    for (int i = 0; i < n; ++i) {
        const double q = u.domain().wavenumber(signed_mode(i, n));
        // -(u^2)_x / 2 in mode space: multiply by -i q / 2.
        c[static_cast<std::size_t>(i)] *= std::complex<double>(0.0, -0.5 * q);
    }
    if (dealias) apply_dealias_mask(product);
    product.clamp_locked_modes();
    return product;
}

SpectralField rhs(const SpectralField& u, const LinearSymbol& symbol, bool dealias) {
    if (!(u.domain() == symbol.domain))
        throw ConfigError("rhs: symbol was built for a different domain");
    SpectralField out = nonlinear_term(u, dealias);
    auto oc = out.coeffs();
    auto uc = u.coeffs();
    for (std::size_t i = 0; i < oc.size(); ++i) oc[i] += symbol.lambda[i] * uc[i];
    out.clamp_locked_modes();
    return out;
}

} // namespace nlks
