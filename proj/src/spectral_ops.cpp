#include "nlks/spectral_ops.hpp"

#include <cmath>
#include <random>

#include "nlks/fourier.hpp"

namespace nlks {

namespace {

int signed_mode(int index, int n) { return index <= n / 2 ? index : index - n; }

// Uniform double in [0, 1) from the top 53 bits; the standard distributions
// are implementation-defined, this mapping is not.
double unit_double(std::mt19937_64& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

} // namespace

SpectralField derivative(const SpectralField& u, int order) {
    if (order < 1 || order > 4)
        throw ConfigError("derivative: order must be in {1, 2, 3, 4}");

    SpectralField out = u;
    auto c = out.coeffs();
    const int n = u.grid_size();
    for (int i = 0; i < n; ++i) {
        const double q = u.domain().wavenumber(signed_mode(i, n));
        const std::size_t s = static_cast<std::size_t>(i);
        switch (order) {
        case 1: c[s] *= std::complex<double>(0.0, q); break;
        case 2: c[s] *= -q * q; break;
        case 3: c[s] *= std::complex<double>(0.0, -q * q * q); break;
        case 4: c[s] *= q * q * q * q; break;
        }
    }
    out.clamp_locked_modes();
    return out;
}

SpectralField hilbert(const SpectralField& u) {
    SpectralField out = u;
    auto c = out.coeffs();
    const int n = u.grid_size();
    for (int i = 0; i < n; ++i) {
        const int k = signed_mode(i, n);
        const std::size_t s = static_cast<std::size_t>(i);
        if (k > 0)
            c[s] *= std::complex<double>(0.0, 1.0);
        else if (k < 0)
            c[s] *= std::complex<double>(0.0, -1.0);
        else
            c[s] = 0.0; // sgn(0) := 0
    }
    out.clamp_locked_modes();
    return out;
}

double l2_norm(const SpectralField& u) {
    double sumsq = 0.0;
    for (const auto& c : u.coeffs()) sumsq += std::norm(c);
    return std::sqrt(2.0 * u.domain().half_length * sumsq);
}

double h1_norm(const SpectralField& u) { return l2_norm(derivative(u, 1)); }

double h2_norm(const SpectralField& u) { return l2_norm(derivative(u, 2)); }

double linf_norm(const SpectralField& u) { return to_real(u).max_abs(); }

double inner_product(const SpectralField& u, const SpectralField& v) {
    if (!u.same_domain(v))
        throw ConfigError("inner_product: fields live on different domains");
    double acc = 0.0;
    auto cu = u.coeffs();
    auto cv = v.coeffs();
    for (std::size_t i = 0; i < cu.size(); ++i)
        acc += cu[i].real() * cv[i].real() + cu[i].imag() * cv[i].imag();
    return 2.0 * u.domain().half_length * acc;
}

SpectralField random_field(const DomainConfig& domain, std::uint64_t seed,
                           double amplitude, double decay) {
    domain.validate();
    if (!(amplitude > 0.0)) throw ConfigError("random_field: amplitude must be positive");
    if (!(decay > 0.0)) throw ConfigError("random_field: decay must be positive");

    std::mt19937_64 engine(seed);
    SpectralField out(domain);
    const int k_max = domain.grid_size / 6;
    for (int k = 1; k <= k_max && k < domain.grid_size / 2; ++k) {
        const double magnitude = amplitude * std::pow(static_cast<double>(k), -decay);
        const double phase = 2.0 * kPi * unit_double(engine);
        out.set_mode_pair(k, std::polar(magnitude, phase));
    }
    return out;
}

SpectralField resample(const SpectralField& u, int new_grid_size) {
    DomainConfig target{u.domain().half_length, new_grid_size};
    target.validate();
    SpectralField out(target);
    const int shared = std::min(u.grid_size(), new_grid_size) / 2 - 1;
    for (int k = 1; k <= shared; ++k) out.set_mode_pair(k, u.coeff(k));
    return out;
}

} // namespace nlks
