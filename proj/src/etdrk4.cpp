#include "nlks/etdrk4.hpp"

#include <cmath>
#include <complex>

#include "nlks/errors.hpp"

namespace nlks {

namespace {

constexpr int kContourPoints = 32;

// phi-style weights averaged over a unit circle around x = lambda*dt.  The
// naive closed forms cancel catastrophically near x = 0 (lambda_1 is exactly
// zero when l = pi); the contour mean stays accurate there.  Points on the
// upper half circle suffice because the integrands have real Taylor
// coefficients.
struct ContourWeights {
    double half; // phi1 weight of the half step
    double w1, w2, w3;
};

ContourWeights contour_weights(double x, double dt) {
    std::complex<double> half{}, w1{}, w2{}, w3{};
    for (int m = 0; m < kContourPoints; ++m) {
        const double theta = kPi * (static_cast<double>(m) + 0.5) / kContourPoints;
        const std::complex<double> z = x + std::polar(1.0, theta);
        const std::complex<double> ez = std::exp(z);
        const std::complex<double> ez2 = std::exp(0.5 * z);
        const std::complex<double> z2 = z * z;
        const std::complex<double> z3 = z2 * z;
        half += (ez2 - 1.0) / z;
        w1 += (-4.0 - z + ez * (4.0 - 3.0 * z + z2)) / z3;
        w2 += (2.0 + z + ez * (-2.0 + z)) / z3;
        w3 += (-4.0 - 3.0 * z - z2 + ez * (4.0 - z)) / z3;
    }
    const double scale = dt / kContourPoints;
    return {scale * half.real(), scale * w1.real(), scale * w2.real(), scale * w3.real()};
}

} // namespace

Etdrk4Stepper::Etdrk4Stepper(const LinearSymbol& symbol, double dt,
                             bool dealias, bool linear_only)
    : symbol_(symbol), dt_(dt), dealias_(dealias), linear_only_(linear_only) {
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw ConfigError("etdrk4: dt must be finite and positive");
    symbol_.domain.validate();
    if (symbol_.lambda.size() != static_cast<std::size_t>(symbol_.domain.grid_size))
        throw ConfigError("etdrk4: symbol size does not match its domain");

    const std::size_t n = symbol_.lambda.size();
    exp_full_.resize(n);
    exp_half_.resize(n);
    w_half_.resize(n);
    w1_.resize(n);
    w2_.resize(n);
    w3_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = symbol_.lambda[i] * dt_;
        exp_full_[i] = std::exp(x);
        exp_half_[i] = std::exp(0.5 * x);
        const ContourWeights w = contour_weights(x, dt_);
        w_half_[i] = w.half;
        w1_[i] = w.w1;
        w2_[i] = w.w2;
        w3_[i] = w.w3;
        if (!std::isfinite(exp_full_[i]) || !std::isfinite(w.w1))
            throw ConfigError("etdrk4: non-finite stepper coefficient; reduce dt");
    }
}

SpectralField Etdrk4Stepper::step(const SpectralField& u, double t_now) const {
    if (!(u.domain() == symbol_.domain))
        throw ConfigError("etdrk4: field domain does not match the stepper");

    const std::size_t n = u.coeffs().size();
    SpectralField result(symbol_.domain);
    auto rc = result.coeffs();
    auto uc = u.coeffs();

    if (linear_only_) {
        for (std::size_t i = 0; i < n; ++i) rc[i] = exp_full_[i] * uc[i];
    } else {
        const SpectralField n_u = nonlinear_term(u, dealias_);
        SpectralField stage_a(symbol_.domain);
        {
            auto ac = stage_a.coeffs();
            auto nc = n_u.coeffs();
            for (std::size_t i = 0; i < n; ++i)
                ac[i] = exp_half_[i] * uc[i] + w_half_[i] * nc[i];
        }
        const SpectralField n_a = nonlinear_term(stage_a, dealias_);
        SpectralField stage_b(symbol_.domain);
        {
            auto bc = stage_b.coeffs();
            auto nc = n_a.coeffs();
            for (std::size_t i = 0; i < n; ++i)
                bc[i] = exp_half_[i] * uc[i] + w_half_[i] * nc[i];
        }
        const SpectralField n_b = nonlinear_term(stage_b, dealias_);
        SpectralField stage_c(symbol_.domain);
        {
            auto cc = stage_c.coeffs();
            auto ac = stage_a.coeffs();
            auto nbc = n_b.coeffs();
            auto nuc = n_u.coeffs();
            for (std::size_t i = 0; i < n; ++i)
                cc[i] = exp_half_[i] * ac[i] + w_half_[i] * (2.0 * nbc[i] - nuc[i]);
        }
        const SpectralField n_c = nonlinear_term(stage_c, dealias_);
        {
            auto nuc = n_u.coeffs();
            auto nac = n_a.coeffs();
            auto nbc = n_b.coeffs();
            auto ncc = n_c.coeffs();
            for (std::size_t i = 0; i < n; ++i)
                rc[i] = exp_full_[i] * uc[i] + w1_[i] * nuc[i] +
                        2.0 * w2_[i] * (nac[i] + nbc[i]) + w3_[i] * ncc[i];
        }
    }
    result.clamp_locked_modes();

    double sumsq = 0.0;
    for (std::size_t i = 0; i < n; ++i) sumsq += std::norm(rc[i]);
    const double l2 = std::sqrt(2.0 * symbol_.domain.half_length * sumsq);
    if (!std::isfinite(l2))
        throw BlowUpError("etdrk4: non-finite coefficient after step", t_now + dt_);
    if (l2 > 1e6)
        throw BlowUpError("etdrk4: L2 norm exceeded 1e6, state is running away", t_now + dt_);
    return result;
}

SpectralField step_etdrk4(const SpectralField& u, const Etdrk4Stepper& stepper, double t_now) {
    return stepper.step(u, t_now);
}

} // namespace nlks
