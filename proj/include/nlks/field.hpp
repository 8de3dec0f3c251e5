#pragma once

#include <complex>
#include <span>
#include <vector>

#include "nlks/domain.hpp"

namespace nlks {

/// Real samples at the collocation nodes of a domain.  Carries no zero-mean
/// guarantee of its own: intermediates such as pointwise squares legitimately
/// have nonzero mean, and to_spectral removes it.
class RealField {
public:
    RealField() = default;
    explicit RealField(const DomainConfig& domain);
    RealField(const DomainConfig& domain, std::vector<double> values);

    const DomainConfig& domain() const { return domain_; }
    std::span<const double> values() const { return values_; }
    std::span<double> values() { return values_; }

    double mean() const;
    double max_abs() const;

private:
    DomainConfig domain_{};
    std::vector<double> values_;
};

/// Complex Fourier coefficients of a real zero-mean periodic function.
///
/// Storage follows FFT index order: entry i holds mode k = i for i <= N/2 and
/// k = i - N above.  Every construction and operator path keeps c_0 = 0, the
/// unpaired Nyquist entry c_{-N/2} = 0, and c_{-k} = conj(c_k); the synthesis
/// routine revalidates the symmetry and refuses fields where it is broken.
class SpectralField {
public:
    SpectralField() = default;
    explicit SpectralField(const DomainConfig& domain);
    SpectralField(const DomainConfig& domain, std::vector<std::complex<double>> coeffs);

    const DomainConfig& domain() const { return domain_; }
    int grid_size() const { return domain_.grid_size; }

    std::span<const std::complex<double>> coeffs() const { return coeffs_; }
    std::span<std::complex<double>> coeffs() { return coeffs_; }

    /// Coefficient of signed mode k, -N/2 <= k < N/2.
    std::complex<double> coeff(int k) const;

    /// Sets mode k and its conjugate partner at -k; requires 0 < k < N/2.
    void set_mode_pair(int k, std::complex<double> value);

    /// Writes a single entry without touching its partner.  Bypasses the
    /// symmetry invariant; exists so tests can break it on purpose.
    void set_raw(int k, std::complex<double> value);

    /// Forces c_0 and the Nyquist entry to exact zero.
    void clamp_locked_modes();

    /// Max |c_{-k} - conj(c_k)| over paired modes.
    double hermitian_defect() const;

    double max_abs_coeff() const;

    bool same_domain(const SpectralField& other) const { return domain_ == other.domain_; }

private:
    int index_of(int k) const;

    DomainConfig domain_{};
    std::vector<std::complex<double>> coeffs_;
};

SpectralField operator+(const SpectralField& a, const SpectralField& b);
SpectralField operator-(const SpectralField& a, const SpectralField& b);
SpectralField operator*(double scale, const SpectralField& a);

} // namespace nlks
