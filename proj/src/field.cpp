#include "nlks/field.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace nlks {

RealField::RealField(const DomainConfig& domain)
    : domain_(domain), values_(static_cast<std::size_t>(domain.grid_size), 0.0) {
    domain_.validate();
}

RealField::RealField(const DomainConfig& domain, std::vector<double> values)
    : domain_(domain), values_(std::move(values)) {
    domain_.validate();
    if (values_.size() != static_cast<std::size_t>(domain_.grid_size))
        throw ConfigError("real field: sample count does not match domain grid_size");
}

double RealField::mean() const {
    double sum = 0.0;
    for (double v : values_) sum += v;
    return sum / static_cast<double>(values_.size());
}

double RealField::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

SpectralField::SpectralField(const DomainConfig& domain)
    : domain_(domain), coeffs_(static_cast<std::size_t>(domain.grid_size)) {
    domain_.validate();
}

SpectralField::SpectralField(const DomainConfig& domain, std::vector<std::complex<double>> coeffs)
    : domain_(domain), coeffs_(std::move(coeffs)) {
    domain_.validate();
    if (coeffs_.size() != static_cast<std::size_t>(domain_.grid_size))
        throw ConfigError("spectral field: coefficient count does not match domain grid_size");
    clamp_locked_modes();
}

int SpectralField::index_of(int k) const {
    const int n = domain_.grid_size;
    if (k < -n / 2 || k >= n / 2)
        throw ConfigError("spectral field: mode index out of range");
    return k >= 0 ? k : k + n;
}

std::complex<double> SpectralField::coeff(int k) const {
    return coeffs_[static_cast<std::size_t>(index_of(k))];
}

void SpectralField::set_mode_pair(int k, std::complex<double> value) {
    const int n = domain_.grid_size;
    if (k <= 0 || k >= n / 2)
        throw ConfigError("set_mode_pair: k must satisfy 0 < k < N/2");
    coeffs_[static_cast<std::size_t>(k)] = value;
    coeffs_[static_cast<std::size_t>(n - k)] = std::conj(value);
}

void SpectralField::set_raw(int k, std::complex<double> value) {
    coeffs_[static_cast<std::size_t>(index_of(k))] = value;
}

void SpectralField::clamp_locked_modes() {
    coeffs_[0] = 0.0;
    coeffs_[static_cast<std::size_t>(domain_.grid_size / 2)] = 0.0;
}

double SpectralField::hermitian_defect() const {
    const int n = domain_.grid_size;
    double worst = 0.0;
    for (int k = 1; k < n / 2; ++k) {
        const auto defect = coeffs_[static_cast<std::size_t>(n - k)] -
                            std::conj(coeffs_[static_cast<std::size_t>(k)]);
        worst = std::max(worst, std::abs(defect));
    }
    return worst;
}

double SpectralField::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

namespace {

void require_same_domain(const SpectralField& a, const SpectralField& b, const char* op) {
    if (!a.same_domain(b))
        throw ConfigError(std::string(op) + ": fields live on different domains");
}

} // namespace

SpectralField operator+(const SpectralField& a, const SpectralField& b) {
    require_same_domain(a, b, "field sum");
    SpectralField out = a;
    auto oc = out.coeffs();
    auto bc = b.coeffs();
    for (std::size_t i = 0; i < oc.size(); ++i) oc[i] += bc[i];
    return out;
}

SpectralField operator-(const SpectralField& a, const SpectralField& b) {
    require_same_domain(a, b, "field difference");
    SpectralField out = a;
    auto oc = out.coeffs();
    auto bc = b.coeffs();
    for (std::size_t i = 0; i < oc.size(); ++i) oc[i] -= bc[i];
    return out;
}

SpectralField operator*(double scale, const SpectralField& a) {
    SpectralField out = a;
    for (auto& c : out.coeffs()) c *= scale;
    return out;
}

} // namespace nlks
