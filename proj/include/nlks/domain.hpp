#pragma once

#include "nlks/errors.hpp"

namespace nlks {

inline constexpr double kPi = 3.14159265358979323846;

/// Periodic domain (-l, l) of period 2l, sampled on N uniform collocation
/// nodes x_j = -l + 2*l*j/N.  Fourier mode k lives at wavenumber q_k = k*pi/l.
struct DomainConfig {
    double half_length = 16.0 * kPi;
    int grid_size = 512;

    void validate() const {
        if (!(half_length > 0.0))
            throw ConfigError("domain: half_length must be positive");
        if (grid_size < 8 || grid_size % 2 != 0)
            throw ConfigError("domain: grid_size must be even and >= 8");
    }

    double wavenumber(int k) const {
        return static_cast<double>(k) * kPi / half_length;
    }

    double node(int j) const {
        return -half_length +
               2.0 * half_length * static_cast<double>(j) / static_cast<double>(grid_size);
    }

    int nyquist() const { return grid_size / 2; }

    bool operator==(const DomainConfig&) const = default;
};

} // namespace nlks
