#pragma once

#include "nlks/field.hpp"

namespace nlks {

/// Discrete Fourier analysis of real samples.  The resulting c_0 is forced to
/// exact zero (the mean is not part of the state space) and the Nyquist entry
/// is cleared.  Throws ConfigError when the sample count does not match the
/// domain.
SpectralField to_spectral(const RealField& f);

/// Synthesis back to collocation samples.  Throws InvariantViolation when the
/// Hermitian symmetry or the locked zero/Nyquist modes are broken.
RealField to_real(const SpectralField& u);

} // namespace nlks
