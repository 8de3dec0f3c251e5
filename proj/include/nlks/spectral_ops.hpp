#pragma once

#include <cstdint>

#include "nlks/field.hpp"

namespace nlks {

/// Spectral derivative of the given order (1..4): c_k <- (i q_k)^order c_k.
SpectralField derivative(const SpectralField& u, int order);

/// Periodic Hilbert transform, c_k <- i sgn(k) c_k.  Anti-involutive and
/// norm-preserving on zero-mean fields.
SpectralField hilbert(const SpectralField& u);

/// L2 norm over (-l, l): sqrt(2l * sum |c_k|^2).
double l2_norm(const SpectralField& u);

/// Homogeneous H1 norm ||u_x||; a norm on the zero-mean space.
double h1_norm(const SpectralField& u);

/// Homogeneous H2 norm ||u_xx||.
double h2_norm(const SpectralField& u);

/// Max |u(x_j)| over the collocation nodes.
double linf_norm(const SpectralField& u);

/// L2 inner product over (-l, l) via Parseval.  Domains must match.
double inner_product(const SpectralField& u, const SpectralField& v);

/// Deterministic band-limited initial data: modes 1 <= |k| <= N/6 get
/// magnitude amplitude * |k|^{-decay} and a seeded random phase.
SpectralField random_field(const DomainConfig& domain, std::uint64_t seed,
                           double amplitude, double decay);

/// Spectral injection/truncation onto a grid of new_grid_size nodes (same
/// half_length).  Shared modes are copied, the rest zeroed.
SpectralField resample(const SpectralField& u, int new_grid_size);

} // namespace nlks
