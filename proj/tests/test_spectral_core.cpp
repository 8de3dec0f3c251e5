#include "doctest.h"

#include <bit>
#include <cmath>
#include <random>

#include "nlks/fourier.hpp"
#include "nlks/spectral_ops.hpp"

#include "golden_values.hpp"

using namespace nlks;

namespace {

const DomainConfig kSmall{kPi, 32};

SpectralField single_sine(const DomainConfig& d, int k = 1) {
    // sin(k pi x / l) has c_k = -i/2, c_{-k} = i/2.
    SpectralField u(d);
    u.set_mode_pair(k, {0.0, -0.5});
    return u;
}

RealField sampled(const DomainConfig& d, double (*f)(double)) {
    std::vector<double> values(static_cast<std::size_t>(d.grid_size));
    for (int j = 0; j < d.grid_size; ++j)
        values[static_cast<std::size_t>(j)] = f(d.node(j));
    return RealField(d, values);
}

bool bitwise_equal(double a, double b) {
    return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

} // namespace

TEST_SUITE("spectral_core") {

TEST_CASE("domain validation") {
    CHECK_THROWS_AS((DomainConfig{-1.0, 32}.validate()), ConfigError);
    CHECK_THROWS_AS((DomainConfig{1.0, 6}.validate()), ConfigError);
    CHECK_THROWS_AS((DomainConfig{1.0, 33}.validate()), ConfigError);
    CHECK_NOTHROW((DomainConfig{1.0, 8}.validate()));
    const DomainConfig d{2.0, 16};
    CHECK(d.wavenumber(3) == doctest::Approx(3.0 * kPi / 2.0));
    CHECK(d.node(0) == doctest::Approx(-2.0));
}

TEST_CASE("analysis of a single sine mode") {
    const RealField f = sampled(kSmall, [](double x) { return std::sin(x); });
    const SpectralField u = to_spectral(f);
    CHECK(std::abs(u.coeff(1) - std::complex<double>(0.0, -0.5)) < 1e-14);
    CHECK(std::abs(u.coeff(-1) - std::complex<double>(0.0, 0.5)) < 1e-14);
    double rest = 0.0;
    for (int k = 2; k < kSmall.grid_size / 2; ++k) rest += std::abs(u.coeff(k));
    CHECK(rest < 1e-13);
}

TEST_CASE("zero samples give zero coefficients") {
    const SpectralField u = to_spectral(RealField(kSmall));
    CHECK(u.max_abs_coeff() == 0.0);
}

TEST_CASE("synthesis of a single sine mode") {
    const RealField f = to_real(single_sine(kSmall));
    for (int j = 0; j < kSmall.grid_size; ++j)
        CHECK(f.values()[static_cast<std::size_t>(j)] ==
              doctest::Approx(std::sin(kSmall.node(j))).epsilon(1e-12));
}

TEST_CASE("round trip on seeded random samples") {
    // Independent oracle: random samples generated outside the spectral
    // machinery must survive analysis + synthesis to 1e-12.  The state space
    // excludes the mean and the unpaired Nyquist direction (the alternating
    // sample vector), so both are projected out here by hand.
    std::mt19937_64 engine(12345);
    const DomainConfig d{3.0, 128};
    std::vector<double> values(static_cast<std::size_t>(d.grid_size));
    double mean = 0.0;
    double alternating = 0.0;
    double parity = 1.0;
    for (auto& v : values) {
        v = static_cast<double>(engine() >> 11) * 0x1.0p-53 - 0.5;
        mean += v;
        alternating += parity * v;
        parity = -parity;
    }
    mean /= static_cast<double>(values.size());
    alternating /= static_cast<double>(values.size());
    parity = 1.0;
    for (auto& v : values) {
        v -= mean + parity * alternating;
        parity = -parity;
    }

    const RealField f(d, values);
    const RealField back = to_real(to_spectral(f));
    double worst = 0.0;
    for (std::size_t j = 0; j < values.size(); ++j)
        worst = std::max(worst, std::abs(back.values()[j] - values[j]));
    CHECK(worst <= 1e-12);
}

TEST_CASE("synthesis forces zero mean") {
    const SpectralField u = random_field(kSmall, 99, 1.0, 1.0);
    CHECK(std::abs(to_real(u).mean()) <= 1e-13);
}

TEST_CASE("length mismatch is a configuration error") {
    CHECK_THROWS_AS(RealField(kSmall, std::vector<double>(7, 0.0)), ConfigError);
    CHECK_THROWS_AS(SpectralField(kSmall, std::vector<std::complex<double>>(5)), ConfigError);
}

TEST_CASE("broken Hermitian symmetry is rejected by synthesis") {
    SpectralField u = single_sine(kSmall);
    u.set_raw(-1, {0.3, 0.7});
    CHECK_THROWS_AS(to_real(u), InvariantViolation);
}

TEST_CASE("derivative of sine modes") {
    const SpectralField u = single_sine(kSmall);
    const RealField d1 = to_real(derivative(u, 1));
    const RealField d4 = to_real(derivative(u, 4));
    for (int j = 0; j < kSmall.grid_size; ++j) {
        const double x = kSmall.node(j);
        CHECK(d1.values()[static_cast<std::size_t>(j)] ==
              doctest::Approx(std::cos(x)).epsilon(1e-12));
        CHECK(d4.values()[static_cast<std::size_t>(j)] ==
              doctest::Approx(std::sin(x)).epsilon(1e-12));
    }
}

TEST_CASE("derivative composition matches second derivative") {
    const SpectralField u = random_field(DomainConfig{5.0, 64}, 7, 1.0, 1.0);
    const SpectralField twice = derivative(derivative(u, 1), 1);
    const SpectralField second = derivative(u, 2);
    CHECK(l2_norm(twice - second) <= 1e-12);
}

TEST_CASE("derivative rejects unsupported order") {
    const SpectralField u = single_sine(kSmall);
    CHECK_THROWS_AS(derivative(u, 0), ConfigError);
    CHECK_THROWS_AS(derivative(u, 5), ConfigError);
}

TEST_CASE("hilbert maps cos to -sin") {
    SpectralField u(kSmall);
    u.set_mode_pair(1, {0.5, 0.0}); // cos(x)
    const RealField h = to_real(hilbert(u));
    for (int j = 0; j < kSmall.grid_size; ++j)
        CHECK(h.values()[static_cast<std::size_t>(j)] ==
              doctest::Approx(-std::sin(kSmall.node(j))).epsilon(1e-12));
}

TEST_CASE("hilbert identity suite on 100 seeded fields") {
    const DomainConfig d{16.0 * kPi, 128};
    for (int i = 0; i < 100; ++i) {
        const SpectralField u = random_field(d, 1000 + 2 * i, 1.0, 1.5);
        const SpectralField v = random_field(d, 1001 + 2 * i, 1.0, 1.5);
        CHECK(l2_norm(hilbert(hilbert(u)) + u) <= 1e-12);
        CHECK(std::abs(l2_norm(hilbert(u)) - l2_norm(u)) <= 1e-12);
        CHECK(std::abs(inner_product(u, hilbert(u))) <= 1e-12);
        CHECK(std::abs(inner_product(v, hilbert(u)) + inner_product(u, hilbert(v))) <= 1e-12);
        CHECK(std::abs(inner_product(hilbert(u), hilbert(v)) - inner_product(u, v)) <= 1e-12);
        CHECK(l2_norm(derivative(hilbert(u), 1) - hilbert(derivative(u, 1))) <= 1e-12);
    }
}

TEST_CASE("norms of a single sine mode") {
    const DomainConfig d{2.5, 64};
    const SpectralField u = single_sine(d);
    CHECK(l2_norm(u) == doctest::Approx(std::sqrt(d.half_length)).epsilon(1e-13));
    CHECK(h1_norm(u) ==
          doctest::Approx(kPi / d.half_length * std::sqrt(d.half_length)).epsilon(1e-13));
    CHECK(l2_norm(SpectralField(d)) == 0.0);
    CHECK(h2_norm(SpectralField(d)) == 0.0);
    CHECK(linf_norm(SpectralField(d)) == 0.0);
}

TEST_CASE("inner products of sine and cosine") {
    const DomainConfig d{4.0, 64};
    const SpectralField s = single_sine(d);
    SpectralField c(d);
    c.set_mode_pair(1, {0.5, 0.0});
    CHECK(inner_product(s, s) == doctest::Approx(d.half_length).epsilon(1e-13));
    CHECK(std::abs(inner_product(s, c)) <= 1e-14);
    CHECK_THROWS_AS(inner_product(s, single_sine(kSmall)), ConfigError);
}

TEST_CASE("parseval consistency on random fields") {
    for (int i = 0; i < 20; ++i) {
        const SpectralField u = random_field(DomainConfig{16.0 * kPi, 256}, 40 + i, 1.0, 2.0);
        const double l2 = l2_norm(u);
        CHECK(std::abs(inner_product(u, u) - l2 * l2) <= 1e-12 * (1.0 + l2 * l2));
    }
}

TEST_CASE("poincare and agmon inequalities on random fields") {
    const DomainConfig d{16.0 * kPi, 256};
    for (int i = 0; i < 100; ++i) {
        const SpectralField g = random_field(d, 5000 + i, 1.0, 1.2);
        const double l2 = l2_norm(g);
        const double h1 = h1_norm(g);
        const double linf = linf_norm(g);
        CHECK(l2 < 2.0 * d.half_length * h1);
        CHECK(linf * linf < 2.0 * l2 * h1);
    }
}

TEST_CASE("poincare ratio shrinks modewise like 1/k") {
    const DomainConfig d{8.0, 64};
    for (int k : {1, 4, 8}) {
        const SpectralField g = single_sine(d, k);
        const double ratio = l2_norm(g) / (2.0 * d.half_length * h1_norm(g));
        CHECK(ratio == doctest::Approx(1.0 / (2.0 * kPi * k)).epsilon(1e-12));
    }
}

TEST_CASE("random_field is deterministic in the seed") {
    const DomainConfig d{16.0 * kPi, 256};
    const SpectralField a = random_field(d, 42, 1.0, 2.0);
    const SpectralField b = random_field(d, 42, 1.0, 2.0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        CHECK(bitwise_equal(a.coeffs()[i].real(), b.coeffs()[i].real()));
        CHECK(bitwise_equal(a.coeffs()[i].imag(), b.coeffs()[i].imag()));
    }
    const SpectralField c = random_field(d, 43, 1.0, 2.0);
    CHECK(l2_norm(a - c) > 0.0);
}

TEST_CASE("random_field support and invariants") {
    const DomainConfig d{16.0 * kPi, 256};
    const SpectralField u = random_field(d, 3, 2.0, 1.5);
    CHECK(std::abs(u.coeffs()[0]) == 0.0);
    for (int k = d.grid_size / 6 + 1; k < d.grid_size / 2; ++k)
        CHECK(std::abs(u.coeff(k)) == 0.0);
    CHECK(std::abs(u.coeff(1)) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(std::abs(to_real(u).mean()) <= 1e-13);
    CHECK_THROWS_AS(random_field(d, 0, -1.0, 2.0), ConfigError);
    CHECK_THROWS_AS(random_field(d, 0, 1.0, 0.0), ConfigError);
}

TEST_CASE("random_field regression pin") {
    // Golden value recorded from this implementation's first run; guards the
    // generator, the norm convention and the transform stack together.
    const SpectralField u = random_field(DomainConfig{16.0 * kPi, 256}, 0, 1.0, 2.0);
    CHECK(l2_norm(u) == doctest::Approx(NLKS_GOLDEN_RANDOM_FIELD_L2).epsilon(1e-12));
}

TEST_CASE("resample preserves shared modes") {
    const DomainConfig d{16.0 * kPi, 128};
    const SpectralField u = random_field(d, 11, 1.0, 2.0);
    const SpectralField fine = resample(u, 256);
    CHECK(fine.grid_size() == 256);
    CHECK(l2_norm(fine) == doctest::Approx(l2_norm(u)).epsilon(1e-14));
    for (int k = 1; k < 64; ++k)
        CHECK(std::abs(fine.coeff(k) - u.coeff(k)) == 0.0);
    const SpectralField coarse = resample(fine, 128);
    CHECK(l2_norm(coarse - u) == 0.0);
    CHECK_THROWS_AS(resample(u, 6), ConfigError);
}

} // TEST_SUITE
