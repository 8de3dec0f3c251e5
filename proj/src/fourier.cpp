#include "nlks/fourier.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>

namespace nlks {

namespace {

// FFTW's planner is not thread-safe; plan creation is serialized.  Execution
// on a workspace's own buffers is safe, and each thread keeps its own cache.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct FftwWorkspace {
    int n = 0;
    double* real_buf = nullptr;
    fftw_complex* cplx_buf = nullptr;
    fftw_plan forward = nullptr;  // r2c
    fftw_plan backward = nullptr; // c2r

    explicit FftwWorkspace(int n_) : n(n_) {
        std::lock_guard<std::mutex> lock(planner_mutex());
        real_buf = fftw_alloc_real(static_cast<std::size_t>(n));
        cplx_buf = fftw_alloc_complex(static_cast<std::size_t>(n / 2 + 1));
        forward = fftw_plan_dft_r2c_1d(n, real_buf, cplx_buf, FFTW_ESTIMATE);
        backward = fftw_plan_dft_c2r_1d(n, cplx_buf, real_buf, FFTW_ESTIMATE);
    }

    ~FftwWorkspace() {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(forward);
        fftw_destroy_plan(backward);
        fftw_free(real_buf);
        fftw_free(cplx_buf);
    }

    FftwWorkspace(const FftwWorkspace&) = delete;
    FftwWorkspace& operator=(const FftwWorkspace&) = delete;
};

FftwWorkspace& workspace_for(int n) {
    thread_local std::map<int, std::unique_ptr<FftwWorkspace>> cache;
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<FftwWorkspace>(n);
    return *slot;
}

// Synthesis on the nodes x_j = -l + 2lj/N picks up a (-1)^k phase relative to
// the plain DFT on [0, 2l).
double sign_of(int k) { return (k & 1) ? -1.0 : 1.0; }

} // namespace

SpectralField to_spectral(const RealField& f) {
    const DomainConfig& d = f.domain();
    const int n = d.grid_size;
    if (f.values().size() != static_cast<std::size_t>(n))
        throw ConfigError("to_spectral: sample count does not match domain grid_size");

    FftwWorkspace& ws = workspace_for(n);
    for (int j = 0; j < n; ++j) ws.real_buf[j] = f.values()[static_cast<std::size_t>(j)];
    fftw_execute(ws.forward);

    std::vector<std::complex<double>> coeffs(static_cast<std::size_t>(n));
    const double inv_n = 1.0 / static_cast<double>(n);
    for (int k = 1; k < n / 2; ++k) {
        const std::complex<double> c(ws.cplx_buf[k][0], ws.cplx_buf[k][1]);
        coeffs[static_cast<std::size_t>(k)] = sign_of(k) * inv_n * c;
        coeffs[static_cast<std::size_t>(n - k)] =
            std::conj(coeffs[static_cast<std::size_t>(k)]);
    }
    // c_0 is forced to exact zero (the state space is zero-mean) and the
    // unpaired Nyquist mode is held at zero.
    return SpectralField(d, std::move(coeffs));
}

RealField to_real(const SpectralField& u) {
    const DomainConfig& d = u.domain();
    const int n = d.grid_size;

    const double scale = 1.0 + u.max_abs_coeff();
    if (u.hermitian_defect() > 1e-10 * scale)
        throw InvariantViolation("to_real: broken Hermitian symmetry");
    if (std::abs(u.coeffs()[0]) > 1e-10 * scale)
        throw InvariantViolation("to_real: nonzero mean mode c_0");
    if (std::abs(u.coeffs()[static_cast<std::size_t>(n / 2)]) > 1e-10 * scale)
        throw InvariantViolation("to_real: nonzero Nyquist mode");

    FftwWorkspace& ws = workspace_for(n);
    ws.cplx_buf[0][0] = 0.0;
    ws.cplx_buf[0][1] = 0.0;
    for (int k = 1; k < n / 2; ++k) {
        const auto c = sign_of(k) * u.coeffs()[static_cast<std::size_t>(k)];
        ws.cplx_buf[k][0] = c.real();
        ws.cplx_buf[k][1] = c.imag();
    }
    ws.cplx_buf[n / 2][0] = 0.0;
    ws.cplx_buf[n / 2][1] = 0.0;
    fftw_execute(ws.backward);

    std::vector<double> values(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) values[static_cast<std::size_t>(j)] = ws.real_buf[j];
    return RealField(d, std::move(values));
}

} // namespace nlks
