#include "nlks/trajectory.hpp"

#include <cmath>

#include "nlks/fourier.hpp"
#include "nlks/spectral_ops.hpp"

namespace nlks {

void NormSeries::push(double t, double l2_v, double h1_v, double h2_v,
                      double linf_v, double mean_v) {
    times.push_back(t);
    l2.push_back(l2_v);
    h1.push_back(h1_v);
    h2.push_back(h2_v);
    linf.push_back(linf_v);
    mean.push_back(mean_v);
}

void NormSeries::validate() const {
    const std::size_t n = times.size();
    if (l2.size() != n || h1.size() != n || h2.size() != n ||
        linf.size() != n || mean.size() != n)
        throw InvariantViolation("norm series: column lengths differ");
    for (std::size_t i = 1; i < n; ++i)
        if (!(times[i] > times[i - 1]))
            throw InvariantViolation("norm series: times are not strictly increasing");
    for (std::size_t i = 0; i < n; ++i)
        if (l2[i] < 0.0 || h1[i] < 0.0 || h2[i] < 0.0 || linf[i] < 0.0)
            throw InvariantViolation("norm series: negative norm entry");
}

namespace {

constexpr double kMeanTolerance = 1e-10;

int step_count(double t_end, double dt) {
    if (t_end <= 0.0) return 0;
    return static_cast<int>(std::ceil(t_end / dt - 1e-9));
}

} // namespace

NormSeries integrate(const SpectralField& u0, const SolverParams& params,
                     const SnapshotObserver& observer) {
    params.validate();
    u0.domain().validate();

    const LinearSymbol symbol = linear_symbol(u0.domain(), params.alpha);
    const Etdrk4Stepper stepper(symbol, params.dt, params.dealias, params.linear_only);

    NormSeries series;
    auto record = [&](double t, const SpectralField& u) {
        const RealField samples = to_real(u);
        const double mean = samples.mean();
        if (std::abs(mean) > kMeanTolerance)
            throw InvariantViolation("integrate: sampled mean drifted beyond 1e-10 at t = " +
                                     std::to_string(t));
        series.push(t, l2_norm(u), h1_norm(u), h2_norm(u), samples.max_abs(), mean);
        if (observer) observer(t, u);
    };

    record(0.0, u0);
    const int steps = step_count(params.t_end, params.dt);
    SpectralField u = u0;
    for (int s = 1; s <= steps; ++s) {
        u = stepper.step(u, static_cast<double>(s - 1) * params.dt);
        if (s % params.snapshot_every == 0 || s == steps)
            record(static_cast<double>(s) * params.dt, u);
    }
    return series;
}

} // namespace nlks
