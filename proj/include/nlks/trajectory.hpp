#pragma once

#include <functional>
#include <vector>

#include "nlks/etdrk4.hpp"

namespace nlks {

/// Time series of (L2, H1, H2, Linf, mean) along one trajectory.
struct NormSeries {
    std::vector<double> times;
    std::vector<double> l2;
    std::vector<double> h1;
    std::vector<double> h2;
    std::vector<double> linf;
    std::vector<double> mean;

    std::size_t size() const { return times.size(); }
    void push(double t, double l2_v, double h1_v, double h2_v, double linf_v, double mean_v);

    /// Throws InvariantViolation unless lengths match and times strictly increase.
    void validate() const;
};

using SnapshotObserver = std::function<void(double t, const SpectralField& u)>;

/// Integrates u0 over ceil(t_end/dt) steps of ETDRK4.  Records norms at t = 0,
/// after every snapshot_every-th step, and at the final step; the observer, if
/// set, is invoked at the same instants.  The sampled mean is asserted to stay
/// within 1e-10 at every record.  Blow-ups propagate as BlowUpError with the
/// failure time.
NormSeries integrate(const SpectralField& u0, const SolverParams& params,
                     const SnapshotObserver& observer = {});

} // namespace nlks
