#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nlks/trajectory.hpp"

namespace nlks {

// ---------------------------------------------------------------------------
// Operator identities and inequalities
// ---------------------------------------------------------------------------

/// One checked identity or inequality with its worst observed slack.
struct PropertyCheck {
    std::string name;
    double worst = 0.0;     // identities: max deviation; inequalities: max lhs/rhs ratio
    double tolerance = 0.0; // identities: max allowed deviation; inequalities: 1 (strict)
    bool strict = false;    // true for Poincare/Agmon style strict inequalities
    bool passed = true;
};

struct PropertyReport {
    int fields_checked = 0;
    std::vector<PropertyCheck> checks;

    bool all_passed() const;
};

/// Runs every transform identity plus the Poincare and Agmon inequalities on
/// `count` seeded random fields.  Violations become failed entries in the
/// report, not exceptions.
PropertyReport check_inequalities(const DomainConfig& domain, std::uint64_t seed, int count);

// ---------------------------------------------------------------------------
// Uniform norm estimates
// ---------------------------------------------------------------------------

/// Measured suprema of the L2, H1 and H2 norms over an observation window.
struct NormEstimates {
    double rho0 = 0.0;
    double rho1 = 0.0;
    double rho2 = 0.0;

    void absorb(const NormEstimates& other);
};

/// Suprema of a recorded series over times in [window_start, window_end].
NormEstimates measure_norm_suprema(const NormSeries& series,
                                   double window_start, double window_end);

struct UniformBoundsResult {
    std::vector<double> alphas;
    std::vector<NormEstimates> per_alpha;
    NormEstimates pooled;
};

/// Integrates u0 once per alpha (t_end = window_end) and measures the norm
/// suprema over the window, plus their pooled maxima across the grid.
UniformBoundsResult measure_uniform_bounds(const SpectralField& u0,
                                           const std::vector<double>& alphas,
                                           const SolverParams& base_params,
                                           double window_start, double window_end,
                                           int max_threads = 1);

// ---------------------------------------------------------------------------
// Trajectory difference w = u - v
// ---------------------------------------------------------------------------

/// Difference norms between the nonlocal trajectory u (given alpha) and the
/// classical trajectory v (alpha = 0), integrated in lockstep from the same
/// initial data on the same time grid.
struct DifferenceSeries {
    double alpha = 0.0;
    std::vector<double> times;
    std::vector<double> l2; // ||w(t)||
    std::vector<double> h1; // diagnostics
    NormEstimates nonlocal_bounds; // suprema of the u run
    NormEstimates local_bounds;    // suprema of the v run

    double sup_l2() const;
};

DifferenceSeries trajectory_difference(const SpectralField& u0, double alpha,
                                       const SolverParams& params);

// ---------------------------------------------------------------------------
// Difference growth bound
// ---------------------------------------------------------------------------

struct GronwallConstants {
    double b1 = 2.0; // 2 + 4 sqrt(rho1 rho2)
    double b2 = 0.0; // 2 rho1^2
};

GronwallConstants gronwall_constants(const NormEstimates& est);

/// Rigorous difference bound alpha * sqrt((b2/b1)(e^{b1 t} - 1)).  Returns
/// +infinity when e^{b1 t} overflows (the bound is then vacuous).
double gronwall_bound(const NormEstimates& est, double alpha, double t);

/// Verdict of checking ||w(t)|| against the bound at every snapshot
/// t <= t_max_check.
struct BoundCheck {
    bool passed = true;
    int checked = 0;          // snapshots compared against a finite bound
    double worst_margin = 0.0; // min over checked snapshots of bound - observed
    bool vacuous = false;      // bound overflowed somewhere in the window
    double vacuous_from = 0.0; // first snapshot time with an infinite bound
    bool violated = false;
    double violation_time = 0.0;
    double violation_observed = 0.0;
    double violation_bound = 0.0;
};

/// A violation indicates numerical error, not a broken estimate: the bound is
/// rigorous for the exact solutions, so failures should disappear under grid
/// refinement.
BoundCheck verify_bound(const DifferenceSeries& diff, const NormEstimates& est,
                        double alpha, double t_max_check);

// ---------------------------------------------------------------------------
// Scaling fit
// ---------------------------------------------------------------------------

struct ScalingFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0; // rms residual in log-log space
    std::vector<std::size_t> excluded; // indices dropped (nonpositive data)
    std::size_t used = 0;
};

/// Least-squares line through (log alpha, log sup_w).  Requires >= 3 points;
/// nonpositive entries are excluded and noted.
ScalingFit fit_scaling(const std::vector<double>& alphas,
                       const std::vector<double>& sup_w);

// ---------------------------------------------------------------------------
// Attractor sampling
// ---------------------------------------------------------------------------

/// Post-transient cloud of norm observables (l2, h1, linf), a computable
/// proxy for the attractor.
struct AttractorSample {
    double alpha = 0.0;
    double t_transient = 0.0;
    double t_sample = 0.0;
    std::vector<std::array<double, 3>> points;
};

/// Integrates to t_transient + t_sample and keeps every stride-th recorded
/// snapshot with t >= t_transient.
AttractorSample sample_attractor(const SpectralField& u0, const SolverParams& params,
                                 double t_transient, double t_sample, int stride);

/// Field snapshots over the same window, for function-space clouds.
std::vector<SpectralField> sample_attractor_fields(const SpectralField& u0,
                                                   const SolverParams& params,
                                                   double t_transient, double t_sample,
                                                   int stride);

/// Generic point-cloud views.
std::vector<std::vector<double>> observable_cloud(const AttractorSample& sample);

/// Embeds fields as coordinate vectors whose Euclidean distance equals the L2
/// distance between the fields.
std::vector<std::vector<double>> l2_embedding(const std::vector<SpectralField>& fields);

/// One-sided Hausdorff distance: max over a in A of min over b in B of the
/// Euclidean distance.  Zero iff every point of A appears in B.
double hausdorff_semidistance(const std::vector<std::vector<double>>& a,
                              const std::vector<std::vector<double>>& b);

// ---------------------------------------------------------------------------
// Experiment drivers
// ---------------------------------------------------------------------------

/// Per-alpha outcome of the sweep; failed runs carry an error note instead of
/// a difference series.
struct SweepRun {
    double alpha = 0.0;
    bool ok = false;
    double sup_w = 0.0;
    std::string error;
    DifferenceSeries diff;
};

struct ConvergenceReport {
    double t_end = 0.0;
    double t_max_check = 0.0;
    std::vector<SweepRun> runs;
    NormEstimates rho; // pooled over both trajectories of every surviving run
    bool fit_ok = false;
    ScalingFit fit;
    std::vector<BoundCheck> bound_checks; // parallel to surviving runs order

    std::vector<double> alphas() const;
    std::vector<double> sup_w() const;
};

/// Runs trajectory_difference per alpha (concurrently up to max_threads),
/// pools the norm estimates, fits the log-log scaling on >= 3 survivors and
/// verifies the difference bound per surviving alpha.
ConvergenceReport run_alpha_sweep(const SpectralField& u0,
                                  const std::vector<double>& alphas,
                                  const SolverParams& params,
                                  double t_max_check,
                                  int max_threads = 0);

struct AttractorRun {
    double alpha = 0.0;
    bool ok = false;
    std::size_t points = 0;
    double distance = 0.0; // one-sided distance to the alpha = 0 cloud
    std::string error;
};

struct AttractorReport {
    double t_transient = 0.0;
    double t_sample = 0.0;
    int stride = 1;
    bool function_space = false;
    std::size_t baseline_points = 0;
    std::vector<AttractorRun> runs;
};

/// Samples the alpha = 0 cloud plus one cloud per grid alpha and computes the
/// one-sided distances toward the baseline.  function_space switches from
/// observable clouds to full L2 snapshot clouds.
AttractorReport run_attractor_experiment(const SpectralField& u0,
                                         const std::vector<double>& alphas,
                                         const SolverParams& params,
                                         double t_transient, double t_sample, int stride,
                                         bool function_space = false,
                                         int max_threads = 0);

} // namespace nlks
