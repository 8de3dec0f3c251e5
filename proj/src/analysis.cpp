#include "nlks/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nlks/fourier.hpp"
#include "nlks/parallel.hpp"
#include "nlks/spectral_ops.hpp"

namespace nlks {

// ---------------------------------------------------------------------------
// Operator identities and inequalities
// ---------------------------------------------------------------------------

bool PropertyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const PropertyCheck& c) { return c.passed; });
}

namespace {

constexpr double kIdentityTolerance = 1e-10;

struct WorstTracker {
    double worst = 0.0;
    void observe(double v) { worst = std::max(worst, v); }
};

} // namespace

PropertyReport check_inequalities(const DomainConfig& domain, std::uint64_t seed, int count) {
    domain.validate();
    if (count < 1) throw ConfigError("check_inequalities: count must be >= 1");

    WorstTracker involution, isometry, self_orthogonal, antisymmetry, unitarity,
        commutation, parseval, poincare, agmon;

    const double l = domain.half_length;
    for (int i = 0; i < count; ++i) {
        const auto base = seed + 2 * static_cast<std::uint64_t>(i);
        const SpectralField u = random_field(domain, base, 1.0, 1.5);
        const SpectralField v = random_field(domain, base + 1, 1.0, 1.5);

        involution.observe(l2_norm(hilbert(hilbert(u)) + u));
        isometry.observe(std::abs(l2_norm(hilbert(u)) - l2_norm(u)));
        self_orthogonal.observe(std::abs(inner_product(u, hilbert(u))));
        antisymmetry.observe(std::abs(inner_product(v, hilbert(u)) +
                                      inner_product(u, hilbert(v))));
        unitarity.observe(std::abs(inner_product(hilbert(u), hilbert(v)) -
                                   inner_product(u, v)));
        commutation.observe(l2_norm(derivative(hilbert(u), 1) - hilbert(derivative(u, 1))));

        const double l2 = l2_norm(u);
        parseval.observe(std::abs(inner_product(u, u) - l2 * l2));
        const double h1 = h1_norm(u);
        poincare.observe(l2 / (2.0 * l * h1));
        const double linf = linf_norm(u);
        agmon.observe(linf * linf / (2.0 * l2 * h1));
    }

    PropertyReport report;
    report.fields_checked = count;
    auto add_identity = [&](const char* name, const WorstTracker& t) {
        report.checks.push_back(
            {name, t.worst, kIdentityTolerance, false, t.worst <= kIdentityTolerance});
    };
    auto add_strict = [&](const char* name, const WorstTracker& t) {
        report.checks.push_back({name, t.worst, 1.0, true, t.worst < 1.0});
    };
    add_identity("H(H(u)) = -u", involution);
    add_identity("|H(u)| = |u|", isometry);
    add_identity("<u, H(u)> = 0", self_orthogonal);
    add_identity("<v, H(u)> = -<u, H(v)>", antisymmetry);
    add_identity("<H(u), H(v)> = <u, v>", unitarity);
    add_identity("(H(u))_x = H(u_x)", commutation);
    add_identity("<u, u> = |u|^2", parseval);
    add_strict("poincare: |u| < 2l |u_x|", poincare);
    add_strict("agmon: |u|_inf^2 < 2 |u| |u_x|", agmon);
    return report;
}

// ---------------------------------------------------------------------------
// Uniform norm estimates
// ---------------------------------------------------------------------------

void NormEstimates::absorb(const NormEstimates& other) {
    rho0 = std::max(rho0, other.rho0);
    rho1 = std::max(rho1, other.rho1);
    rho2 = std::max(rho2, other.rho2);
}

NormEstimates measure_norm_suprema(const NormSeries& series,
                                   double window_start, double window_end) {
    NormEstimates est;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double t = series.times[i];
        if (t < window_start - 1e-9 || t > window_end + 1e-9) continue;
        est.rho0 = std::max(est.rho0, series.l2[i]);
        est.rho1 = std::max(est.rho1, series.h1[i]);
        est.rho2 = std::max(est.rho2, series.h2[i]);
    }
    return est;
}

UniformBoundsResult measure_uniform_bounds(const SpectralField& u0,
                                           const std::vector<double>& alphas,
                                           const SolverParams& base_params,
                                           double window_start, double window_end,
                                           int max_threads) {
    if (alphas.empty())
        throw ConfigError("measure_uniform_bounds: alpha grid is empty");
    if (!(window_start >= 0.0) || !(window_end > window_start))
        throw ConfigError("measure_uniform_bounds: bad observation window");

    UniformBoundsResult result;
    result.alphas = alphas;
    result.per_alpha.resize(alphas.size());
    parallel_run(static_cast<int>(alphas.size()), max_threads, [&](int i) {
        SolverParams params = base_params;
        params.alpha = alphas[static_cast<std::size_t>(i)];
        params.t_end = window_end;
        const NormSeries series = integrate(u0, params);
        result.per_alpha[static_cast<std::size_t>(i)] =
            measure_norm_suprema(series, window_start, window_end);
    });
    for (const auto& est : result.per_alpha) result.pooled.absorb(est);
    return result;
}

// ---------------------------------------------------------------------------
// Trajectory difference
// ---------------------------------------------------------------------------

double DifferenceSeries::sup_l2() const {
    double sup = 0.0;
    for (double v : l2) sup = std::max(sup, v);
    return sup;
}

DifferenceSeries trajectory_difference(const SpectralField& u0, double alpha,
                                       const SolverParams& params) {
    params.validate();
    if (!(alpha >= 0.0))
        throw ConfigError("trajectory_difference: alpha must be >= 0");

    const DomainConfig& domain = u0.domain();
    const Etdrk4Stepper stepper_u(linear_symbol(domain, alpha), params.dt,
                                  params.dealias, params.linear_only);
    const Etdrk4Stepper stepper_v(classical_symbol(domain), params.dt,
                                  params.dealias, params.linear_only);

    DifferenceSeries out;
    out.alpha = alpha;
    auto record = [&](double t, const SpectralField& u, const SpectralField& v) {
        const SpectralField w = u - v;
        out.times.push_back(t);
        out.l2.push_back(l2_norm(w));
        out.h1.push_back(h1_norm(w));
        out.nonlocal_bounds.absorb({l2_norm(u), h1_norm(u), h2_norm(u)});
        out.local_bounds.absorb({l2_norm(v), h1_norm(v), h2_norm(v)});
    };

    record(0.0, u0, u0);
    const int steps = static_cast<int>(std::ceil(params.t_end / params.dt - 1e-9));
    SpectralField u = u0;
    SpectralField v = u0;
    for (int s = 1; s <= steps; ++s) {
        const double t_prev = static_cast<double>(s - 1) * params.dt;
        u = stepper_u.step(u, t_prev);
        v = stepper_v.step(v, t_prev);
        if (s % params.snapshot_every == 0 || s == steps)
            record(static_cast<double>(s) * params.dt, u, v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Difference growth bound
// ---------------------------------------------------------------------------

GronwallConstants gronwall_constants(const NormEstimates& est) {
    GronwallConstants c;
    c.b1 = 2.0 + 4.0 * std::sqrt(est.rho1) * std::sqrt(est.rho2);
    c.b2 = 2.0 * est.rho1 * est.rho1;
    return c;
}

double gronwall_bound(const NormEstimates& est, double alpha, double t) {
    if (!(alpha >= 0.0)) throw ConfigError("gronwall_bound: alpha must be >= 0");
    if (!(t >= 0.0)) throw ConfigError("gronwall_bound: t must be >= 0");
    if (alpha == 0.0) return 0.0;

    const GronwallConstants c = gronwall_constants(est);
    const double exponent = c.b1 * t;
    if (exponent > 700.0) return std::numeric_limits<double>::infinity();
    return alpha * std::sqrt(c.b2 / c.b1 * std::expm1(exponent));
}

BoundCheck verify_bound(const DifferenceSeries& diff, const NormEstimates& est,
                        double alpha, double t_max_check) {
    if (!(t_max_check >= 0.0))
        throw ConfigError("verify_bound: t_max_check must be >= 0");

    BoundCheck check;
    check.worst_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < diff.times.size(); ++i) {
        const double t = diff.times[i];
        if (t > t_max_check + 1e-9) break;
        const double bound = gronwall_bound(est, alpha, t);
        if (std::isinf(bound)) {
            if (!check.vacuous) {
                check.vacuous = true;
                check.vacuous_from = t;
            }
            continue;
        }
        const double observed = diff.l2[i];
        const double margin = bound - observed;
        ++check.checked;
        check.worst_margin = std::min(check.worst_margin, margin);
        if (observed > bound && !check.violated) {
            check.violated = true;
            check.violation_time = t;
            check.violation_observed = observed;
            check.violation_bound = bound;
        }
    }
    check.passed = !check.violated;
    if (check.checked == 0) check.worst_margin = 0.0;
    return check;
}

// ---------------------------------------------------------------------------
// Scaling fit
// ---------------------------------------------------------------------------

ScalingFit fit_scaling(const std::vector<double>& alphas,
                       const std::vector<double>& sup_w) {
    if (alphas.size() != sup_w.size())
        throw ConfigError("fit_scaling: alphas and sup_w lengths differ");
    if (alphas.size() < 3)
        throw ConfigError("fit_scaling: need at least 3 alpha values");

    ScalingFit fit;
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (!(alphas[i] > 0.0) || !(sup_w[i] > 0.0) || !std::isfinite(sup_w[i])) {
            fit.excluded.push_back(i);
            continue;
        }
        xs.push_back(std::log(alphas[i]));
        ys.push_back(std::log(sup_w[i]));
    }
    fit.used = xs.size();
    if (fit.used < 2)
        throw ConfigError("fit_scaling: fewer than 2 usable points after exclusions");

    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0) throw ConfigError("fit_scaling: degenerate alpha grid");
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;

    double ss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (fit.slope * xs[i] + fit.intercept);
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

// ---------------------------------------------------------------------------
// Attractor sampling
// ---------------------------------------------------------------------------

AttractorSample sample_attractor(const SpectralField& u0, const SolverParams& params,
                                 double t_transient, double t_sample, int stride) {
    if (!(t_transient >= 0.0))
        throw ConfigError("sample_attractor: t_transient must be >= 0");
    if (!(t_sample > 0.0))
        throw ConfigError("sample_attractor: t_sample must be positive");
    if (stride < 1)
        throw ConfigError("sample_attractor: stride must be >= 1");

    SolverParams run = params;
    run.t_end = t_transient + t_sample;
    const NormSeries series = integrate(u0, run);

    AttractorSample sample;
    sample.alpha = params.alpha;
    sample.t_transient = t_transient;
    sample.t_sample = t_sample;
    int post_transient_index = 0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (series.times[i] < t_transient - 1e-9) continue;
        if (post_transient_index++ % stride == 0)
            sample.points.push_back({series.l2[i], series.h1[i], series.linf[i]});
    }
    if (sample.points.empty())
        throw ConfigError("sample_attractor: sampling window produced no points");
    return sample;
}

std::vector<SpectralField> sample_attractor_fields(const SpectralField& u0,
                                                   const SolverParams& params,
                                                   double t_transient, double t_sample,
                                                   int stride) {
    if (!(t_transient >= 0.0))
        throw ConfigError("sample_attractor_fields: t_transient must be >= 0");
    if (!(t_sample > 0.0))
        throw ConfigError("sample_attractor_fields: t_sample must be positive");
    if (stride < 1)
        throw ConfigError("sample_attractor_fields: stride must be >= 1");

    SolverParams run = params;
    run.t_end = t_transient + t_sample;
    std::vector<SpectralField> fields;
    int post_transient_index = 0;
    integrate(u0, run, [&](double t, const SpectralField& u) {
        if (t < t_transient - 1e-9) return;
        if (post_transient_index++ % stride == 0) fields.push_back(u);
    });
    if (fields.empty())
        throw ConfigError("sample_attractor_fields: sampling window produced no points");
    return fields;
}

std::vector<std::vector<double>> observable_cloud(const AttractorSample& sample) {
    std::vector<std::vector<double>> cloud;
    cloud.reserve(sample.points.size());
    for (const auto& p : sample.points) cloud.push_back({p[0], p[1], p[2]});
    return cloud;
}

std::vector<std::vector<double>> l2_embedding(const std::vector<SpectralField>& fields) {
    std::vector<std::vector<double>> cloud;
    cloud.reserve(fields.size());
    for (const auto& f : fields) {
        // Conjugate pairs carry equal energy, so sqrt(4l) per positive mode
        // makes the Euclidean distance equal the L2 distance.
        const double scale = std::sqrt(4.0 * f.domain().half_length);
        std::vector<double> coords;
        coords.reserve(static_cast<std::size_t>(f.grid_size() - 2));
        for (int k = 1; k < f.grid_size() / 2; ++k) {
            const auto c = f.coeff(k);
            coords.push_back(scale * c.real());
            coords.push_back(scale * c.imag());
        }
        cloud.push_back(std::move(coords));
    }
    return cloud;
}

double hausdorff_semidistance(const std::vector<std::vector<double>>& a,
                              const std::vector<std::vector<double>>& b) {
    if (a.empty() || b.empty())
        throw ConfigError("hausdorff_semidistance: point clouds must be nonempty");
    const std::size_t dim = a.front().size();
    for (const auto& p : a)
        if (p.size() != dim)
            throw ConfigError("hausdorff_semidistance: inconsistent dimensions in A");
    for (const auto& p : b)
        if (p.size() != dim)
            throw ConfigError("hausdorff_semidistance: dimension mismatch between clouds");

    double worst_sq = 0.0;
    for (const auto& pa : a) {
        double best_sq = std::numeric_limits<double>::infinity();
        for (const auto& pb : b) {
            double d = 0.0;
            for (std::size_t i = 0; i < dim; ++i) {
                const double diff = pa[i] - pb[i];
                d += diff * diff;
                if (d >= best_sq) break;
            }
            best_sq = std::min(best_sq, d);
            if (best_sq == 0.0) break;
        }
        worst_sq = std::max(worst_sq, best_sq);
    }
    return std::sqrt(worst_sq);
}

// ---------------------------------------------------------------------------
// Experiment drivers
// ---------------------------------------------------------------------------

std::vector<double> ConvergenceReport::alphas() const {
    std::vector<double> out;
    out.reserve(runs.size());
    for (const auto& r : runs) out.push_back(r.alpha);
    return out;
}

std::vector<double> ConvergenceReport::sup_w() const {
    std::vector<double> out;
    out.reserve(runs.size());
    for (const auto& r : runs) out.push_back(r.sup_w);
    return out;
}

ConvergenceReport run_alpha_sweep(const SpectralField& u0,
                                  const std::vector<double>& alphas,
                                  const SolverParams& params,
                                  double t_max_check,
                                  int max_threads) {
    if (alphas.empty()) throw ConfigError("run_alpha_sweep: alpha grid is empty");
    if (max_threads <= 0) max_threads = static_cast<int>(alphas.size());

    ConvergenceReport report;
    report.t_end = params.t_end;
    report.t_max_check = t_max_check;
    report.runs.resize(alphas.size());

    parallel_run(static_cast<int>(alphas.size()), max_threads, [&](int i) {
        SweepRun& run = report.runs[static_cast<std::size_t>(i)];
        run.alpha = alphas[static_cast<std::size_t>(i)];
        try {
            run.diff = trajectory_difference(u0, run.alpha, params);
            run.sup_w = run.diff.sup_l2();
            run.ok = true;
        } catch (const BlowUpError& e) {
            run.error = e.what();
        }
    });

    for (const auto& run : report.runs) {
        if (!run.ok) continue;
        report.rho.absorb(run.diff.nonlocal_bounds);
        report.rho.absorb(run.diff.local_bounds);
    }

    std::vector<double> ok_alphas, ok_sup;
    for (const auto& run : report.runs) {
        if (!run.ok) continue;
        ok_alphas.push_back(run.alpha);
        ok_sup.push_back(run.sup_w);
    }
    if (ok_alphas.size() >= 3) {
        try {
            report.fit = fit_scaling(ok_alphas, ok_sup);
            report.fit_ok = true;
        } catch (const ConfigError&) {
            report.fit_ok = false;
        }
    }

    for (auto& run : report.runs) {
        if (!run.ok) continue;
        report.bound_checks.push_back(
            verify_bound(run.diff, report.rho, run.alpha, t_max_check));
    }
    return report;
}

AttractorReport run_attractor_experiment(const SpectralField& u0,
                                         const std::vector<double>& alphas,
                                         const SolverParams& params,
                                         double t_transient, double t_sample, int stride,
                                         bool function_space,
                                         int max_threads) {
    if (alphas.empty()) throw ConfigError("run_attractor_experiment: alpha grid is empty");
    const int total = static_cast<int>(alphas.size()) + 1; // + the alpha = 0 baseline
    if (max_threads <= 0) max_threads = total;

    AttractorReport report;
    report.t_transient = t_transient;
    report.t_sample = t_sample;
    report.stride = stride;
    report.function_space = function_space;
    report.runs.resize(alphas.size());

    std::vector<std::vector<std::vector<double>>> clouds(static_cast<std::size_t>(total));
    std::vector<std::string> errors(static_cast<std::size_t>(total));

    parallel_run(total, max_threads, [&](int i) {
        const double alpha = (i == 0) ? 0.0 : alphas[static_cast<std::size_t>(i - 1)];
        SolverParams run_params = params;
        run_params.alpha = alpha;
        try {
            if (function_space) {
                clouds[static_cast<std::size_t>(i)] = l2_embedding(
                    sample_attractor_fields(u0, run_params, t_transient, t_sample, stride));
            } else {
                clouds[static_cast<std::size_t>(i)] = observable_cloud(
                    sample_attractor(u0, run_params, t_transient, t_sample, stride));
            }
        } catch (const BlowUpError& e) {
            errors[static_cast<std::size_t>(i)] = e.what();
        }
    });

    if (!errors[0].empty())
        throw BlowUpError("attractor baseline (alpha = 0) blew up: " + errors[0], t_sample);
    report.baseline_points = clouds[0].size();

    for (std::size_t i = 0; i < alphas.size(); ++i) {
        AttractorRun& run = report.runs[i];
        run.alpha = alphas[i];
        if (!errors[i + 1].empty()) {
            run.error = errors[i + 1];
            continue;
        }
        run.points = clouds[i + 1].size();
        run.distance = hausdorff_semidistance(clouds[i + 1], clouds[0]);
        run.ok = true;
    }
    return report;
}

} // namespace nlks
