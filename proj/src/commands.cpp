#include "nlks/commands.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "nlks/analysis.hpp"
#include "nlks/fourier.hpp"
#include "nlks/io.hpp"
#include "nlks/spectral_ops.hpp"

namespace nlks {

namespace {

int map_exceptions(const std::function<int()>& body) {
    try {
        return body();
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BlowUpError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const InvariantViolation& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumeric;
    }
}

} // namespace

int thread_cap(int default_threads) {
    const char* env = std::getenv("NLKS_THREADS");
    if (!env || *env == '\0') return default_threads;
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value < 1)
        throw ConfigError("NLKS_THREADS must be a positive integer");
    return static_cast<int>(value);
}

int cmd_simulate(const RunConfig& config, const std::filesystem::path& out) {
    return map_exceptions([&]() {
        config.validate_common();
        const SpectralField u0 = random_field(config.domain, config.initial.seed,
                                              config.initial.amplitude, config.initial.decay);

        SnapshotObserver observer;
        int snapshot_index = 0;
        if (!config.output.snapshot_dir.empty()) {
            const std::filesystem::path dir = config.output.snapshot_dir;
            observer = [&, dir](double t, const SpectralField& u) {
                char name[32];
                std::snprintf(name, sizeof(name), "snapshot_%05d.csv", snapshot_index++);
                write_snapshot_csv(dir / name, to_real(u), t, config.solver.alpha);
            };
        }

        const NormSeries series = integrate(u0, config.solver, observer);
        const TrajectoryMeta meta{config.solver.alpha, config.domain.half_length,
                                  config.domain.grid_size, config.solver.dt,
                                  config.initial.seed};
        write_norms_csv(out, series, meta);
        std::cout << "wrote " << out.string() << " (" << series.size() << " rows)\n";
        return kExitOk;
    });
}

int cmd_sweep(const RunConfig& config, const std::filesystem::path& out) {
    return map_exceptions([&]() {
        config.validate_common();
        config.sweep.validate();

        const SpectralField u0 = random_field(config.domain, config.initial.seed,
                                              config.initial.amplitude, config.initial.decay);
        SolverParams params = config.solver;
        params.t_end = config.sweep.t_end;
        params.snapshot_every = config.sweep.snapshot_every;

        const int threads = thread_cap(static_cast<int>(config.sweep.alphas.size()));
        const ConvergenceReport report = run_alpha_sweep(
            u0, config.sweep.alphas, params, config.sweep.t_max_check, threads);
        write_convergence_report(out, report);

        bool any_failed = false;
        for (const auto& run : report.runs) {
            if (run.ok)
                std::cout << "alpha=" << run.alpha << " sup|w|=" << run.sup_w << "\n";
            else {
                std::cout << "alpha=" << run.alpha << " FAILED: " << run.error << "\n";
                any_failed = true;
            }
        }
        if (report.fit_ok)
            std::cout << "log-log slope=" << report.fit.slope
                      << " (residual " << report.fit.residual << ")\n";
        else
            std::cout << "scaling fit skipped (fewer than 3 usable runs)\n";
        std::cout << "wrote " << out.string() << "\n";
        return any_failed ? kExitNumeric : kExitOk;
    });
}

int cmd_properties(const RunConfig& config, const std::filesystem::path& out) {
    return map_exceptions([&]() {
        config.properties.validate();
        const DomainConfig domain{config.domain.half_length, config.properties.grid_size};
        const PropertyReport report =
            check_inequalities(domain, config.initial.seed, config.properties.count);

        for (const auto& check : report.checks) {
            std::cout << (check.passed ? "ok   " : "FAIL ") << check.name
                      << "  worst " << (check.strict ? "ratio " : "slack ")
                      << check.worst << "\n";
        }
        std::cout << report.fields_checked << " random fields checked\n";
        if (!out.empty()) {
            write_property_report(out, report);
            std::cout << "wrote " << out.string() << "\n";
        }
        return report.all_passed() ? kExitOk : kExitProperty;
    });
}

int cmd_attractor(const RunConfig& config, const std::filesystem::path& out) {
    return map_exceptions([&]() {
        config.validate_common();
        config.attractor.validate();

        const SpectralField u0 = random_field(config.domain, config.initial.seed,
                                              config.initial.amplitude, config.initial.decay);
        const int threads = thread_cap(static_cast<int>(config.attractor.alphas.size()) + 1);
        const AttractorReport report = run_attractor_experiment(
            u0, config.attractor.alphas, config.solver,
            config.attractor.t_transient, config.attractor.t_sample,
            config.attractor.stride, config.attractor.function_space, threads);
        write_attractor_report(out, report);

        bool any_failed = false;
        for (const auto& run : report.runs) {
            if (run.ok)
                std::cout << "alpha=" << run.alpha << " distance=" << run.distance
                          << " (" << run.points << " points)\n";
            else {
                std::cout << "alpha=" << run.alpha << " FAILED: " << run.error << "\n";
                any_failed = true;
            }
        }
        std::cout << "wrote " << out.string() << "\n";
        return any_failed ? kExitNumeric : kExitOk;
    });
}

} // namespace nlks
