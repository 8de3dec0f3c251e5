#pragma once

#include <filesystem>

#include "nlks/run_config.hpp"

namespace nlks {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;   // usage or config error
inline constexpr int kExitNumeric = 2; // blow-up or invariant violation
inline constexpr int kExitProperty = 3; // property-suite failure

/// Integrates one trajectory and writes the norms CSV (plus optional field
/// snapshots when config.output.snapshot_dir is set).
int cmd_simulate(const RunConfig& config, const std::filesystem::path& out);

/// Runs the alpha sweep, scaling fit and difference-bound checks; writes the
/// convergence report.
int cmd_sweep(const RunConfig& config, const std::filesystem::path& out);

/// Runs the operator identity and inequality suite; prints one line per
/// property and writes the report when out is nonempty.
int cmd_properties(const RunConfig& config, const std::filesystem::path& out);

/// Samples attractor clouds per alpha plus the alpha = 0 baseline and writes
/// the one-sided distance report.
int cmd_attractor(const RunConfig& config, const std::filesystem::path& out);

/// Concurrency cap for sweep/attractor runs: NLKS_THREADS when set (must be a
/// positive integer), otherwise default_threads.
int thread_cap(int default_threads);

} // namespace nlks
