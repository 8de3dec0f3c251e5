#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "nlks/dynamics.hpp"

namespace nlks {

struct InitialDataConfig {
    std::uint64_t seed = 1;
    double amplitude = 1.0;
    double decay = 2.0;

    void validate() const;
};

struct SweepConfig {
    std::vector<double> alphas{1e-2, 1e-3, 1e-4};
    double t_end = 10.0;
    double t_max_check = 1.0;
    int snapshot_every = 1;

    void validate() const;
};

struct AttractorConfig {
    std::vector<double> alphas{1e-1, 1e-2, 1e-3};
    double t_transient = 50.0;
    double t_sample = 200.0;
    int stride = 1;
    bool function_space = false;

    void validate() const;
};

struct PropertiesConfig {
    int count = 1000;
    int grid_size = 256;

    void validate() const;
};

struct OutputConfig {
    std::string snapshot_dir; // empty = no field snapshots
};

/// One experiment's full recipe.  Defaults are the chaotic-regime
/// configuration (l = 16*pi, N = 512, dt = 0.05).  Each command validates the
/// blocks it actually uses.
struct RunConfig {
    DomainConfig domain{};
    SolverParams solver{};
    InitialDataConfig initial{};
    SweepConfig sweep{};
    AttractorConfig attractor{};
    PropertiesConfig properties{};
    OutputConfig output{};

    /// Validates the blocks shared by every command.
    void validate_common() const;
};

/// Parses a config from JSON text.  Unknown keys are rejected.
RunConfig parse_run_config(const std::string& json_text);

RunConfig load_run_config(const std::filesystem::path& path);

/// Serializes with the same field layout parse_run_config accepts.
std::string run_config_json(const RunConfig& config);

} // namespace nlks
