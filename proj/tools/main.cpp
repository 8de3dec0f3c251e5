// Command-line laboratory for the nonlocal Kuramoto-Sivashinsky equation
//   u_t + u_xxxx + u_xx + u u_x + alpha * H(u_xxx) = 0
// on a periodic zero-mean domain.  Subcommands drive single trajectories,
// alpha sweeps with difference-bound checks, the operator property suite and
// attractor-distance experiments.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "nlks/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"nonlocal Kuramoto-Sivashinsky laboratory"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::optional<std::uint64_t> seed_override;
    std::optional<double> alpha_override;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON config file (defaults used if absent)");
        cmd->add_option("--out", out_path, "output file");
        cmd->add_option("--seed", seed_override, "override initial-data seed");
        cmd->add_option("--alpha", alpha_override, "override solver alpha");
    };

    CLI::App* simulate = app.add_subcommand("simulate", "integrate one trajectory, write norms CSV");
    CLI::App* sweep = app.add_subcommand("sweep", "alpha sweep: difference norms, scaling fit, bound checks");
    CLI::App* properties = app.add_subcommand("properties", "operator identity and inequality suite");
    CLI::App* attractor = app.add_subcommand("attractor", "attractor clouds and one-sided distances");
    add_common(simulate);
    add_common(sweep);
    add_common(properties);
    add_common(attractor);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return nlks::kExitUsage;
    }

    if (out_path.empty()) {
        if (simulate->parsed()) out_path = "norms.csv";
        if (sweep->parsed()) out_path = "convergence.json";
        if (properties->parsed()) out_path = "properties.json";
        if (attractor->parsed()) out_path = "attractor.json";
    }

    nlks::RunConfig config;
    try {
        if (!config_path.empty()) config = nlks::load_run_config(config_path);
        if (seed_override) config.initial.seed = *seed_override;
        if (alpha_override) config.solver.alpha = *alpha_override;
    } catch (const nlks::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return nlks::kExitUsage;
    }

    if (simulate->parsed()) return nlks::cmd_simulate(config, out_path);
    if (sweep->parsed()) return nlks::cmd_sweep(config, out_path);
    if (properties->parsed()) return nlks::cmd_properties(config, out_path);
    if (attractor->parsed()) return nlks::cmd_attractor(config, out_path);
    return nlks::kExitUsage;
}
