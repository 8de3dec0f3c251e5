#include "nlks/run_config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace nlks {

void InitialDataConfig::validate() const {
    if (!(amplitude > 0.0)) throw ConfigError("initial: amplitude must be positive");
    if (!(decay > 0.0)) throw ConfigError("initial: decay must be positive");
}

namespace {

void validate_alpha_grid(const std::vector<double>& alphas, const char* block) {
    if (alphas.empty())
        throw ConfigError(std::string(block) + ": alpha grid must be nonempty");
    for (double a : alphas)
        if (!(a >= 0.0))
            throw ConfigError(std::string(block) + ": alphas must be >= 0");
    for (std::size_t i = 1; i < alphas.size(); ++i)
        if (alphas[i] > alphas[i - 1])
            throw ConfigError(std::string(block) + ": alphas must be sorted descending");
}

} // namespace

void SweepConfig::validate() const {
    validate_alpha_grid(alphas, "sweep");
    if (!(t_end > 0.0)) throw ConfigError("sweep: t_end must be positive");
    if (!(t_max_check > 0.0)) throw ConfigError("sweep: t_max_check must be positive");
    if (snapshot_every < 1) throw ConfigError("sweep: snapshot_every must be >= 1");
}

void AttractorConfig::validate() const {
    validate_alpha_grid(alphas, "attractor");
    if (!(t_transient >= 0.0)) throw ConfigError("attractor: t_transient must be >= 0");
    if (!(t_sample > 0.0)) throw ConfigError("attractor: t_sample must be positive");
    if (stride < 1) throw ConfigError("attractor: stride must be >= 1");
}

void PropertiesConfig::validate() const {
    if (count < 1) throw ConfigError("properties: count must be >= 1");
    DomainConfig probe{1.0, grid_size};
    probe.validate();
}

void RunConfig::validate_common() const {
    domain.validate();
    solver.validate();
    initial.validate();
}

namespace {

using json = nlohmann::ordered_json;

void require_known_keys(const json& obj, const char* block,
                        std::initializer_list<const char*> known) {
    for (const auto& item : obj.items()) {
        bool found = false;
        for (const char* k : known)
            if (item.key() == k) {
                found = true;
                break;
            }
        if (!found)
            throw ConfigError(std::string("config: unknown key '") + item.key() +
                              "' in block '" + block + "'");
    }
}

template <typename T>
void read_field(const json& obj, const char* key, T& out) {
    if (!obj.contains(key)) return;
    try {
        out = obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(std::string("config: bad value for '") + key + "'");
    }
}

} // namespace

RunConfig parse_run_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("config: top level must be a JSON object");
    require_known_keys(root, "<top>", {"domain", "solver", "initial", "sweep",
                                       "attractor", "properties", "output"});

    RunConfig cfg;
    if (root.contains("domain")) {
        const json& j = root.at("domain");
        require_known_keys(j, "domain", {"half_length", "grid_size"});
        read_field(j, "half_length", cfg.domain.half_length);
        read_field(j, "grid_size", cfg.domain.grid_size);
    }
    if (root.contains("solver")) {
        const json& j = root.at("solver");
        require_known_keys(j, "solver", {"alpha", "dt", "t_end", "dealias",
                                         "snapshot_every", "linear_only"});
        read_field(j, "alpha", cfg.solver.alpha);
        read_field(j, "dt", cfg.solver.dt);
        read_field(j, "t_end", cfg.solver.t_end);
        read_field(j, "dealias", cfg.solver.dealias);
        read_field(j, "snapshot_every", cfg.solver.snapshot_every);
        read_field(j, "linear_only", cfg.solver.linear_only);
    }
    if (root.contains("initial")) {
        const json& j = root.at("initial");
        require_known_keys(j, "initial", {"seed", "amplitude", "decay"});
        read_field(j, "seed", cfg.initial.seed);
        read_field(j, "amplitude", cfg.initial.amplitude);
        read_field(j, "decay", cfg.initial.decay);
    }
    if (root.contains("sweep")) {
        const json& j = root.at("sweep");
        require_known_keys(j, "sweep", {"alphas", "t_end", "t_max_check", "snapshot_every"});
        read_field(j, "alphas", cfg.sweep.alphas);
        read_field(j, "t_end", cfg.sweep.t_end);
        read_field(j, "t_max_check", cfg.sweep.t_max_check);
        read_field(j, "snapshot_every", cfg.sweep.snapshot_every);
    }
    if (root.contains("attractor")) {
        const json& j = root.at("attractor");
        require_known_keys(j, "attractor", {"alphas", "t_transient", "t_sample",
                                            "stride", "function_space"});
        read_field(j, "alphas", cfg.attractor.alphas);
        read_field(j, "t_transient", cfg.attractor.t_transient);
        read_field(j, "t_sample", cfg.attractor.t_sample);
        read_field(j, "stride", cfg.attractor.stride);
        read_field(j, "function_space", cfg.attractor.function_space);
    }
    if (root.contains("properties")) {
        const json& j = root.at("properties");
        require_known_keys(j, "properties", {"count", "grid_size"});
        read_field(j, "count", cfg.properties.count);
        read_field(j, "grid_size", cfg.properties.grid_size);
    }
    if (root.contains("output")) {
        const json& j = root.at("output");
        require_known_keys(j, "output", {"snapshot_dir"});
        read_field(j, "snapshot_dir", cfg.output.snapshot_dir);
    }
    return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in.is_open())
        throw ConfigError("config: cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_run_config(buffer.str());
}

std::string run_config_json(const RunConfig& cfg) {
    json root;
    root["domain"] = {{"half_length", cfg.domain.half_length},
                      {"grid_size", cfg.domain.grid_size}};
    root["solver"] = {{"alpha", cfg.solver.alpha},
                      {"dt", cfg.solver.dt},
                      {"t_end", cfg.solver.t_end},
                      {"dealias", cfg.solver.dealias},
                      {"snapshot_every", cfg.solver.snapshot_every},
                      {"linear_only", cfg.solver.linear_only}};
    root["initial"] = {{"seed", cfg.initial.seed},
                       {"amplitude", cfg.initial.amplitude},
                       {"decay", cfg.initial.decay}};
    root["sweep"] = {{"alphas", cfg.sweep.alphas},
                     {"t_end", cfg.sweep.t_end},
                     {"t_max_check", cfg.sweep.t_max_check},
                     {"snapshot_every", cfg.sweep.snapshot_every}};
    root["attractor"] = {{"alphas", cfg.attractor.alphas},
                         {"t_transient", cfg.attractor.t_transient},
                         {"t_sample", cfg.attractor.t_sample},
                         {"stride", cfg.attractor.stride},
                         {"function_space", cfg.attractor.function_space}};
    root["properties"] = {{"count", cfg.properties.count},
                          {"grid_size", cfg.properties.grid_size}};
    root["output"] = {{"snapshot_dir", cfg.output.snapshot_dir}};
    return root.dump(2) + "\n";
}

} // namespace nlks
