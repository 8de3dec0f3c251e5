#include "nlks/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace nlks {

namespace {

using json = nlohmann::ordered_json;

// 17 significant digits: doubles survive the text round trip exactly.
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

constexpr const char* kNormsHeader = "t,l2,h1,h2,linf,mean";

json finite_or_null(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

double null_or_double(const json& j, double fallback) {
    if (j.is_null()) return fallback;
    return j.get<double>();
}

json parse_report(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string(what) + ": invalid JSON: " + e.what());
    }
}

} // namespace

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path);
    if (!out.is_open())
        throw ConfigError("cannot open for writing: " + path.string());
    out << text;
    if (!out.good())
        throw ConfigError("write failed: " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in.is_open())
        throw ConfigError("cannot open: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string norms_csv(const NormSeries& series, const TrajectoryMeta& meta) {
    std::ostringstream out;
    out << "# alpha=" << fmt(meta.alpha) << " half_length=" << fmt(meta.half_length)
        << " grid_size=" << meta.grid_size << " dt=" << fmt(meta.dt)
        << " seed=" << meta.seed << "\n";
    out << kNormsHeader << "\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        out << fmt(series.times[i]) << ',' << fmt(series.l2[i]) << ','
            << fmt(series.h1[i]) << ',' << fmt(series.h2[i]) << ','
            << fmt(series.linf[i]) << ',' << fmt(series.mean[i]) << "\n";
    }
    return out.str();
}

void write_norms_csv(const std::filesystem::path& path, const NormSeries& series,
                     const TrajectoryMeta& meta) {
    write_text_file(path, norms_csv(series, meta));
}

namespace {

TrajectoryMeta parse_trajectory_meta(const std::string& line) {
    TrajectoryMeta meta;
    std::stringstream ss(line);
    std::string token;
    ss >> token; // '#'
    while (ss >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos)
            throw ConfigError("norms csv: bad metadata token '" + token + "'");
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        if (key == "alpha")
            meta.alpha = std::stod(value);
        else if (key == "half_length")
            meta.half_length = std::stod(value);
        else if (key == "grid_size")
            meta.grid_size = std::stoi(value);
        else if (key == "dt")
            meta.dt = std::stod(value);
        else if (key == "seed")
            meta.seed = std::stoull(value);
        else
            throw ConfigError("norms csv: unknown metadata key '" + key + "'");
    }
    return meta;
}

} // namespace

TrajectoryRecord read_trajectory(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in.is_open())
        throw ConfigError("cannot open: " + path.string());

    TrajectoryRecord record;
    std::string line;
    bool meta_seen = false;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.front() == '#') {
            if (!meta_seen) {
                record.meta = parse_trajectory_meta(line);
                meta_seen = true;
            }
            continue;
        }
        if (!header_seen) {
            if (line != kNormsHeader)
                throw ConfigError("norms csv: unexpected header '" + line + "'");
            header_seen = true;
            continue;
        }
        std::array<double, 6> row{};
        std::stringstream ss(line);
        std::string cell;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (!std::getline(ss, cell, ','))
                throw ConfigError("norms csv: short row '" + line + "'");
            row[c] = std::stod(cell);
        }
        record.series.push(row[0], row[1], row[2], row[3], row[4], row[5]);
    }
    if (!header_seen) throw ConfigError("norms csv: missing header");
    record.series.validate();
    return record;
}

NormSeries read_norms_csv(const std::filesystem::path& path) {
    return read_trajectory(path).series;
}

std::string snapshot_csv(const RealField& field, double t, double alpha) {
    std::ostringstream out;
    out << "# t=" << fmt(t) << " alpha=" << fmt(alpha)
        << " half_length=" << fmt(field.domain().half_length)
        << " grid_size=" << field.domain().grid_size << "\n";
    out << "x,u\n";
    for (int j = 0; j < field.domain().grid_size; ++j)
        out << fmt(field.domain().node(j)) << ','
            << fmt(field.values()[static_cast<std::size_t>(j)]) << "\n";
    return out.str();
}

void write_snapshot_csv(const std::filesystem::path& path, const RealField& field,
                        double t, double alpha) {
    write_text_file(path, snapshot_csv(field, t, alpha));
}

std::string convergence_report_json(const ConvergenceReport& report) {
    json root;
    root["t_end"] = report.t_end;
    root["t_max_check"] = report.t_max_check;
    root["rho"] = {{"rho0", report.rho.rho0},
                   {"rho1", report.rho.rho1},
                   {"rho2", report.rho.rho2}};

    json runs = json::array();
    for (const auto& r : report.runs) {
        json jr;
        jr["alpha"] = r.alpha;
        jr["ok"] = r.ok;
        if (r.ok)
            jr["sup_w"] = r.sup_w;
        else
            jr["error"] = r.error;
        runs.push_back(jr);
    }
    root["runs"] = runs;

    if (report.fit_ok) {
        json fit;
        fit["slope"] = report.fit.slope;
        fit["intercept"] = report.fit.intercept;
        fit["residual"] = report.fit.residual;
        fit["used"] = report.fit.used;
        fit["excluded"] = report.fit.excluded;
        root["fit"] = fit;
    } else {
        root["fit"] = nullptr;
    }

    // bound_checks run parallel to the surviving runs; carry the alpha along
    // so the report reads standalone.
    std::vector<double> surviving;
    for (const auto& r : report.runs)
        if (r.ok) surviving.push_back(r.alpha);

    json checks = json::array();
    for (std::size_t i = 0; i < report.bound_checks.size(); ++i) {
        const auto& c = report.bound_checks[i];
        json jc;
        if (i < surviving.size()) jc["alpha"] = surviving[i];
        jc["passed"] = c.passed;
        jc["checked"] = c.checked;
        jc["worst_margin"] = finite_or_null(c.worst_margin);
        jc["vacuous_from"] = c.vacuous ? json(c.vacuous_from) : json(nullptr);
        if (c.violated) {
            jc["violation"] = {{"t", c.violation_time},
                               {"observed", c.violation_observed},
                               {"bound", c.violation_bound}};
        } else {
            jc["violation"] = nullptr;
        }
        checks.push_back(jc);
    }
    root["bound_checks"] = checks;
    return root.dump(2) + "\n";
}

void write_convergence_report(const std::filesystem::path& path,
                              const ConvergenceReport& report) {
    write_text_file(path, convergence_report_json(report));
}

ConvergenceReport read_convergence_report(const std::filesystem::path& path) {
    const json root = parse_report(read_text_file(path), "convergence report");
    ConvergenceReport report;
    report.t_end = root.at("t_end").get<double>();
    report.t_max_check = root.at("t_max_check").get<double>();
    report.rho.rho0 = root.at("rho").at("rho0").get<double>();
    report.rho.rho1 = root.at("rho").at("rho1").get<double>();
    report.rho.rho2 = root.at("rho").at("rho2").get<double>();
    for (const auto& jr : root.at("runs")) {
        SweepRun run;
        run.alpha = jr.at("alpha").get<double>();
        run.ok = jr.at("ok").get<bool>();
        if (run.ok)
            run.sup_w = jr.at("sup_w").get<double>();
        else
            run.error = jr.at("error").get<std::string>();
        report.runs.push_back(run);
    }
    if (!root.at("fit").is_null()) {
        report.fit_ok = true;
        const json& fit = root.at("fit");
        report.fit.slope = fit.at("slope").get<double>();
        report.fit.intercept = fit.at("intercept").get<double>();
        report.fit.residual = fit.at("residual").get<double>();
        report.fit.used = fit.at("used").get<std::size_t>();
        report.fit.excluded = fit.at("excluded").get<std::vector<std::size_t>>();
    }
    for (const auto& jc : root.at("bound_checks")) {
        BoundCheck check;
        check.passed = jc.at("passed").get<bool>();
        check.checked = jc.at("checked").get<int>();
        check.worst_margin = null_or_double(jc.at("worst_margin"),
                                            std::numeric_limits<double>::infinity());
        if (!jc.at("vacuous_from").is_null()) {
            check.vacuous = true;
            check.vacuous_from = jc.at("vacuous_from").get<double>();
        }
        if (!jc.at("violation").is_null()) {
            check.violated = true;
            check.violation_time = jc.at("violation").at("t").get<double>();
            check.violation_observed = jc.at("violation").at("observed").get<double>();
            check.violation_bound = jc.at("violation").at("bound").get<double>();
        }
        report.bound_checks.push_back(check);
    }
    return report;
}

std::string attractor_report_json(const AttractorReport& report) {
    json root;
    root["t_transient"] = report.t_transient;
    root["t_sample"] = report.t_sample;
    root["stride"] = report.stride;
    root["function_space"] = report.function_space;
    root["baseline_points"] = report.baseline_points;
    json runs = json::array();
    for (const auto& r : report.runs) {
        json jr;
        jr["alpha"] = r.alpha;
        jr["ok"] = r.ok;
        if (r.ok) {
            jr["points"] = r.points;
            jr["distance"] = r.distance;
        } else {
            jr["error"] = r.error;
        }
        runs.push_back(jr);
    }
    root["runs"] = runs;
    return root.dump(2) + "\n";
}

void write_attractor_report(const std::filesystem::path& path,
                            const AttractorReport& report) {
    write_text_file(path, attractor_report_json(report));
}

AttractorReport read_attractor_report(const std::filesystem::path& path) {
    const json root = parse_report(read_text_file(path), "attractor report");
    AttractorReport report;
    report.t_transient = root.at("t_transient").get<double>();
    report.t_sample = root.at("t_sample").get<double>();
    report.stride = root.at("stride").get<int>();
    report.function_space = root.at("function_space").get<bool>();
    report.baseline_points = root.at("baseline_points").get<std::size_t>();
    for (const auto& jr : root.at("runs")) {
        AttractorRun run;
        run.alpha = jr.at("alpha").get<double>();
        run.ok = jr.at("ok").get<bool>();
        if (run.ok) {
            run.points = jr.at("points").get<std::size_t>();
            run.distance = jr.at("distance").get<double>();
        } else {
            run.error = jr.at("error").get<std::string>();
        }
        report.runs.push_back(run);
    }
    return report;
}

std::string property_report_json(const PropertyReport& report) {
    json root;
    root["fields_checked"] = report.fields_checked;
    root["all_passed"] = report.all_passed();
    json checks = json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"worst", c.worst},
                          {"tolerance", c.tolerance},
                          {"strict", c.strict},
                          {"passed", c.passed}});
    }
    root["checks"] = checks;
    return root.dump(2) + "\n";
}

void write_property_report(const std::filesystem::path& path,
                           const PropertyReport& report) {
    write_text_file(path, property_report_json(report));
}

} // namespace nlks
