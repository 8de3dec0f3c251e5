#pragma once

#include <filesystem>
#include <string>

#include "nlks/analysis.hpp"
#include "nlks/run_config.hpp"

namespace nlks {

/// Metadata echoed in the '#'-prefixed header of trajectory files.
struct TrajectoryMeta {
    double alpha = 0.0;
    double half_length = 0.0;
    int grid_size = 0;
    double dt = 0.0;
    std::uint64_t seed = 0;
};

struct TrajectoryRecord {
    TrajectoryMeta meta;
    NormSeries series;
};

/// Norms CSV: '#' metadata line, then the fixed header t,l2,h1,h2,linf,mean
/// and one row per snapshot at 17 significant digits (lossless round-trip).
std::string norms_csv(const NormSeries& series, const TrajectoryMeta& meta);
void write_norms_csv(const std::filesystem::path& path, const NormSeries& series,
                     const TrajectoryMeta& meta);

/// Reads a trajectory file back, metadata included; rewriting the result
/// reproduces the file byte for byte.
TrajectoryRecord read_trajectory(const std::filesystem::path& path);

/// Series-only convenience reader; '#' lines are skipped, the header is
/// enforced.
NormSeries read_norms_csv(const std::filesystem::path& path);

/// Field snapshot CSV: one '#' metadata line, then x,u rows.
std::string snapshot_csv(const RealField& field, double t, double alpha);
void write_snapshot_csv(const std::filesystem::path& path, const RealField& field,
                        double t, double alpha);

/// Structured JSON reports.  Serialization is deterministic: identical inputs
/// produce identical bytes.
std::string convergence_report_json(const ConvergenceReport& report);
void write_convergence_report(const std::filesystem::path& path,
                              const ConvergenceReport& report);
ConvergenceReport read_convergence_report(const std::filesystem::path& path);

std::string attractor_report_json(const AttractorReport& report);
void write_attractor_report(const std::filesystem::path& path,
                            const AttractorReport& report);
AttractorReport read_attractor_report(const std::filesystem::path& path);

std::string property_report_json(const PropertyReport& report);
void write_property_report(const std::filesystem::path& path,
                           const PropertyReport& report);

void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

} // namespace nlks
