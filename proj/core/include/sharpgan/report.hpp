#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace sharpgan {

inline constexpr const char* kToolVersion = "0.1.0";

struct ReportRow {
    std::string name;
    std::map<std::string, double> values;  // metric -> score
    bool skipped = false;
    std::string note;
};

struct Aggregate {
    double mean = 0.0;
    double median = 0.0;
    double stddev = 0.0;
};

/// Tabular per-item results plus aggregates, mirroring the evaluation-table
/// layout used for image quality and segmentation scoring.
struct Report {
    std::vector<ReportRow> rows;
    std::vector<std::string> metrics;  // column order
    std::string config_hash;
    int warnings = 0;

    /// Mean/median/std over non-skipped rows, per metric.
    std::map<std::string, Aggregate> aggregates() const;

    void write_csv(const std::filesystem::path& path) const;
    void write_json(const std::filesystem::path& path) const;
};

/// FNV-1a 64-bit over a canonical config string.
std::string config_hash(const std::string& canonical);

}  // namespace sharpgan
