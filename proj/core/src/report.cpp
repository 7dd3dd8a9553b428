#include "sharpgan/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "sharpgan/errors.hpp"

namespace sharpgan {

std::map<std::string, Aggregate> Report::aggregates() const {
    std::map<std::string, Aggregate> out;
    for (const auto& metric : metrics) {
        std::vector<double> values;
        for (const auto& row : rows) {
            if (row.skipped) continue;
            auto it = row.values.find(metric);
            if (it != row.values.end()) values.push_back(it->second);
        }
        Aggregate agg;
        if (!values.empty()) {
            for (double v : values) agg.mean += v;
            agg.mean /= values.size();
            for (double v : values) agg.stddev += (v - agg.mean) * (v - agg.mean);
            agg.stddev = std::sqrt(agg.stddev / values.size());
            std::sort(values.begin(), values.end());
            const size_t n = values.size();
            agg.median = n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
        }
        out[metric] = agg;
    }
    return out;
}

void Report::write_csv(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string());
    out << std::setprecision(17);

    out << "name";
    for (const auto& m : metrics) out << "," << m;
    out << ",note\n";
    for (const auto& row : rows) {
        out << row.name;
        for (const auto& m : metrics) {
            out << ",";
            auto it = row.values.find(m);
            if (it != row.values.end()) out << it->second;
        }
        out << "," << (row.skipped ? "skipped: " + row.note : row.note) << "\n";
    }
    const auto aggs = aggregates();
    for (const char* stat : {"mean", "median", "std"}) {
        out << "__" << stat << "__";
        for (const auto& m : metrics) {
            const auto& a = aggs.at(m);
            const double v = std::string(stat) == "mean"     ? a.mean
                             : std::string(stat) == "median" ? a.median
                                                             : a.stddev;
            out << "," << v;
        }
        out << ",\n";
    }
    out << "__version__," << kToolVersion << "\n";
    out << "__config_hash__," << config_hash << "\n";
    if (!out) throw IoError("write failed: " + path.string());
}

void Report::write_json(const std::filesystem::path& path) const {
    nlohmann::json j;
    j["version"] = kToolVersion;
    j["config_hash"] = config_hash;
    j["warnings"] = warnings;
    j["metrics"] = metrics;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json r;
        r["name"] = row.name;
        r["skipped"] = row.skipped;
        if (!row.note.empty()) r["note"] = row.note;
        for (const auto& [metric, value] : row.values) r["values"][metric] = value;
        j["rows"].push_back(std::move(r));
    }
    for (const auto& [metric, agg] : aggregates()) {
        j["aggregate"][metric] = {
            {"mean", agg.mean}, {"median", agg.median}, {"std", agg.stddev}};
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string());
    out << j.dump(2) << "\n";
    if (!out) throw IoError("write failed: " + path.string());
}

std::string config_hash(const std::string& canonical) {
    uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

}  // namespace sharpgan
