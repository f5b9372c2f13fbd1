#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace aj {

// Self-describing result of one evaluation run: re-running the embedded
// config with the embedded seed reproduces the traces.
struct RunReport {
    nlohmann::json config_echo;
    std::string scenario;
    std::string method = "proposed"; // proposed | dql
    int channels = 0;
    std::uint64_t seed = 0;
    long interaction_budget = 0; // environment slots consumed before/during eval
    double wall_seconds = 0.0;
    std::string version = "1";

    std::vector<double> str_by_slot;      // mean success rate per elapsed slot
    std::vector<double> accuracy_by_slot; // sc1 detection accuracy (may be empty)
    std::vector<std::pair<std::string, double>> jammer_success; // sc2
    std::map<std::string, double> aggregates;

    nlohmann::json to_json() const;
    static RunReport from_json(const nlohmann::json& j);
    void save(const std::string& path) const;
    static RunReport load(const std::string& path);
};

// Aligned CSV of method x metric x slot. Reports must share scenario and
// channel count; a single report passes through.
std::string compare_reports(const std::vector<RunReport>& reports);

// Per-slot trace CSV: first column slot, one column per named series.
void write_trace_csv(const std::string& path,
                     const std::vector<std::pair<std::string, std::vector<double>>>& series);

} // namespace aj
