#include "aj/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace aj {

nlohmann::json RunReport::to_json() const {
    nlohmann::json j;
    j["config"] = config_echo;
    j["scenario"] = scenario;
    j["method"] = method;
    j["channels"] = channels;
    j["seed"] = seed;
    j["interaction_budget"] = interaction_budget;
    j["wall_seconds"] = wall_seconds;
    j["version"] = version;
    j["str_by_slot"] = str_by_slot;
    j["accuracy_by_slot"] = accuracy_by_slot;
    nlohmann::json js = nlohmann::json::object();
    for (const auto& [name, rate] : jammer_success) js[name] = rate;
    j["jammer_success"] = js;
    j["aggregates"] = aggregates;
    return j;
}

RunReport RunReport::from_json(const nlohmann::json& j) {
    RunReport r;
    r.config_echo = j.value("config", nlohmann::json::object());
    r.scenario = j.at("scenario").get<std::string>();
    r.method = j.value("method", "proposed");
    r.channels = j.at("channels").get<int>();
    r.seed = j.value("seed", 0ULL);
    r.interaction_budget = j.value("interaction_budget", 0L);
    r.wall_seconds = j.value("wall_seconds", 0.0);
    r.version = j.value("version", "1");
    r.str_by_slot = j.value("str_by_slot", std::vector<double>{});
    r.accuracy_by_slot = j.value("accuracy_by_slot", std::vector<double>{});
    if (j.contains("jammer_success"))
        for (const auto& [name, rate] : j.at("jammer_success").items())
            r.jammer_success.emplace_back(name, rate.get<double>());
    if (j.contains("aggregates"))
        for (const auto& [name, val] : j.at("aggregates").items())
            r.aggregates[name] = val.get<double>();
    return r;
}

void RunReport::save(const std::string& path) const {
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open report for writing: " + path);
    os << to_json().dump(2) << "\n";
}

RunReport RunReport::load(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open report: " + path);
    nlohmann::json j;
    is >> j;
    return from_json(j);
}

std::string compare_reports(const std::vector<RunReport>& reports) {
    if (reports.empty()) throw std::invalid_argument("compare: no reports");
    const auto& first = reports.front();
    std::size_t slots = first.str_by_slot.size();
    for (const auto& r : reports) {
        if (r.scenario != first.scenario)
            throw std::invalid_argument("compare: scenario mismatch (" + r.scenario +
                                        " vs " + first.scenario + ")");
        if (r.channels != first.channels)
            throw std::invalid_argument("compare: channel-count mismatch");
        slots = std::min(slots, r.str_by_slot.size());
    }
    std::ostringstream os;
    os << "slot";
    for (const auto& r : reports) {
        os << "," << r.method << "_str";
        if (!r.accuracy_by_slot.empty()) os << "," << r.method << "_accuracy";
    }
    os << "\n";
    for (std::size_t t = 0; t < slots; ++t) {
        os << t;
        for (const auto& r : reports) {
            os << "," << r.str_by_slot[t];
            if (!r.accuracy_by_slot.empty())
                os << "," << (t < r.accuracy_by_slot.size() ? r.accuracy_by_slot[t] : 0.0);
        }
        os << "\n";
    }
    return os.str();
}

void write_trace_csv(const std::string& path,
                     const std::vector<std::pair<std::string, std::vector<double>>>& series) {
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open trace for writing: " + path);
    os << "slot";
    std::size_t n = 0;
    for (const auto& [name, values] : series) {
        os << "," << name;
        n = std::max(n, values.size());
    }
    os << "\n";
    for (std::size_t t = 0; t < n; ++t) {
        os << t;
        for (const auto& [name, values] : series)
            os << "," << (t < values.size() ? std::to_string(values[t]) : "");
        os << "\n";
    }
}

} // namespace aj
