#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "aj/dql.hpp"
#include "aj/jammers.hpp"
#include "aj/sensing.hpp"
#include "aj/spectrum.hpp"

namespace aj {

struct TrainBlock {
    int window_a = 20;
    int window_b = 20;
    int hidden = 64;
    double lr = 3e-3;
    int epochs = 20;
    int batch = 32;
    std::uint64_t seed = 1;
    // Dataset sizing.
    int slots_per_episode = 140; // sc1
    int episodes_per_class = 3;  // sc1
    int dataset_slots = 3000;    // sc2
    int stride = 2;
};

struct EvalBlock {
    int slots = 200;
    int repetitions = 20;
    bool interference = false;
    std::string selection_mode = "max_gain"; // against the random jammer
    bool ideal_sensing = false;              // ablation switch for evaluation
};

// One file fully specifies a run; every run is determined by (config, seed).
struct ExperimentConfig {
    std::string scenario = "sc1"; // sc1 | sc2
    NetworkConfig net;
    FadingModel fading;
    SensingConfig sensing;
    // sc1 evaluation jammer.
    std::string jammer_kind = "sweeping";
    int jammer_width = 2;
    int dwell = 5;
    // sc2 preset.
    std::string preset = "jr30";
    TrainBlock train;
    EvalBlock eval;
    DqlConfig dql;
    std::string out_dir = "out";

    void validate() const;
    nlohmann::json to_json() const;
    static ExperimentConfig from_json(const nlohmann::json& j);
    static ExperimentConfig load(const std::string& path);
};

} // namespace aj
