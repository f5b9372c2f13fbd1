#include "aj/config.hpp"

#include <fstream>
#include <stdexcept>

namespace aj {

namespace {

template <typename T>
void get_if(const nlohmann::json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

} // namespace

void ExperimentConfig::validate() const {
    if (scenario != "sc1" && scenario != "sc2")
        throw std::invalid_argument("config: scenario must be sc1 or sc2");
    net.validate();
    sensing.validate();
    if (train.window_a < 1 || train.lr <= 0.0)
        throw std::invalid_argument("config: bad train block");
    if (scenario == "sc1") jammer_kind_from_string(jammer_kind);
    if (scenario == "sc2") jamming_preset(preset);
    if (eval.selection_mode != "max_gain" && eval.selection_mode != "random")
        throw std::invalid_argument("config: selection_mode must be max_gain or random");
}

nlohmann::json ExperimentConfig::to_json() const {
    nlohmann::json j;
    j["scenario"] = scenario;
    j["network"] = {{"channels", net.num_channels},
                    {"users", net.num_users},
                    {"jammers", net.num_jammers},
                    {"user_power", net.user_power},
                    {"noise_power", net.noise_power}};
    j["fading"] = {{"m", fading.shape_m}, {"lambda", fading.mean_power}};
    j["sensing"] = {{"threshold_ratio", sensing.threshold_ratio},
                    {"jnr_db", sensing.jnr_db},
                    {"ideal_sensing", sensing.ideal}};
    j["jammer"] = {{"kind", jammer_kind}, {"width", jammer_width}, {"dwell", dwell}};
    j["preset"] = preset;
    j["train"] = {{"a", train.window_a},
                  {"b", train.window_b},
                  {"hidden", train.hidden},
                  {"lr", train.lr},
                  {"epochs", train.epochs},
                  {"batch", train.batch},
                  {"seed", train.seed},
                  {"slots_per_episode", train.slots_per_episode},
                  {"episodes_per_class", train.episodes_per_class},
                  {"dataset_slots", train.dataset_slots},
                  {"stride", train.stride}};
    j["eval"] = {{"slots", eval.slots},
                 {"repetitions", eval.repetitions},
                 {"interference", eval.interference},
                 {"selection_mode", eval.selection_mode},
                 {"ideal_sensing", eval.ideal_sensing}};
    j["dql"] = {{"history", dql.history},
                {"hidden", dql.hidden},
                {"discount", dql.discount},
                {"eps_start", dql.eps_start},
                {"eps_end", dql.eps_end},
                {"target_refresh", dql.target_refresh},
                {"buffer", dql.buffer_capacity},
                {"batch", dql.batch_size},
                {"lr", dql.adam.lr}};
    j["output"] = {{"dir", out_dir}};
    return j;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
    ExperimentConfig c;
    get_if(j, "scenario", c.scenario);
    if (j.contains("network")) {
        const auto& n = j.at("network");
        get_if(n, "channels", c.net.num_channels);
        get_if(n, "users", c.net.num_users);
        get_if(n, "jammers", c.net.num_jammers);
        get_if(n, "user_power", c.net.user_power);
        get_if(n, "noise_power", c.net.noise_power);
    }
    if (j.contains("fading")) {
        const auto& f = j.at("fading");
        get_if(f, "m", c.fading.shape_m);
        get_if(f, "lambda", c.fading.mean_power);
    }
    if (j.contains("sensing")) {
        const auto& s = j.at("sensing");
        get_if(s, "threshold_ratio", c.sensing.threshold_ratio);
        get_if(s, "jnr_db", c.sensing.jnr_db);
        get_if(s, "ideal_sensing", c.sensing.ideal);
    }
    if (j.contains("jammer")) {
        const auto& jm = j.at("jammer");
        get_if(jm, "kind", c.jammer_kind);
        get_if(jm, "width", c.jammer_width);
        get_if(jm, "dwell", c.dwell);
    }
    get_if(j, "preset", c.preset);
    if (j.contains("train")) {
        const auto& t = j.at("train");
        get_if(t, "a", c.train.window_a);
        get_if(t, "b", c.train.window_b);
        get_if(t, "hidden", c.train.hidden);
        get_if(t, "lr", c.train.lr);
        get_if(t, "epochs", c.train.epochs);
        get_if(t, "batch", c.train.batch);
        get_if(t, "seed", c.train.seed);
        get_if(t, "slots_per_episode", c.train.slots_per_episode);
        get_if(t, "episodes_per_class", c.train.episodes_per_class);
        get_if(t, "dataset_slots", c.train.dataset_slots);
        get_if(t, "stride", c.train.stride);
    }
    if (j.contains("eval")) {
        const auto& e = j.at("eval");
        get_if(e, "slots", c.eval.slots);
        get_if(e, "repetitions", c.eval.repetitions);
        get_if(e, "interference", c.eval.interference);
        get_if(e, "selection_mode", c.eval.selection_mode);
        get_if(e, "ideal_sensing", c.eval.ideal_sensing);
    }
    if (j.contains("dql")) {
        const auto& d = j.at("dql");
        get_if(d, "history", c.dql.history);
        get_if(d, "hidden", c.dql.hidden);
        get_if(d, "discount", c.dql.discount);
        get_if(d, "eps_start", c.dql.eps_start);
        get_if(d, "eps_end", c.dql.eps_end);
        get_if(d, "target_refresh", c.dql.target_refresh);
        get_if(d, "buffer", c.dql.buffer_capacity);
        get_if(d, "batch", c.dql.batch_size);
        get_if(d, "lr", c.dql.adam.lr);
    }
    if (j.contains("output")) get_if(j.at("output"), "dir", c.out_dir);
    c.validate();
    return c;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot open config: " + path);
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("config parse error in " + path + ": " + e.what());
    }
    return from_json(j);
}

} // namespace aj
