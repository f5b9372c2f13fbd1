#include "aj/experiment.hpp"

#include <chrono>
#include <cmath>

#include "aj/analytics.hpp"
#include "aj/dql.hpp"

namespace aj {

namespace {

double elapsed_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

ErConfig er_config(const ExperimentConfig& cfg, int jammed_count) {
    ErConfig ec;
    ec.num_channels = cfg.net.num_channels;
    ec.num_users = cfg.net.num_users;
    ec.jammed_count = jammed_count;
    ec.shape_m = cfg.fading.shape_m;
    ec.mean_power = cfg.fading.mean_power;
    ec.power_ratio = cfg.net.power_ratio();
    return ec;
}

} // namespace

Sc1EpisodeConfig sc1_episode_config(const ExperimentConfig& cfg) {
    Sc1EpisodeConfig ec;
    ec.slots = cfg.eval.slots;
    ec.window_b = cfg.train.window_b;
    ec.dwell_length = cfg.dwell;
    ec.random_mode = cfg.eval.selection_mode == "max_gain" ? SelectionMode::max_gain
                                                           : SelectionMode::random;
    ec.net = cfg.net;
    ec.fading = cfg.fading;
    ec.sensing = cfg.sensing;
    ec.sensing.ideal = cfg.sensing.ideal || cfg.eval.ideal_sensing;
    return ec;
}

Sc2Config sc2_config(const ExperimentConfig& cfg) {
    Sc2Config sc;
    sc.preset = jamming_preset(cfg.preset);
    sc.num_users = cfg.net.num_users;
    sc.interference = cfg.eval.interference;
    sc.window_a = cfg.train.window_a;
    sc.dwell_length = cfg.dwell;
    sc.net = cfg.net;
    sc.fading = cfg.fading;
    sc.sensing = cfg.sensing;
    return sc;
}

Model train_sc1_model(const ExperimentConfig& cfg, TrainResult* curve) {
    cfg.validate();
    const ClassTaxonomy tax = ClassTaxonomy::default13();
    const Sc1Dataset ds = generate_sc1_dataset(
        cfg.train.slots_per_episode, cfg.train.episodes_per_class, tax,
        cfg.net.num_channels, cfg.sensing, cfg.dwell, cfg.train.seed);
    return train_sc1_model_on(ds, cfg, curve);
}

Model train_sc1_model_on(const Sc1Dataset& ds, const ExperimentConfig& cfg,
                         TrainResult* curve) {
    cfg.validate();
    const ClassTaxonomy tax = ClassTaxonomy::default13();
    const std::vector<Sample> windows = sc1_windows(ds, cfg.train.window_a, cfg.train.stride);

    Rng init_rng(Rng::derive(cfg.train.seed, 0x111));
    Model model;
    model.loss = LossKind::cross_entropy;
    model.gru = GruParams::init(2 * cfg.net.num_channels, cfg.train.hidden, init_rng);
    model.head = DenseHead::init(cfg.train.hidden, tax.size(), Activation::softmax, init_rng);

    TrainConfig tc;
    tc.seq_len = cfg.train.window_a;
    tc.hidden_dim = cfg.train.hidden;
    tc.epochs = cfg.train.epochs;
    tc.batch_size = cfg.train.batch;
    tc.adam.lr = cfg.train.lr;
    tc.seed = cfg.train.seed;
    const TrainResult tr = train(model, windows, tc);
    if (curve) *curve = tr;
    return model;
}

std::vector<Model> train_sc2_models(const ExperimentConfig& cfg,
                                    std::vector<TrainResult>* curves) {
    cfg.validate();
    Sc2Config sc = sc2_config(cfg);
    const Sc2Dataset ds = generate_sc2_dataset(sc, cfg.train.dataset_slots, cfg.train.seed);
    return train_sc2_models_on(ds, cfg, curves);
}

std::vector<Model> train_sc2_models_on(const Sc2Dataset& ds, const ExperimentConfig& cfg,
                                       std::vector<TrainResult>* curves) {
    cfg.validate();
    std::vector<Model> models;
    if (curves) curves->clear();
    for (int u = 0; u < cfg.net.num_users; ++u) {
        const std::vector<Sample> windows = sc2_windows(
            ds.per_user[u], cfg.net.num_channels, cfg.train.window_a, cfg.train.stride);
        Rng init_rng(Rng::derive(cfg.train.seed, 0x222 + u));
        Model model;
        model.loss = LossKind::binary_cross_entropy;
        model.gru = GruParams::init(2 * cfg.net.num_channels, cfg.train.hidden, init_rng);
        model.head =
            DenseHead::init(cfg.train.hidden, cfg.net.num_channels, Activation::sigmoid,
                            init_rng);
        TrainConfig tc;
        tc.seq_len = cfg.train.window_a;
        tc.hidden_dim = cfg.train.hidden;
        tc.epochs = cfg.train.epochs;
        tc.batch_size = cfg.train.batch;
        tc.adam.lr = cfg.train.lr;
        tc.seed = Rng::derive(cfg.train.seed, 0x333 + u);
        const TrainResult tr = train(model, windows, tc);
        if (curves) curves->push_back(tr);
        models.push_back(std::move(model));
    }
    return models;
}

RunReport eval_sc1(const ExperimentConfig& cfg, const Model& model, std::uint64_t seed) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    const ClassTaxonomy tax = ClassTaxonomy::default13();
    const Sc1EpisodeConfig ec = sc1_episode_config(cfg);
    const JammerKind kind = jammer_kind_from_string(cfg.jammer_kind);
    const int true_class = tax.index_of(kind, cfg.jammer_width);

    RunReport rep;
    rep.scenario = "sc1";
    rep.method = "proposed";
    rep.channels = cfg.net.num_channels;
    rep.seed = seed;
    rep.config_echo = cfg.to_json();
    rep.interaction_budget =
        static_cast<long>(cfg.train.slots_per_episode) * cfg.train.episodes_per_class * 13;
    rep.str_by_slot.assign(ec.slots, 0.0);
    rep.accuracy_by_slot.assign(ec.slots, 0.0);

    double rate_sum = 0.0;
    long rate_count = 0;
    for (int r = 0; r < cfg.eval.repetitions; ++r) {
        const auto trace =
            run_sc1_episode(model, tax, kind, cfg.jammer_width, ec, Rng::derive(seed, r));
        for (int t = 0; t < ec.slots; ++t) {
            rep.str_by_slot[t] += trace[t].success ? 1.0 : 0.0;
            rep.accuracy_by_slot[t] += trace[t].detected_class == true_class ? 1.0 : 0.0;
            if (t >= ec.window_b) {
                rate_sum += trace[t].rate;
                ++rate_count;
            }
        }
    }
    for (auto& v : rep.str_by_slot) v /= cfg.eval.repetitions;
    for (auto& v : rep.accuracy_by_slot) v /= cfg.eval.repetitions;

    double steady = 0.0;
    int steady_n = 0;
    for (int t = ec.window_b; t < ec.slots; ++t) {
        steady += rep.str_by_slot[t];
        ++steady_n;
    }
    rep.aggregates["steady_str"] = steady_n ? steady / steady_n : 0.0;
    rep.aggregates["er_empirical"] = rate_count ? rate_sum / rate_count : 0.0;
    rep.aggregates["er_analytic_max"] = er_max_selection(er_config(cfg, cfg.jammer_width));
    rep.aggregates["er_analytic_random"] = er_random(er_config(cfg, cfg.jammer_width));
    rep.wall_seconds = elapsed_since(start);
    return rep;
}

RunReport eval_sc2(const ExperimentConfig& cfg, const std::vector<Model>& models,
                   std::uint64_t seed) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    const Sc2Config sc = sc2_config(cfg);
    const int slots = cfg.eval.slots;
    const int N = sc.num_users;

    RunReport rep;
    rep.scenario = "sc2";
    rep.method = "proposed";
    rep.channels = cfg.net.num_channels;
    rep.seed = seed;
    rep.config_echo = cfg.to_json();
    rep.interaction_budget = cfg.train.dataset_slots;
    rep.str_by_slot.assign(slots, 0.0);

    std::vector<double> jam_acc;
    double rate_sum = 0.0;
    long rate_count = 0;
    for (int r = 0; r < cfg.eval.repetitions; ++r) {
        const Sc2EpisodeResult res = run_sc2_episode(models, sc, slots, Rng::derive(seed, r));
        if (jam_acc.empty()) jam_acc.assign(res.jammer_success.size(), 0.0);
        for (std::size_t j = 0; j < res.jammer_success.size(); ++j)
            jam_acc[j] += res.jammer_success[j];
        for (int t = 0; t < slots; ++t) {
            double ok = 0.0;
            for (int u = 0; u < N; ++u) ok += res.slots[t].success[u] ? 1.0 : 0.0;
            rep.str_by_slot[t] += ok / N;
            if (t >= sc.window_a) {
                for (int u = 0; u < N; ++u) rate_sum += res.slots[t].rate[u];
                rate_count += N;
            }
        }
    }
    for (auto& v : rep.str_by_slot) v /= cfg.eval.repetitions;
    const auto preset_jammers = make_preset_jammers(sc.preset, cfg.net.num_channels);
    for (std::size_t j = 0; j < jam_acc.size(); ++j)
        rep.jammer_success.emplace_back(to_string(preset_jammers[j].kind),
                                        jam_acc[j] / cfg.eval.repetitions);

    double steady = 0.0;
    int steady_n = 0;
    for (int t = sc.window_a; t < slots; ++t) {
        steady += rep.str_by_slot[t];
        ++steady_n;
    }
    rep.aggregates["steady_str"] = steady_n ? steady / steady_n : 0.0;
    rep.aggregates["er_empirical"] = rate_count ? rate_sum / rate_count : 0.0;
    const int jammed = sc.preset.total();
    rep.aggregates["er_analytic_max"] = er_max_selection(er_config(cfg, jammed));
    if (cfg.eval.interference)
        rep.aggregates["er_analytic_interference"] = er_interference(er_config(cfg, jammed));
    rep.wall_seconds = elapsed_since(start);
    return rep;
}

RunReport eval_sc1_dql(const ExperimentConfig& cfg, std::uint64_t seed) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    const Sc1EpisodeConfig ec = sc1_episode_config(cfg);
    const JammerKind kind = jammer_kind_from_string(cfg.jammer_kind);

    RunReport rep;
    rep.scenario = "sc1";
    rep.method = "dql";
    rep.channels = cfg.net.num_channels;
    rep.seed = seed;
    rep.config_echo = cfg.to_json();
    rep.interaction_budget = ec.slots;
    rep.str_by_slot.assign(ec.slots, 0.0);

    for (int r = 0; r < cfg.eval.repetitions; ++r) {
        const auto trace = run_dql_sc1(kind, cfg.jammer_width, ec, cfg.dql,
                                       Rng::derive(seed, r));
        for (int t = 0; t < ec.slots; ++t)
            rep.str_by_slot[t] += trace[t].success ? 1.0 : 0.0;
    }
    for (auto& v : rep.str_by_slot) v /= cfg.eval.repetitions;

    double steady = 0.0;
    int steady_n = 0;
    for (int t = ec.window_b; t < ec.slots; ++t) {
        steady += rep.str_by_slot[t];
        ++steady_n;
    }
    rep.aggregates["steady_str"] = steady_n ? steady / steady_n : 0.0;
    rep.wall_seconds = elapsed_since(start);
    return rep;
}

RunReport eval_sc2_dql(const ExperimentConfig& cfg, std::uint64_t seed) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    const Sc2Config sc = sc2_config(cfg);
    const int slots = cfg.eval.slots;
    const int N = sc.num_users;

    RunReport rep;
    rep.scenario = "sc2";
    rep.method = "dql";
    rep.channels = cfg.net.num_channels;
    rep.seed = seed;
    rep.config_echo = cfg.to_json();
    rep.interaction_budget = slots;
    rep.str_by_slot.assign(slots, 0.0);

    std::vector<double> jam_acc;
    for (int r = 0; r < cfg.eval.repetitions; ++r) {
        const Sc2EpisodeResult res = run_dql_sc2(sc, slots, cfg.dql, Rng::derive(seed, r));
        if (jam_acc.empty()) jam_acc.assign(res.jammer_success.size(), 0.0);
        for (std::size_t j = 0; j < res.jammer_success.size(); ++j)
            jam_acc[j] += res.jammer_success[j];
        for (int t = 0; t < slots; ++t) {
            double ok = 0.0;
            for (int u = 0; u < N; ++u) ok += res.slots[t].success[u] ? 1.0 : 0.0;
            rep.str_by_slot[t] += ok / N;
        }
    }
    for (auto& v : rep.str_by_slot) v /= cfg.eval.repetitions;
    const auto preset_jammers = make_preset_jammers(sc.preset, cfg.net.num_channels);
    for (std::size_t j = 0; j < jam_acc.size(); ++j)
        rep.jammer_success.emplace_back(to_string(preset_jammers[j].kind),
                                        jam_acc[j] / cfg.eval.repetitions);

    double steady = 0.0;
    int steady_n = 0;
    for (int t = sc.window_a; t < slots; ++t) {
        steady += rep.str_by_slot[t];
        ++steady_n;
    }
    rep.aggregates["steady_str"] = steady_n ? steady / steady_n : 0.0;
    rep.wall_seconds = elapsed_since(start);
    return rep;
}

} // namespace aj
