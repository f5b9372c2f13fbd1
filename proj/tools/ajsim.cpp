// Command-line front end: dataset generation, training, evaluation, the
// closed-form rate tables, report comparison, and a quick numeric selftest.
//
// Exit codes: 0 success, 2 configuration/usage error, 3 numeric failure.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <sstream>

#include <CLI11.hpp>

#include "aj/analytics.hpp"
#include "aj/config.hpp"
#include "aj/experiment.hpp"
#include "aj/report.hpp"
#include "aj/rng.hpp"

namespace fs = std::filesystem;
using namespace aj;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

// Thrown for failures that indicate a numeric problem rather than bad input.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOpts {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<std::string> preset;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool config_required) {
    auto* c = cmd->add_option("--config", o.config_path, "experiment config (JSON)");
    if (config_required) c->required();
    cmd->add_option("--seed", o.seed, "override the run seed");
    cmd->add_option("--out", o.out, "override the output directory");
    cmd->add_option("--preset", o.preset, "override the jamming-ratio preset");
}

ExperimentConfig load_config(const CommonOpts& o) {
    ExperimentConfig cfg =
        o.config_path.empty() ? ExperimentConfig{} : ExperimentConfig::load(o.config_path);
    if (o.seed) cfg.train.seed = *o.seed;
    if (o.out) cfg.out_dir = *o.out;
    if (o.preset) cfg.preset = *o.preset;
    cfg.validate();
    return cfg;
}

std::uint64_t run_seed(const ExperimentConfig& cfg, const CommonOpts& o) {
    return o.seed ? *o.seed : cfg.train.seed;
}

fs::path sc1_dataset_path(const ExperimentConfig& cfg) {
    return fs::path(cfg.out_dir) / "sc1_dataset.csv";
}
fs::path sc2_dataset_path(const ExperimentConfig& cfg, int user) {
    return fs::path(cfg.out_dir) / ("sc2_user" + std::to_string(user) + ".csv");
}
fs::path sc1_model_path(const ExperimentConfig& cfg) {
    return fs::path(cfg.out_dir) / "sc1_model.ckpt";
}
fs::path sc2_model_path(const ExperimentConfig& cfg, int user) {
    return fs::path(cfg.out_dir) / ("sc2_user" + std::to_string(user) + ".ckpt");
}

void require_file(const fs::path& p, const std::string& hint) {
    if (!fs::exists(p))
        throw std::invalid_argument("missing " + hint + ": " + p.string() +
                                    " (run `ajsim gen-data` / `ajsim train` first)");
}

void write_manifest(const ExperimentConfig& cfg, const nlohmann::json& extra) {
    nlohmann::json j;
    j["config"] = cfg.to_json();
    for (const auto& [k, v] : extra.items()) j[k] = v;
    std::ofstream os(fs::path(cfg.out_dir) / "manifest.json", std::ios::trunc);
    os << j.dump(2) << "\n";
}

int cmd_gen_data(const CommonOpts& o) {
    ExperimentConfig cfg = load_config(o);
    fs::create_directories(cfg.out_dir);
    nlohmann::json extra;
    if (cfg.scenario == "sc1") {
        const Sc1Dataset ds = generate_sc1_dataset(
            cfg.train.slots_per_episode, cfg.train.episodes_per_class,
            ClassTaxonomy::default13(), cfg.net.num_channels, cfg.sensing, cfg.dwell,
            cfg.train.seed);
        write_sc1_csv(sc1_dataset_path(cfg).string(), ds);
        extra["episodes"] = ds.episodes.size();
        extra["slots_per_episode"] = ds.slots_per_episode;
        extra["files"] = {sc1_dataset_path(cfg).string()};
        std::cout << "wrote " << sc1_dataset_path(cfg).string() << " ("
                  << ds.episodes.size() << " episodes x " << ds.slots_per_episode
                  << " slots)\n";
    } else {
        const Sc2Dataset ds = generate_sc2_dataset(sc2_config(cfg), cfg.train.dataset_slots,
                                                   cfg.train.seed);
        std::vector<std::string> files;
        for (int u = 0; u < cfg.net.num_users; ++u) {
            const std::string p = sc2_dataset_path(cfg, u).string();
            write_sc2_csv(p, ds, u);
            files.push_back(p);
            std::cout << "wrote " << p << " (" << ds.per_user[u].size() << " slots)\n";
        }
        extra["users"] = cfg.net.num_users;
        extra["slots"] = cfg.train.dataset_slots;
        extra["files"] = files;
    }
    extra["seed"] = cfg.train.seed;
    write_manifest(cfg, extra);
    return kExitOk;
}

void write_loss_curves(const ExperimentConfig& cfg,
                       const std::vector<std::pair<std::string, TrainResult>>& curves) {
    std::ofstream os(fs::path(cfg.out_dir) / "loss_curve.csv", std::ios::trunc);
    os << "epoch";
    std::size_t epochs = 0;
    for (const auto& [name, tr] : curves) {
        os << "," << name;
        epochs = std::max(epochs, tr.epoch_loss.size());
    }
    os << "\n";
    for (std::size_t e = 0; e < epochs; ++e) {
        os << e;
        for (const auto& [name, tr] : curves)
            os << "," << (e < tr.epoch_loss.size() ? std::to_string(tr.epoch_loss[e]) : "");
        os << "\n";
    }
}

int cmd_train(const CommonOpts& o) {
    ExperimentConfig cfg = load_config(o);
    fs::create_directories(cfg.out_dir);
    std::vector<std::pair<std::string, TrainResult>> curves;
    if (cfg.scenario == "sc1") {
        require_file(sc1_dataset_path(cfg), "training dataset");
        const Sc1Dataset ds = read_sc1_csv(sc1_dataset_path(cfg).string());
        TrainResult tr;
        const Model model = train_sc1_model_on(ds, cfg, &tr);
        save_checkpoint(sc1_model_path(cfg).string(), model);
        curves.emplace_back("loss", tr);
        std::cout << "wrote " << sc1_model_path(cfg).string() << " (final loss "
                  << tr.epoch_loss.back() << ")\n";
    } else {
        Sc2Dataset ds;
        ds.num_channels = cfg.net.num_channels;
        for (int u = 0; u < cfg.net.num_users; ++u) {
            require_file(sc2_dataset_path(cfg, u), "training dataset");
            ds.per_user.push_back(
                read_sc2_csv(sc2_dataset_path(cfg, u).string(), cfg.net.num_channels));
        }
        std::vector<TrainResult> trs;
        const std::vector<Model> models = train_sc2_models_on(ds, cfg, &trs);
        for (int u = 0; u < cfg.net.num_users; ++u) {
            save_checkpoint(sc2_model_path(cfg, u).string(), models[u]);
            curves.emplace_back("user" + std::to_string(u), trs[u]);
            std::cout << "wrote " << sc2_model_path(cfg, u).string() << " (final loss "
                      << trs[u].epoch_loss.back() << ")\n";
        }
    }
    write_loss_curves(cfg, curves);
    return kExitOk;
}

int cmd_eval(const CommonOpts& o, const std::string& method) {
    ExperimentConfig cfg = load_config(o);
    fs::create_directories(cfg.out_dir);
    const std::uint64_t seed = run_seed(cfg, o);

    RunReport rep;
    if (method == "dql") {
        rep = cfg.scenario == "sc1" ? eval_sc1_dql(cfg, seed) : eval_sc2_dql(cfg, seed);
    } else if (cfg.scenario == "sc1") {
        require_file(sc1_model_path(cfg), "model checkpoint");
        rep = eval_sc1(cfg, load_checkpoint(sc1_model_path(cfg).string()), seed);
    } else {
        std::vector<Model> models;
        for (int u = 0; u < cfg.net.num_users; ++u) {
            require_file(sc2_model_path(cfg, u), "model checkpoint");
            models.push_back(load_checkpoint(sc2_model_path(cfg, u).string()));
        }
        rep = eval_sc2(cfg, models, seed);
    }
    for (const auto& [k, v] : rep.aggregates)
        if (!std::isfinite(v)) throw NumericError("non-finite aggregate: " + k);

    const fs::path report_path = fs::path(cfg.out_dir) / ("report_" + rep.method + ".json");
    rep.save(report_path.string());
    std::vector<std::pair<std::string, std::vector<double>>> series;
    series.emplace_back("str", rep.str_by_slot);
    if (!rep.accuracy_by_slot.empty()) series.emplace_back("accuracy", rep.accuracy_by_slot);
    const fs::path trace_path = fs::path(cfg.out_dir) / ("trace_" + rep.method + ".csv");
    write_trace_csv(trace_path.string(), series);

    std::cout << "wrote " << report_path.string() << "\n";
    for (const auto& [k, v] : rep.aggregates) std::cout << "  " << k << " = " << v << "\n";
    for (const auto& [name, r] : rep.jammer_success)
        std::cout << "  jammer_success[" << name << "] = " << r << "\n";
    return kExitOk;
}

int cmd_analytic(const CommonOpts& o) {
    ExperimentConfig cfg = load_config(o);
    std::ostringstream os;
    os << "jammed_count,er_best_channel,er_interference,er_random\n";
    for (int upsilon = 0; upsilon < cfg.net.num_channels; ++upsilon) {
        ErConfig ec;
        ec.num_channels = cfg.net.num_channels;
        ec.num_users = cfg.net.num_users;
        ec.jammed_count = upsilon;
        ec.shape_m = cfg.fading.shape_m;
        ec.mean_power = cfg.fading.mean_power;
        ec.power_ratio = cfg.net.power_ratio();
        const double best = er_max_selection(ec);
        const double interf = er_interference(ec);
        const double rnd = er_random(ec);
        if (!std::isfinite(best) || !std::isfinite(interf) || !std::isfinite(rnd))
            throw NumericError("rate integral diverged at jammed_count=" +
                               std::to_string(upsilon));
        os << upsilon << "," << best << "," << interf << "," << rnd << "\n";
    }
    if (o.out) {
        fs::path p(*o.out);
        if (p.has_parent_path()) fs::create_directories(p.parent_path());
        std::ofstream f(p, std::ios::trunc);
        f << os.str();
        std::cout << "wrote " << p.string() << "\n";
    } else {
        std::cout << os.str();
    }
    return kExitOk;
}

int cmd_compare(const CommonOpts& o, const std::vector<std::string>& report_paths) {
    std::vector<RunReport> reports;
    for (const auto& p : report_paths) {
        require_file(p, "report");
        reports.push_back(RunReport::load(p));
    }
    const std::string csv = compare_reports(reports);
    if (o.out) {
        fs::path p(*o.out);
        if (p.has_parent_path()) fs::create_directories(p.parent_path());
        std::ofstream f(p, std::ios::trunc);
        f << csv;
        std::cout << "wrote " << p.string() << "\n";
    } else {
        std::cout << csv;
    }
    return kExitOk;
}

// Fast internal consistency checks; any failure is a numeric error.
int cmd_selftest(const CommonOpts& o) {
    const std::uint64_t seed = o.seed.value_or(12345);
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };

    ErConfig ec;
    ec.num_channels = 12;
    ec.jammed_count = 11; // one free channel: best-of-1 equals random selection
    ec.shape_m = 1.0;
    ec.power_ratio = 10.0;
    const double best1 = er_max_selection(ec);
    const double closed = er_random_rayleigh(10.0);
    check("single-channel rate matches closed form",
          std::abs(best1 - closed) < 1e-6);

    ec.jammed_count = 4;
    const McEstimate mc = mc_er_oracle(ec, Selection::best_of_n, 200000, seed);
    const double quad = er_max_selection(ec);
    check("quadrature within 4 sigma of Monte Carlo",
          std::abs(quad - mc.mean) < 4.0 * mc.stderror + 1e-9);

    const McEstimate serial = mc_er_oracle_serial(ec, Selection::best_of_n, 50000, seed);
    const McEstimate par = mc_er_oracle(ec, Selection::best_of_n, 50000, seed);
    check("parallel Monte Carlo bitwise equals serial",
          serial.mean == par.mean && serial.stderror == par.stderror);

    Rng rng_a(seed), rng_b(seed);
    bool same = true;
    for (int i = 0; i < 1000; ++i) same = same && rng_a.next_u64() == rng_b.next_u64();
    check("rng streams reproduce under equal seeds", same);

    ExperimentConfig cfg;
    cfg.train.epochs = 2;
    cfg.train.episodes_per_class = 1;
    cfg.train.slots_per_episode = 60;
    const Model m1 = train_sc1_model(cfg);
    const Model m2 = train_sc1_model(cfg);
    check("training is deterministic in (config, seed)",
          (pack(m1).array() == pack(m2).array()).all());

    return failures == 0 ? kExitOk : kExitNumeric;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"anti-jamming simulation toolkit"};
    app.require_subcommand(1);

    CommonOpts gen_o, train_o, eval_o, ana_o, cmp_o, self_o;
    std::string eval_method = "proposed";
    std::vector<std::string> cmp_reports;

    auto* gen = app.add_subcommand("gen-data", "generate training datasets as CSV");
    add_common(gen, gen_o, true);
    auto* tr = app.add_subcommand("train", "train models from a generated dataset");
    add_common(tr, train_o, true);
    auto* ev = app.add_subcommand("eval", "evaluate a trained model or the DQL baseline");
    add_common(ev, eval_o, true);
    ev->add_option("--method", eval_method, "proposed | dql")
        ->check(CLI::IsMember({"proposed", "dql"}));
    auto* an = app.add_subcommand("analytic", "closed-form rate table vs jammed count");
    add_common(an, ana_o, false);
    auto* cp = app.add_subcommand("compare", "merge evaluation reports into one CSV");
    add_common(cp, cmp_o, false);
    cp->add_option("reports", cmp_reports, "report JSON files")->required();
    auto* st = app.add_subcommand("selftest", "quick numeric consistency checks");
    add_common(st, self_o, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (gen->parsed()) return cmd_gen_data(gen_o);
        if (tr->parsed()) return cmd_train(train_o);
        if (ev->parsed()) return cmd_eval(eval_o, eval_method);
        if (an->parsed()) return cmd_analytic(ana_o);
        if (cp->parsed()) return cmd_compare(cmp_o, cmp_reports);
        if (st->parsed()) return cmd_selftest(self_o);
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitConfig;
}
