#pragma once

#include "aj/config.hpp"
#include "aj/neural.hpp"
#include "aj/report.hpp"
#include "aj/sc1.hpp"
#include "aj/sc2.hpp"

namespace aj {

// Offline training from the config's dataset blocks; deterministic in
// (config, train.seed).
Model train_sc1_model(const ExperimentConfig& cfg, TrainResult* curve = nullptr);
std::vector<Model> train_sc2_models(const ExperimentConfig& cfg,
                                    std::vector<TrainResult>* curves = nullptr);

// Same training on an already-materialized dataset (e.g. read back from the
// gen-data CSV files).
Model train_sc1_model_on(const Sc1Dataset& ds, const ExperimentConfig& cfg,
                         TrainResult* curve = nullptr);
std::vector<Model> train_sc2_models_on(const Sc2Dataset& ds, const ExperimentConfig& cfg,
                                       std::vector<TrainResult>* curves = nullptr);

// Evaluation over eval.repetitions seeded episodes; traces averaged per slot.
RunReport eval_sc1(const ExperimentConfig& cfg, const Model& model, std::uint64_t seed);
RunReport eval_sc2(const ExperimentConfig& cfg, const std::vector<Model>& models,
                   std::uint64_t seed);

// Online DQL baseline in the same trace schema, matched slot budget.
RunReport eval_sc1_dql(const ExperimentConfig& cfg, std::uint64_t seed);
RunReport eval_sc2_dql(const ExperimentConfig& cfg, std::uint64_t seed);

// Helpers shared by the CLI and the test suites.
Sc1EpisodeConfig sc1_episode_config(const ExperimentConfig& cfg);
Sc2Config sc2_config(const ExperimentConfig& cfg);

} // namespace aj
