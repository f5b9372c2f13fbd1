#pragma once

#include <cstdint>
#include <vector>

#include "aj/jammers.hpp"
#include "aj/neural.hpp"
#include "aj/sc1.hpp"
#include "aj/sc2.hpp"

namespace aj {

// Fixed baseline contract: occupancy-history state, success-indicator reward,
// two ReLU hidden layers, replay with a periodically refreshed target copy,
// linear epsilon decay over the first half of the interaction budget.
struct DqlConfig {
    int history = 5;           // sensed occupancy vectors per state
    int hidden = 128;          // units in each of the two hidden layers
    double discount = 0.9;     // gamma
    double eps_start = 1.0;
    double eps_end = 0.05;
    int target_refresh = 100;  // learn steps between target copies
    int buffer_capacity = 10000;
    int batch_size = 32;
    AdamConfig adam{1e-3, 0.9, 0.999, 1e-8};
};

struct Transition {
    Vec state;
    int action = 0;
    double reward = 0.0;
    Vec next_state;
};

class DqlAgent {
public:
    DqlAgent(int num_channels, const DqlConfig& cfg, std::uint64_t seed);

    // Epsilon-greedy over the Q network; argmax ties break to the lowest index.
    int act(const Vec& state, double epsilon, Rng& rng) const;

    void remember(Transition tr);

    // One TD(0) gradient step on a replay minibatch; no-op while the buffer
    // holds fewer than batch_size transitions.
    void learn(Rng& rng);

    const Mlp& q_network() const { return q_; }
    int state_dim() const { return state_dim_; }
    const DqlConfig& config() const { return cfg_; }

private:
    DqlConfig cfg_;
    int num_channels_;
    int state_dim_;
    Mlp q_, target_;
    AdamState adam_;
    std::vector<Transition> buffer_;
    std::size_t buffer_next_ = 0;
    long learn_steps_ = 0;
};

// Online DQL user against a single jammer; same trace schema as the proposed
// method so curves can be overlaid. Epsilon decays over the first half of the
// episode; the interaction budget equals the slot count.
std::vector<Sc1SlotTrace> run_dql_sc1(JammerKind kind, int width,
                                      const Sc1EpisodeConfig& cfg, const DqlConfig& dql,
                                      std::uint64_t seed);

// Online DQL users (one agent each) against a multi-jammer preset.
Sc2EpisodeResult run_dql_sc2(const Sc2Config& cfg, int slots, const DqlConfig& dql,
                             std::uint64_t seed);

} // namespace aj
