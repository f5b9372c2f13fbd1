#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "aj/jammers.hpp"
#include "aj/neural.hpp"
#include "aj/sensing.hpp"
#include "aj/spectrum.hpp"

namespace aj {

// One slot of the single-jammer dataset: user one-hot, jammer occupancy bits,
// and the (policy, width) class label.
struct Sc1Row {
    int user_channel = 0;
    OccupancyVector jammer_bits;
    int class_label = 0;
};

// Bijection between class indices and (kind, width) pairs.
class ClassTaxonomy {
public:
    explicit ClassTaxonomy(std::vector<std::pair<JammerKind, int>> classes);

    // random x{1..4}, sweeping x{1..4}, combat x{1..4}, reactive x{1}.
    static ClassTaxonomy default13();

    int size() const { return static_cast<int>(classes_.size()); }
    const std::pair<JammerKind, int>& at(int idx) const { return classes_.at(idx); }
    int index_of(JammerKind kind, int width) const;

private:
    std::vector<std::pair<JammerKind, int>> classes_;
};

struct Sc1Dataset {
    int num_channels = 12;
    int slots_per_episode = 0;
    std::vector<std::vector<Sc1Row>> episodes; // label is constant per episode
};

// Simulated user/jammer interaction per class: uniformly random user channels,
// jammer responses recorded through the sensing front end.
Sc1Dataset generate_sc1_dataset(int slots_per_episode, int episodes_per_class,
                                const ClassTaxonomy& taxonomy, int num_channels,
                                const SensingConfig& sensing_cfg, int dwell_length,
                                std::uint64_t seed);

// 2L-bit network input for one row.
Vec sc1_encode(const Sc1Row& row);

// Sliding windows of length a (stride slots apart) as training samples.
std::vector<Sample> sc1_windows(const Sc1Dataset& ds, int window_len, int stride);

// CSV round trip: one row per slot, 2L+1 comma-separated integer fields, with
// a commented header carrying the grid dimensions.
void write_sc1_csv(const std::string& path, const Sc1Dataset& ds);
Sc1Dataset read_sc1_csv(const std::string& path);

struct Classification {
    int class_index = 0;
    Vec probs;
};

// Argmax of the final step's softmax over the last (up to b) encoded rows.
// Ties break toward the lowest index.
Classification classify(const Model& model, const std::vector<Vec>& window);

enum class SelectionMode { max_gain, random };

struct Countermeasure {
    std::vector<int> predicted_jammed; // expected jammed channels next slot
    SelectionMode mode = SelectionMode::max_gain;
};

// Predicts the jammer's next channels from its detected class: sweeping shifts
// the last observed block by its width, combat repeats the last observed set,
// reactive jams the user's own current channel, random predicts nothing.
Countermeasure counter(const ClassTaxonomy& taxonomy, int class_index,
                       const std::vector<int>& last_observed_jammed,
                       int current_user_channel, int num_channels,
                       SelectionMode random_mode);

// max_gain: argmax gain over channels not predicted jammed (global argmax when
// every channel is predicted jammed); random: uniform over all channels.
int select_channel(const std::vector<int>& predicted_jammed, const GainVector& gains,
                   SelectionMode mode, int num_channels, Rng& rng);

struct Sc1SlotTrace {
    int slot = 0;
    int user_channel = 0;
    int detected_class = -1; // -1 before the first classification
    bool success = false;
    double rate = 0.0;
};

struct Sc1EpisodeConfig {
    int slots = 100;
    int window_b = 20;
    int dwell_length = 5;
    SelectionMode random_mode = SelectionMode::random;
    NetworkConfig net;
    FadingModel fading;
    SensingConfig sensing;
};

// Online interaction: rolling classification each slot (partial windows
// allowed before b rows exist), countermeasure-driven selection from slot 1.
std::vector<Sc1SlotTrace> run_sc1_episode(const Model& model, const ClassTaxonomy& taxonomy,
                                          JammerKind kind, int width,
                                          const Sc1EpisodeConfig& cfg, std::uint64_t seed);

} // namespace aj
