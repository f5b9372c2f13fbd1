#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aj/jammers.hpp"
#include "aj/neural.hpp"
#include "aj/sensing.hpp"
#include "aj/spectrum.hpp"

namespace aj {

// One slot as seen by one user: its own channel plus the sensed occupancy
// (jammers' union, and other users' channels in interference mode; the sensor
// cannot tell the two apart).
struct Sc2Row {
    int own_channel = 0;
    OccupancyVector occupied;
};

struct Sc2Dataset {
    int num_channels = 20;
    bool interference = false;
    std::string preset_name;
    std::vector<std::vector<Sc2Row>> per_user; // one trace per user
};

struct Sc2Config {
    JammingPreset preset;
    int num_users = 1;
    bool interference = false;
    int window_a = 20;
    int dwell_length = 5;
    NetworkConfig net;     // num_channels = 20 by default for SC2
    FadingModel fading;
    SensingConfig sensing;
};

// Random-channel users against the preset's four jammers; each user records
// its own sensed trace. Targets are implicit: the occupancy embedded in row
// t+1 is the prediction target of row t.
Sc2Dataset generate_sc2_dataset(const Sc2Config& cfg, int slots, std::uint64_t seed);

// 2L-bit input encoding of one row.
Vec sc2_encode(const Sc2Row& row, int num_channels);

// Length-a training windows for one user's trace, stride apart; the window's
// step-t target is the occupancy bits of row t+1 (the trace's last row is
// target-only).
std::vector<Sample> sc2_windows(const std::vector<Sc2Row>& rows, int num_channels,
                                int window_len, int stride);

// Per-user CSV: 2L input bits then L target bits, comma separated.
void write_sc2_csv(const std::string& path, const Sc2Dataset& ds, int user);
std::vector<Sc2Row> read_sc2_csv(const std::string& path, int num_channels);

struct OccupancyForecast {
    Vec probabilities;        // L sigmoid outputs
    OccupancyVector decision; // thresholded at 0.5
};

// Sigmoid head output of the final step over the last a rows.
OccupancyForecast forecast(const Model& model, const std::vector<Vec>& window);

// Each user takes the argmax-gain channel among channels its forecast marks
// free; users decide independently (collisions possible in interference mode).
// A user whose forecast marks everything busy falls back to the global argmax.
Allocation allocate(const std::vector<OccupancyForecast>& forecasts,
                    const std::vector<GainVector>& gains);

struct Sc2SlotTrace {
    int slot = 0;
    std::vector<int> channels;
    std::vector<bool> success;
    std::vector<double> rate;
};

struct Sc2EpisodeResult {
    std::vector<Sc2SlotTrace> slots;
    // Per jammer of the preset (sweeping, reactive, random, combat): fraction
    // of slots in which some user transmitted on a channel that jammer held.
    std::vector<double> jammer_success;
};

// Online evaluation with one trained model per user. Slots before a full
// window exists use random selection.
Sc2EpisodeResult run_sc2_episode(const std::vector<Model>& models, const Sc2Config& cfg,
                                 int slots, std::uint64_t seed);

} // namespace aj
