#pragma once

#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "aj/rng.hpp"

namespace aj {

struct NetworkConfig {
    int num_channels = 12;   // L
    int num_users = 1;       // N
    int num_jammers = 1;     // J
    double user_power = 1.0; // per user, uniform unless overridden
    double noise_power = 0.1;

    void validate() const {
        if (num_channels < 1 || num_users < 1 || num_jammers < 0)
            throw std::invalid_argument("network config: counts out of range");
        if (num_users > num_channels)
            throw std::invalid_argument("network config: more users than channels");
        if (user_power <= 0.0 || noise_power <= 0.0)
            throw std::invalid_argument("network config: powers must be positive");
    }

    double power_ratio() const { return user_power / noise_power; }
};

struct FadingModel {
    double shape_m = 1.0;    // m = 1 is Rayleigh power fading
    double mean_power = 1.0; // lambda

    FadingModel() = default;
    FadingModel(double m, double lambda) : shape_m(m), mean_power(lambda) {
        if (m < 0.5 || lambda <= 0.0)
            throw std::invalid_argument("fading: need m >= 0.5 and lambda > 0");
    }
};

using GainVector = std::vector<double>;   // |h|^2 per channel
using OccupancyVector = std::vector<int>; // 0/1 per channel

struct Allocation {
    std::vector<int> channels; // one entry per user
};

struct JammedSet {
    std::vector<std::vector<int>> per_jammer;
    std::set<int> all; // union

    bool contains(int channel) const { return all.count(channel) > 0; }

    OccupancyVector occupancy(int num_channels) const {
        OccupancyVector v(num_channels, 0);
        for (int c : all) v[c] = 1;
        return v;
    }
};

struct SlotRecord {
    int slot = 0;
    Allocation allocation;
    JammedSet jammed;
    OccupancyVector sensed;
    std::vector<bool> success;
    std::vector<double> rate;
    double sum_rate = 0.0;
};

// L i.i.d. Gamma(m, lambda/m) channel power gains.
GainVector sample_gains(const FadingModel& fading, int num_channels, Rng& rng);

// True iff the channel is free of jamming and, in interference mode, free of
// collisions with other users.
bool success_indicator(int user_channel, const JammedSet& jammed,
                       const std::vector<int>& other_channels, bool interference_mode);

// Instantaneous network sum rate, Shannon rate per successful user, 0 otherwise.
double sum_rate(const Allocation& alloc, const std::vector<GainVector>& gains,
                const JammedSet& jammed, const NetworkConfig& cfg,
                bool interference_mode = false);

// One slot of the generic engine: the caller supplies the users' channel
// choices and the slot's jammed set; this fills in success flags and rates.
SlotRecord score_slot(int slot, const Allocation& alloc,
                      const std::vector<GainVector>& gains, const JammedSet& jammed,
                      const NetworkConfig& cfg, bool interference_mode);

} // namespace aj
