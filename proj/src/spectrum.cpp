#include "aj/spectrum.hpp"

#include <cmath>

#include "aj/engine.hpp"

namespace aj {

GainVector sample_gains(const FadingModel& fading, int num_channels, Rng& rng) {
    if (num_channels < 1) throw std::invalid_argument("need at least one channel");
    GainVector gains(num_channels);
    const double scale = fading.mean_power / fading.shape_m;
    for (auto& g : gains) g = rng.gamma(fading.shape_m, scale);
    return gains;
}

bool success_indicator(int user_channel, const JammedSet& jammed,
                       const std::vector<int>& other_channels, bool interference_mode) {
    if (jammed.contains(user_channel)) return false;
    if (interference_mode) {
        for (int c : other_channels)
            if (c == user_channel) return false;
    }
    return true;
}

double sum_rate(const Allocation& alloc, const std::vector<GainVector>& gains,
                const JammedSet& jammed, const NetworkConfig& cfg,
                bool interference_mode) {
    double total = 0.0;
    const double rho = cfg.power_ratio();
    for (std::size_t k = 0; k < alloc.channels.size(); ++k) {
        const int c = alloc.channels[k];
        std::vector<int> others;
        for (std::size_t j = 0; j < alloc.channels.size(); ++j)
            if (j != k) others.push_back(alloc.channels[j]);
        if (success_indicator(c, jammed, others, interference_mode))
            total += std::log2(1.0 + rho * gains[k][c]);
    }
    return total;
}

SlotRecord score_slot(int slot, const Allocation& alloc,
                      const std::vector<GainVector>& gains, const JammedSet& jammed,
                      const NetworkConfig& cfg, bool interference_mode) {
    SlotRecord rec;
    rec.slot = slot;
    rec.allocation = alloc;
    rec.jammed = jammed;
    const double rho = cfg.power_ratio();
    const std::size_t n = alloc.channels.size();
    rec.success.resize(n);
    rec.rate.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const int c = alloc.channels[k];
        std::vector<int> others;
        for (std::size_t j = 0; j < n; ++j)
            if (j != k) others.push_back(alloc.channels[j]);
        rec.success[k] = success_indicator(c, jammed, others, interference_mode);
        rec.rate[k] = rec.success[k] ? std::log2(1.0 + rho * gains[k][c]) : 0.0;
        rec.sum_rate += rec.rate[k];
    }
    return rec;
}

SlotRecord step_slot(const UserPolicy& policy, std::vector<JammerState>& jammers,
                     const NetworkConfig& net, const FadingModel& fading,
                     const SensingConfig& sensing_cfg, bool interference_mode,
                     int slot, std::vector<int>& previous_active, Rng& rng) {
    net.validate();
    std::vector<GainVector> gains(net.num_users);
    for (auto& g : gains) g = sample_gains(fading, net.num_channels, rng);

    Allocation alloc = policy(slot, gains);

    JammedSet jammed;
    if (!jammers.empty())
        jammed = compose(jammers, previous_active, net.num_channels, rng);

    SlotRecord rec = score_slot(slot, alloc, gains, jammed, net, interference_mode);
    rec.sensed = sense(jammed.occupancy(net.num_channels), sensing_cfg, rng);

    previous_active = alloc.channels;
    return rec;
}

} // namespace aj
