#include "aj/jammers.hpp"

#include <stdexcept>

namespace aj {

std::string to_string(JammerKind kind) {
    switch (kind) {
        case JammerKind::random: return "random";
        case JammerKind::sweeping: return "sweeping";
        case JammerKind::reactive: return "reactive";
        case JammerKind::combat: return "combat";
    }
    return "?";
}

JammerKind jammer_kind_from_string(const std::string& name) {
    if (name == "random") return JammerKind::random;
    if (name == "sweeping") return JammerKind::sweeping;
    if (name == "reactive") return JammerKind::reactive;
    if (name == "combat") return JammerKind::combat;
    throw std::invalid_argument("unknown jammer kind: " + name);
}

JammerState JammerState::make(JammerKind kind, int width, int num_channels,
                              int sweep_start, int dwell_length) {
    if (kind == JammerKind::reactive) width = 1; // fixed at one channel
    if (width < 1 || width > num_channels)
        throw std::invalid_argument("jammer width out of range");
    if (sweep_start < 0 || sweep_start >= num_channels)
        throw std::invalid_argument("sweep position out of range");
    if (dwell_length < 1) throw std::invalid_argument("dwell length must be >= 1");
    JammerState st;
    st.kind = kind;
    st.width = width;
    st.sweep_position = sweep_start;
    st.dwell_length = dwell_length;
    st.dwell_remaining = 0;
    return st;
}

std::vector<int> random_step(JammerState& st, int num_channels, Rng& rng) {
    return rng.sample_without_replacement(num_channels, st.width);
}

std::vector<int> sweeping_step(JammerState& st, int num_channels) {
    std::vector<int> block(st.width);
    for (int i = 0; i < st.width; ++i)
        block[i] = (st.sweep_position + i) % num_channels;
    st.sweep_position = (st.sweep_position + st.width) % num_channels;
    return block;
}

std::vector<int> reactive_step(JammerState& st, const std::vector<int>& observed_active,
                               Rng& rng) {
    (void)st;
    if (observed_active.empty()) return {};
    if (observed_active.size() == 1) return {observed_active.front()};
    const auto pick = rng.uniform_int(observed_active.size());
    return {observed_active[pick]};
}

std::vector<int> combat_step(JammerState& st, int num_channels, Rng& rng) {
    if (st.dwell_remaining > 0 && !st.held.empty()) {
        --st.dwell_remaining;
        return st.held;
    }
    st.held = rng.sample_without_replacement(num_channels, st.width);
    st.dwell_remaining = st.dwell_length - 1;
    return st.held;
}

std::vector<int> jammer_step(JammerState& st, int num_channels,
                             const std::vector<int>& observed_active, Rng& rng) {
    switch (st.kind) {
        case JammerKind::random: return random_step(st, num_channels, rng);
        case JammerKind::sweeping: return sweeping_step(st, num_channels);
        case JammerKind::reactive: return reactive_step(st, observed_active, rng);
        case JammerKind::combat: return combat_step(st, num_channels, rng);
    }
    return {};
}

JammedSet compose(std::vector<JammerState>& states, const std::vector<int>& observed_active,
                  int num_channels, Rng& rng) {
    if (states.empty()) throw std::invalid_argument("compose: no jammers");
    JammedSet out;
    out.per_jammer.reserve(states.size());
    for (auto& st : states) {
        auto chans = jammer_step(st, num_channels, observed_active, rng);
        for (int c : chans) out.all.insert(c);
        out.per_jammer.push_back(std::move(chans));
    }
    return out;
}

JammingPreset jamming_preset(const std::string& name) {
    // Per-jammer widths by jamming ratio: sweeping, reactive, random, combat.
    if (name == "jr30") return {"jr30", 2, 1, 1, 2};
    if (name == "jr40") return {"jr40", 3, 1, 2, 2};
    if (name == "jr50") return {"jr50", 4, 1, 2, 3};
    if (name == "jr60") return {"jr60", 4, 1, 3, 4};
    if (name == "jr70") return {"jr70", 5, 1, 3, 5};
    throw std::invalid_argument("unknown jamming preset: " + name);
}

std::vector<std::string> jamming_preset_names() {
    return {"jr30", "jr40", "jr50", "jr60", "jr70"};
}

std::vector<JammerState> make_preset_jammers(const JammingPreset& preset,
                                             int num_channels, int dwell_length) {
    // Zero-width entries are simply absent (supports ablation presets with a
    // subset of the four policies).
    const std::pair<JammerKind, int> entries[] = {{JammerKind::sweeping, preset.sweeping},
                                                  {JammerKind::reactive, preset.reactive},
                                                  {JammerKind::random, preset.random},
                                                  {JammerKind::combat, preset.combat}};
    std::vector<JammerState> states;
    for (const auto& [kind, width] : entries)
        if (width > 0)
            states.push_back(JammerState::make(kind, width, num_channels, 0, dwell_length));
    return states;
}

} // namespace aj
