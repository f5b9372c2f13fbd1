#pragma once

#include <string>
#include <vector>

#include "aj/rng.hpp"
#include "aj/spectrum.hpp"

namespace aj {

enum class JammerKind { random, sweeping, reactive, combat };

std::string to_string(JammerKind kind);
JammerKind jammer_kind_from_string(const std::string& name);

// Per-jammer persistent state. Only the fields of the active kind are used.
struct JammerState {
    JammerKind kind = JammerKind::random;
    int width = 1;           // channels jammed per slot; reactive is pinned to 1
    int sweep_position = 0;  // sweeping only
    int dwell_length = 5;    // combat only, tau
    int dwell_remaining = 0; // combat only
    std::vector<int> held;   // combat: channels held through the dwell

    static JammerState make(JammerKind kind, int width, int num_channels,
                            int sweep_start = 0, int dwell_length = 5);
};

// One slot of each policy. All return the jammed channel set for this slot.
std::vector<int> random_step(JammerState& st, int num_channels, Rng& rng);
std::vector<int> sweeping_step(JammerState& st, int num_channels);
std::vector<int> reactive_step(JammerState& st, const std::vector<int>& observed_active,
                               Rng& rng);
std::vector<int> combat_step(JammerState& st, int num_channels, Rng& rng);

// Steps one jammer of whatever kind.
std::vector<int> jammer_step(JammerState& st, int num_channels,
                             const std::vector<int>& observed_active, Rng& rng);

// Steps every jammer and returns per-jammer sets plus their union.
JammedSet compose(std::vector<JammerState>& states, const std::vector<int>& observed_active,
                  int num_channels, Rng& rng);

// Per-jammer widths for one jamming-ratio preset row of the multi-jammer
// setup: sweeping, reactive, random, combat.
struct JammingPreset {
    std::string name; // "jr30" .. "jr70"
    int sweeping = 0;
    int reactive = 0;
    int random = 0;
    int combat = 0;

    int total() const { return sweeping + reactive + random + combat; }
};

JammingPreset jamming_preset(const std::string& name);
std::vector<std::string> jamming_preset_names();

// Builds the four jammers of a preset (sweeping, reactive, random, combat).
std::vector<JammerState> make_preset_jammers(const JammingPreset& preset,
                                             int num_channels, int dwell_length = 5);

} // namespace aj
