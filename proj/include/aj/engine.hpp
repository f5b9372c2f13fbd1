#pragma once

#include <functional>

#include "aj/jammers.hpp"
#include "aj/sensing.hpp"
#include "aj/spectrum.hpp"

namespace aj {

// Users' channel choices for one slot, given the slot's channel gains.
using UserPolicy = std::function<Allocation(int slot, const std::vector<GainVector>&)>;

// Advances every jammer one slot, applies the users' allocation, computes
// sensing, success flags, and rates. previous_active carries the user-active
// channels the reactive jammer observed in the preceding slot.
SlotRecord step_slot(const UserPolicy& policy, std::vector<JammerState>& jammers,
                     const NetworkConfig& net, const FadingModel& fading,
                     const SensingConfig& sensing_cfg, bool interference_mode,
                     int slot, std::vector<int>& previous_active, Rng& rng);

} // namespace aj
