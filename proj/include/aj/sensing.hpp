#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "aj/rng.hpp"
#include "aj/spectrum.hpp"

namespace aj {

// Amplitude-threshold sensing parameters. The jamming amplitude at the sensor
// follows from the JNR as Upsilon/delta = 10^(JNR_dB / 20).
struct SensingConfig {
    double threshold_ratio = 2.8117; // Gamma / delta
    double jnr_db = 15.0;
    bool ideal = false; // bypass the threshold model entirely

    void validate() const {
        if (threshold_ratio <= 0.0)
            throw std::invalid_argument("sensing: threshold ratio must be positive");
    }

    double amplitude_ratio() const { return std::pow(10.0, jnr_db / 20.0); }
};

// Gaussian tail probability, absolute error well under 1e-7.
double q_function(double x);

// P_fa = Q(Gamma / delta): a free channel's noise amplitude exceeds the threshold.
double p_false_alarm(const SensingConfig& cfg);

// P_md = Q((Upsilon - Gamma) / delta): a jammed channel stays under the threshold.
double p_miss_detection(const SensingConfig& cfg);

// Thresholded per-channel sensing of the true occupancy; channels independent.
OccupancyVector sense(const OccupancyVector& true_occupied, const SensingConfig& cfg,
                      Rng& rng);

} // namespace aj
