#include "aj/sensing.hpp"

#include "aj/special.hpp"

namespace aj {

double q_function(double x) {
    return gauss_q(x);
}

double p_false_alarm(const SensingConfig& cfg) {
    cfg.validate();
    return q_function(cfg.threshold_ratio);
}

double p_miss_detection(const SensingConfig& cfg) {
    cfg.validate();
    return q_function(cfg.amplitude_ratio() - cfg.threshold_ratio);
}

OccupancyVector sense(const OccupancyVector& true_occupied, const SensingConfig& cfg,
                      Rng& rng) {
    if (cfg.ideal) return true_occupied;
    const double pmd = p_miss_detection(cfg);
    const double pfa = p_false_alarm(cfg);
    OccupancyVector out(true_occupied.size(), 0);
    for (std::size_t i = 0; i < true_occupied.size(); ++i) {
        const double u = rng.uniform();
        out[i] = true_occupied[i] ? (u >= pmd ? 1 : 0) : (u < pfa ? 1 : 0);
    }
    return out;
}

} // namespace aj
