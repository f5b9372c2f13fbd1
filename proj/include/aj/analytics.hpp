#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace aj {

// Fading and power parameters feeding the ergodic-rate integrals.
struct ErConfig {
    int num_channels = 12;     // L
    int num_users = 1;         // N
    int jammed_count = 0;      // number of jammed channels around the user
    double shape_m = 1.0;      // Nakagami shape, >= 0.5
    double mean_power = 1.0;   // average channel power gain
    double power_ratio = 10.0; // user power over noise power
};

// Adaptive quadrature of f over [0, inf) after the substitution x = t/(1-t).
// Gauss-Kronrod 7-15 with recursive bisection on [0, 1).
double integrate_halfline(const std::function<double(double)>& f, double abs_tol);

// Ergodic rate when the best of the n = L - jammed_count free channels is
// selected each slot. Returns 0 when no channel is free.
double er_max_selection(const ErConfig& cfg);

// Interference variant: the free-channel count shrinks to L - N - jammed + 1.
double er_interference(const ErConfig& cfg);

// Ergodic rate under uniformly random channel selection.
double er_random(const ErConfig& cfg);

// Closed form of er_random for m = 1 (Rayleigh): e^{1/rho} E1(1/rho) / ln 2.
double er_random_rayleigh(double power_ratio);

enum class Selection { best_of_n, random };

struct McEstimate {
    double mean = 0.0;
    double stderror = 0.0;
};

// Monte-Carlo ergodic-rate oracle: samples Gamma channel gains, applies the
// selection rule over n = L - jammed_count candidates, averages log2(1+rho x).
// Results are identical for the serial and OpenMP paths (fixed chunk seeding).
McEstimate mc_er_oracle(const ErConfig& cfg, Selection sel, std::int64_t trials,
                        std::uint64_t seed, bool parallel = true);
McEstimate mc_er_oracle_serial(const ErConfig& cfg, Selection sel, std::int64_t trials,
                               std::uint64_t seed);

// Successful-transmission rate over a window of success flags.
// window <= 0 means the whole trace.
double str(const std::vector<bool>& successes, int window = 0);

// Cumulative STR trace: entry t is the success ratio over slots [0, t].
std::vector<double> str_cumulative(const std::vector<bool>& successes);

} // namespace aj
