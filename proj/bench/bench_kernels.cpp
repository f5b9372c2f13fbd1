// Timing harness for the two parallel kernels against their serial reference
// implementations: the Monte-Carlo rate oracle and batched sequence gradients.
// Both pairs must agree bitwise; the benchmark asserts that before timing.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "aj/analytics.hpp"
#include "aj/neural.hpp"
#include "aj/rng.hpp"

using namespace aj;

namespace {

double time_once(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double best_of(int reps, const std::function<void()>& fn) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) best = std::min(best, time_once(fn));
    return best;
}

void report(const char* name, double serial_s, double parallel_s) {
    std::printf("%-24s serial %8.4f s   parallel %8.4f s   speedup %5.2fx\n", name,
                serial_s, parallel_s, serial_s / parallel_s);
}

} // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    const std::uint64_t seed = 2024;

    // Monte-Carlo rate oracle.
    ErConfig ec;
    ec.num_channels = 20;
    ec.jammed_count = 6;
    ec.shape_m = 1.0;
    ec.power_ratio = 10.0;
    const std::int64_t trials = 2'000'000;
    const McEstimate a = mc_er_oracle_serial(ec, Selection::best_of_n, trials, seed);
    const McEstimate b = mc_er_oracle(ec, Selection::best_of_n, trials, seed);
    if (a.mean != b.mean || a.stderror != b.stderror) {
        std::fprintf(stderr, "mc oracle: parallel result differs from serial\n");
        return 1;
    }
    report("mc_rate_oracle",
           best_of(reps, [&] { mc_er_oracle_serial(ec, Selection::best_of_n, trials, seed); }),
           best_of(reps, [&] { mc_er_oracle(ec, Selection::best_of_n, trials, seed); }));

    // Batched sequence gradients.
    Rng rng(seed);
    Model model;
    model.loss = LossKind::cross_entropy;
    model.gru = GruParams::init(40, 64, rng);
    model.head = DenseHead::init(64, 13, Activation::softmax, rng);
    std::vector<Sample> batch(64);
    for (auto& s : batch) {
        s.inputs.resize(20);
        s.class_targets.resize(20);
        for (int t = 0; t < 20; ++t) {
            s.inputs[t] = Vec::Zero(40);
            s.inputs[t][rng.uniform_int(40)] = 1.0;
            s.class_targets[t] = rng.uniform_int(13);
        }
    }
    const Vec gs = bptt_serial(model, batch);
    const Vec gp = bptt(model, batch, nullptr, true);
    if (!(gs.array() == gp.array()).all()) {
        std::fprintf(stderr, "bptt: parallel gradient differs from serial\n");
        return 1;
    }
    report("batch_gradients",
           best_of(reps, [&] { bptt_serial(model, batch); }),
           best_of(reps, [&] { bptt(model, batch, nullptr, true); }));
    return 0;
}
