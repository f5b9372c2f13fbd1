#pragma once

#include <cstdint>
#include <vector>

namespace aj {

// Deterministic random source. All distributions are implemented here on top
// of the raw 64-bit stream so that sequences are bit-identical across
// platforms and standard-library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    // Uniform on (0, 1); never returns 0 so logs are safe.
    double uniform();

    // Uniform integer in [0, n), rejection-sampled to avoid modulo bias.
    std::uint64_t uniform_int(std::uint64_t n);

    // Standard normal via Box-Muller (two uniforms per draw, no caching).
    double normal();

    // Gamma(shape, scale) via Marsaglia-Tsang squeeze; shape < 1 handled by
    // shape augmentation. Valid for any shape > 0.
    double gamma(double shape, double scale);

    // k distinct values from [0, n), partial Fisher-Yates, sorted output.
    std::vector<int> sample_without_replacement(int n, int k);

    // In-place Fisher-Yates shuffle of an index vector.
    void shuffle(std::vector<int>& v);

    // Derive an independent stream (used for per-chunk / per-episode seeding).
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

private:
    // splitmix64-seeded xoshiro256** state.
    std::uint64_t s_[4];
};

} // namespace aj
