#include "aj/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "aj/rng.hpp"
#include "aj/special.hpp"

namespace aj {

namespace {

// Gauss-Kronrod 7-15 nodes/weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct GkResult {
    double value;
    double error;
};

GkResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv1[7], fv2[7];
    const double fc = f(c);
    double result_g = fc * kWg[3];
    double result_k = fc * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const double x = h * kXgk[j];
        fv1[j] = f(c - x);
        fv2[j] = f(c + x);
        result_k += kWgk[j] * (fv1[j] + fv2[j]);
        if (j % 2 == 1) result_g += kWg[j / 2] * (fv1[j] + fv2[j]);
    }
    result_g *= h;
    result_k *= h;
    return {result_k, std::fabs(result_k - result_g)};
}

double adaptive(const std::function<double(double)>& f, double a, double b,
                double tol, int depth) {
    const GkResult r = gk15(f, a, b);
    if (r.error <= tol || depth >= 50) {
        if (depth >= 50 && r.error > 1e3 * tol)
            throw std::runtime_error("quadrature failed to converge");
        return r.value;
    }
    const double c = 0.5 * (a + b);
    return adaptive(f, a, c, 0.5 * tol, depth + 1) +
           adaptive(f, c, b, 0.5 * tol, depth + 1);
}

} // namespace

double integrate_halfline(const std::function<double(double)>& f, double abs_tol) {
    // f is given on x in [0, inf); map to t in [0, 1).
    auto g = [&](double t) {
        if (t >= 1.0) return 0.0;
        const double x = t / (1.0 - t);
        return f(x) / ((1.0 - t) * (1.0 - t));
    };
    return adaptive(g, 0.0, 1.0, abs_tol, 0);
}

double er_max_selection(const ErConfig& cfg) {
    const int n = cfg.num_channels - cfg.jammed_count;
    if (n < 0) throw std::invalid_argument("jammed_count exceeds channel count");
    if (n == 0) return 0.0;
    const double m = cfg.shape_m;
    const double lam = cfg.mean_power;
    const double rho = cfg.power_ratio;
    auto f = [&](double x) {
        if (x <= 0.0) return 1.0;
        return 1.0 - std::pow(gamma_p(m, m * x / lam), n);
    };
    auto integrand = [&](double x) { return f(x) / (1.0 + rho * x); };
    return rho / std::log(2.0) * integrate_halfline(integrand, 1e-8);
}

double er_interference(const ErConfig& cfg) {
    const int n = cfg.num_channels - cfg.num_users - cfg.jammed_count + 1;
    if (n <= 0) return 0.0;
    ErConfig adj = cfg;
    adj.num_users = 1;
    adj.jammed_count = cfg.num_channels - n;
    return er_max_selection(adj);
}

double er_random(const ErConfig& cfg) {
    const double m = cfg.shape_m;
    const double lam = cfg.mean_power;
    const double rho = cfg.power_ratio;
    auto integrand = [&](double x) {
        return gamma_q(m, m * x / lam) / (1.0 + rho * x);
    };
    return rho / std::log(2.0) * integrate_halfline(integrand, 1e-8);
}

double er_random_rayleigh(double power_ratio) {
    const double inv = 1.0 / power_ratio;
    return std::exp(inv) * expint_e1(inv) / std::log(2.0);
}

namespace {

constexpr std::int64_t kChunk = 1 << 14;

// One fixed-size chunk of trials with its own derived stream, so the total is
// independent of thread count and of serial/parallel execution.
void mc_chunk(const ErConfig& cfg, Selection sel, std::int64_t count,
              std::uint64_t chunk_seed, double& sum, double& sumsq) {
    Rng rng(chunk_seed);
    const int n = sel == Selection::best_of_n
                      ? cfg.num_channels - cfg.jammed_count
                      : 1;
    const double scale = cfg.mean_power / cfg.shape_m;
    double s = 0.0, s2 = 0.0;
    for (std::int64_t i = 0; i < count; ++i) {
        double best = 0.0;
        for (int j = 0; j < n; ++j) {
            const double g = rng.gamma(cfg.shape_m, scale);
            if (g > best) best = g;
        }
        const double rate = std::log2(1.0 + cfg.power_ratio * best);
        s += rate;
        s2 += rate * rate;
    }
    sum = s;
    sumsq = s2;
}

} // namespace

McEstimate mc_er_oracle_serial(const ErConfig& cfg, Selection sel,
                               std::int64_t trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    const std::int64_t nchunks = (trials + kChunk - 1) / kChunk;
    double sum = 0.0, sumsq = 0.0;
    for (std::int64_t c = 0; c < nchunks; ++c) {
        const std::int64_t count = std::min(kChunk, trials - c * kChunk);
        double s, s2;
        mc_chunk(cfg, sel, count, Rng::derive(seed, static_cast<std::uint64_t>(c)), s, s2);
        sum += s;
        sumsq += s2;
    }
    const double mean = sum / static_cast<double>(trials);
    const double var = std::max(0.0, sumsq / static_cast<double>(trials) - mean * mean);
    return {mean, std::sqrt(var / static_cast<double>(trials))};
}

McEstimate mc_er_oracle(const ErConfig& cfg, Selection sel, std::int64_t trials,
                        std::uint64_t seed, bool parallel) {
    if (!parallel) return mc_er_oracle_serial(cfg, sel, trials, seed);
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    const std::int64_t nchunks = (trials + kChunk - 1) / kChunk;
    std::vector<double> sums(nchunks), sumsqs(nchunks);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < nchunks; ++c) {
        const std::int64_t count = std::min(kChunk, trials - c * kChunk);
        mc_chunk(cfg, sel, count, Rng::derive(seed, static_cast<std::uint64_t>(c)),
                 sums[c], sumsqs[c]);
    }
    // Fixed-order reduction keeps the result equal to the serial path.
    double sum = 0.0, sumsq = 0.0;
    for (std::int64_t c = 0; c < nchunks; ++c) {
        sum += sums[c];
        sumsq += sumsqs[c];
    }
    const double mean = sum / static_cast<double>(trials);
    const double var = std::max(0.0, sumsq / static_cast<double>(trials) - mean * mean);
    return {mean, std::sqrt(var / static_cast<double>(trials))};
}

double str(const std::vector<bool>& successes, int window) {
    if (successes.empty()) throw std::invalid_argument("empty success trace");
    const int n = static_cast<int>(successes.size());
    const int start = window > 0 && window < n ? n - window : 0;
    int ok = 0;
    for (int i = start; i < n; ++i) ok += successes[i] ? 1 : 0;
    return static_cast<double>(ok) / static_cast<double>(n - start);
}

std::vector<double> str_cumulative(const std::vector<bool>& successes) {
    std::vector<double> out(successes.size());
    int ok = 0;
    for (std::size_t i = 0; i < successes.size(); ++i) {
        ok += successes[i] ? 1 : 0;
        out[i] = static_cast<double>(ok) / static_cast<double>(i + 1);
    }
    return out;
}

} // namespace aj
