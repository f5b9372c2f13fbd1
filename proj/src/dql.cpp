#include "aj/dql.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

namespace aj {

DqlAgent::DqlAgent(int num_channels, const DqlConfig& cfg, std::uint64_t seed)
    : cfg_(cfg), num_channels_(num_channels), state_dim_(cfg.history * num_channels) {
    Rng rng(Rng::derive(seed, 0xd91));
    q_ = Mlp::init({state_dim_, cfg.hidden, cfg.hidden, num_channels}, rng);
    target_ = q_;
    adam_ = AdamState::zeros(q_.param_count());
    buffer_.reserve(cfg.buffer_capacity);
}

int DqlAgent::act(const Vec& state, double epsilon, Rng& rng) const {
    if (state.size() != state_dim_)
        throw std::invalid_argument("dql act: state dimension mismatch");
    if (rng.uniform() < epsilon)
        return static_cast<int>(rng.uniform_int(num_channels_));
    const Vec q = q_.forward(state);
    int best = 0;
    for (int a = 1; a < q.size(); ++a)
        if (q(a) > q(best)) best = a;
    return best;
}

void DqlAgent::remember(Transition tr) {
    if (static_cast<int>(buffer_.size()) < cfg_.buffer_capacity) {
        buffer_.push_back(std::move(tr));
    } else {
        buffer_[buffer_next_] = std::move(tr);
        buffer_next_ = (buffer_next_ + 1) % buffer_.size();
    }
}

void DqlAgent::learn(Rng& rng) {
    if (static_cast<int>(buffer_.size()) < cfg_.batch_size) return;
    Vec grad = Vec::Zero(q_.param_count());
    const double inv = 1.0 / cfg_.batch_size;
    for (int i = 0; i < cfg_.batch_size; ++i) {
        const Transition& tr = buffer_[rng.uniform_int(buffer_.size())];
        const Vec qn = target_.forward(tr.next_state);
        const double td_target = tr.reward + cfg_.discount * qn.maxCoeff();
        grad += q_.backward(tr.state, {{tr.action, td_target}}) * inv;
    }
    Vec theta = q_.pack();
    adam_step(adam_, theta, grad, cfg_.adam);
    q_.unpack(theta);
    if (++learn_steps_ % cfg_.target_refresh == 0) target_ = q_;
}

namespace {

double eps_at(const DqlConfig& cfg, int slot, int total_slots) {
    const int half = std::max(1, total_slots / 2);
    if (slot >= half) return cfg.eps_end;
    const double f = static_cast<double>(slot) / half;
    return cfg.eps_start + f * (cfg.eps_end - cfg.eps_start);
}

Vec stack_history(const std::deque<OccupancyVector>& hist, int history, int L) {
    Vec state = Vec::Zero(history * L);
    // Most recent slot occupies the last block; missing past stays zero.
    const int have = static_cast<int>(hist.size());
    for (int i = 0; i < have; ++i) {
        const int block = history - have + i;
        for (int c = 0; c < L; ++c) state(block * L + c) = hist[i][c];
    }
    return state;
}

} // namespace

std::vector<Sc1SlotTrace> run_dql_sc1(JammerKind kind, int width,
                                      const Sc1EpisodeConfig& cfg, const DqlConfig& dql,
                                      std::uint64_t seed) {
    cfg.net.validate();
    const int L = cfg.net.num_channels;
    Rng rng(seed);
    DqlAgent agent(L, dql, Rng::derive(seed, 0x5c1));
    const int sweep_start = static_cast<int>(rng.uniform_int(L));
    JammerState jammer = JammerState::make(kind, width, L, sweep_start, cfg.dwell_length);

    std::deque<OccupancyVector> hist;
    std::vector<Sc1SlotTrace> trace;
    int prev_user = -1;

    for (int t = 0; t < cfg.slots; ++t) {
        const GainVector gains = sample_gains(cfg.fading, L, rng);
        const Vec state = stack_history(hist, dql.history, L);
        const int channel = agent.act(state, eps_at(dql, t, cfg.slots), rng);

        std::vector<int> prev_active = prev_user >= 0 ? std::vector<int>{prev_user}
                                                      : std::vector<int>{};
        const auto jammed = jammer_step(jammer, L, prev_active, rng);
        OccupancyVector occ(L, 0);
        for (int c : jammed) occ[c] = 1;
        const bool ok = !occ[channel];

        const OccupancyVector sensed = sense(occ, cfg.sensing, rng);
        hist.push_back(sensed);
        while (static_cast<int>(hist.size()) > dql.history) hist.pop_front();

        Transition tr;
        tr.state = state;
        tr.action = channel;
        tr.reward = ok ? 1.0 : 0.0;
        tr.next_state = stack_history(hist, dql.history, L);
        agent.remember(std::move(tr));
        agent.learn(rng);

        prev_user = channel;
        Sc1SlotTrace st;
        st.slot = t;
        st.user_channel = channel;
        st.success = ok;
        st.rate = ok ? std::log2(1.0 + cfg.net.power_ratio() * gains[channel]) : 0.0;
        trace.push_back(st);
    }
    return trace;
}

Sc2EpisodeResult run_dql_sc2(const Sc2Config& cfg, int slots, const DqlConfig& dql,
                             std::uint64_t seed) {
    cfg.net.validate();
    const int L = cfg.net.num_channels;
    const int N = cfg.num_users;
    Rng rng(seed);
    std::vector<JammerState> jammers = make_preset_jammers(cfg.preset, L, cfg.dwell_length);
    std::vector<DqlAgent> agents;
    agents.reserve(N);
    for (int u = 0; u < N; ++u)
        agents.emplace_back(L, dql, Rng::derive(seed, 0x5c2000 + u));

    std::vector<std::deque<OccupancyVector>> hists(N);
    std::vector<int> prev_active;

    Sc2EpisodeResult result;
    result.jammer_success.assign(jammers.size(), 0.0);

    for (int t = 0; t < slots; ++t) {
        std::vector<GainVector> gains(N);
        for (auto& g : gains) g = sample_gains(cfg.fading, L, rng);

        std::vector<Vec> states(N);
        std::vector<int> channels(N);
        const double eps = eps_at(dql, t, slots);
        for (int u = 0; u < N; ++u) {
            states[u] = stack_history(hists[u], dql.history, L);
            channels[u] = agents[u].act(states[u], eps, rng);
        }

        const JammedSet jammed = compose(jammers, prev_active, L, rng);

        Sc2SlotTrace st;
        st.slot = t;
        st.channels = channels;
        st.success.resize(N);
        st.rate.resize(N);
        for (int u = 0; u < N; ++u) {
            std::vector<int> others;
            for (int v = 0; v < N; ++v)
                if (v != u) others.push_back(channels[v]);
            st.success[u] = success_indicator(channels[u], jammed, others, cfg.interference);
            st.rate[u] = st.success[u]
                             ? std::log2(1.0 + cfg.net.power_ratio() * gains[u][channels[u]])
                             : 0.0;
        }
        for (std::size_t j = 0; j < jammed.per_jammer.size(); ++j) {
            bool hit = false;
            for (int u = 0; u < N && !hit; ++u)
                for (int c : jammed.per_jammer[j])
                    if (c == channels[u]) {
                        hit = true;
                        break;
                    }
            if (hit) result.jammer_success[j] += 1.0;
        }

        for (int u = 0; u < N; ++u) {
            OccupancyVector occ = jammed.occupancy(L);
            if (cfg.interference)
                for (int v = 0; v < N; ++v)
                    if (v != u) occ[channels[v]] = 1;
            hists[u].push_back(sense(occ, cfg.sensing, rng));
            while (static_cast<int>(hists[u].size()) > dql.history) hists[u].pop_front();

            Transition tr;
            tr.state = states[u];
            tr.action = channels[u];
            tr.reward = st.success[u] ? 1.0 : 0.0;
            tr.next_state = stack_history(hists[u], dql.history, L);
            agents[u].remember(std::move(tr));
            agents[u].learn(rng);
        }

        prev_active = channels;
        result.slots.push_back(std::move(st));
    }
    for (auto& js : result.jammer_success) js /= static_cast<double>(slots);
    return result;
}

} // namespace aj
