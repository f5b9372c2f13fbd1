#include "aj/sc2.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace aj {

namespace {

// Shared slot loop for dataset generation (random users, no models) and
// evaluation (model-driven users). models may be empty for generation.
Sc2EpisodeResult step_sc2(const std::vector<Model>* models, const Sc2Config& cfg,
                          int slots, std::uint64_t seed, Sc2Dataset* record) {
    cfg.net.validate();
    const int L = cfg.net.num_channels;
    const int N = cfg.num_users;
    Rng rng(seed);
    std::vector<JammerState> jammers =
        make_preset_jammers(cfg.preset, L, cfg.dwell_length);

    std::vector<std::vector<Vec>> histories(N); // encoded rows per user
    std::vector<int> prev_active;               // all users' channels at t-1

    Sc2EpisodeResult result;
    result.jammer_success.assign(jammers.size(), 0.0);
    if (record) {
        record->num_channels = L;
        record->interference = cfg.interference;
        record->preset_name = cfg.preset.name;
        record->per_user.assign(N, {});
    }

    for (int t = 0; t < slots; ++t) {
        std::vector<GainVector> gains(N);
        for (auto& g : gains) g = sample_gains(cfg.fading, L, rng);

        std::vector<int> channels(N);
        for (int u = 0; u < N; ++u) {
            if (models && static_cast<int>(histories[u].size()) >= cfg.window_a) {
                std::vector<Vec> window(histories[u].end() - cfg.window_a,
                                        histories[u].end());
                const OccupancyForecast fc = forecast((*models)[u], window);
                channels[u] = allocate({fc}, {gains[u]}).channels[0];
            } else {
                channels[u] = static_cast<int>(rng.uniform_int(L));
            }
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
            st.success[u] =
                success_indicator(channels[u], jammed, others, cfg.interference);
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
            Sc2Row row;
            row.own_channel = channels[u];
            row.occupied = sense(occ, cfg.sensing, rng);
            histories[u].push_back(sc2_encode(row, L));
            if (record) record->per_user[u].push_back(std::move(row));
        }

        prev_active = channels;
        result.slots.push_back(std::move(st));
    }
    for (auto& js : result.jammer_success) js /= static_cast<double>(slots);
    return result;
}

} // namespace

Sc2Dataset generate_sc2_dataset(const Sc2Config& cfg, int slots, std::uint64_t seed) {
    Sc2Dataset ds;
    step_sc2(nullptr, cfg, slots, seed, &ds);
    return ds;
}

Vec sc2_encode(const Sc2Row& row, int num_channels) {
    Vec v = Vec::Zero(2 * num_channels);
    v(row.own_channel) = 1.0;
    for (int i = 0; i < num_channels; ++i) v(num_channels + i) = row.occupied[i];
    return v;
}

std::vector<Sample> sc2_windows(const std::vector<Sc2Row>& rows, int num_channels,
                                int window_len, int stride) {
    if (window_len < 1 || stride < 1)
        throw std::invalid_argument("sc2_windows: bad window or stride");
    std::vector<Sample> out;
    if (rows.size() < static_cast<std::size_t>(window_len) + 1) return out;
    // The last row is target-only: window steps need row t+1's occupancy.
    for (std::size_t start = 0; start + window_len + 1 <= rows.size(); start += stride) {
        Sample s;
        for (int t = 0; t < window_len; ++t) {
            const Sc2Row& row = rows[start + t];
            const Sc2Row& next = rows[start + t + 1];
            s.inputs.push_back(sc2_encode(row, num_channels));
            Vec target(num_channels);
            for (int i = 0; i < num_channels; ++i) target(i) = next.occupied[i];
            s.vec_targets.push_back(std::move(target));
        }
        out.push_back(std::move(s));
    }
    return out;
}

void write_sc2_csv(const std::string& path, const Sc2Dataset& ds, int user) {
    const auto& rows = ds.per_user.at(user);
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    const int L = ds.num_channels;
    os << "# sc2 L=" << L << " preset=" << ds.preset_name
       << " interference=" << (ds.interference ? 1 : 0) << " user=" << user << "\n";
    for (std::size_t t = 0; t + 1 < rows.size(); ++t) {
        const Sc2Row& row = rows[t];
        const Sc2Row& next = rows[t + 1];
        for (int i = 0; i < L; ++i) os << (row.own_channel == i ? 1 : 0) << ",";
        for (int i = 0; i < L; ++i) os << row.occupied[i] << ",";
        for (int i = 0; i < L; ++i) os << next.occupied[i] << (i + 1 < L ? "," : "\n");
    }
}

std::vector<Sc2Row> read_sc2_csv(const std::string& path, int num_channels) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    std::string line;
    if (!std::getline(is, line) || line.rfind("# sc2 ", 0) != 0)
        throw std::runtime_error("not an sc2 dataset: " + path);
    const int L = num_channels;
    std::vector<Sc2Row> rows;
    OccupancyVector last_target;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string field;
        std::vector<int> fields;
        while (std::getline(ls, field, ',')) fields.push_back(std::stoi(field));
        if (static_cast<int>(fields.size()) != 3 * L)
            throw std::runtime_error("bad sc2 row width in " + path);
        Sc2Row row;
        row.own_channel = -1;
        for (int i = 0; i < L; ++i)
            if (fields[i]) row.own_channel = i;
        if (row.own_channel < 0) throw std::runtime_error("sc2 row without own bit");
        row.occupied.assign(fields.begin() + L, fields.begin() + 2 * L);
        rows.push_back(std::move(row));
        last_target.assign(fields.begin() + 2 * L, fields.end());
    }
    // Recover the trailing target-only row; its own channel is unknowable from
    // the file, recorded as channel 0 by convention (it is never an input).
    if (!rows.empty()) {
        Sc2Row tail;
        tail.own_channel = 0;
        tail.occupied = last_target;
        rows.push_back(std::move(tail));
    }
    return rows;
}

OccupancyForecast forecast(const Model& model, const std::vector<Vec>& window) {
    if (window.empty()) throw std::invalid_argument("forecast: empty window");
    const std::vector<Vec> hidden =
        gru_forward(model.gru, window, Vec::Zero(model.gru.hidden_dim));
    OccupancyForecast out;
    out.probabilities = head_forward(model.head, hidden.back());
    out.decision.resize(out.probabilities.size());
    for (int i = 0; i < out.probabilities.size(); ++i)
        out.decision[i] = out.probabilities(i) >= 0.5 ? 1 : 0;
    return out;
}

Allocation allocate(const std::vector<OccupancyForecast>& forecasts,
                    const std::vector<GainVector>& gains) {
    if (forecasts.size() != gains.size())
        throw std::invalid_argument("allocate: forecast/gain count mismatch");
    Allocation alloc;
    for (std::size_t u = 0; u < forecasts.size(); ++u) {
        const auto& fc = forecasts[u];
        const auto& g = gains[u];
        int best = -1;
        for (std::size_t c = 0; c < g.size(); ++c) {
            if (fc.decision[c]) continue;
            if (best < 0 || g[c] > g[best]) best = static_cast<int>(c);
        }
        if (best < 0) { // everything forecast busy
            best = 0;
            for (std::size_t c = 1; c < g.size(); ++c)
                if (g[c] > g[best]) best = static_cast<int>(c);
        }
        alloc.channels.push_back(best);
    }
    return alloc;
}

Sc2EpisodeResult run_sc2_episode(const std::vector<Model>& models, const Sc2Config& cfg,
                                 int slots, std::uint64_t seed) {
    if (static_cast<int>(models.size()) != cfg.num_users)
        throw std::invalid_argument("run_sc2_episode: one model per user required");
    return step_sc2(&models, cfg, slots, seed, nullptr);
}

} // namespace aj
