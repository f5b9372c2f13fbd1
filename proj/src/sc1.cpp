#include "aj/sc1.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace aj {

ClassTaxonomy::ClassTaxonomy(std::vector<std::pair<JammerKind, int>> classes)
    : classes_(std::move(classes)) {
    if (classes_.empty()) throw std::invalid_argument("taxonomy: no classes");
}

ClassTaxonomy ClassTaxonomy::default13() {
    std::vector<std::pair<JammerKind, int>> c;
    for (int w = 1; w <= 4; ++w) c.emplace_back(JammerKind::random, w);
    for (int w = 1; w <= 4; ++w) c.emplace_back(JammerKind::sweeping, w);
    for (int w = 1; w <= 4; ++w) c.emplace_back(JammerKind::combat, w);
    c.emplace_back(JammerKind::reactive, 1);
    return ClassTaxonomy(std::move(c));
}

int ClassTaxonomy::index_of(JammerKind kind, int width) const {
    if (kind == JammerKind::reactive) width = 1;
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i].first == kind && classes_[i].second == width)
            return static_cast<int>(i);
    throw std::invalid_argument("taxonomy: no class for " + to_string(kind) + "/" +
                                std::to_string(width));
}

Sc1Dataset generate_sc1_dataset(int slots_per_episode, int episodes_per_class,
                                const ClassTaxonomy& taxonomy, int num_channels,
                                const SensingConfig& sensing_cfg, int dwell_length,
                                std::uint64_t seed) {
    Sc1Dataset ds;
    ds.num_channels = num_channels;
    ds.slots_per_episode = slots_per_episode;
    for (int cls = 0; cls < taxonomy.size(); ++cls) {
        const auto [kind, width] = taxonomy.at(cls);
        for (int ep = 0; ep < episodes_per_class; ++ep) {
            Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(cls) * 100003 + ep));
            // Stratified sweep phases: deterministic policies have only L distinct
            // trajectories per width, so cycling the start phase across episodes
            // gives balanced coverage instead of leaving random gaps.
            const int sweep_start = ep % num_channels;
            JammerState jammer =
                JammerState::make(kind, width, num_channels, sweep_start, dwell_length);
            std::vector<Sc1Row> rows;
            rows.reserve(slots_per_episode);
            std::vector<int> prev_active;
            for (int t = 0; t < slots_per_episode; ++t) {
                const int user = static_cast<int>(rng.uniform_int(num_channels));
                const auto jammed = jammer_step(jammer, num_channels, prev_active, rng);
                OccupancyVector occ(num_channels, 0);
                for (int c : jammed) occ[c] = 1;
                Sc1Row row;
                row.user_channel = user;
                row.jammer_bits = sense(occ, sensing_cfg, rng);
                row.class_label = cls;
                rows.push_back(std::move(row));
                prev_active = {user};
            }
            ds.episodes.push_back(std::move(rows));
        }
    }
    return ds;
}

Vec sc1_encode(const Sc1Row& row) {
    const int L = static_cast<int>(row.jammer_bits.size());
    Vec v = Vec::Zero(2 * L);
    v(row.user_channel) = 1.0;
    for (int i = 0; i < L; ++i) v(L + i) = row.jammer_bits[i];
    return v;
}

std::vector<Sample> sc1_windows(const Sc1Dataset& ds, int window_len, int stride) {
    if (window_len < 1 || stride < 1)
        throw std::invalid_argument("sc1_windows: bad window or stride");
    std::vector<Sample> out;
    for (const auto& ep : ds.episodes) {
        for (std::size_t start = 0; start + window_len <= ep.size(); start += stride) {
            Sample s;
            for (int t = 0; t < window_len; ++t) {
                const Sc1Row& row = ep[start + t];
                s.inputs.push_back(sc1_encode(row));
                s.class_targets.push_back(row.class_label);
            }
            out.push_back(std::move(s));
        }
    }
    return out;
}

void write_sc1_csv(const std::string& path, const Sc1Dataset& ds) {
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    const int L = ds.num_channels;
    os << "# sc1 L=" << L << " slots_per_episode=" << ds.slots_per_episode << "\n";
    for (int i = 0; i < L; ++i) os << "user_" << i << ",";
    for (int i = 0; i < L; ++i) os << "jam_" << i << ",";
    os << "class\n";
    for (const auto& ep : ds.episodes) {
        for (const auto& row : ep) {
            for (int i = 0; i < L; ++i) os << (row.user_channel == i ? 1 : 0) << ",";
            for (int i = 0; i < L; ++i) os << row.jammer_bits[i] << ",";
            os << row.class_label << "\n";
        }
    }
}

Sc1Dataset read_sc1_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    std::string line;
    if (!std::getline(is, line) || line.rfind("# sc1 ", 0) != 0)
        throw std::runtime_error("not an sc1 dataset: " + path);
    Sc1Dataset ds;
    {
        std::istringstream hs(line.substr(6));
        std::string tok;
        while (hs >> tok) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos) continue;
            const std::string key = tok.substr(0, eq);
            const int val = std::stoi(tok.substr(eq + 1));
            if (key == "L") ds.num_channels = val;
            if (key == "slots_per_episode") ds.slots_per_episode = val;
        }
    }
    std::getline(is, line); // column header
    const int L = ds.num_channels;
    std::vector<Sc1Row> current;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string field;
        std::vector<int> fields;
        while (std::getline(ls, field, ',')) fields.push_back(std::stoi(field));
        if (static_cast<int>(fields.size()) != 2 * L + 1)
            throw std::runtime_error("bad sc1 row width in " + path);
        Sc1Row row;
        row.user_channel = -1;
        for (int i = 0; i < L; ++i)
            if (fields[i]) row.user_channel = i;
        if (row.user_channel < 0) throw std::runtime_error("sc1 row without user bit");
        row.jammer_bits.assign(fields.begin() + L, fields.begin() + 2 * L);
        row.class_label = fields[2 * L];
        current.push_back(std::move(row));
        if (static_cast<int>(current.size()) == ds.slots_per_episode) {
            ds.episodes.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) ds.episodes.push_back(std::move(current));
    return ds;
}

Classification classify(const Model& model, const std::vector<Vec>& window) {
    if (window.empty()) throw std::invalid_argument("classify: empty window");
    const std::vector<Vec> hidden =
        gru_forward(model.gru, window, Vec::Zero(model.gru.hidden_dim));
    Classification out;
    out.probs = head_forward(model.head, hidden.back());
    out.class_index = 0;
    for (int i = 1; i < out.probs.size(); ++i)
        if (out.probs(i) > out.probs(out.class_index)) out.class_index = i;
    return out;
}

Countermeasure counter(const ClassTaxonomy& taxonomy, int class_index,
                       const std::vector<int>& last_observed_jammed,
                       int current_user_channel, int num_channels,
                       SelectionMode random_mode) {
    const auto [kind, width] = taxonomy.at(class_index);
    Countermeasure cm;
    cm.mode = SelectionMode::max_gain;
    switch (kind) {
        case JammerKind::sweeping:
            for (int c : last_observed_jammed)
                cm.predicted_jammed.push_back((c + width) % num_channels);
            break;
        case JammerKind::combat:
            cm.predicted_jammed = last_observed_jammed;
            break;
        case JammerKind::reactive:
            cm.predicted_jammed = {current_user_channel};
            break;
        case JammerKind::random:
            cm.mode = random_mode;
            break;
    }
    std::sort(cm.predicted_jammed.begin(), cm.predicted_jammed.end());
    cm.predicted_jammed.erase(
        std::unique(cm.predicted_jammed.begin(), cm.predicted_jammed.end()),
        cm.predicted_jammed.end());
    return cm;
}

int select_channel(const std::vector<int>& predicted_jammed, const GainVector& gains,
                   SelectionMode mode, int num_channels, Rng& rng) {
    if (mode == SelectionMode::random)
        return static_cast<int>(rng.uniform_int(num_channels));
    std::vector<bool> blocked(num_channels, false);
    for (int c : predicted_jammed)
        if (c >= 0 && c < num_channels) blocked[c] = true;
    int best = -1;
    for (int c = 0; c < num_channels; ++c) {
        if (blocked[c]) continue;
        if (best < 0 || gains[c] > gains[best]) best = c;
    }
    if (best >= 0) return best;
    // Every channel predicted jammed: degenerate fallback to the global argmax.
    best = 0;
    for (int c = 1; c < num_channels; ++c)
        if (gains[c] > gains[best]) best = c;
    return best;
}

std::vector<Sc1SlotTrace> run_sc1_episode(const Model& model, const ClassTaxonomy& taxonomy,
                                          JammerKind kind, int width,
                                          const Sc1EpisodeConfig& cfg, std::uint64_t seed) {
    cfg.net.validate();
    const int L = cfg.net.num_channels;
    Rng rng(seed);
    const int sweep_start = static_cast<int>(rng.uniform_int(L));
    JammerState jammer = JammerState::make(kind, width, L, sweep_start, cfg.dwell_length);

    std::vector<Sc1SlotTrace> trace;
    std::vector<Vec> history;          // encoded rows fed to the classifier
    std::vector<int> last_jammed_obs;  // sensed jammed channels of slot t-1
    int prev_user = -1;
    int detected = -1;

    for (int t = 0; t < cfg.slots; ++t) {
        const GainVector gains = sample_gains(cfg.fading, L, rng);

        int channel;
        if (detected < 0) {
            channel = static_cast<int>(rng.uniform_int(L));
        } else {
            const Countermeasure cm =
                counter(taxonomy, detected, last_jammed_obs, prev_user, L, cfg.random_mode);
            channel = select_channel(cm.predicted_jammed, gains, cm.mode, L, rng);
        }

        std::vector<int> prev_active = prev_user >= 0 ? std::vector<int>{prev_user}
                                                      : std::vector<int>{};
        const auto jammed = jammer_step(jammer, L, prev_active, rng);
        OccupancyVector occ(L, 0);
        for (int c : jammed) occ[c] = 1;
        const bool ok = !occ[channel];

        const OccupancyVector sensed = sense(occ, cfg.sensing, rng);
        Sc1Row row;
        row.user_channel = channel;
        row.jammer_bits = sensed;
        history.push_back(sc1_encode(row));

        std::vector<Vec> window(history.end() - std::min<std::size_t>(history.size(),
                                                                      cfg.window_b),
                                history.end());
        detected = classify(model, window).class_index;

        last_jammed_obs.clear();
        for (int c = 0; c < L; ++c)
            if (sensed[c]) last_jammed_obs.push_back(c);
        prev_user = channel;

        Sc1SlotTrace st;
        st.slot = t;
        st.user_channel = channel;
        st.detected_class = detected;
        st.success = ok;
        st.rate = ok ? std::log2(1.0 + cfg.net.power_ratio() * gains[channel]) : 0.0;
        trace.push_back(st);
    }
    return trace;
}

} // namespace aj
