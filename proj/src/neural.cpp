#include "aj/neural.hpp"

#include <cmath>
#include <stdexcept>

namespace aj {

namespace {

double uniform_sym(Rng& rng, double bound) {
    return (2.0 * rng.uniform() - 1.0) * bound;
}

Mat init_matrix(int rows, int cols, int fan_in, Rng& rng) {
    const double bound = std::sqrt(1.0 / fan_in);
    Mat m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) m(i, j) = uniform_sym(rng, bound);
    return m;
}

inline Vec sigmoid(const Vec& x) {
    return x.unaryExpr([](double v) { return 1.0 / (1.0 + std::exp(-v)); });
}

Vec softmax(const Vec& logits) {
    const double mx = logits.maxCoeff();
    Vec e = (logits.array() - mx).exp();
    return e / e.sum();
}

constexpr double kLogFloor = 1e-12;

} // namespace

GruParams GruParams::init(int input_dim, int hidden_dim, Rng& rng) {
    GruParams p = zeros(input_dim, hidden_dim);
    p.Wr = init_matrix(hidden_dim, input_dim, input_dim, rng);
    p.Ur = init_matrix(hidden_dim, hidden_dim, hidden_dim, rng);
    p.Wz = init_matrix(hidden_dim, input_dim, input_dim, rng);
    p.Uz = init_matrix(hidden_dim, hidden_dim, hidden_dim, rng);
    p.Wd = init_matrix(hidden_dim, input_dim, input_dim, rng);
    p.Ud = init_matrix(hidden_dim, hidden_dim, hidden_dim, rng);
    return p;
}

GruParams GruParams::zeros(int input_dim, int hidden_dim) {
    GruParams p;
    p.input_dim = input_dim;
    p.hidden_dim = hidden_dim;
    p.Wr = Mat::Zero(hidden_dim, input_dim);
    p.Ur = Mat::Zero(hidden_dim, hidden_dim);
    p.Wz = Mat::Zero(hidden_dim, input_dim);
    p.Uz = Mat::Zero(hidden_dim, hidden_dim);
    p.Wd = Mat::Zero(hidden_dim, input_dim);
    p.Ud = Mat::Zero(hidden_dim, hidden_dim);
    p.gr = Vec::Zero(hidden_dim);
    p.gz = Vec::Zero(hidden_dim);
    p.gd = Vec::Zero(hidden_dim);
    return p;
}

DenseHead DenseHead::init(int hidden_dim, int out_dim, Activation act, Rng& rng) {
    DenseHead h;
    h.W = init_matrix(out_dim, hidden_dim, hidden_dim, rng);
    h.b = Vec::Zero(out_dim);
    h.act = act;
    return h;
}

DenseHead DenseHead::zeros(int hidden_dim, int out_dim, Activation act) {
    DenseHead h;
    h.W = Mat::Zero(out_dim, hidden_dim);
    h.b = Vec::Zero(out_dim);
    h.act = act;
    return h;
}

std::vector<Vec> gru_forward(const GruParams& p, const std::vector<Vec>& inputs,
                             const Vec& d0, GruCache* cache) {
    if (d0.size() != p.hidden_dim)
        throw std::invalid_argument("gru_forward: initial state dimension mismatch");
    std::vector<Vec> hidden;
    hidden.reserve(inputs.size());
    if (cache) {
        cache->d0 = d0;
        cache->l.clear();
        cache->r.clear();
        cache->z.clear();
        cache->c.clear();
        cache->d.clear();
    }
    Vec d = d0;
    for (const Vec& l : inputs) {
        if (l.size() != p.input_dim)
            throw std::invalid_argument("gru_forward: input dimension mismatch");
        const Vec r = sigmoid(p.Wr * l + p.Ur * d + p.gr);
        const Vec z = sigmoid(p.Wz * l + p.Uz * d + p.gz);
        const Vec c = (p.Wd * l + p.Ud * (z.cwiseProduct(d)) + p.gd)
                          .unaryExpr([](double v) { return std::tanh(v); });
        const Vec dn = (Vec::Ones(p.hidden_dim) - r).cwiseProduct(d) + r.cwiseProduct(c);
        if (cache) {
            cache->l.push_back(l);
            cache->r.push_back(r);
            cache->z.push_back(z);
            cache->c.push_back(c);
            cache->d.push_back(dn);
        }
        d = dn;
        hidden.push_back(d);
    }
    return hidden;
}

Vec head_forward(const DenseHead& head, const Vec& hidden) {
    const Vec a = head.W * hidden + head.b;
    return head.act == Activation::softmax ? softmax(a) : sigmoid(a);
}

double sequence_loss(const std::vector<Vec>& outputs, const std::vector<int>& class_targets,
                     const std::vector<Vec>& vec_targets, LossKind kind) {
    if (outputs.empty()) throw std::invalid_argument("sequence_loss: empty outputs");
    double total = 0.0;
    if (kind == LossKind::cross_entropy) {
        if (class_targets.size() != outputs.size())
            throw std::invalid_argument("sequence_loss: target length mismatch");
        for (std::size_t t = 0; t < outputs.size(); ++t)
            total += -std::log(std::max(outputs[t](class_targets[t]), kLogFloor));
    } else {
        if (vec_targets.size() != outputs.size())
            throw std::invalid_argument("sequence_loss: target length mismatch");
        for (std::size_t t = 0; t < outputs.size(); ++t) {
            const Vec& p = outputs[t];
            const Vec& y = vec_targets[t];
            double step = 0.0;
            for (int j = 0; j < p.size(); ++j)
                step += -(y(j) * std::log(std::max(p(j), kLogFloor)) +
                          (1.0 - y(j)) * std::log(std::max(1.0 - p(j), kLogFloor)));
            total += step / static_cast<double>(p.size());
        }
    }
    return total / static_cast<double>(outputs.size());
}

namespace {

struct BlockMap {
    // Offsets of every parameter block in the flattened vector.
    long wr, ur, wz, uz, wd, ud, gr, gz, gd, hw, hb, total;
};

BlockMap block_map(const Model& m) {
    BlockMap bm{};
    long off = 0;
    auto put = [&off](long n) {
        const long o = off;
        off += n;
        return o;
    };
    const long wi = static_cast<long>(m.gru.hidden_dim) * m.gru.input_dim;
    const long wh = static_cast<long>(m.gru.hidden_dim) * m.gru.hidden_dim;
    const long h = m.gru.hidden_dim;
    bm.wr = put(wi);
    bm.ur = put(wh);
    bm.wz = put(wi);
    bm.uz = put(wh);
    bm.wd = put(wi);
    bm.ud = put(wh);
    bm.gr = put(h);
    bm.gz = put(h);
    bm.gd = put(h);
    bm.hw = put(static_cast<long>(m.head.W.rows()) * m.head.W.cols());
    bm.hb = put(m.head.b.size());
    bm.total = off;
    return bm;
}

void copy_in(Vec& theta, long off, const Mat& m) {
    Eigen::Map<Vec>(theta.data() + off, m.size()) =
        Eigen::Map<const Vec>(m.data(), m.size());
}

void copy_out(const Vec& theta, long off, Mat& m) {
    Eigen::Map<Vec>(m.data(), m.size()) =
        Eigen::Map<const Vec>(theta.data() + off, m.size());
}

void copy_in(Vec& theta, long off, const Vec& v) {
    theta.segment(off, v.size()) = v;
}

void copy_out(const Vec& theta, long off, Vec& v) {
    v = theta.segment(off, v.size());
}

} // namespace

long param_count(const Model& m) {
    return block_map(m).total;
}

Vec pack(const Model& m) {
    const BlockMap bm = block_map(m);
    Vec theta(bm.total);
    copy_in(theta, bm.wr, m.gru.Wr);
    copy_in(theta, bm.ur, m.gru.Ur);
    copy_in(theta, bm.wz, m.gru.Wz);
    copy_in(theta, bm.uz, m.gru.Uz);
    copy_in(theta, bm.wd, m.gru.Wd);
    copy_in(theta, bm.ud, m.gru.Ud);
    copy_in(theta, bm.gr, m.gru.gr);
    copy_in(theta, bm.gz, m.gru.gz);
    copy_in(theta, bm.gd, m.gru.gd);
    copy_in(theta, bm.hw, m.head.W);
    copy_in(theta, bm.hb, m.head.b);
    return theta;
}

void unpack(const Vec& theta, Model& m) {
    const BlockMap bm = block_map(m);
    if (theta.size() != bm.total)
        throw std::invalid_argument("unpack: parameter vector size mismatch");
    copy_out(theta, bm.wr, m.gru.Wr);
    copy_out(theta, bm.ur, m.gru.Ur);
    copy_out(theta, bm.wz, m.gru.Wz);
    copy_out(theta, bm.uz, m.gru.Uz);
    copy_out(theta, bm.wd, m.gru.Wd);
    copy_out(theta, bm.ud, m.gru.Ud);
    copy_out(theta, bm.gr, m.gru.gr);
    copy_out(theta, bm.gz, m.gru.gz);
    copy_out(theta, bm.gd, m.gru.gd);
    copy_out(theta, bm.hw, m.head.W);
    copy_out(theta, bm.hb, m.head.b);
}

namespace {

// Gradient of one sample, scaled by 1/(T * batch). Returns loss contribution
// (already divided by batch size).
double sample_grad(const Model& m, const Sample& s, double batch_inv, Vec& grad) {
    const BlockMap bm = block_map(m);
    const int H = m.gru.hidden_dim;
    const int T = static_cast<int>(s.inputs.size());
    if (T == 0) throw std::invalid_argument("bptt: empty sample");

    GruCache cache;
    const std::vector<Vec> hidden = gru_forward(m.gru, s.inputs, Vec::Zero(H), &cache);

    std::vector<Vec> outputs(T);
    for (int t = 0; t < T; ++t) outputs[t] = head_forward(m.head, hidden[t]);
    const double loss = sequence_loss(outputs, s.class_targets, s.vec_targets, m.loss);

    const double step_w = batch_inv / static_cast<double>(T);

    auto gWr = Eigen::Map<Mat>(grad.data() + bm.wr, H, m.gru.input_dim);
    auto gUr = Eigen::Map<Mat>(grad.data() + bm.ur, H, H);
    auto gWz = Eigen::Map<Mat>(grad.data() + bm.wz, H, m.gru.input_dim);
    auto gUz = Eigen::Map<Mat>(grad.data() + bm.uz, H, H);
    auto gWd = Eigen::Map<Mat>(grad.data() + bm.wd, H, m.gru.input_dim);
    auto gUd = Eigen::Map<Mat>(grad.data() + bm.ud, H, H);
    auto ggr = Eigen::Map<Vec>(grad.data() + bm.gr, H);
    auto ggz = Eigen::Map<Vec>(grad.data() + bm.gz, H);
    auto ggd = Eigen::Map<Vec>(grad.data() + bm.gd, H);
    auto gHW = Eigen::Map<Mat>(grad.data() + bm.hw, m.head.W.rows(), m.head.W.cols());
    auto gHb = Eigen::Map<Vec>(grad.data() + bm.hb, m.head.b.size());

    Vec gnext = Vec::Zero(H); // dL/dd_t flowing from future steps
    for (int t = T - 1; t >= 0; --t) {
        // Head at step t.
        Vec delta_a; // dL/d(pre-activation logits)
        if (m.loss == LossKind::cross_entropy) {
            delta_a = outputs[t] * step_w;
            delta_a(s.class_targets[t]) -= step_w;
        } else {
            const double el = step_w / static_cast<double>(outputs[t].size());
            delta_a = (outputs[t] - s.vec_targets[t]) * el;
        }
        gHW.noalias() += delta_a * hidden[t].transpose();
        gHb += delta_a;

        Vec g = gnext + m.head.W.transpose() * delta_a;

        const Vec& h = t == 0 ? cache.d0 : cache.d[t - 1];
        const Vec& r = cache.r[t];
        const Vec& z = cache.z[t];
        const Vec& c = cache.c[t];
        const Vec& l = cache.l[t];

        const Vec dc = g.cwiseProduct(r).cwiseProduct(
            (Vec::Ones(H) - c.cwiseProduct(c)));
        const Vec dr = g.cwiseProduct(c - h).cwiseProduct(r).cwiseProduct(Vec::Ones(H) - r);

        gWd.noalias() += dc * l.transpose();
        gUd.noalias() += dc * (z.cwiseProduct(h)).transpose();
        ggd += dc;

        const Vec q = m.gru.Ud.transpose() * dc;
        const Vec dz = q.cwiseProduct(h).cwiseProduct(z).cwiseProduct(Vec::Ones(H) - z);

        gWz.noalias() += dz * l.transpose();
        gUz.noalias() += dz * h.transpose();
        ggz += dz;

        gWr.noalias() += dr * l.transpose();
        gUr.noalias() += dr * h.transpose();
        ggr += dr;

        gnext = g.cwiseProduct(Vec::Ones(H) - r) + q.cwiseProduct(z) +
                m.gru.Uz.transpose() * dz + m.gru.Ur.transpose() * dr;
    }
    return loss * batch_inv;
}

} // namespace

Vec bptt_serial(const Model& m, const std::vector<Sample>& batch, double* loss_out) {
    if (batch.empty()) throw std::invalid_argument("bptt: empty batch");
    const long n = param_count(m);
    Vec grad = Vec::Zero(n);
    const double batch_inv = 1.0 / static_cast<double>(batch.size());
    double loss = 0.0;
    Vec sample = Vec::Zero(n);
    for (const Sample& s : batch) {
        // Per-sample accumulator summed afterwards, matching the parallel
        // path's reduction order bit for bit.
        sample.setZero();
        loss += sample_grad(m, s, batch_inv, sample);
        grad += sample;
    }
    if (loss_out) *loss_out = loss;
    return grad;
}

Vec bptt(const Model& m, const std::vector<Sample>& batch, double* loss_out, bool parallel) {
    if (!parallel) return bptt_serial(m, batch, loss_out);
    if (batch.empty()) throw std::invalid_argument("bptt: empty batch");
    const long n = param_count(m);
    const int B = static_cast<int>(batch.size());
    const double batch_inv = 1.0 / static_cast<double>(B);
    std::vector<Vec> grads(B);
    std::vector<double> losses(B);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < B; ++i) {
        grads[i] = Vec::Zero(n);
        losses[i] = sample_grad(m, batch[i], batch_inv, grads[i]);
    }
    Vec grad = Vec::Zero(n);
    double loss = 0.0;
    for (int i = 0; i < B; ++i) { // fixed order: equals the serial result
        grad += grads[i];
        loss += losses[i];
    }
    if (loss_out) *loss_out = loss;
    return grad;
}

AdamState AdamState::zeros(long n) {
    AdamState st;
    st.m = Vec::Zero(n);
    st.v = Vec::Zero(n);
    st.t = 0;
    return st;
}

void adam_step(AdamState& st, Vec& theta, const Vec& grad, const AdamConfig& cfg) {
    ++st.t;
    st.m = cfg.beta1 * st.m + (1.0 - cfg.beta1) * grad;
    st.v = cfg.beta2 * st.v + (1.0 - cfg.beta2) * grad.cwiseProduct(grad);
    const double bc1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(st.t));
    const double bc2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(st.t));
    theta -= (cfg.lr / bc1) * st.m.cwiseQuotient(
                 ((st.v / bc2).cwiseSqrt().array() + cfg.eps).matrix());
}

TrainResult train(Model& model, const std::vector<Sample>& dataset, const TrainConfig& cfg) {
    if (dataset.empty()) throw std::invalid_argument("train: empty dataset");
    Vec theta = pack(model);
    AdamState adam = AdamState::zeros(theta.size());
    Rng rng(Rng::derive(cfg.seed, 0xadau));
    std::vector<int> order(dataset.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);

    TrainResult result;
    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        rng.shuffle(order);
        double epoch_loss = 0.0;
        int nbatches = 0;
        for (std::size_t start = 0; start < order.size(); start += cfg.batch_size) {
            const std::size_t end = std::min(order.size(), start + cfg.batch_size);
            std::vector<Sample> batch;
            batch.reserve(end - start);
            for (std::size_t i = start; i < end; ++i) batch.push_back(dataset[order[i]]);
            double loss = 0.0;
            const Vec grad = bptt(model, batch, &loss, cfg.parallel);
            if (!std::isfinite(loss))
                throw std::runtime_error("train: loss diverged at epoch " +
                                         std::to_string(epoch));
            adam_step(adam, theta, grad, cfg.adam);
            unpack(theta, model);
            epoch_loss += loss;
            ++nbatches;
        }
        result.epoch_loss.push_back(epoch_loss / nbatches);
    }
    return result;
}

Mlp Mlp::init(const std::vector<int>& layer_dims, Rng& rng) {
    if (layer_dims.size() < 2) throw std::invalid_argument("mlp: need >= 2 layer dims");
    Mlp net;
    for (std::size_t i = 0; i + 1 < layer_dims.size(); ++i) {
        net.W.push_back(init_matrix(layer_dims[i + 1], layer_dims[i], layer_dims[i], rng));
        net.b.push_back(Vec::Zero(layer_dims[i + 1]));
    }
    return net;
}

Vec Mlp::forward(const Vec& x) const {
    Vec a = x;
    for (std::size_t i = 0; i < W.size(); ++i) {
        a = W[i] * a + b[i];
        if (i + 1 < W.size()) a = a.cwiseMax(0.0);
    }
    return a;
}

Vec Mlp::backward(const Vec& x, const std::vector<std::pair<int, double>>& targets) const {
    std::vector<Vec> acts{x}; // post-activation per layer
    Vec a = x;
    for (std::size_t i = 0; i < W.size(); ++i) {
        a = W[i] * a + b[i];
        if (i + 1 < W.size()) a = a.cwiseMax(0.0);
        acts.push_back(a);
    }
    Vec delta = Vec::Zero(a.size());
    for (const auto& [idx, target] : targets) delta(idx) = a(idx) - target;

    Vec grad = Vec::Zero(param_count());
    long off = static_cast<long>(grad.size());
    for (int i = static_cast<int>(W.size()) - 1; i >= 0; --i) {
        off -= b[i].size() + W[i].size();
        Eigen::Map<Mat> gW(grad.data() + off, W[i].rows(), W[i].cols());
        Eigen::Map<Vec> gb(grad.data() + off + W[i].size(), b[i].size());
        gW.noalias() = delta * acts[i].transpose();
        gb = delta;
        if (i > 0) {
            delta = W[i].transpose() * delta;
            // ReLU mask on the previous layer's activation.
            for (int j = 0; j < delta.size(); ++j)
                if (acts[i](j) <= 0.0) delta(j) = 0.0;
        }
    }
    return grad;
}

Vec Mlp::pack() const {
    Vec theta(param_count());
    long off = 0;
    for (std::size_t i = 0; i < W.size(); ++i) {
        Eigen::Map<Vec>(theta.data() + off, W[i].size()) =
            Eigen::Map<const Vec>(W[i].data(), W[i].size());
        off += W[i].size();
        theta.segment(off, b[i].size()) = b[i];
        off += b[i].size();
    }
    return theta;
}

void Mlp::unpack(const Vec& theta) {
    long off = 0;
    for (std::size_t i = 0; i < W.size(); ++i) {
        Eigen::Map<Vec>(W[i].data(), W[i].size()) =
            Eigen::Map<const Vec>(theta.data() + off, W[i].size());
        off += W[i].size();
        b[i] = theta.segment(off, b[i].size());
        off += b[i].size();
    }
}

long Mlp::param_count() const {
    long n = 0;
    for (std::size_t i = 0; i < W.size(); ++i) n += W[i].size() + b[i].size();
    return n;
}

} // namespace aj
