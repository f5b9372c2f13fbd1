#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "aj/rng.hpp"

namespace aj {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// One GRU layer. Gate equations, with S the sigmoid and o the Hadamard product:
//   r_t = S(Wr l_t + Ur d_{t-1} + gr)
//   z_t = S(Wz l_t + Uz d_{t-1} + gz)
//   c_t = tanh(Wd l_t + Ud (z_t o d_{t-1}) + gd)
//   d_t = (1 - r_t) o d_{t-1} + r_t o c_t
// r_t interpolates old state against candidate; z_t gates the candidate's
// recurrent input. Ur and Uz are separate matrices.
struct GruParams {
    int input_dim = 0;
    int hidden_dim = 0;
    Mat Wr, Ur, Wz, Uz, Wd, Ud;
    Vec gr, gz, gd;

    static GruParams init(int input_dim, int hidden_dim, Rng& rng);
    static GruParams zeros(int input_dim, int hidden_dim);
};

enum class Activation { softmax, sigmoid };

struct DenseHead {
    Mat W; // out_dim x hidden_dim
    Vec b;
    Activation act = Activation::softmax;

    int out_dim() const { return static_cast<int>(W.rows()); }

    static DenseHead init(int hidden_dim, int out_dim, Activation act, Rng& rng);
    static DenseHead zeros(int hidden_dim, int out_dim, Activation act);
};

// Per-step intermediates kept for backpropagation.
struct GruCache {
    Vec d0;
    std::vector<Vec> l, r, z, c, d;
};

// Runs the recurrence over the whole input sequence; returns all hidden states.
std::vector<Vec> gru_forward(const GruParams& p, const std::vector<Vec>& inputs,
                             const Vec& d0, GruCache* cache = nullptr);

Vec head_forward(const DenseHead& head, const Vec& hidden);

enum class LossKind { cross_entropy, binary_cross_entropy };

// Mean over time steps of the per-step loss. Cross-entropy targets are class
// indices; BCE targets are binary vectors and the per-step loss is the mean
// over elements. Logarithms are floored at 1e-12.
double sequence_loss(const std::vector<Vec>& outputs, const std::vector<int>& class_targets,
                     const std::vector<Vec>& vec_targets, LossKind kind);

// One training window: inputs plus either class or vector targets per step.
struct Sample {
    std::vector<Vec> inputs;
    std::vector<int> class_targets; // cross-entropy
    std::vector<Vec> vec_targets;   // BCE
};

struct Model {
    GruParams gru;
    DenseHead head;
    LossKind loss = LossKind::cross_entropy;
};

// Flattened parameter order: Wr Ur Wz Uz Wd Ud gr gz gd W b (column-major
// within each block). Shared by Adam, checkpointing, and gradient checking.
Vec pack(const Model& m);
void unpack(const Vec& theta, Model& m);
long param_count(const Model& m);

// Exact reverse-mode gradients of the mean loss over the batch with respect to
// every parameter, in pack() order. The parallel path splits over batch
// elements with a fixed-order reduction and equals the serial path bitwise.
Vec bptt(const Model& m, const std::vector<Sample>& batch, double* loss_out = nullptr,
         bool parallel = false);
Vec bptt_serial(const Model& m, const std::vector<Sample>& batch, double* loss_out = nullptr);

struct AdamConfig {
    double lr = 3e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

struct AdamState {
    Vec m, v;
    long t = 0;

    static AdamState zeros(long n);
};

// Standard bias-corrected Adam update of the flattened parameters.
void adam_step(AdamState& st, Vec& theta, const Vec& grad, const AdamConfig& cfg);

struct TrainConfig {
    int seq_len = 20; // a
    int hidden_dim = 64;
    int epochs = 20;
    int batch_size = 32;
    AdamConfig adam;
    std::uint64_t seed = 1;
    bool parallel = false;
};

struct TrainResult {
    std::vector<double> epoch_loss;
};

// Minibatch training with per-epoch reshuffling; aborts on non-finite loss.
TrainResult train(Model& model, const std::vector<Sample>& dataset, const TrainConfig& cfg);

// ---- Dense feed-forward primitives (used by the DQL baseline) ----

// Fully connected network with ReLU hidden layers and a linear output.
struct Mlp {
    std::vector<Mat> W;
    std::vector<Vec> b;

    static Mlp init(const std::vector<int>& layer_dims, Rng& rng);
    Vec forward(const Vec& x) const;
    // Squared-error gradient for selected output components only:
    // loss = 0.5 * sum_i (out[idx_i] - target_i)^2, mean over the batch is the
    // caller's business. Returns gradients in flat order W0 b0 W1 b1 ...
    Vec backward(const Vec& x, const std::vector<std::pair<int, double>>& targets) const;
    Vec pack() const;
    void unpack(const Vec& theta);
    long param_count() const;
};

// ---- Checkpoint io ----

// Binary container: magic "AJCKPT", format version, loss kind, dimensions,
// then every parameter block in pack() order as little-endian doubles.
void save_checkpoint(const std::string& path, const Model& m);
Model load_checkpoint(const std::string& path);

} // namespace aj
