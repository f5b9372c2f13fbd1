#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "aj/neural.hpp"

namespace aj {

namespace {

constexpr char kMagic[8] = {'A', 'J', 'C', 'K', 'P', 'T', '0', '1'};

void write_i32(std::ostream& os, std::int32_t v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

std::int32_t read_i32(std::istream& is) {
    std::int32_t v = 0;
    is.read(reinterpret_cast<char*>(&v), sizeof v);
    return v;
}

} // namespace

void save_checkpoint(const std::string& path, const Model& m) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open checkpoint for writing: " + path);
    os.write(kMagic, sizeof kMagic);
    write_i32(os, m.loss == LossKind::cross_entropy ? 0 : 1);
    write_i32(os, m.head.act == Activation::softmax ? 0 : 1);
    write_i32(os, m.gru.input_dim);
    write_i32(os, m.gru.hidden_dim);
    write_i32(os, m.head.out_dim());
    const Vec theta = pack(m);
    const std::int64_t n = theta.size();
    os.write(reinterpret_cast<const char*>(&n), sizeof n);
    os.write(reinterpret_cast<const char*>(theta.data()),
             static_cast<std::streamsize>(n * sizeof(double)));
    if (!os) throw std::runtime_error("checkpoint write failed: " + path);
}

Model load_checkpoint(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open checkpoint: " + path);
    char magic[8];
    is.read(magic, sizeof magic);
    if (!is || std::memcmp(magic, kMagic, sizeof magic) != 0)
        throw std::runtime_error("not a checkpoint file: " + path);
    const std::int32_t loss_kind = read_i32(is);
    const std::int32_t act = read_i32(is);
    const std::int32_t input_dim = read_i32(is);
    const std::int32_t hidden_dim = read_i32(is);
    const std::int32_t out_dim = read_i32(is);
    std::int64_t n = 0;
    is.read(reinterpret_cast<char*>(&n), sizeof n);
    if (!is || input_dim <= 0 || hidden_dim <= 0 || out_dim <= 0 || n <= 0)
        throw std::runtime_error("corrupt checkpoint header: " + path);

    Model m;
    m.loss = loss_kind == 0 ? LossKind::cross_entropy : LossKind::binary_cross_entropy;
    m.gru = GruParams::zeros(input_dim, hidden_dim);
    m.head = DenseHead::zeros(hidden_dim, out_dim,
                              act == 0 ? Activation::softmax : Activation::sigmoid);
    if (n != param_count(m)) throw std::runtime_error("checkpoint size mismatch: " + path);
    Vec theta(n);
    is.read(reinterpret_cast<char*>(theta.data()),
            static_cast<std::streamsize>(n * sizeof(double)));
    if (!is) throw std::runtime_error("checkpoint truncated: " + path);
    unpack(theta, m);
    return m;
}

} // namespace aj
