#include "gig/layers.h"

#include <cmath>
#include <stdexcept>

#include "gig/ops.h"

namespace gig {

Tensor uniform_parameter(Shape shape, std::size_t fan_in, std::mt19937_64& rng) {
    const double bound = 1.0 / std::sqrt(static_cast<double>(std::max<std::size_t>(fan_in, 1)));
    std::uniform_real_distribution<double> dist(-bound, bound);
    std::vector<double> values(numel(shape));
    for (auto& v : values) v = dist(rng);
    return Tensor::from(std::move(shape), std::move(values), true);
}

Linear Linear::init(std::size_t in, std::size_t out, std::mt19937_64& rng) {
    if (in == 0 || out == 0) throw std::invalid_argument("linear layer dimensions must be positive");
    Linear l;
    l.weight = uniform_parameter({in, out}, in, rng);
    l.bias = uniform_parameter({out}, in, rng);
    return l;
}

Tensor Linear::forward(const Tensor& x) const { return linear(x, weight, bias); }

Mlp Mlp::init(std::size_t in, const std::vector<std::size_t>& dims, std::mt19937_64& rng) {
    if (dims.empty()) throw std::invalid_argument("an MLP needs at least one layer");
    Mlp mlp;
    for (auto d : dims) {
        mlp.layers.push_back(Linear::init(in, d, rng));
        in = d;
    }
    return mlp;
}

Tensor Mlp::forward(const Tensor& x) const {
    Tensor out = x;
    for (std::size_t i = 0; i < layers.size(); ++i) {
        out = layers[i].forward(out);
        if (i + 1 < layers.size()) out = relu(out);
    }
    return out;
}

std::vector<Tensor> Mlp::parameters() const {
    std::vector<Tensor> params;
    for (const auto& l : layers) {
        params.push_back(l.weight);
        params.push_back(l.bias);
    }
    return params;
}

}  // namespace gig
