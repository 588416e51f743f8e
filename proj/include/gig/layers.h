#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "gig/tensor.h"

namespace gig {

// Parameter tensor of the given shape, uniform in +-1/sqrt(fan_in).
Tensor uniform_parameter(Shape shape, std::size_t fan_in, std::mt19937_64& rng);

struct Linear {
    Tensor weight;  // in x out
    Tensor bias;    // out

    static Linear init(std::size_t in, std::size_t out, std::mt19937_64& rng);
    Tensor forward(const Tensor& x) const;
    std::size_t in_dim() const { return weight.dim(0); }
    std::size_t out_dim() const { return weight.dim(1); }
    std::vector<Tensor> parameters() const { return {weight, bias}; }
};

// Linear layers with relu between them (none after the last).
struct Mlp {
    std::vector<Linear> layers;

    static Mlp init(std::size_t in, const std::vector<std::size_t>& dims, std::mt19937_64& rng);
    Tensor forward(const Tensor& x) const;
    std::size_t in_dim() const { return layers.front().in_dim(); }
    std::size_t out_dim() const { return layers.back().out_dim(); }
    std::vector<Tensor> parameters() const;
};

}  // namespace gig
