#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gig/tensor.h"

// Differentiable tensor operations. Every op records itself on the tape when
// at least one input requires grad; shape errors throw std::invalid_argument
// with both operand shapes in the message.
namespace gig {

Tensor matmul(const Tensor& a, const Tensor& b);
Tensor transpose(const Tensor& a);
Tensor reshape(const Tensor& a, Shape shape);

// Elementwise with broadcasting over trailing axes (numpy rules).
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor div(const Tensor& a, const Tensor& b);

Tensor scale(const Tensor& a, double factor);
Tensor add_scalar(const Tensor& a, double value);
Tensor neg(const Tensor& a);

Tensor relu(const Tensor& a);
Tensor sigmoid(const Tensor& a);
Tensor exp(const Tensor& a);
Tensor log(const Tensor& a);
Tensor square(const Tensor& a);

// Softmax along the last axis.
Tensor softmax_rows(const Tensor& a);
Tensor log_softmax_rows(const Tensor& a);

Tensor sum(const Tensor& a);
Tensor sum(const Tensor& a, std::size_t axis, bool keepdim = false);
Tensor mean(const Tensor& a);
Tensor mean(const Tensor& a, std::size_t axis, bool keepdim = false);

// Rows of `x` (N x H) -> N x N Euclidean distances. Symmetric, exact zero
// diagonal; the gradient at a zero distance is taken as 0.
Tensor pairwise_euclidean(const Tensor& x);

Tensor concat(const std::vector<Tensor>& parts, std::size_t axis);

// 0/1 mask of a > threshold. Not differentiable.
Tensor greater_than(const Tensor& a, double threshold);
// Forward identity, backward zero.
Tensor stop_gradient(const Tensor& a);

// Row-group reductions: rows [offsets[g], offsets[g+1]) of x form group g.
Tensor segment_sum(const Tensor& x, std::span<const std::size_t> offsets);
Tensor segment_mean(const Tensor& x, std::span<const std::size_t> offsets);

// Compressed adjacency for neighbor_sum: neighbors of row i are
// indices[row_start[i] .. row_start[i+1]).
struct SparseAdjacency {
    std::size_t rows = 0;
    std::vector<std::size_t> row_start{0};
    std::vector<std::size_t> indices;
};

// out[i] = sum over neighbors j of x[j].
Tensor neighbor_sum(const Tensor& x, const SparseAdjacency& adjacency);

// Mean over rows of -log softmax(logits)[label]. Labels must lie in [0, C).
Tensor cross_entropy_logits(const Tensor& logits, std::span<const std::int64_t> labels);

// x W + b with W (in x out) and b (out).
Tensor linear(const Tensor& x, const Tensor& weight, const Tensor& bias);

}  // namespace gig
