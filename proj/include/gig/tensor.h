#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace gig {

using Shape = std::vector<std::size_t>;

std::string to_string(const Shape& shape);
std::size_t numel(const Shape& shape);

class Tensor;

namespace detail {

// One recorded operation. The node owns its value buffer; `inputs` and
// `backward_fn` describe how its gradient flows upstream.
struct Node {
    Shape shape;
    std::vector<double> data;
    std::vector<double> grad;  // empty until first accumulation
    bool requires_grad = false;
    std::string op = "leaf";
    std::vector<std::shared_ptr<Node>> inputs;
    std::function<void(Node&)> backward_fn;

    void accumulate(std::size_t i, double g) {
        if (grad.empty()) grad.assign(data.size(), 0.0);
        grad[i] += g;
    }
    std::vector<double>& grad_buffer() {
        if (grad.empty()) grad.assign(data.size(), 0.0);
        return grad;
    }
};

}  // namespace detail

// Dense row-major float64 tensor. Copies share the underlying node, so a
// parameter handed to an optimizer and to a layer is the same object.
class Tensor {
public:
    Tensor();

    static Tensor zeros(Shape shape, bool requires_grad = false);
    static Tensor full(Shape shape, double value, bool requires_grad = false);
    static Tensor from(Shape shape, std::vector<double> values, bool requires_grad = false);
    static Tensor scalar(double value, bool requires_grad = false);
    static Tensor matrix(const std::vector<std::vector<double>>& rows, bool requires_grad = false);
    static Tensor identity(std::size_t n, bool requires_grad = false);

    bool defined() const { return node_ != nullptr; }
    const Shape& shape() const;
    std::size_t rank() const { return shape().size(); }
    std::size_t dim(std::size_t axis) const;
    std::size_t numel() const;

    std::span<const double> data() const;
    // Writable view for optimizers and test perturbation. Mutating a tensor
    // that is part of a live graph invalidates that graph's gradients.
    std::span<double> mutable_data();
    double item() const;
    double at(std::size_t i) const;
    double at(std::size_t i, std::size_t j) const;
    std::vector<std::vector<double>> to_rows() const;

    bool requires_grad() const;
    Tensor& set_requires_grad(bool value);
    bool is_leaf() const;
    const std::string& op_name() const;

    bool has_grad() const;
    // Zero-filled when no gradient has been accumulated yet.
    std::vector<double> grad() const;
    void zero_grad();

    // Reverse-mode sweep from this scalar. Gradients accumulate into every
    // requires_grad ancestor.
    void backward() const;

    // Same values, no history, no grad.
    Tensor detach() const;

    // Number of distinct operations a backward() from here would visit.
    std::size_t tape_size() const;

    const std::shared_ptr<detail::Node>& node() const { return node_; }
    static Tensor wrap(std::shared_ptr<detail::Node> node);

private:
    std::shared_ptr<detail::Node> node_;
};

// Topologically ordered list of operations reachable from `root`, inputs
// before outputs. Only nodes that require grad are included.
std::vector<detail::Node*> build_tape(const Tensor& root);

}  // namespace gig
