#include "gig/tensor.h"

#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace gig {

std::string to_string(const Shape& shape) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i) os << ", ";
        os << shape[i];
    }
    os << ']';
    return os.str();
}

std::size_t numel(const Shape& shape) {
    std::size_t n = 1;
    for (auto d : shape) n *= d;
    return n;
}

Tensor::Tensor() = default;

Tensor Tensor::wrap(std::shared_ptr<detail::Node> node) {
    Tensor t;
    t.node_ = std::move(node);
    return t;
}

Tensor Tensor::zeros(Shape shape, bool requires_grad) {
    return full(std::move(shape), 0.0, requires_grad);
}

Tensor Tensor::full(Shape shape, double value, bool requires_grad) {
    auto n = gig::numel(shape);
    return from(std::move(shape), std::vector<double>(n, value), requires_grad);
}

Tensor Tensor::from(Shape shape, std::vector<double> values, bool requires_grad) {
    if (gig::numel(shape) != values.size()) {
        throw std::invalid_argument("tensor shape " + gig::to_string(shape) + " holds " +
                                    std::to_string(gig::numel(shape)) + " values, got " +
                                    std::to_string(values.size()));
    }
    auto node = std::make_shared<detail::Node>();
    node->shape = std::move(shape);
    node->data = std::move(values);
    node->requires_grad = requires_grad;
    return wrap(std::move(node));
}

Tensor Tensor::scalar(double value, bool requires_grad) {
    return from({1}, {value}, requires_grad);
}

Tensor Tensor::matrix(const std::vector<std::vector<double>>& rows, bool requires_grad) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.front().size() : 0;
    std::vector<double> values;
    values.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
        values.insert(values.end(), row.begin(), row.end());
    }
    return from({r, c}, std::move(values), requires_grad);
}

Tensor Tensor::identity(std::size_t n, bool requires_grad) {
    std::vector<double> values(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) values[i * n + i] = 1.0;
    return from({n, n}, std::move(values), requires_grad);
}

const Shape& Tensor::shape() const {
    if (!node_) throw std::logic_error("use of undefined tensor");
    return node_->shape;
}

std::size_t Tensor::dim(std::size_t axis) const {
    const auto& s = shape();
    if (axis >= s.size()) {
        throw std::out_of_range("axis " + std::to_string(axis) + " out of range for shape " +
                                gig::to_string(s));
    }
    return s[axis];
}

std::size_t Tensor::numel() const { return gig::numel(shape()); }

std::span<const double> Tensor::data() const {
    shape();
    return node_->data;
}

std::span<double> Tensor::mutable_data() {
    shape();
    return node_->data;
}

double Tensor::item() const {
    if (numel() != 1) {
        throw std::invalid_argument("item() on tensor of shape " + gig::to_string(shape()));
    }
    return node_->data[0];
}

double Tensor::at(std::size_t i) const {
    if (i >= numel()) throw std::out_of_range("flat index out of range");
    return node_->data[i];
}

double Tensor::at(std::size_t i, std::size_t j) const {
    if (rank() != 2 || i >= dim(0) || j >= dim(1)) {
        throw std::out_of_range("index (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") invalid for shape " + gig::to_string(shape()));
    }
    return node_->data[i * dim(1) + j];
}

std::vector<std::vector<double>> Tensor::to_rows() const {
    if (rank() != 2) throw std::invalid_argument("to_rows() needs a matrix");
    std::vector<std::vector<double>> rows(dim(0));
    for (std::size_t i = 0; i < dim(0); ++i) {
        rows[i].assign(node_->data.begin() + i * dim(1), node_->data.begin() + (i + 1) * dim(1));
    }
    return rows;
}

bool Tensor::requires_grad() const { return node_ && node_->requires_grad; }

Tensor& Tensor::set_requires_grad(bool value) {
    shape();
    node_->requires_grad = value;
    return *this;
}

bool Tensor::is_leaf() const { return !node_ || node_->inputs.empty(); }

const std::string& Tensor::op_name() const {
    shape();
    return node_->op;
}

bool Tensor::has_grad() const { return node_ && !node_->grad.empty(); }

std::vector<double> Tensor::grad() const {
    shape();
    if (node_->grad.empty()) return std::vector<double>(node_->data.size(), 0.0);
    return node_->grad;
}

void Tensor::zero_grad() {
    if (node_) node_->grad.clear();
}

Tensor Tensor::detach() const {
    return from(shape(), node_->data, false);
}

std::vector<detail::Node*> build_tape(const Tensor& root) {
    std::vector<detail::Node*> order;
    if (!root.requires_grad()) return order;
    std::unordered_set<detail::Node*> visited;
    // Iterative post-order DFS; each node is emitted once, after its inputs.
    std::vector<std::pair<detail::Node*, std::size_t>> stack;
    stack.emplace_back(root.node().get(), 0);
    visited.insert(root.node().get());
    while (!stack.empty()) {
        auto& [node, next] = stack.back();
        if (next < node->inputs.size()) {
            detail::Node* child = node->inputs[next++].get();
            if (child->requires_grad && visited.insert(child).second) {
                stack.emplace_back(child, 0);
            }
        } else {
            order.push_back(node);
            stack.pop_back();
        }
    }
    return order;
}

std::size_t Tensor::tape_size() const { return build_tape(*this).size(); }

void Tensor::backward() const {
    if (numel() != 1) {
        throw std::invalid_argument("backward() needs a scalar loss, got shape " +
                                    gig::to_string(shape()));
    }
    if (!requires_grad()) {
        throw std::invalid_argument("backward() on a tensor with no recorded operations");
    }
    auto tape = build_tape(*this);
    for (auto* node : tape) {
        if (!node->inputs.empty()) node->grad.clear();
    }
    node_->accumulate(0, 1.0);
    for (auto it = tape.rbegin(); it != tape.rend(); ++it) {
        detail::Node* node = *it;
        if (node->backward_fn && !node->grad.empty()) node->backward_fn(*node);
    }
}

}  // namespace gig
