#include "gig/ops.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace gig {

namespace {

using detail::Node;
using NodePtr = std::shared_ptr<Node>;

[[noreturn]] void shape_error(const char* op, const Shape& a, const Shape& b) {
    throw std::invalid_argument(std::string(op) + ": incompatible shapes " + to_string(a) +
                                " and " + to_string(b));
}

// Builds the result node. History is only kept when some input needs it.
Tensor make_result(Shape shape, std::vector<double> values, std::vector<NodePtr> inputs,
                   const char* op, std::function<void(Node&)> backward) {
    auto node = std::make_shared<Node>();
    node->shape = std::move(shape);
    node->data = std::move(values);
    node->op = op;
    const bool tracked = std::any_of(inputs.begin(), inputs.end(),
                                     [](const NodePtr& n) { return n->requires_grad; });
    if (tracked) {
        node->requires_grad = true;
        node->inputs = std::move(inputs);
        node->backward_fn = std::move(backward);
    }
    return Tensor::wrap(std::move(node));
}

// Flat index maps from an output position to each operand under broadcasting.
struct Broadcast {
    Shape out;
    std::vector<std::size_t> a_index;
    std::vector<std::size_t> b_index;
    bool same = false;
};

Broadcast broadcast(const char* op, const Shape& a, const Shape& b) {
    Broadcast bc;
    if (a == b) {
        bc.out = a;
        bc.same = true;
        return bc;
    }
    const std::size_t rank = std::max(a.size(), b.size());
    Shape pa(rank, 1), pb(rank, 1);
    std::copy(a.begin(), a.end(), pa.begin() + (rank - a.size()));
    std::copy(b.begin(), b.end(), pb.begin() + (rank - b.size()));
    bc.out.resize(rank);
    for (std::size_t d = 0; d < rank; ++d) {
        if (pa[d] == pb[d] || pb[d] == 1) {
            bc.out[d] = pa[d];
        } else if (pa[d] == 1) {
            bc.out[d] = pb[d];
        } else {
            shape_error(op, a, b);
        }
    }
    auto strides = [&](const Shape& s) {
        std::vector<std::size_t> st(rank, 0);
        std::size_t acc = 1;
        for (std::size_t d = rank; d-- > 0;) {
            st[d] = s[d] == 1 ? 0 : acc;
            acc *= s[d];
        }
        return st;
    };
    const auto sa = strides(pa);
    const auto sb = strides(pb);
    const std::size_t n = numel(bc.out);
    bc.a_index.resize(n);
    bc.b_index.resize(n);
    std::vector<std::size_t> idx(rank, 0);
    for (std::size_t flat = 0; flat < n; ++flat) {
        std::size_t ia = 0, ib = 0;
        for (std::size_t d = 0; d < rank; ++d) {
            ia += idx[d] * sa[d];
            ib += idx[d] * sb[d];
        }
        bc.a_index[flat] = ia;
        bc.b_index[flat] = ib;
        for (std::size_t d = rank; d-- > 0;) {
            if (++idx[d] < bc.out[d]) break;
            idx[d] = 0;
        }
    }
    return bc;
}

template <typename Fwd, typename DA, typename DB>
Tensor binary(const char* op, const Tensor& a, const Tensor& b, Fwd fwd, DA da, DB db) {
    auto bc = std::make_shared<Broadcast>(broadcast(op, a.shape(), b.shape()));
    const auto& x = a.node()->data;
    const auto& y = b.node()->data;
    const std::size_t n = numel(bc->out);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t ia = bc->same ? i : bc->a_index[i];
        const std::size_t ib = bc->same ? i : bc->b_index[i];
        out[i] = fwd(x[ia], y[ib]);
    }
    NodePtr an = a.node(), bn = b.node();
    return make_result(bc->out, std::move(out), {an, bn}, op, [an, bn, bc, da, db](Node& self) {
        const auto& g = self.grad;
        const std::size_t n = g.size();
        if (an->requires_grad) {
            auto& ga = an->grad_buffer();
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t ia = bc->same ? i : bc->a_index[i];
                const std::size_t ib = bc->same ? i : bc->b_index[i];
                ga[ia] += g[i] * da(an->data[ia], bn->data[ib], self.data[i]);
            }
        }
        if (bn->requires_grad) {
            auto& gb = bn->grad_buffer();
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t ia = bc->same ? i : bc->a_index[i];
                const std::size_t ib = bc->same ? i : bc->b_index[i];
                gb[ib] += g[i] * db(an->data[ia], bn->data[ib], self.data[i]);
            }
        }
    });
}

// Elementwise unary op; `deriv(x, y)` gets input and output values.
template <typename Fwd, typename Deriv>
Tensor unary(const char* op, const Tensor& a, Fwd fwd, Deriv deriv) {
    const auto& x = a.node()->data;
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = fwd(x[i]);
    NodePtr an = a.node();
    return make_result(a.shape(), std::move(out), {an}, op, [an, deriv](Node& self) {
        auto& ga = an->grad_buffer();
        for (std::size_t i = 0; i < self.grad.size(); ++i) {
            ga[i] += self.grad[i] * deriv(an->data[i], self.data[i]);
        }
    });
}

void require_matrix(const char* op, const Tensor& a) {
    if (a.rank() != 2) {
        throw std::invalid_argument(std::string(op) + ": expected a matrix, got shape " +
                                    to_string(a.shape()));
    }
}

// Treat the tensor as (outer x last) for last-axis ops.
std::pair<std::size_t, std::size_t> rows_cols(const Tensor& a) {
    const auto& s = a.shape();
    if (s.empty()) return {1, 1};
    const std::size_t cols = s.back();
    return {cols ? a.numel() / cols : 0, cols};
}

}  // namespace

Tensor matmul(const Tensor& a, const Tensor& b) {
    if (a.rank() != 2 || b.rank() != 2 || a.dim(1) != b.dim(0)) {
        shape_error("matmul", a.shape(), b.shape());
    }
    const std::size_t m = a.dim(0), k = a.dim(1), n = b.dim(1);
    const auto& x = a.node()->data;
    const auto& y = b.node()->data;
    std::vector<double> out(m * n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        double* row = out.data() + i * n;
        for (std::size_t p = 0; p < k; ++p) {
            const double v = x[i * k + p];
            if (v == 0.0) continue;
            const double* yr = y.data() + p * n;
            for (std::size_t j = 0; j < n; ++j) row[j] += v * yr[j];
        }
    }
    NodePtr an = a.node(), bn = b.node();
    return make_result({m, n}, std::move(out), {an, bn}, "matmul", [an, bn, m, k, n](Node& self) {
        const auto& g = self.grad;
        if (an->requires_grad) {
            auto& ga = an->grad_buffer();
            const auto& y = bn->data;
            for (std::size_t i = 0; i < m; ++i) {
                for (std::size_t p = 0; p < k; ++p) {
                    double acc = 0.0;
                    for (std::size_t j = 0; j < n; ++j) acc += g[i * n + j] * y[p * n + j];
                    ga[i * k + p] += acc;
                }
            }
        }
        if (bn->requires_grad) {
            auto& gb = bn->grad_buffer();
            const auto& x = an->data;
            for (std::size_t i = 0; i < m; ++i) {
                for (std::size_t p = 0; p < k; ++p) {
                    const double v = x[i * k + p];
                    if (v == 0.0) continue;
                    for (std::size_t j = 0; j < n; ++j) gb[p * n + j] += v * g[i * n + j];
                }
            }
        }
    });
}

Tensor transpose(const Tensor& a) {
    require_matrix("transpose", a);
    const std::size_t r = a.dim(0), c = a.dim(1);
    const auto& x = a.node()->data;
    std::vector<double> out(r * c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) out[j * r + i] = x[i * c + j];
    NodePtr an = a.node();
    return make_result({c, r}, std::move(out), {an}, "transpose", [an, r, c](Node& self) {
        auto& ga = an->grad_buffer();
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) ga[i * c + j] += self.grad[j * r + i];
    });
}

Tensor reshape(const Tensor& a, Shape shape) {
    if (numel(shape) != a.numel()) shape_error("reshape", a.shape(), shape);
    NodePtr an = a.node();
    return make_result(std::move(shape), an->data, {an}, "reshape", [an](Node& self) {
        auto& ga = an->grad_buffer();
        for (std::size_t i = 0; i < self.grad.size(); ++i) ga[i] += self.grad[i];
    });
}

Tensor add(const Tensor& a, const Tensor& b) {
    return binary(
        "add", a, b, [](double x, double y) { return x + y; },
        [](double, double, double) { return 1.0; }, [](double, double, double) { return 1.0; });
}

Tensor sub(const Tensor& a, const Tensor& b) {
    return binary(
        "sub", a, b, [](double x, double y) { return x - y; },
        [](double, double, double) { return 1.0; }, [](double, double, double) { return -1.0; });
}

Tensor mul(const Tensor& a, const Tensor& b) {
    return binary(
        "mul", a, b, [](double x, double y) { return x * y; },
        [](double, double y, double) { return y; }, [](double x, double, double) { return x; });
}

Tensor div(const Tensor& a, const Tensor& b) {
    return binary(
        "div", a, b, [](double x, double y) { return x / y; },
        [](double, double y, double) { return 1.0 / y; },
        [](double, double y, double z) { return -z / y; });
}

Tensor scale(const Tensor& a, double factor) {
    return unary(
        "scale", a, [factor](double x) { return x * factor; },
        [factor](double, double) { return factor; });
}

Tensor add_scalar(const Tensor& a, double value) {
    return unary(
        "add_scalar", a, [value](double x) { return x + value; },
        [](double, double) { return 1.0; });
}

Tensor neg(const Tensor& a) { return scale(a, -1.0); }

Tensor relu(const Tensor& a) {
    return unary(
        "relu", a, [](double x) { return x < 0.0 ? 0.0 : x; },  // NaN passes through
        [](double x, double) { return x > 0.0 ? 1.0 : 0.0; });
}

Tensor sigmoid(const Tensor& a) {
    return unary(
        "sigmoid", a,
        [](double x) {
            if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
            const double e = std::exp(x);
            return e / (1.0 + e);
        },
        [](double, double y) { return y * (1.0 - y); });
}

Tensor exp(const Tensor& a) {
    return unary(
        "exp", a, [](double x) { return std::exp(x); }, [](double, double y) { return y; });
}

Tensor log(const Tensor& a) {
    for (double v : a.data()) {
        if (std::isnan(v)) throw std::domain_error("log: NaN input");
    }
    return unary(
        "log", a, [](double x) { return std::log(x); }, [](double x, double) { return 1.0 / x; });
}

Tensor square(const Tensor& a) {
    return unary(
        "square", a, [](double x) { return x * x; }, [](double x, double) { return 2.0 * x; });
}

Tensor softmax_rows(const Tensor& a) {
    const auto [rows, cols] = rows_cols(a);
    const auto& x = a.node()->data;
    for (double v : x) {
        if (!std::isfinite(v)) throw std::domain_error("softmax: non-finite input");
    }
    std::vector<double> out(x.size());
    for (std::size_t r = 0; r < rows; ++r) {
        const double* in = x.data() + r * cols;
        double* o = out.data() + r * cols;
        const double mx = *std::max_element(in, in + cols);
        double z = 0.0;
        for (std::size_t c = 0; c < cols; ++c) z += (o[c] = std::exp(in[c] - mx));
        for (std::size_t c = 0; c < cols; ++c) o[c] /= z;
    }
    NodePtr an = a.node();
    return make_result(a.shape(), std::move(out), {an}, "softmax", [an, rows, cols](Node& self) {
        auto& ga = an->grad_buffer();
        for (std::size_t r = 0; r < rows; ++r) {
            const double* y = self.data.data() + r * cols;
            const double* g = self.grad.data() + r * cols;
            double dot = 0.0;
            for (std::size_t c = 0; c < cols; ++c) dot += g[c] * y[c];
            for (std::size_t c = 0; c < cols; ++c) ga[r * cols + c] += y[c] * (g[c] - dot);
        }
    });
}

Tensor log_softmax_rows(const Tensor& a) {
    const auto [rows, cols] = rows_cols(a);
    const auto& x = a.node()->data;
    for (double v : x) {
        if (!std::isfinite(v)) throw std::domain_error("log_softmax: non-finite input");
    }
    std::vector<double> out(x.size());
    for (std::size_t r = 0; r < rows; ++r) {
        const double* in = x.data() + r * cols;
        double* o = out.data() + r * cols;
        const double mx = *std::max_element(in, in + cols);
        double z = 0.0;
        for (std::size_t c = 0; c < cols; ++c) z += std::exp(in[c] - mx);
        const double lse = mx + std::log(z);
        for (std::size_t c = 0; c < cols; ++c) o[c] = in[c] - lse;
    }
    NodePtr an = a.node();
    return make_result(a.shape(), std::move(out), {an}, "log_softmax", [an, rows, cols](Node& self) {
        auto& ga = an->grad_buffer();
        for (std::size_t r = 0; r < rows; ++r) {
            const double* y = self.data.data() + r * cols;
            const double* g = self.grad.data() + r * cols;
            double gsum = 0.0;
            for (std::size_t c = 0; c < cols; ++c) gsum += g[c];
            for (std::size_t c = 0; c < cols; ++c) ga[r * cols + c] += g[c] - std::exp(y[c]) * gsum;
        }
    });
}

Tensor sum(const Tensor& a) {
    double total = 0.0;
    for (double v : a.data()) total += v;
    NodePtr an = a.node();
    return make_result({1}, {total}, {an}, "sum", [an](Node& self) {
        auto& ga = an->grad_buffer();
        for (auto& g : ga) g += self.grad[0];
    });
}

Tensor sum(const Tensor& a, std::size_t axis, bool keepdim) {
    const auto& s = a.shape();
    if (axis >= s.size()) {
        throw std::invalid_argument("sum: axis " + std::to_string(axis) + " invalid for shape " +
                                    to_string(s));
    }
    std::size_t outer = 1, inner = 1;
    for (std::size_t d = 0; d < axis; ++d) outer *= s[d];
    for (std::size_t d = axis + 1; d < s.size(); ++d) inner *= s[d];
    const std::size_t len = s[axis];
    Shape out_shape = s;
    if (keepdim) {
        out_shape[axis] = 1;
    } else {
        out_shape.erase(out_shape.begin() + static_cast<std::ptrdiff_t>(axis));
        if (out_shape.empty()) out_shape = {1};
    }
    const auto& x = a.node()->data;
    std::vector<double> out(outer * inner, 0.0);
    for (std::size_t o = 0; o < outer; ++o)
        for (std::size_t l = 0; l < len; ++l)
            for (std::size_t i = 0; i < inner; ++i) out[o * inner + i] += x[(o * len + l) * inner + i];
    NodePtr an = a.node();
    return make_result(std::move(out_shape), std::move(out), {an}, "sum_axis",
                       [an, outer, len, inner](Node& self) {
                           auto& ga = an->grad_buffer();
                           for (std::size_t o = 0; o < outer; ++o)
                               for (std::size_t l = 0; l < len; ++l)
                                   for (std::size_t i = 0; i < inner; ++i)
                                       ga[(o * len + l) * inner + i] += self.grad[o * inner + i];
                       });
}

Tensor mean(const Tensor& a) {
    const auto n = a.numel();
    if (n == 0) throw std::invalid_argument("mean of an empty tensor");
    return scale(sum(a), 1.0 / static_cast<double>(n));
}

Tensor mean(const Tensor& a, std::size_t axis, bool keepdim) {
    const auto len = a.dim(axis);
    if (len == 0) throw std::invalid_argument("mean over an empty axis");
    return scale(sum(a, axis, keepdim), 1.0 / static_cast<double>(len));
}

Tensor pairwise_euclidean(const Tensor& x) {
    require_matrix("pairwise_euclidean", x);
    const std::size_t n = x.dim(0), h = x.dim(1);
    const auto& v = x.node()->data;
    std::vector<double> out(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double sq = 0.0;
            for (std::size_t k = 0; k < h; ++k) {
                const double d = v[i * h + k] - v[j * h + k];
                sq += d * d;
            }
            out[i * n + j] = out[j * n + i] = std::sqrt(sq);
        }
    }
    NodePtr xn = x.node();
    return make_result({n, n}, std::move(out), {xn}, "pairwise_euclidean", [xn, n, h](Node& self) {
        auto& gx = xn->grad_buffer();
        const auto& v = xn->data;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const double dist = self.data[i * n + j];
                if (dist == 0.0) continue;
                const double g = (self.grad[i * n + j] + self.grad[j * n + i]) / dist;
                if (g == 0.0) continue;
                for (std::size_t k = 0; k < h; ++k) {
                    const double d = (v[i * h + k] - v[j * h + k]) * g;
                    gx[i * h + k] += d;
                    gx[j * h + k] -= d;
                }
            }
        }
    });
}

Tensor concat(const std::vector<Tensor>& parts, std::size_t axis) {
    if (parts.empty()) throw std::invalid_argument("concat: no inputs");
    const Shape& first = parts.front().shape();
    if (axis >= first.size()) {
        throw std::invalid_argument("concat: axis " + std::to_string(axis) + " invalid for shape " +
                                    to_string(first));
    }
    Shape out_shape = first;
    out_shape[axis] = 0;
    for (const auto& p : parts) {
        const Shape& s = p.shape();
        if (s.size() != first.size()) shape_error("concat", first, s);
        for (std::size_t d = 0; d < s.size(); ++d) {
            if (d != axis && s[d] != first[d]) shape_error("concat", first, s);
        }
        out_shape[axis] += s[axis];
    }
    std::size_t outer = 1, inner = 1;
    for (std::size_t d = 0; d < axis; ++d) outer *= first[d];
    for (std::size_t d = axis + 1; d < first.size(); ++d) inner *= first[d];
    const std::size_t total = out_shape[axis];
    std::vector<double> out(numel(out_shape));
    std::vector<NodePtr> nodes;
    std::vector<std::size_t> starts;
    std::size_t start = 0;
    for (const auto& p : parts) {
        const std::size_t len = p.dim(axis);
        const auto& v = p.node()->data;
        for (std::size_t o = 0; o < outer; ++o)
            std::copy_n(v.begin() + static_cast<std::ptrdiff_t>(o * len * inner), len * inner,
                        out.begin() + static_cast<std::ptrdiff_t>((o * total + start) * inner));
        nodes.push_back(p.node());
        starts.push_back(start);
        start += len;
    }
    return make_result(std::move(out_shape), std::move(out), nodes, "concat",
                       [nodes, starts, axis, outer, inner, total](Node& self) {
                           for (std::size_t k = 0; k < nodes.size(); ++k) {
                               if (!nodes[k]->requires_grad) continue;
                               auto& g = nodes[k]->grad_buffer();
                               const std::size_t len = nodes[k]->shape[axis];
                               for (std::size_t o = 0; o < outer; ++o)
                                   for (std::size_t i = 0; i < len * inner; ++i)
                                       g[o * len * inner + i] +=
                                           self.grad[(o * total + starts[k]) * inner + i];
                           }
                       });
}

Tensor greater_than(const Tensor& a, double threshold) {
    std::vector<double> out(a.numel());
    const auto& x = a.node()->data;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[i] > threshold ? 1.0 : 0.0;
    return Tensor::from(a.shape(), std::move(out), false);
}

Tensor stop_gradient(const Tensor& a) { return a.detach(); }

Tensor segment_sum(const Tensor& x, std::span<const std::size_t> offsets) {
    require_matrix("segment_sum", x);
    if (offsets.size() < 2 || offsets.front() != 0 || offsets.back() != x.dim(0)) {
        throw std::invalid_argument("segment_sum: offsets do not cover the " +
                                    std::to_string(x.dim(0)) + " rows of " + to_string(x.shape()));
    }
    const std::size_t groups = offsets.size() - 1, d = x.dim(1);
    std::vector<std::size_t> off(offsets.begin(), offsets.end());
    const auto& v = x.node()->data;
    std::vector<double> out(groups * d, 0.0);
    for (std::size_t g = 0; g < groups; ++g) {
        if (off[g + 1] < off[g]) throw std::invalid_argument("segment_sum: decreasing offsets");
        for (std::size_t r = off[g]; r < off[g + 1]; ++r)
            for (std::size_t c = 0; c < d; ++c) out[g * d + c] += v[r * d + c];
    }
    NodePtr xn = x.node();
    return make_result({groups, d}, std::move(out), {xn}, "segment_sum",
                       [xn, off, groups, d](Node& self) {
                           auto& gx = xn->grad_buffer();
                           for (std::size_t g = 0; g < groups; ++g)
                               for (std::size_t r = off[g]; r < off[g + 1]; ++r)
                                   for (std::size_t c = 0; c < d; ++c)
                                       gx[r * d + c] += self.grad[g * d + c];
                       });
}

Tensor segment_mean(const Tensor& x, std::span<const std::size_t> offsets) {
    Tensor sums = segment_sum(x, offsets);
    std::vector<double> inv(offsets.size() - 1);
    for (std::size_t g = 0; g + 1 < offsets.size(); ++g) {
        const auto count = offsets[g + 1] - offsets[g];
        inv[g] = count ? 1.0 / static_cast<double>(count) : 0.0;
    }
    const std::size_t groups = inv.size();
    return mul(sums, Tensor::from({groups, 1}, std::move(inv)));
}

Tensor neighbor_sum(const Tensor& x, const SparseAdjacency& adjacency) {
    require_matrix("neighbor_sum", x);
    if (adjacency.rows != x.dim(0) || adjacency.row_start.size() != adjacency.rows + 1) {
        throw std::invalid_argument("neighbor_sum: adjacency over " +
                                    std::to_string(adjacency.rows) + " rows applied to " +
                                    to_string(x.shape()));
    }
    const std::size_t n = x.dim(0), d = x.dim(1);
    const auto& v = x.node()->data;
    std::vector<double> out(n * d, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t e = adjacency.row_start[i]; e < adjacency.row_start[i + 1]; ++e) {
            const std::size_t j = adjacency.indices[e];
            for (std::size_t c = 0; c < d; ++c) out[i * d + c] += v[j * d + c];
        }
    }
    NodePtr xn = x.node();
    return make_result({n, d}, std::move(out), {xn}, "neighbor_sum", [xn, adjacency, n, d](Node& self) {
        auto& gx = xn->grad_buffer();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t e = adjacency.row_start[i]; e < adjacency.row_start[i + 1]; ++e) {
                const std::size_t j = adjacency.indices[e];
                for (std::size_t c = 0; c < d; ++c) gx[j * d + c] += self.grad[i * d + c];
            }
        }
    });
}

Tensor cross_entropy_logits(const Tensor& logits, std::span<const std::int64_t> labels) {
    require_matrix("cross_entropy", logits);
    const std::size_t n = logits.dim(0), c = logits.dim(1);
    if (labels.size() != n) {
        throw std::invalid_argument("cross_entropy: " + std::to_string(labels.size()) +
                                    " labels for logits of shape " + to_string(logits.shape()));
    }
    if (n == 0) throw std::invalid_argument("cross_entropy: empty batch");
    for (auto l : labels) {
        if (l < 0 || static_cast<std::size_t>(l) >= c) {
            throw std::invalid_argument("cross_entropy: label " + std::to_string(l) +
                                        " outside [0, " + std::to_string(c) + ")");
        }
    }
    Tensor logp = log_softmax_rows(logits);
    std::vector<double> pick(n * c, 0.0);
    for (std::size_t i = 0; i < n; ++i) pick[i * c + static_cast<std::size_t>(labels[i])] = -1.0 / n;
    return sum(mul(logp, Tensor::from({n, c}, std::move(pick))));
}

Tensor linear(const Tensor& x, const Tensor& weight, const Tensor& bias) {
    return add(matmul(x, weight), bias);
}

}  // namespace gig
