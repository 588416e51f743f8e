#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gig/gradcheck.h"
#include "gig/node_level.h"
#include "gig/ops.h"
#include "test_util.h"

using namespace gig;
using gig::testing::max_abs_diff;
using gig::testing::random_graph;

namespace {

GraphConvLayer identity_layer(std::size_t dim) {
    GraphConvLayer l;
    l.w_self = Tensor::identity(dim);
    l.w_neigh = Tensor::identity(dim);
    l.bias = Tensor::zeros({dim});
    return l;
}

// X W_self + A X W_neigh + b with A the dense adjacency.
std::vector<double> dense_conv_oracle(const Graph& g, const GraphConvLayer& layer) {
    const std::size_t n = g.node_count, in = g.feature_dim, out = layer.w_self.dim(1);
    std::vector<double> adj(n * n, 0.0);
    for (auto [a, b] : g.edges) adj[a * n + b] = adj[b * n + a] = 1.0;
    std::vector<double> ax(n * in, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t d = 0; d < in; ++d) ax[i * in + d] += adj[i * n + j] * g.features[j * in + d];
    std::vector<double> result(n * out, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t o = 0; o < out; ++o) {
            double v = layer.bias.at(o);
            for (std::size_t d = 0; d < in; ++d)
                v += g.features[i * in + d] * layer.w_self.at(d, o) + ax[i * in + d] * layer.w_neigh.at(d, o);
            result[i * out + o] = v;
        }
    return result;
}

}  // namespace

TEST(GraphConvTest, EdgelessGraphUsesSelfTermOnly) {
    std::mt19937_64 rng(1);
    Graph g = random_graph(4, 0.0, 3, rng);
    GraphBatch batch(std::span<const Graph>(&g, 1));
    auto layer = GraphConvLayer::init(3, 2, rng);
    auto out = graph_conv_forward(layer, batch, batch.features());
    auto expected = add(matmul(batch.features(), layer.w_self), layer.bias);
    EXPECT_LT(max_abs_diff(out.data(), expected.data()), 1e-15);
}

TEST(GraphConvTest, TwoNodeHandSum) {
    Graph g;
    g.node_count = 2;
    g.feature_dim = 1;
    g.features = {1, 2};
    g.edges = {{0, 1}};
    GraphBatch batch(std::span<const Graph>(&g, 1));
    auto out = graph_conv_forward(identity_layer(1), batch, batch.features());
    EXPECT_EQ(out.to_rows(), (std::vector<std::vector<double>>{{3}, {3}}));
}

TEST(GraphConvTest, MatchesDenseAdjacencyOracle) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_graph(5, 0.4, 3, rng);
        GraphBatch batch(std::span<const Graph>(&g, 1));
        auto layer = GraphConvLayer::init(3, 4, rng);
        auto out = graph_conv_forward(layer, batch, batch.features());
        EXPECT_LT(max_abs_diff(out.data(), dense_conv_oracle(g, layer)), 1e-10);
    }
}

TEST(GraphConvTest, DimensionMismatchRejected) {
    std::mt19937_64 rng(3);
    Graph g = random_graph(4, 0.5, 3, rng);
    GraphBatch batch(std::span<const Graph>(&g, 1));
    auto layer = GraphConvLayer::init(2, 4, rng);
    EXPECT_THROW(graph_conv_forward(layer, batch, batch.features()), std::invalid_argument);
}

TEST(GlobalPoolTest, SingletonsPassThrough) {
    std::vector<Graph> graphs(3);
    for (std::size_t i = 0; i < 3; ++i) {
        graphs[i].node_count = 1;
        graphs[i].feature_dim = 2;
        graphs[i].features = {double(i), double(2 * i + 1)};
    }
    GraphBatch batch(graphs);
    for (auto mode : {Pooling::mean, Pooling::add}) {
        auto pooled = global_pool(batch, batch.features(), mode);
        EXPECT_EQ(pooled.to_rows(), batch.features().to_rows());
    }
}

TEST(GlobalPoolTest, MeanAndAddArithmetic) {
    Graph g;
    g.node_count = 2;
    g.feature_dim = 2;
    g.features = {1, 1, 3, 3};
    GraphBatch batch(std::span<const Graph>(&g, 1));
    EXPECT_EQ(global_pool(batch, batch.features(), Pooling::mean).to_rows(), (std::vector<std::vector<double>>{{2, 2}}));
    EXPECT_EQ(global_pool(batch, batch.features(), Pooling::add).to_rows(), (std::vector<std::vector<double>>{{4, 4}}));
}

TEST(GlobalPoolTest, AddPoolScalesWithNodeCount) {
    std::vector<Graph> graphs;
    for (std::size_t n : {1u, 3u, 6u}) {
        Graph g;
        g.node_count = n;
        g.feature_dim = 2;
        g.features.assign(2 * n, 0.5);
        graphs.push_back(g);
    }
    GraphBatch batch(graphs);
    auto pooled = global_pool(batch, batch.features(), Pooling::add);
    const double unit = std::sqrt(0.5);
    for (std::size_t i = 0; i < 3; ++i) {
        const double norm = std::hypot(pooled.at(i, 0), pooled.at(i, 1));
        EXPECT_NEAR(norm, unit * static_cast<double>(graphs[i].node_count), 1e-12);
    }
}

namespace {

NodeLevelModule make_module(std::mt19937_64& rng, Pooling pooling = Pooling::mean) {
    NodeLevelConfig config;
    config.layer_dims = {6, 5};
    config.pooling = pooling;
    return NodeLevelModule(config, 3, rng);
}

}  // namespace

TEST(F1Test, ZeroFinalLayerGivesZeroOutput) {
    std::mt19937_64 rng(4);
    auto module = make_module(rng);
    auto& last = module.layers().back();
    for (auto* t : {&last.w_self, &last.w_neigh, &last.bias})
        for (auto& v : t->mutable_data()) v = 0.0;
    std::vector<Graph> graphs{random_graph(5, 0.5, 3, rng), random_graph(4, 0.5, 3, rng)};
    GraphBatch batch(graphs);
    auto h = f1_forward(module, batch);
    for (double v : h.data()) EXPECT_EQ(v, 0.0);
}

TEST(F1Test, OutputRequiresGrad) {
    std::mt19937_64 rng(5);
    auto module = make_module(rng);
    Graph g = random_graph(5, 0.5, 3, rng);
    EXPECT_TRUE(f1_forward(module, GraphBatch(std::span<const Graph>(&g, 1))).requires_grad());
}

TEST(F1Test, NodePermutationInvariance) {
    std::mt19937_64 rng(6);
    for (auto pooling : {Pooling::mean, Pooling::add}) {
        auto module = make_module(rng, pooling);
        for (int trial = 0; trial < 20; ++trial) {
            Graph g = random_graph(7, 0.4, 3, rng);
            Graph p = gig::testing::permute_nodes(g, gig::testing::random_permutation(7, rng));
            auto a = f1_forward(module, GraphBatch(std::span<const Graph>(&g, 1)));
            auto b = f1_forward(module, GraphBatch(std::span<const Graph>(&p, 1)));
            EXPECT_LT(max_abs_diff(a.data(), b.data()), 1e-9);
        }
    }
}

TEST(F1Test, IsomorphicGraphsGiveIdenticalRows) {
    std::mt19937_64 rng(7);
    auto module = make_module(rng);
    Graph g = random_graph(8, 0.3, 3, rng);
    Graph p = gig::testing::permute_nodes(g, gig::testing::random_permutation(8, rng));
    std::vector<Graph> pair{g, p};
    auto h = f1_forward(module, GraphBatch(pair));
    for (std::size_t d = 0; d < h.dim(1); ++d) EXPECT_NEAR(h.at(0, d), h.at(1, d), 1e-10);
}

TEST(F1Test, BatchCompositionInvariance) {
    std::mt19937_64 rng(8);
    auto module = make_module(rng);
    std::vector<Graph> graphs;
    for (int i = 0; i < 5; ++i) graphs.push_back(random_graph(3 + i, 0.5, 3, rng));
    auto together = f1_forward(module, GraphBatch(graphs));
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        auto alone = f1_forward(module, GraphBatch(std::span<const Graph>(&graphs[i], 1)));
        for (std::size_t d = 0; d < alone.dim(1); ++d) EXPECT_NEAR(alone.at(0, d), together.at(i, d), 1e-12);
    }
}

TEST(F1Test, GradientCheck) {
    std::mt19937_64 rng(9);
    for (auto pooling : {Pooling::mean, Pooling::add}) {
        auto module = make_module(rng, pooling);
        std::vector<Graph> graphs;
        for (int i = 0; i < 3; ++i) graphs.push_back(random_graph(4 + i, 0.5, 3, rng));
        GraphBatch batch(graphs);
        auto weights = gig::testing::random_tensor({3, 5}, rng);
        auto loss = [&] { return sum(mul(f1_forward(module, batch), weights)); };
        EXPECT_LT(finite_difference_check(loss, module.parameters()), 1e-4);
    }
}

TEST(F1Test, ConfigValidation) {
    NodeLevelConfig config;
    config.layer_dims = {};
    EXPECT_THROW(config.validate(), std::invalid_argument);
    config.layer_dims = {4, 0};
    EXPECT_THROW(config.validate(), std::invalid_argument);
    EXPECT_THROW(parse_pooling("max"), std::invalid_argument);
}
