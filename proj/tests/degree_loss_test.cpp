#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gig/degree_loss.h"
#include "gig/gradcheck.h"
#include "gig/latent_graph.h"
#include "gig/ops.h"
#include "test_util.h"

using namespace gig;

namespace {

// Symmetric, zero diagonal, entries uniform in [0, 1]; entries within
// `margin` of 0.5 are pushed away so the mask is stable under perturbation.
Tensor random_adjacency(std::size_t n, std::mt19937_64& rng, double margin = 0.0) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> a(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double v = u(rng);
            if (std::abs(v - 0.5) < margin) v = v < 0.5 ? 0.5 - margin : 0.5 + margin;
            a[i * n + j] = a[j * n + i] = v;
        }
    return Tensor::from({n, n}, std::move(a));
}

double column_sum(const Tensor& s, std::size_t j) {
    double total = 0.0;
    for (std::size_t i = 0; i < s.dim(0); ++i) total += s.at(i, j);
    return total;
}

double total(const Tensor& t) {
    double s = 0.0;
    for (double v : t.data()) s += v;
    return s;
}

}  // namespace

TEST(ThresholdTest, AllAboveKept) {
    auto a = Tensor::matrix({{0, 0.9}, {0.9, 0}});
    EXPECT_EQ(threshold_adjacency(a).to_rows(), a.to_rows());
}

TEST(ThresholdTest, AllBelowZeroed) {
    auto r = threshold_adjacency(Tensor::matrix({{0, 0.3}, {0.3, 0}}));
    for (double v : r.data()) EXPECT_EQ(v, 0.0);
}

TEST(ThresholdTest, ExactHalfIsMasked) {
    auto r = threshold_adjacency(Tensor::matrix({{0, 0.5}, {0.5, 0}}));
    EXPECT_EQ(r.at(0, 1), 0.0);
}

TEST(ThresholdTest, GradientOnlyThroughSurvivors) {
    auto a = Tensor::matrix({{0, 0.9, 0.2}, {0.9, 0, 0.6}, {0.2, 0.6, 0}}, true);
    sum(threshold_adjacency(a)).backward();
    EXPECT_EQ(a.grad(), (std::vector<double>{0, 1, 0, 1, 0, 1, 0, 1, 0}));
}

TEST(DegreeTest, CompleteGraphArithmetic) {
    std::vector<double> v(16, 0.9);
    for (std::size_t i = 0; i < 4; ++i) v[i * 4 + i] = 0.0;
    auto d = node_degrees(Tensor::from({4, 4}, v));
    for (double x : d.data()) EXPECT_NEAR(x, 2.7, 1e-12);
}

TEST(DegreeTest, ZeroMatrix) {
    const auto d = node_degrees(Tensor::zeros({5, 5}));
    for (double x : d.data()) EXPECT_EQ(x, 0.0);
}

TEST(DegreeTest, MatchesIndependentRowSums) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        auto a_bar = threshold_adjacency(random_adjacency(9, rng));
        auto d = node_degrees(a_bar);
        const auto rows = a_bar.to_rows();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            double s = 0.0;
            for (double v : rows[i]) s += v;
            EXPECT_NEAR(d.at(i), s, 1e-12);
            EXPECT_GE(d.at(i), 0.0);
            EXPECT_LE(d.at(i), 8.0);
        }
    }
}

TEST(SoftAssignTest, IntegerDegreeNeighborWeight) {
    auto s = soft_assign(Tensor::from({1}, {3.0}), 7, 0.6);
    std::size_t argmax = 0;
    for (std::size_t i = 1; i < 7; ++i)
        if (s.at(i, 0) > s.at(argmax, 0)) argmax = i;
    EXPECT_EQ(argmax, 3u);
    const double expected = std::exp(-1.0 / 0.36);
    EXPECT_NEAR(s.at(2, 0) / s.at(3, 0), expected, 1e-12);
    EXPECT_NEAR(s.at(4, 0) / s.at(3, 0), expected, 1e-12);
    EXPECT_NEAR(expected, 0.0622, 1e-4);
}

TEST(SoftAssignTest, HalfIntegerSplitsEvenly) {
    auto s = soft_assign(Tensor::from({1}, {2.5}), 6, 0.6);
    EXPECT_NEAR(s.at(2, 0), s.at(3, 0), 1e-15);
}

TEST(SoftAssignTest, SmallSigmaIsOneHot) {
    auto s = soft_assign(Tensor::from({2}, {1.2, 3.8}), 6, 0.05);
    EXPECT_NEAR(s.at(1, 0), 1.0, 1e-12);
    EXPECT_NEAR(s.at(4, 1), 1.0, 1e-12);
}

TEST(SoftAssignTest, ArgmaxIsNearestInteger) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.0, 9.0);
    std::vector<double> d(30);
    for (auto& x : d) x = u(rng);
    auto s = soft_assign(Tensor::from({30}, d), 10, 0.6);
    for (std::size_t j = 0; j < 30; ++j) {
        std::size_t argmax = 0;
        for (std::size_t i = 1; i < 10; ++i)
            if (s.at(i, j) > s.at(argmax, j)) argmax = i;
        EXPECT_EQ(argmax, static_cast<std::size_t>(std::lround(d[j])));
        EXPECT_NEAR(column_sum(s, j), 1.0, 1e-10);
    }
}

TEST(DistributionTest, RegularGraphConcentrates) {
    // Every node has degree exactly 2.
    auto s = soft_assign(Tensor::from({5}, {2, 2, 2, 2, 2}), 5, 0.6);
    auto p = degree_distribution(s);
    EXPECT_GT(p.at(2), 0.88);
    EXPECT_LT(p.at(1) + p.at(3), 0.12);
}

TEST(DistributionTest, TwoNodesSymmetric) {
    auto p = degree_distribution(soft_assign(Tensor::from({2}, {0.0, 1.0}), 2, 0.6));
    EXPECT_NEAR(p.at(0), 0.5, 1e-12);
    EXPECT_NEAR(p.at(1), 0.5, 1e-12);
}

TEST(KlTest, IdenticalDistributionsGiveZero) {
    auto q = TargetDistribution::init(5.0, 2.0);
    auto p = q.probabilities(12).detach();
    EXPECT_NEAR(kl_divergence(p, q).item(), 0.0, 1e-9);
}

TEST(KlTest, AnalyticLogTwo) {
    auto kl = kl_divergence(Tensor::from({2}, {1.0, 0.0}), log(Tensor::from({2}, {0.5, 0.5})));
    EXPECT_NEAR(kl.item(), std::log(2.0), 1e-9);
}

TEST(KlTest, MatchesDirectSummation) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 4 + trial;
        std::vector<double> p(n);
        double z = 0.0;
        for (auto& x : p) z += (x = u(rng));
        for (auto& x : p) x /= z;
        auto q = TargetDistribution::init(u(rng) * n, 0.5 + u(rng) * n / 4.0);
        // q_i from the Gaussian density, normalized over the support
        std::vector<double> qv(n);
        double qz = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double zscore = (static_cast<double>(i) - q.mean()) / q.stddev();
            qz += (qv[i] = std::exp(-0.5 * zscore * zscore));
        }
        double oracle = 0.0;
        for (std::size_t i = 0; i < n; ++i) oracle += p[i] * std::log((p[i] + kKlEpsilon) / (qv[i] / qz));
        EXPECT_NEAR(kl_divergence(Tensor::from({n}, p), q).item(), oracle, 1e-10);
    }
}

TEST(KlTest, TargetIsStrictlyPositiveAndNormalized) {
    auto q = TargetDistribution::init(40);
    auto probs = q.probabilities(40);
    EXPECT_NEAR(total(probs), 1.0, 1e-12);
    for (double v : probs.data()) EXPECT_GT(v, 0.0);
    EXPECT_DOUBLE_EQ(q.mean(), 10.0);
    EXPECT_NEAR(q.stddev(), 5.0, 1e-12);
}

TEST(TotalLossTest, Arithmetic) {
    auto ce = Tensor::scalar(0.7), kl = Tensor::scalar(0.3);
    EXPECT_NEAR(total_loss(ce, kl, 1.0).item(), 1.0, 1e-15);
    EXPECT_EQ(total_loss(ce, kl, 0.0).item(), ce.item());
    EXPECT_THROW(total_loss(ce, kl, -0.1), std::invalid_argument);
}

TEST(TotalLossTest, TargetGradientScalesWithAlpha) {
    std::mt19937_64 rng(4);
    auto a = random_adjacency(8, rng, 1e-3);
    auto grad_of = [&](double alpha) {
        auto q = TargetDistribution::init(8);
        total_loss(Tensor::scalar(0.5), degree_kl_loss(a, q), alpha).backward();
        return q.mu.grad()[0];
    };
    const double g1 = grad_of(1.0);
    EXPECT_NE(g1, 0.0);
    EXPECT_NEAR(grad_of(2.5), 2.5 * g1, 1e-12);
}

TEST(DegreeLossInvariantTest, RandomPopulations) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 4 + rng() % 29;
        auto state = degree_state(random_adjacency(n, rng));
        for (std::size_t j = 0; j < n; ++j) EXPECT_NEAR(column_sum(state.assignment, j), 1.0, 1e-10);
        EXPECT_EQ(state.distribution.numel(), n);
        EXPECT_NEAR(total(state.distribution), 1.0, 1e-10);
        for (double v : state.distribution.data()) EXPECT_GE(v, 0.0);
        auto q = TargetDistribution::init(n);
        const double kl = kl_divergence(state.distribution, q).item();
        EXPECT_GE(kl, -1e-9);
        EXPECT_LT(kl_divergence(state.distribution, log(state.distribution)).item(), 1e-9);
    }
}

TEST(DegreeLossGradientTest, RandomSixBySix) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        std::mt19937_64 rng(seed);
        auto a = random_adjacency(6, rng, 1e-3);
        auto q = TargetDistribution::init(6);
        EXPECT_LT(finite_difference_check([&](const Tensor& x) { return degree_kl_loss(x, q); }, a), 1e-4)
            << "seed " << seed;
        EXPECT_LT(finite_difference_check([&] { return degree_kl_loss(a, q); }, q.parameters()), 1e-4);
    }
}

TEST(DegreeLossTest, SigmaMustBePositive) {
    EXPECT_THROW(soft_assign(Tensor::from({1}, {1.0}), 3, 0.0), std::invalid_argument);
    EXPECT_THROW(TargetDistribution::init(1.0, 0.0), std::invalid_argument);
}
