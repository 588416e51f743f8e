#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <string>

#include "gig/graph_data.h"
#include "test_util.h"

using namespace gig;
namespace fs = std::filesystem;

namespace {

class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        path_ = fs::temp_directory_path() / ("gig_" + tag + "_" + std::to_string(std::random_device{}()));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream(p) << text;
}

// Two 2-node single-edge graphs, labels 1 and -1.
void write_fixture(const fs::path& dir) {
    write_file(dir / "FX_A.txt", "1, 2\n2, 1\n3, 4\n4, 3\n");
    write_file(dir / "FX_graph_indicator.txt", "1\n1\n2\n2\n");
    write_file(dir / "FX_graph_labels.txt", "1\n-1\n");
}

}  // namespace

TEST(TuLoaderTest, MinimalFixture) {
    TempDir tmp("tu_min");
    write_fixture(tmp.path());
    auto graphs = load_tu_dataset(tmp.path(), "FX");
    ASSERT_EQ(graphs.size(), 2u);
    for (const auto& g : graphs) {
        EXPECT_EQ(g.node_count, 2u);
        ASSERT_EQ(g.edges.size(), 1u);  // both directions collapse to one edge
        EXPECT_EQ(g.edges[0], (Edge{0, 1}));
        EXPECT_EQ(g.feature_dim, 1u);
        EXPECT_EQ(g.features, (std::vector<double>{1.0, 1.0}));
    }
    std::set<std::int64_t> labels{graphs[0].label, graphs[1].label};
    EXPECT_EQ(labels, (std::set<std::int64_t>{0, 1}));
    EXPECT_EQ(graphs[0].label, 1);  // raw 1 sorts after raw -1
    EXPECT_EQ(graphs[1].label, 0);
}

TEST(TuLoaderTest, MissingMandatoryFileIsNamed) {
    TempDir tmp("tu_missing");
    write_fixture(tmp.path());
    fs::remove(tmp.path() / "FX_graph_indicator.txt");
    try {
        load_tu_dataset(tmp.path(), "FX");
        FAIL();
    } catch (const DatasetError& e) {
        EXPECT_NE(std::string(e.what()).find("FX_graph_indicator.txt"), std::string::npos) << e.what();
    }
}

TEST(TuLoaderTest, CrossGraphEdgeReportsLine) {
    TempDir tmp("tu_cross");
    write_fixture(tmp.path());
    write_file(tmp.path() / "FX_A.txt", "1, 2\n2, 3\n");
    try {
        load_tu_dataset(tmp.path(), "FX");
        FAIL();
    } catch (const DatasetError& e) {
        EXPECT_NE(std::string(e.what()).find("FX_A.txt:2"), std::string::npos) << e.what();
    }
}

TEST(TuLoaderTest, EmptyNodeLabelsFallBackToAttributes) {
    TempDir tmp("tu_attr");
    write_fixture(tmp.path());
    write_file(tmp.path() / "FX_node_labels.txt", "");
    write_file(tmp.path() / "FX_node_attributes.txt", "0.5, 1.5\n2, 3\n4, 5\n6, 7\n");
    auto graphs = load_tu_dataset(tmp.path(), "FX");
    EXPECT_EQ(graphs[0].feature_dim, 2u);
    EXPECT_EQ(graphs[0].features, (std::vector<double>{0.5, 1.5, 2, 3}));
}

TEST(TuLoaderTest, LabelsAndAttributesConcatenate) {
    TempDir tmp("tu_both");
    write_fixture(tmp.path());
    write_file(tmp.path() / "FX_node_labels.txt", "3\n7\n7\n3\n");
    write_file(tmp.path() / "FX_node_attributes.txt", "0.5\n1\n2\n3\n");
    auto graphs = load_tu_dataset(tmp.path(), "FX");
    EXPECT_EQ(graphs[0].feature_dim, 3u);
    EXPECT_EQ(graphs[0].features, (std::vector<double>{1, 0, 0.5, 0, 1, 1}));
    EXPECT_EQ(graphs[1].features, (std::vector<double>{0, 1, 2, 1, 0, 3}));
}

TEST(TuLoaderTest, VendoredMutagLoads) {
    auto graphs = load_tu_dataset(fs::path(GIG_TEST_DATA_DIR) / "MUTAG", "MUTAG");
    EXPECT_EQ(graphs.size(), 188u);
    EXPECT_EQ(num_classes(graphs), 2u);
    EXPECT_EQ(graphs[0].feature_dim, 7u);
}

TEST(TuLoaderTest, WriteThenReloadIsStructurallyIdentical) {
    TempDir tmp("tu_roundtrip");
    auto original = load_tu_dataset(fs::path(GIG_TEST_DATA_DIR) / "MUTAG", "MUTAG");
    write_tu_dataset(tmp.path(), "RT", original);
    auto again = load_tu_dataset(tmp.path(), "RT");
    ASSERT_EQ(again.size(), original.size());
    for (std::size_t i = 0; i < original.size(); ++i) {
        EXPECT_EQ(again[i].node_count, original[i].node_count);
        EXPECT_EQ(again[i].edges, original[i].edges);
        EXPECT_EQ(again[i].features, original[i].features);
        EXPECT_EQ(again[i].label, original[i].label);
    }
}

TEST(GraphTest, ValidateRejectsBrokenInvariants) {
    Graph g;
    g.node_count = 2;
    g.feature_dim = 1;
    g.features = {1, 2};
    g.edges = {{0, 2}};
    EXPECT_THROW(g.validate(), DatasetError);
    g.edges = {{1, 0}};
    EXPECT_THROW(g.validate(), DatasetError);
    g.edges = {{0, 1}};
    g.features = {1};
    EXPECT_THROW(g.validate(), DatasetError);
}

TEST(GraphBatchTest, OffsetsAndEdgeCounts) {
    std::mt19937_64 rng(3);
    std::vector<Graph> graphs;
    std::size_t edges = 0, nodes = 0;
    for (std::size_t n : {3u, 5u, 1u, 7u}) {
        graphs.push_back(gig::testing::random_graph(n, 0.5, 2, rng));
        edges += graphs.back().edges.size();
        nodes += n;
    }
    GraphBatch batch(graphs);
    EXPECT_EQ(batch.node_offsets(), (std::vector<std::size_t>{0, 3, 8, 9, 16}));
    EXPECT_EQ(batch.total_nodes(), nodes);
    EXPECT_EQ(batch.edges().size(), edges);
    EXPECT_EQ(batch.adjacency().indices.size(), 2 * edges);
    for (std::size_t i = 0; i + 1 < batch.node_offsets().size(); ++i)
        EXPECT_LT(batch.node_offsets()[i], batch.node_offsets()[i + 1]);
}

TEST(SyntheticTest, DeterministicAndBalanced) {
    SyntheticSpec spec;
    spec.classes = 3;
    spec.graphs_per_class = 20;
    spec.noise_sigma = 0.5;
    auto a = make_synthetic_dataset(spec, 11);
    auto b = make_synthetic_dataset(spec, 11);
    ASSERT_EQ(a.size(), 60u);
    std::vector<std::size_t> counts(3, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].edges, b[i].edges);
        EXPECT_EQ(a[i].features, b[i].features);
        EXPECT_EQ(a[i].label, b[i].label);
        ++counts[static_cast<std::size_t>(a[i].label)];
    }
    EXPECT_EQ(counts, (std::vector<std::size_t>{20, 20, 20}));
    auto c = make_synthetic_dataset(spec, 12);
    EXPECT_NE(a[0].features, c[0].features);
}

TEST(SyntheticTest, FamilyDatasetIsBalancedAndPure) {
    SyntheticSpec spec;
    spec.topology = "family";
    spec.graphs_per_class = 50;
    spec.families = 10;
    spec.feature_dim = 3;
    spec.node_jitter = 0.0;
    spec.ordered_codes = true;
    auto graphs = make_synthetic_dataset(spec, 1);
    std::map<std::pair<double, double>, std::set<std::int64_t>> classes_per_code;
    for (const auto& g : graphs) classes_per_code[{g.features[0], g.features[1]}].insert(g.label);
    EXPECT_EQ(classes_per_code.size(), 10u);
    for (const auto& [code, cls] : classes_per_code) EXPECT_EQ(cls.size(), 1u);
}

TEST(SyntheticTest, DegenerateSpecsRejected) {
    SyntheticSpec spec;
    spec.graphs_per_class = 0;
    EXPECT_THROW(make_synthetic_dataset(spec, 0), DatasetError);
    spec = SyntheticSpec{};
    spec.classes = 1;
    EXPECT_THROW(make_synthetic_dataset(spec, 0), DatasetError);
    spec = SyntheticSpec{};
    spec.topology = "mystery";
    EXPECT_THROW(make_synthetic_dataset(spec, 0), DatasetError);
}

TEST(SyntheticTest, JsonRoundTrip) {
    SyntheticSpec spec;
    spec.topology = "family";
    spec.families = 12;
    spec.noise_sigma = 0.25;
    spec.ordered_codes = true;
    auto back = SyntheticSpec::from_json(spec.to_json());
    EXPECT_EQ(back.to_json(), spec.to_json());
}

TEST(SplitTest, ArithmeticExample) {
    auto plan = make_splits(10, 0.1, 3, 5);
    EXPECT_EQ(plan.test.size(), 1u);
    ASSERT_EQ(plan.folds.size(), 3u);
    std::size_t total = 0;
    for (const auto& f : plan.folds) {
        EXPECT_GE(f.validation.size(), 3u);
        EXPECT_LE(f.validation.size(), 4u);
        total += f.validation.size();
    }
    EXPECT_EQ(total, 9u);
}

TEST(SplitTest, TooSmallRejected) {
    EXPECT_THROW(make_splits(4, 0.1, 3, 0), std::invalid_argument);
    EXPECT_THROW(make_splits(100, 0.0, 3, 0), std::invalid_argument);
    EXPECT_THROW(make_splits(100, 0.2, 1, 0), std::invalid_argument);
}

TEST(SplitTest, PartitionPropertyOverParameterGrid) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t k = 2 + rng() % 9;
        const std::size_t n = k + 2 + rng() % 200;
        const double tf = 0.05 + 0.85 * std::uniform_real_distribution<double>(0, 1)(rng);
        std::vector<std::int64_t> labels(n);
        for (auto& l : labels) l = static_cast<std::int64_t>(rng() % 3);
        const bool stratify = trial % 2 == 0;
        SplitPlan plan;
        try {
            plan = make_splits(n, tf, k, trial, stratify ? std::span<const std::int64_t>(labels)
                                                         : std::span<const std::int64_t>());
        } catch (const std::invalid_argument&) {
            continue;  // too few non-test samples for k folds
        }
        std::set<std::size_t> test(plan.test.begin(), plan.test.end());
        EXPECT_EQ(test.size(), plan.test.size());
        std::set<std::size_t> validation_union;
        for (const auto& f : plan.folds) {
            std::set<std::size_t> all;
            for (auto i : f.train) all.insert(i);
            for (auto i : f.validation) {
                EXPECT_TRUE(all.insert(i).second) << "validation overlaps train";
                validation_union.insert(i);
            }
            for (auto i : plan.test) EXPECT_TRUE(all.insert(i).second) << "test overlaps a fold";
            EXPECT_EQ(all.size(), n);
        }
        EXPECT_EQ(validation_union.size() + test.size(), n);
        auto again = make_splits(n, tf, k, trial, stratify ? std::span<const std::int64_t>(labels)
                                                           : std::span<const std::int64_t>());
        EXPECT_EQ(again.test, plan.test);
        for (std::size_t f = 0; f < k; ++f) EXPECT_EQ(again.folds[f].validation, plan.folds[f].validation);
    }
}

TEST(SplitTest, StratifiedTestSetKeepsClassRatio) {
    std::vector<std::int64_t> labels(200);
    for (std::size_t i = 0; i < 200; ++i) labels[i] = i < 150 ? 0 : 1;
    auto plan = make_splits(200, 0.2, 5, 3, labels);
    std::size_t ones = 0;
    for (auto i : plan.test) ones += labels[i];
    EXPECT_EQ(plan.test.size(), 40u);
    EXPECT_EQ(ones, 10u);
}
