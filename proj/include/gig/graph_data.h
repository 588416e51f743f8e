#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gig/ops.h"
#include "gig/tensor.h"

namespace gig {

class DatasetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Edge = std::pair<std::uint32_t, std::uint32_t>;

// One input sample. Edges are undirected and stored once with first < second.
struct Graph {
    std::size_t node_count = 0;
    std::vector<Edge> edges;
    std::size_t feature_dim = 0;
    std::vector<double> features;  // node_count x feature_dim, row-major
    std::int64_t label = 0;

    // Raw TU columns, kept so datasets can be written back and so the WL
    // kernel has discrete labels. Either may be empty.
    std::vector<std::int64_t> node_labels;
    std::size_t attribute_dim = 0;
    std::vector<double> node_attributes;

    std::span<const double> feature_row(std::size_t node) const {
        return {features.data() + node * feature_dim, feature_dim};
    }
    // Throws DatasetError when an invariant is broken.
    void validate() const;
};

// Adds the edge (a, b) once; self-loops and duplicates are ignored.
// Returns true if it was new.
bool add_undirected_edge(std::vector<Edge>& edges, std::uint32_t a, std::uint32_t b);
// Sorts and removes duplicate undirected edges.
void canonicalize_edges(std::vector<Edge>& edges);

std::size_t num_classes(std::span<const Graph> graphs);

// Block-diagonal stacking of several graphs for one forward pass.
class GraphBatch {
public:
    GraphBatch(std::span<const Graph> dataset, std::span<const std::size_t> indices);
    explicit GraphBatch(std::span<const Graph> graphs);

    std::size_t size() const { return graphs_.size(); }
    std::size_t total_nodes() const { return node_offsets_.back(); }
    std::size_t feature_dim() const { return feature_dim_; }
    const std::vector<const Graph*>& graphs() const { return graphs_; }
    const std::vector<std::size_t>& node_offsets() const { return node_offsets_; }
    const std::vector<std::int64_t>& labels() const { return labels_; }
    // Dataset indices the batch was built from (0..N-1 when built directly).
    const std::vector<std::size_t>& indices() const { return indices_; }
    // Undirected edges in global node numbering, each stored once.
    const std::vector<Edge>& edges() const { return edges_; }
    // Both directions, for message passing.
    const SparseAdjacency& adjacency() const { return adjacency_; }
    const Tensor& features() const { return features_; }

private:
    void build();

    std::vector<const Graph*> graphs_;
    std::vector<std::size_t> indices_;
    std::vector<std::size_t> node_offsets_{0};
    std::vector<std::int64_t> labels_;
    std::vector<Edge> edges_;
    SparseAdjacency adjacency_;
    std::size_t feature_dim_ = 0;
    Tensor features_;
};

// TU Dortmund benchmark layout: <dir>/<name>_A.txt, _graph_indicator.txt,
// _graph_labels.txt, optional _node_labels.txt and _node_attributes.txt.
std::vector<Graph> load_tu_dataset(const std::filesystem::path& directory, const std::string& name);
void write_tu_dataset(const std::filesystem::path& directory, const std::string& name,
                      std::span<const Graph> graphs);

struct SyntheticSpec {
    std::size_t classes = 2;
    std::size_t graphs_per_class = 100;
    std::size_t nodes_min = 6;
    std::size_t nodes_max = 12;
    // "motifs": class-specific topology (cycle, star, path, complete, ...)
    //     with class-conditional Gaussian features.
    // "family": cycles of random length; each graph belongs to a
    //     single-class family sharing a feature code, and the class shows
    //     only in one feature corrupted by graph-level noise.
    std::string topology = "motifs";
    std::size_t feature_dim = 4;
    double noise_sigma = 0.0;
    std::uint64_t seed = 0;
    // family only
    std::size_t families = 8;
    double context_scale = 4.0;
    double class_shift = 1.0;
    double node_jitter = 0.1;  // per-node noise on every feature
    bool ordered_codes = false;  // grid codes, classes alternating per cell

    static SyntheticSpec from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

std::vector<Graph> make_synthetic_dataset(const SyntheticSpec& spec, std::uint64_t seed);
inline std::vector<Graph> make_synthetic_dataset(const SyntheticSpec& spec) {
    return make_synthetic_dataset(spec, spec.seed);
}

struct Fold {
    std::vector<std::size_t> train;
    std::vector<std::size_t> validation;
};

struct SplitPlan {
    std::uint64_t seed = 0;
    double test_fraction = 0.1;
    std::size_t k = 10;
    std::vector<std::size_t> test;
    std::vector<Fold> folds;
};

// Fixed test set plus k-fold train/validation over the remainder. When labels
// are given, both the test draw and the folds are label-stratified.
SplitPlan make_splits(std::size_t n, double test_fraction, std::size_t k, std::uint64_t seed,
                      std::span<const std::int64_t> labels = {});

}  // namespace gig
