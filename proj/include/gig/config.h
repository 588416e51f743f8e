#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gig/graph_data.h"
#include "gig/node_level.h"
#include "gig/population_classifier.h"

namespace gig {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ModelVariant { gcn_only, random, knn, dgcnn, lgl, lgl_kl };

ModelVariant parse_variant(const std::string& name);
std::string to_string(ModelVariant variant);
bool learns_population(ModelVariant variant);

struct DatasetSource {
    // TU dataset: <tu_path>/<tu_name>_A.txt etc.
    std::filesystem::path tu_path;
    std::string tu_name;
    std::optional<SyntheticSpec> synthetic;

    // A directory is read as a TU dataset named after its last component;
    // a .json file as a synthetic spec.
    static DatasetSource from_path(const std::filesystem::path& path);
    std::vector<Graph> load() const;
};

struct SplitConfig {
    double test_fraction = 0.1;
    std::size_t k = 10;
    std::size_t repeats = 1;
    std::size_t max_folds = 0;  // 0 = all k folds

    std::size_t folds_to_run() const { return max_folds == 0 ? k : std::min(max_folds, k); }
};

struct RunConfig {
    DatasetSource dataset;
    ModelVariant variant = ModelVariant::lgl_kl;
    NodeLevelConfig node_level;
    std::vector<std::size_t> latent_dims{64};
    // An empty head means a single layer to the class count.
    ClassifierConfig classifier{{64}, {}};
    double alpha = 1.0;
    std::size_t batch_size = 64;
    std::size_t eval_batch_size = 0;  // 0 = batch_size
    double learning_rate = 1e-3;
    std::size_t epochs = 200;
    std::uint64_t seed = 0;
    SplitConfig split;
    Pooling pooling = Pooling::mean;

    double random_expected_degree = 10.0;
    std::size_t knn_k = 10;
    std::size_t wl_iterations = 3;
    // Keep test-time population graphs in the report.
    bool keep_snapshots = true;

    static RunConfig from_json(const nlohmann::json& j);
    static RunConfig load(const std::filesystem::path& path);
    nlohmann::json to_json() const;

    double effective_alpha() const { return variant == ModelVariant::lgl_kl ? alpha : 0.0; }
    std::size_t effective_eval_batch_size() const { return eval_batch_size ? eval_batch_size : batch_size; }
    // Resolves the class count into the head and checks dimensions; forces
    // alpha to 0 for variants without the degree loss.
    void finalize(std::size_t num_classes);
    void validate() const;
};

}  // namespace gig
