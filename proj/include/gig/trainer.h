#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "gig/config.h"
#include "gig/graph_data.h"
#include "gig/model.h"

namespace gig {

class TrainingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Deterministic child seed from a root seed and a path of integers.
std::uint64_t derive_seed(std::uint64_t root, std::initializer_list<std::uint64_t> path);

struct EpochRecord {
    std::size_t epoch = 0;
    double train_loss = 0.0;
    double train_accuracy = 0.0;
    double validation_loss = 0.0;
    double validation_accuracy = 0.0;
};

struct SamplePrediction {
    std::size_t repeat = 0;
    std::size_t fold = 0;
    std::size_t index = 0;  // dataset index
    std::int64_t label = 0;
    std::int64_t predicted = 0;
    bool correct = false;
};

// Population graph of one evaluation batch.
struct PopulationSnapshot {
    std::size_t repeat = 0;
    std::size_t fold = 0;
    std::vector<std::size_t> indices;
    std::vector<std::int64_t> labels;
    std::vector<std::int64_t> predictions;
    std::vector<std::vector<double>> adjacency;
};

struct LearnedScalars {
    double temperature = 0.0;
    double theta = 0.0;
    double target_mean = 0.0;
    double target_stddev = 0.0;
};

struct FoldResult {
    std::size_t repeat = 0;
    std::size_t fold = 0;
    std::size_t best_epoch = 0;
    double best_validation_loss = 0.0;
    double test_loss = 0.0;
    double test_accuracy = 0.0;
    LearnedScalars learned;
    std::vector<EpochRecord> history;
};

struct RunReport {
    nlohmann::json config;
    std::vector<FoldResult> folds;
    std::vector<double> repeat_accuracies;  // mean test accuracy of each repeat's fold models
    double mean_accuracy = 0.0;
    double std_accuracy = 0.0;
    std::vector<SamplePrediction> predictions;
    std::vector<PopulationSnapshot> snapshots;

    nlohmann::json to_json() const;
    static RunReport from_json(const nlohmann::json& j);
    // Writes the JSON with a fixed layout, so equal reports give equal bytes.
    void write(const std::filesystem::path& path) const;
    static RunReport read(const std::filesystem::path& path);
};

struct Metrics {
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation, 0 for fewer than 2 values
};

// Fraction of positions where prediction equals label.
double accuracy(std::span<const std::int64_t> predictions, std::span<const std::int64_t> labels);
Metrics summarize(std::span<const double> values);

// Loss and accuracy on `indices`, one population graph per evaluation batch.
struct EvaluationResult {
    double loss = 0.0;
    double accuracy = 0.0;
    std::vector<std::int64_t> predictions;  // aligned with the evaluated order
    std::vector<std::size_t> order;
    std::vector<PopulationSnapshot> snapshots;
};

// Splits `indices` into batches of `batch_size` in the given order; a final
// remainder below 4 joins the previous batch.
std::vector<std::vector<std::size_t>> evaluation_batches(std::span<const std::size_t> indices,
                                                         std::size_t batch_size);

EvaluationResult evaluate_model(const GiGModel& model, std::span<const Graph> dataset,
                                std::span<const std::size_t> indices, std::size_t batch_size,
                                std::uint64_t seed, bool keep_snapshots);

// Trains one model on a train/validation split and returns the model
// restored to its best validation epoch.
struct FoldTraining {
    GiGModel model;
    FoldResult result;
};
FoldTraining train_fold(const RunConfig& config, std::span<const Graph> dataset, const Fold& fold,
                        std::uint64_t seed);

// Full protocol: for each repeat a fresh split, k-fold model selection and
// evaluation of every fold model on the held-out test set.
RunReport train(const RunConfig& config, std::span<const Graph> dataset);
RunReport train(const RunConfig& config);

struct SweepRow {
    std::size_t batch_size = 0;
    double learning_rate = 0.0;
    double validation_loss = 0.0;
    double mean_accuracy = 0.0;
    double std_accuracy = 0.0;
};

inline const std::vector<double> kSweepLearningRates{1e-3, 3e-3, 1e-2};

// For each distinct size: picks the learning rate with the lowest mean
// validation loss, then reports test accuracy mean and std over repeats.
std::vector<SweepRow> batch_size_sweep(const RunConfig& config, std::span<const Graph> dataset,
                                       std::vector<std::size_t> sizes,
                                       const std::vector<double>& learning_rates = kSweepLearningRates);
void write_sweep_csv(const std::filesystem::path& path, std::span<const SweepRow> rows);

}  // namespace gig
