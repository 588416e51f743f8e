#include "gig/trainer.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "gig/adam.h"

namespace gig {

std::uint64_t derive_seed(std::uint64_t root, std::initializer_list<std::uint64_t> path) {
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    std::uint64_t s = mix(root);
    for (auto p : path) s = mix(s ^ mix(p + 1));
    return s;
}

double accuracy(std::span<const std::int64_t> predictions, std::span<const std::int64_t> labels) {
    if (predictions.size() != labels.size()) {
        throw std::invalid_argument("accuracy: " + std::to_string(predictions.size()) + " predictions for " +
                                    std::to_string(labels.size()) + " labels");
    }
    if (labels.empty()) throw std::invalid_argument("accuracy: no samples");
    std::size_t hits = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) hits += predictions[i] == labels[i];
    return static_cast<double>(hits) / static_cast<double>(labels.size());
}

Metrics summarize(std::span<const double> values) {
    Metrics m;
    if (values.empty()) return m;
    m.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - m.mean) * (v - m.mean);
        m.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    return m;
}

std::vector<std::vector<std::size_t>> evaluation_batches(std::span<const std::size_t> indices,
                                                         std::size_t batch_size) {
    std::vector<std::vector<std::size_t>> batches;
    for (std::size_t start = 0; start < indices.size(); start += batch_size) {
        const std::size_t end = std::min(indices.size(), start + batch_size);
        batches.emplace_back(indices.begin() + static_cast<std::ptrdiff_t>(start),
                             indices.begin() + static_cast<std::ptrdiff_t>(end));
    }
    if (batches.size() > 1 && batches.back().size() < 4) {
        auto tail = std::move(batches.back());
        batches.pop_back();
        batches.back().insert(batches.back().end(), tail.begin(), tail.end());
    }
    return batches;
}

namespace {

std::vector<std::int64_t> argmax_rows(const Tensor& logits) {
    const std::size_t n = logits.dim(0);
    const std::size_t c = logits.dim(1);
    auto d = logits.data();
    std::vector<std::int64_t> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t best = 0;
        for (std::size_t j = 1; j < c; ++j)
            if (d[i * c + j] > d[i * c + best]) best = j;
        out[i] = static_cast<std::int64_t>(best);
    }
    return out;
}

LearnedScalars learned_scalars(const GiGModel& model) {
    LearnedScalars s;
    s.temperature = model.latent().temperature();
    s.theta = model.latent().theta.item();
    s.target_mean = model.target().mean();
    s.target_stddev = model.target().stddev();
    return s;
}

// Numeric failures inside the model (NaN/inf reaching an op) become
// TrainingError with the location attached.
ModelOutput checked_forward(const GiGModel& model, const GraphBatch& batch, std::uint64_t seed,
                            const std::string& where) {
    try {
        return model.forward(batch, seed);
    } catch (const std::domain_error& e) {
        throw TrainingError(where + ": " + e.what());
    }
}

}  // namespace

EvaluationResult evaluate_model(const GiGModel& model, std::span<const Graph> dataset,
                                std::span<const std::size_t> indices, std::size_t batch_size,
                                std::uint64_t seed, bool keep_snapshots) {
    EvaluationResult r;
    if (indices.empty()) return r;
    // Dataset order can be grouped by class, so batches are drawn from a
    // fixed shuffle.
    r.order.assign(indices.begin(), indices.end());
    std::mt19937_64 rng(seed);
    std::shuffle(r.order.begin(), r.order.end(), rng);

    double loss_sum = 0.0;
    std::size_t hits = 0;
    std::size_t b = 0;
    for (const auto& members : evaluation_batches(r.order, batch_size)) {
        GraphBatch batch(dataset, members);
        ModelOutput out = checked_forward(model, batch, derive_seed(seed, {b}), "evaluation batch " + std::to_string(b));
        ++b;
        const double ce = out.ce.item();
        if (!std::isfinite(ce)) throw TrainingError("non-finite evaluation loss");
        loss_sum += ce * static_cast<double>(members.size());
        auto pred = argmax_rows(out.classifier.logits);
        for (std::size_t i = 0; i < members.size(); ++i) hits += pred[i] == batch.labels()[i];
        if (keep_snapshots) {
            PopulationSnapshot snap;
            snap.indices = members;
            snap.labels = batch.labels();
            snap.predictions = pred;
            snap.adjacency = out.adjacency.to_rows();
            r.snapshots.push_back(std::move(snap));
        }
        r.predictions.insert(r.predictions.end(), pred.begin(), pred.end());
    }
    r.loss = loss_sum / static_cast<double>(indices.size());
    r.accuracy = static_cast<double>(hits) / static_cast<double>(indices.size());
    return r;
}

FoldTraining train_fold(const RunConfig& config, std::span<const Graph> dataset, const Fold& fold,
                        std::uint64_t seed) {
    if (dataset.empty()) throw TrainingError("empty dataset");
    if (fold.train.size() < 4) throw TrainingError("training split has fewer than 4 samples");
    GiGModel model(config, dataset.front().feature_dim, derive_seed(seed, {1}));
    std::mt19937_64 shuffle_rng(derive_seed(seed, {2}));
    const std::uint64_t eval_seed = derive_seed(seed, {3});
    const std::size_t eval_batch = config.effective_eval_batch_size();

    AdamState adam(model.trainable_parameters());
    FoldResult result;
    std::vector<std::vector<double>> best = model.snapshot();
    double best_loss = std::numeric_limits<double>::infinity();
    bool threshold_ready = false;

    std::vector<std::size_t> order = fold.train;
    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
        std::shuffle(order.begin(), order.end(), shuffle_rng);
        double loss_sum = 0.0;
        std::size_t hits = 0;
        std::size_t seen = 0;
        for (std::size_t start = 0, b = 0; start < order.size(); start += config.batch_size, ++b) {
            const std::size_t end = std::min(order.size(), start + config.batch_size);
            if (end - start < 4) break;
            std::span<const std::size_t> members(order.data() + start, end - start);
            GraphBatch batch(dataset, members);
            if (!threshold_ready) {
                try {
                    model.initialize_threshold(batch);
                } catch (const std::domain_error& e) {
                    throw TrainingError(std::string("threshold initialization: ") + e.what());
                }
                threshold_ready = true;
            }
            ModelOutput out = checked_forward(model, batch, derive_seed(seed, {4, epoch, b}),
                                              "epoch " + std::to_string(epoch) + " batch " + std::to_string(b));
            const double loss = out.loss.item();
            if (!std::isfinite(loss)) {
                throw TrainingError("non-finite loss at epoch " + std::to_string(epoch) + " batch " +
                                    std::to_string(b));
            }
            out.loss.backward();
            adam_step(adam, config.learning_rate);
            loss_sum += loss * static_cast<double>(members.size());
            auto pred = argmax_rows(out.classifier.logits);
            for (std::size_t i = 0; i < members.size(); ++i) hits += pred[i] == batch.labels()[i];
            seen += members.size();
        }
        EpochRecord rec;
        rec.epoch = epoch;
        if (seen > 0) {
            rec.train_loss = loss_sum / static_cast<double>(seen);
            rec.train_accuracy = static_cast<double>(hits) / static_cast<double>(seen);
        }
        if (!fold.validation.empty()) {
            auto val = evaluate_model(model, dataset, fold.validation, eval_batch, eval_seed, false);
            rec.validation_loss = val.loss;
            rec.validation_accuracy = val.accuracy;
        } else {
            rec.validation_loss = rec.train_loss;
            rec.validation_accuracy = rec.train_accuracy;
        }
        if (rec.validation_loss < best_loss) {
            best_loss = rec.validation_loss;
            best = model.snapshot();
            result.best_epoch = epoch;
        }
        result.history.push_back(rec);
    }
    model.restore(best);
    result.best_validation_loss = best_loss;
    result.learned = learned_scalars(model);
    return {std::move(model), std::move(result)};
}

RunReport train(const RunConfig& config_in, std::span<const Graph> dataset) {
    if (dataset.empty()) throw TrainingError("empty dataset");
    RunConfig config = config_in;
    config.finalize(num_classes(dataset));

    std::vector<std::int64_t> labels;
    labels.reserve(dataset.size());
    for (const auto& g : dataset) labels.push_back(g.label);

    RunReport report;
    report.config = config.to_json();
    for (std::size_t r = 0; r < config.split.repeats; ++r) {
        const std::uint64_t split_seed = derive_seed(config.seed, {r, 0});
        SplitPlan plan = make_splits(dataset.size(), config.split.test_fraction, config.split.k, split_seed, labels);
        std::vector<double> fold_accuracies;
        for (std::size_t f = 0; f < config.split.folds_to_run(); ++f) {
            const std::uint64_t fold_seed = derive_seed(config.seed, {r, f + 1});
            FoldTraining trained = train_fold(config, dataset, plan.folds[f], fold_seed);
            auto test = evaluate_model(trained.model, dataset, plan.test, config.effective_eval_batch_size(),
                                       derive_seed(fold_seed, {5}), config.keep_snapshots);
            FoldResult fr = std::move(trained.result);
            fr.repeat = r;
            fr.fold = f;
            fr.test_loss = test.loss;
            fr.test_accuracy = test.accuracy;
            fold_accuracies.push_back(test.accuracy);
            for (std::size_t i = 0; i < test.order.size(); ++i) {
                SamplePrediction p;
                p.repeat = r;
                p.fold = f;
                p.index = test.order[i];
                p.label = dataset[p.index].label;
                p.predicted = test.predictions[i];
                p.correct = p.label == p.predicted;
                report.predictions.push_back(p);
            }
            for (auto& snap : test.snapshots) {
                snap.repeat = r;
                snap.fold = f;
                report.snapshots.push_back(std::move(snap));
            }
            report.folds.push_back(std::move(fr));
        }
        report.repeat_accuracies.push_back(summarize(fold_accuracies).mean);
    }
    const Metrics m = summarize(report.repeat_accuracies);
    report.mean_accuracy = m.mean;
    report.std_accuracy = m.stddev;
    return report;
}

RunReport train(const RunConfig& config) {
    auto dataset = config.dataset.load();
    return train(config, dataset);
}

nlohmann::json RunReport::to_json() const {
    using nlohmann::json;
    json folds_j = json::array();
    for (const auto& f : folds) {
        json hist = json::array();
        for (const auto& e : f.history) {
            hist.push_back({{"epoch", e.epoch},
                            {"train_loss", e.train_loss},
                            {"train_accuracy", e.train_accuracy},
                            {"validation_loss", e.validation_loss},
                            {"validation_accuracy", e.validation_accuracy}});
        }
        folds_j.push_back({{"repeat", f.repeat},
                           {"fold", f.fold},
                           {"best_epoch", f.best_epoch},
                           {"best_validation_loss", f.best_validation_loss},
                           {"test_loss", f.test_loss},
                           {"test_accuracy", f.test_accuracy},
                           {"temperature", f.learned.temperature},
                           {"theta", f.learned.theta},
                           {"target_mean", f.learned.target_mean},
                           {"target_stddev", f.learned.target_stddev},
                           {"history", hist}});
    }
    json preds = json::array();
    for (const auto& p : predictions) {
        preds.push_back({{"repeat", p.repeat},
                         {"fold", p.fold},
                         {"index", p.index},
                         {"label", p.label},
                         {"predicted", p.predicted},
                         {"correct", p.correct}});
    }
    json snaps = json::array();
    for (const auto& s : snapshots) {
        snaps.push_back({{"repeat", s.repeat},
                         {"fold", s.fold},
                         {"indices", s.indices},
                         {"labels", s.labels},
                         {"predictions", s.predictions},
                         {"adjacency", s.adjacency}});
    }
    return {{"config", config},
            {"mean_accuracy", mean_accuracy},
            {"std_accuracy", std_accuracy},
            {"repeat_accuracies", repeat_accuracies},
            {"folds", folds_j},
            {"predictions", preds},
            {"snapshots", snaps}};
}

RunReport RunReport::from_json(const nlohmann::json& j) {
    RunReport r;
    r.config = j.value("config", nlohmann::json::object());
    r.mean_accuracy = j.at("mean_accuracy").get<double>();
    r.std_accuracy = j.at("std_accuracy").get<double>();
    r.repeat_accuracies = j.at("repeat_accuracies").get<std::vector<double>>();
    for (const auto& f : j.at("folds")) {
        FoldResult fr;
        fr.repeat = f.at("repeat");
        fr.fold = f.at("fold");
        fr.best_epoch = f.at("best_epoch");
        fr.best_validation_loss = f.at("best_validation_loss");
        fr.test_loss = f.at("test_loss");
        fr.test_accuracy = f.at("test_accuracy");
        fr.learned = {f.at("temperature"), f.at("theta"), f.at("target_mean"), f.at("target_stddev")};
        for (const auto& e : f.at("history")) {
            fr.history.push_back({e.at("epoch"), e.at("train_loss"), e.at("train_accuracy"),
                                  e.at("validation_loss"), e.at("validation_accuracy")});
        }
        r.folds.push_back(std::move(fr));
    }
    for (const auto& p : j.at("predictions")) {
        r.predictions.push_back(
            {p.at("repeat"), p.at("fold"), p.at("index"), p.at("label"), p.at("predicted"), p.at("correct")});
    }
    for (const auto& s : j.at("snapshots")) {
        PopulationSnapshot snap;
        snap.repeat = s.at("repeat");
        snap.fold = s.at("fold");
        snap.indices = s.at("indices").get<std::vector<std::size_t>>();
        snap.labels = s.at("labels").get<std::vector<std::int64_t>>();
        snap.predictions = s.at("predictions").get<std::vector<std::int64_t>>();
        snap.adjacency = s.at("adjacency").get<std::vector<std::vector<double>>>();
        r.snapshots.push_back(std::move(snap));
    }
    return r;
}

void RunReport::write(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << to_json().dump(1) << '\n';
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

RunReport RunReport::read(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    try {
        return from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(path.string() + ": malformed report: " + e.what());
    }
}

std::vector<SweepRow> batch_size_sweep(const RunConfig& config, std::span<const Graph> dataset,
                                       std::vector<std::size_t> sizes, const std::vector<double>& learning_rates) {
    if (sizes.empty()) throw ConfigError("batch-size sweep needs at least one size");
    if (learning_rates.empty()) throw ConfigError("batch-size sweep needs at least one learning rate");
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    for (auto s : sizes) {
        if (s > dataset.size()) {
            throw ConfigError("batch size " + std::to_string(s) + " exceeds dataset size " +
                              std::to_string(dataset.size()));
        }
    }
    std::vector<SweepRow> rows;
    for (auto s : sizes) {
        SweepRow best_row;
        double best_val = std::numeric_limits<double>::infinity();
        for (double lr : learning_rates) {
            RunConfig c = config;
            c.batch_size = s;
            c.learning_rate = lr;
            c.keep_snapshots = false;
            RunReport rep = train(c, dataset);
            double val = 0.0;
            for (const auto& f : rep.folds) val += f.best_validation_loss;
            val /= static_cast<double>(rep.folds.size());
            if (val < best_val) {
                best_val = val;
                best_row = {s, lr, val, rep.mean_accuracy, rep.std_accuracy};
            }
        }
        rows.push_back(best_row);
    }
    return rows;
}

void write_sweep_csv(const std::filesystem::path& path, std::span<const SweepRow> rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out.precision(17);
    out << "batch_size,learning_rate,validation_loss,mean_accuracy,std_accuracy\n";
    for (const auto& r : rows) {
        out << r.batch_size << ',' << r.learning_rate << ',' << r.validation_loss << ',' << r.mean_accuracy << ','
            << r.std_accuracy << '\n';
    }
}

}  // namespace gig
