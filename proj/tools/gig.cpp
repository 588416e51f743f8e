// Command-line front end: train, sweep-batch-size, export, eval.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gig/config.h"
#include "gig/export.h"
#include "gig/trainer.h"

namespace fs = std::filesystem;

namespace {

struct CommonOptions {
    std::string config;
    std::string dataset;
    std::string variant;
    std::optional<std::uint64_t> seed;
    std::string out = ".";
    std::optional<std::size_t> epochs;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
    cmd->add_option("--config", o.config, "RunConfig JSON");
    cmd->add_option("--dataset", o.dataset, "TU dataset directory or synthetic spec JSON");
    cmd->add_option("--variant", o.variant, "gcn_only|random|knn|dgcnn|lgl|lgl_kl");
    cmd->add_option("--seed", o.seed, "root seed");
    cmd->add_option("--out", o.out, "output directory");
    cmd->add_option("--epochs", o.epochs, "override epoch count");
}

gig::RunConfig resolve_config(const CommonOptions& o) {
    gig::RunConfig c = o.config.empty() ? gig::RunConfig{} : gig::RunConfig::load(o.config);
    if (!o.dataset.empty()) c.dataset = gig::DatasetSource::from_path(o.dataset);
    if (!o.variant.empty()) c.variant = gig::parse_variant(o.variant);
    if (o.seed) c.seed = *o.seed;
    if (o.epochs) c.epochs = *o.epochs;
    if (!c.dataset.synthetic && c.dataset.tu_name.empty()) {
        throw UsageError("no dataset: pass --dataset or set it in --config");
    }
    c.validate();
    return c;
}

fs::path ensure_dir(const std::string& dir) {
    fs::path p(dir);
    std::error_code ec;
    fs::create_directories(p, ec);
    if (!fs::is_directory(p)) throw std::runtime_error("cannot create output directory " + p.string());
    return p;
}

void write_metrics_csv(const fs::path& path, const gig::RunReport& report) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out.precision(17);
    out << "repeat,fold,best_epoch,best_validation_loss,test_loss,test_accuracy\n";
    for (const auto& f : report.folds) {
        out << f.repeat << ',' << f.fold << ',' << f.best_epoch << ',' << f.best_validation_loss << ','
            << f.test_loss << ',' << f.test_accuracy << '\n';
    }
}

std::string percent_line(double mean, double stddev) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f +- %.1f", 100.0 * mean, 100.0 * stddev);
    return buf;
}

int run_train(const CommonOptions& o) {
    auto config = resolve_config(o);
    auto dir = ensure_dir(o.out);
    auto report = gig::train(config);
    report.write(dir / "report.json");
    write_metrics_csv(dir / "metrics.csv", report);
    std::cout << "variant " << gig::to_string(config.variant) << " accuracy "
              << percent_line(report.mean_accuracy, report.std_accuracy) << '\n';
    return 0;
}

int run_sweep(const CommonOptions& o, const std::vector<std::size_t>& sizes, const std::vector<double>& rates) {
    auto config = resolve_config(o);
    auto dir = ensure_dir(o.out);
    auto dataset = config.dataset.load();
    auto rows = gig::batch_size_sweep(config, dataset, sizes, rates.empty() ? gig::kSweepLearningRates : rates);
    gig::write_sweep_csv(dir / "sweep.csv", rows);
    for (const auto& r : rows) {
        std::cout << "batch " << r.batch_size << " lr " << r.learning_rate << " accuracy "
                  << percent_line(r.mean_accuracy, r.std_accuracy) << '\n';
    }
    return 0;
}

fs::path report_path(const CommonOptions& o, const std::string& explicit_path) {
    return explicit_path.empty() ? fs::path(o.out) / "report.json" : fs::path(explicit_path);
}

int run_export(const CommonOptions& o, const std::string& report_file, std::size_t snapshot,
               std::optional<double> threshold) {
    auto report = gig::RunReport::read(report_path(o, report_file));
    if (report.snapshots.empty()) throw std::runtime_error("report holds no population snapshots");
    if (snapshot >= report.snapshots.size()) {
        throw UsageError("snapshot " + std::to_string(snapshot) + " out of range (report has " +
                         std::to_string(report.snapshots.size()) + ")");
    }
    gig::ModelVariant variant = gig::parse_variant(report.config.value("model_variant", std::string("lgl_kl")));
    if (!o.variant.empty()) variant = gig::parse_variant(o.variant);
    const double t = threshold.value_or(gig::default_plot_threshold(variant));
    const auto& snap = report.snapshots[snapshot];
    auto a = gig::Tensor::matrix(snap.adjacency);
    auto dir = ensure_dir(o.out);
    const auto stem = dir / ("population_" + std::to_string(snapshot));
    auto g = gig::export_population_graph(a, snap.labels, snap.predictions, t, stem);
    auto h = gig::export_histograms(a, stem);
    std::cout << g.dot.string() << '\n' << g.json.string() << '\n' << h.values.string() << '\n'
              << h.degrees.string() << '\n';
    return 0;
}

int run_eval(const CommonOptions& o, const std::string& report_file) {
    auto report = gig::RunReport::read(report_path(o, report_file));
    std::vector<double> fold_acc;
    for (const auto& f : report.folds) fold_acc.push_back(f.test_accuracy);
    const auto over_repeats = gig::summarize(report.repeat_accuracies);
    const auto over_folds = gig::summarize(fold_acc);
    std::size_t correct = 0;
    for (const auto& p : report.predictions) correct += p.correct;
    auto dir = ensure_dir(o.out);
    std::ofstream out(dir / "eval.csv");
    if (!out) throw std::runtime_error("cannot write " + (dir / "eval.csv").string());
    out.precision(17);
    out << "scope,count,mean_accuracy,std_accuracy\n";
    out << "repeats," << report.repeat_accuracies.size() << ',' << over_repeats.mean << ',' << over_repeats.stddev
        << '\n';
    out << "folds," << fold_acc.size() << ',' << over_folds.mean << ',' << over_folds.stddev << '\n';
    std::cout << "accuracy " << percent_line(over_repeats.mean, over_repeats.stddev) << " over "
              << report.repeat_accuracies.size() << " repeats; " << correct << '/' << report.predictions.size()
              << " test predictions correct\n";
    return 0;
}

std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

int fail(const char* kind, const std::string& message, int code) {
    std::cerr << "gig: error: " << kind << ": " << one_line(message) << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph-in-Graph training and export"};
    app.require_subcommand(1);
    CommonOptions o;

    auto* train = app.add_subcommand("train", "train and evaluate with the k-fold protocol");
    add_common(train, o);

    auto* sweep = app.add_subcommand("sweep-batch-size", "accuracy against population batch size");
    add_common(sweep, o);
    std::vector<std::size_t> sizes{8, 16, 32, 64};
    std::vector<double> rates;
    sweep->add_option("--sizes", sizes, "batch sizes")->delimiter(',');
    sweep->add_option("--learning-rates", rates, "learning-rate grid")->delimiter(',');

    auto* exp = app.add_subcommand("export", "population graph DOT/JSON and histogram CSVs from a report");
    add_common(exp, o);
    std::string report_file;
    std::size_t snapshot = 0;
    std::optional<double> threshold;
    exp->add_option("--report", report_file, "report JSON (default <out>/report.json)");
    exp->add_option("--snapshot", snapshot, "snapshot index");
    exp->add_option("--threshold", threshold, "edge threshold (default by variant)");

    auto* eval = app.add_subcommand("eval", "summarize a report");
    add_common(eval, o);
    eval->add_option("--report", report_file, "report JSON (default <out>/report.json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("usage", e.what(), 2);
    }

    try {
        if (*train) return run_train(o);
        if (*sweep) return run_sweep(o, sizes, rates);
        if (*exp) return run_export(o, report_file, snapshot, threshold);
        if (*eval) return run_eval(o, report_file);
    } catch (const UsageError& e) {
        return fail("usage", e.what(), 2);
    } catch (const gig::ConfigError& e) {
        return fail("config", e.what(), 3);
    } catch (const gig::DatasetError& e) {
        return fail("dataset", e.what(), 4);
    } catch (const gig::TrainingError& e) {
        return fail("training", e.what(), 5);
    } catch (const std::exception& e) {
        return fail("runtime", e.what(), 1);
    }
    return fail("usage", "no subcommand", 2);
}
