#include "gig/export.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace gig {

namespace {

void require_square(const Tensor& a, const char* what) {
    if (a.rank() != 2 || a.dim(0) != a.dim(1)) {
        throw std::invalid_argument(std::string(what) + ": adjacency must be square, got " + to_string(a.shape()));
    }
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out.precision(17);
    return out;
}

std::filesystem::path with_suffix(const std::filesystem::path& stem, const std::string& suffix) {
    return stem.parent_path() / (stem.filename().string() + suffix);
}

}  // namespace

double default_plot_threshold(ModelVariant variant) {
    return variant == ModelVariant::lgl_kl ? kLglKlPlotThreshold : kLglPlotThreshold;
}

std::vector<WeightedEdge> thresholded_edges(const Tensor& adjacency, double threshold) {
    require_square(adjacency, "thresholded_edges");
    const std::size_t n = adjacency.dim(0);
    std::vector<WeightedEdge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double w = std::max(adjacency.at(i, j), adjacency.at(j, i));
            if (w > threshold) edges.push_back({i, j, w});
        }
    }
    return edges;
}

GraphExportPaths export_population_graph(const Tensor& adjacency, std::span<const std::int64_t> labels,
                                         std::span<const std::int64_t> predictions, double threshold,
                                         const std::filesystem::path& stem) {
    require_square(adjacency, "export_population_graph");
    const std::size_t n = adjacency.dim(0);
    if (!(threshold >= 0.0 && threshold <= 1.0)) throw std::invalid_argument("threshold must lie in [0, 1]");
    if (labels.size() != n || predictions.size() != n) {
        throw std::invalid_argument("export_population_graph: labels and predictions must have one entry per node");
    }
    const auto edges = thresholded_edges(adjacency, threshold);
    GraphExportPaths paths{with_suffix(stem, ".dot"), with_suffix(stem, ".json")};

    auto dot = open_for_write(paths.dot);
    dot << "graph population {\n";
    for (std::size_t i = 0; i < n; ++i) {
        const bool wrong = labels[i] != predictions[i];
        dot << "  " << i << " [class=" << labels[i] << ", predicted=" << predictions[i]
            << ", misclassified=" << (wrong ? "true" : "false") << ", color=" << (wrong ? "red" : "black")
            << "];\n";
    }
    for (const auto& e : edges) dot << "  " << e.source << " -- " << e.target << " [weight=" << e.weight << "];\n";
    dot << "}\n";
    if (!dot) throw std::runtime_error("failed writing " + paths.dot.string());

    nlohmann::json j;
    j["node_count"] = n;
    j["threshold"] = threshold;
    j["labels"] = std::vector<std::int64_t>(labels.begin(), labels.end());
    j["predictions"] = std::vector<std::int64_t>(predictions.begin(), predictions.end());
    nlohmann::json list = nlohmann::json::array();
    for (const auto& e : edges) list.push_back({e.source, e.target, e.weight});
    j["edges"] = list;
    auto js = open_for_write(paths.json);
    js << j.dump(1) << '\n';
    if (!js) throw std::runtime_error("failed writing " + paths.json.string());
    return paths;
}

EdgeListFile read_edge_list(const std::filesystem::path& json_path) {
    std::ifstream in(json_path);
    if (!in) throw std::runtime_error("cannot read " + json_path.string());
    try {
        auto j = nlohmann::json::parse(in);
        EdgeListFile f;
        f.node_count = j.at("node_count");
        f.threshold = j.at("threshold");
        for (const auto& e : j.at("edges")) f.edges.push_back({e.at(0), e.at(1), e.at(2)});
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(json_path.string() + ": malformed edge list: " + e.what());
    }
}

std::size_t Histogram::total() const {
    std::size_t t = 0;
    for (auto c : counts) t += c;
    return t;
}

Histogram make_histogram(std::span<const double> values, double lower, double upper, std::size_t bins) {
    if (bins == 0) throw std::invalid_argument("histogram needs at least one bin");
    if (!(upper > lower)) upper = lower + 1.0;
    Histogram h{lower, upper, std::vector<std::size_t>(bins, 0)};
    const double width = h.bin_width();
    for (double v : values) {
        auto b = static_cast<std::ptrdiff_t>(std::floor((v - lower) / width));
        b = std::clamp<std::ptrdiff_t>(b, 0, static_cast<std::ptrdiff_t>(bins) - 1);
        ++h.counts[static_cast<std::size_t>(b)];
    }
    return h;
}

Histogram value_histogram(const Tensor& adjacency, std::size_t bins) {
    require_square(adjacency, "value_histogram");
    const std::size_t n = adjacency.dim(0);
    std::vector<double> values;
    values.reserve(n * (n > 0 ? n - 1 : 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) values.push_back(adjacency.at(i, j));
    return make_histogram(values, 0.0, 1.0, bins);
}

DegreeHistograms degree_histograms(const Tensor& adjacency, std::size_t bins) {
    require_square(adjacency, "degree_histograms");
    const std::size_t n = adjacency.dim(0);
    std::vector<double> soft(n, 0.0), hard(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double a = adjacency.at(i, j);
            soft[i] += a;
            if (a > 0.5) hard[i] += a;
        }
    }
    const double upper = n > 1 ? static_cast<double>(n - 1) : 1.0;
    return {make_histogram(soft, 0.0, upper, bins), make_histogram(hard, 0.0, upper, bins)};
}

HistogramExportPaths export_histograms(const Tensor& adjacency, const std::filesystem::path& stem) {
    HistogramExportPaths paths{with_suffix(stem, "_values.csv"), with_suffix(stem, "_degrees.csv")};
    const auto values = value_histogram(adjacency);
    const auto degrees = degree_histograms(adjacency);

    auto v = open_for_write(paths.values);
    v << "bin,lower,upper,count\n";
    for (std::size_t b = 0; b < values.counts.size(); ++b) {
        v << b << ',' << values.lower + b * values.bin_width() << ',' << values.lower + (b + 1) * values.bin_width()
          << ',' << values.counts[b] << '\n';
    }
    if (!v) throw std::runtime_error("failed writing " + paths.values.string());

    auto d = open_for_write(paths.degrees);
    d << "bin,lower,upper,continuous_count,thresholded_count\n";
    const auto& c = degrees.continuous;
    for (std::size_t b = 0; b < c.counts.size(); ++b) {
        d << b << ',' << c.lower + b * c.bin_width() << ',' << c.lower + (b + 1) * c.bin_width() << ','
          << c.counts[b] << ',' << degrees.thresholded.counts[b] << '\n';
    }
    if (!d) throw std::runtime_error("failed writing " + paths.degrees.string());
    return paths;
}

}  // namespace gig
