#include "gig/graph_data.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace gig {

void Graph::validate() const {
    for (const auto& [a, b] : edges) {
        if (a >= node_count || b >= node_count) {
            throw DatasetError("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                               ") outside a graph of " + std::to_string(node_count) + " nodes");
        }
        if (a >= b) throw DatasetError("edges must be stored once as (low, high) without self-loops");
    }
    if (features.size() != node_count * feature_dim) {
        throw DatasetError("feature matrix has " + std::to_string(features.size()) +
                           " values, expected " + std::to_string(node_count) + " x " +
                           std::to_string(feature_dim));
    }
    if (!node_labels.empty() && node_labels.size() != node_count) {
        throw DatasetError("node label count does not match node count");
    }
    if (node_attributes.size() != node_count * attribute_dim) {
        throw DatasetError("node attribute count does not match node count");
    }
}

bool add_undirected_edge(std::vector<Edge>& edges, std::uint32_t a, std::uint32_t b) {
    if (a == b) return false;
    Edge e = a < b ? Edge{a, b} : Edge{b, a};
    if (std::find(edges.begin(), edges.end(), e) != edges.end()) return false;
    edges.push_back(e);
    return true;
}

void canonicalize_edges(std::vector<Edge>& edges) {
    for (auto& e : edges) {
        if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::erase_if(edges, [](const Edge& e) { return e.first == e.second; });
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

std::size_t num_classes(std::span<const Graph> graphs) {
    std::int64_t hi = -1;
    for (const auto& g : graphs) hi = std::max(hi, g.label);
    return static_cast<std::size_t>(hi + 1);
}

// ---------------------------------------------------------------- batching

GraphBatch::GraphBatch(std::span<const Graph> dataset, std::span<const std::size_t> indices) {
    for (auto i : indices) {
        if (i >= dataset.size()) throw std::out_of_range("batch index outside the dataset");
        graphs_.push_back(&dataset[i]);
        indices_.push_back(i);
    }
    build();
}

GraphBatch::GraphBatch(std::span<const Graph> graphs) {
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        graphs_.push_back(&graphs[i]);
        indices_.push_back(i);
    }
    build();
}

void GraphBatch::build() {
    if (graphs_.empty()) throw std::invalid_argument("empty graph batch");
    feature_dim_ = graphs_.front()->feature_dim;
    std::size_t total = 0;
    for (const Graph* g : graphs_) {
        if (g->feature_dim != feature_dim_) {
            throw std::invalid_argument("graphs in a batch must share the feature dimension");
        }
        total += g->node_count;
        node_offsets_.push_back(total);
        labels_.push_back(g->label);
    }
    std::vector<double> feats;
    feats.reserve(total * feature_dim_);
    std::vector<std::size_t> degree(total, 0);
    for (std::size_t gi = 0; gi < graphs_.size(); ++gi) {
        const Graph& g = *graphs_[gi];
        feats.insert(feats.end(), g.features.begin(), g.features.end());
        const auto base = static_cast<std::uint32_t>(node_offsets_[gi]);
        for (const auto& [a, b] : g.edges) {
            edges_.emplace_back(base + a, base + b);
            ++degree[base + a];
            ++degree[base + b];
        }
    }
    features_ = Tensor::from({total, feature_dim_}, std::move(feats));

    adjacency_.rows = total;
    adjacency_.row_start.assign(total + 1, 0);
    for (std::size_t i = 0; i < total; ++i) adjacency_.row_start[i + 1] = adjacency_.row_start[i] + degree[i];
    adjacency_.indices.assign(adjacency_.row_start.back(), 0);
    std::vector<std::size_t> fill(adjacency_.row_start.begin(), adjacency_.row_start.end() - 1);
    for (const auto& [a, b] : edges_) {
        adjacency_.indices[fill[a]++] = b;
        adjacency_.indices[fill[b]++] = a;
    }
}

// ---------------------------------------------------------------- TU format

namespace {

std::filesystem::path tu_file(const std::filesystem::path& dir, const std::string& name,
                              const char* suffix) {
    return dir / (name + suffix);
}

std::vector<std::string> read_lines(const std::filesystem::path& path, bool mandatory) {
    std::ifstream in(path);
    if (!in) {
        if (mandatory) throw DatasetError("missing dataset file: " + path.string());
        return {};
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const bool blank = std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
        if (!blank) lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> split_commas(const std::string& line) {
    std::vector<std::string> parts;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    return parts;
}

std::int64_t parse_int(const std::string& text, const std::filesystem::path& file, std::size_t line) {
    try {
        std::size_t used = 0;
        const auto v = std::stoll(text, &used);
        if (text.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw DatasetError(file.filename().string() + ":" + std::to_string(line) +
                           ": expected an integer, got '" + text + "'");
    }
}

double parse_double(const std::string& text, const std::filesystem::path& file, std::size_t line) {
    try {
        return std::stod(text);
    } catch (const std::exception&) {
        throw DatasetError(file.filename().string() + ":" + std::to_string(line) +
                           ": expected a number, got '" + text + "'");
    }
}

}  // namespace

std::vector<Graph> load_tu_dataset(const std::filesystem::path& directory, const std::string& name) {
    const auto edge_path = tu_file(directory, name, "_A.txt");
    const auto indicator_path = tu_file(directory, name, "_graph_indicator.txt");
    const auto graph_label_path = tu_file(directory, name, "_graph_labels.txt");
    const auto node_label_path = tu_file(directory, name, "_node_labels.txt");
    const auto attribute_path = tu_file(directory, name, "_node_attributes.txt");

    const auto edge_lines = read_lines(edge_path, true);
    const auto indicator_lines = read_lines(indicator_path, true);
    const auto graph_label_lines = read_lines(graph_label_path, true);
    const auto node_label_lines = read_lines(node_label_path, false);
    const auto attribute_lines = read_lines(attribute_path, false);

    const std::size_t total_nodes = indicator_lines.size();
    std::vector<std::size_t> graph_of(total_nodes);
    std::vector<std::size_t> local_of(total_nodes);
    std::size_t graph_count = graph_label_lines.size();
    std::vector<Graph> graphs(graph_count);
    for (std::size_t i = 0; i < total_nodes; ++i) {
        const auto gid = parse_int(indicator_lines[i], indicator_path, i + 1);
        if (gid < 1 || static_cast<std::size_t>(gid) > graph_count) {
            throw DatasetError(indicator_path.filename().string() + ":" + std::to_string(i + 1) +
                               ": graph id " + std::to_string(gid) + " outside [1, " +
                               std::to_string(graph_count) + "]");
        }
        graph_of[i] = static_cast<std::size_t>(gid - 1);
        local_of[i] = graphs[graph_of[i]].node_count++;
    }

    for (std::size_t l = 0; l < edge_lines.size(); ++l) {
        const auto parts = split_commas(edge_lines[l]);
        if (parts.size() != 2) {
            throw DatasetError(edge_path.filename().string() + ":" + std::to_string(l + 1) +
                               ": expected 'u, v'");
        }
        const auto u = parse_int(parts[0], edge_path, l + 1);
        const auto v = parse_int(parts[1], edge_path, l + 1);
        for (auto x : {u, v}) {
            if (x < 1 || static_cast<std::size_t>(x) > total_nodes) {
                throw DatasetError(edge_path.filename().string() + ":" + std::to_string(l + 1) +
                                   ": node " + std::to_string(x) + " outside [1, " +
                                   std::to_string(total_nodes) + "]");
            }
        }
        const auto a = static_cast<std::size_t>(u - 1), b = static_cast<std::size_t>(v - 1);
        if (graph_of[a] != graph_of[b]) {
            throw DatasetError(edge_path.filename().string() + ":" + std::to_string(l + 1) +
                               ": edge joins nodes of graphs " + std::to_string(graph_of[a] + 1) +
                               " and " + std::to_string(graph_of[b] + 1));
        }
        auto la = static_cast<std::uint32_t>(local_of[a]), lb = static_cast<std::uint32_t>(local_of[b]);
        if (la != lb) graphs[graph_of[a]].edges.emplace_back(std::min(la, lb), std::max(la, lb));
    }
    for (auto& g : graphs) canonicalize_edges(g.edges);

    // Graph labels remapped to contiguous [0, C) in ascending raw order.
    std::vector<std::int64_t> raw_labels(graph_count);
    for (std::size_t i = 0; i < graph_count; ++i) raw_labels[i] = parse_int(graph_label_lines[i], graph_label_path, i + 1);
    std::map<std::int64_t, std::int64_t> label_map;
    for (auto v : raw_labels) label_map.emplace(v, 0);
    std::int64_t next = 0;
    for (auto& [raw, mapped] : label_map) mapped = next++;
    for (std::size_t i = 0; i < graph_count; ++i) graphs[i].label = label_map[raw_labels[i]];

    const bool has_node_labels = !node_label_lines.empty();
    const bool has_attributes = !attribute_lines.empty();
    if (has_node_labels && node_label_lines.size() != total_nodes) {
        throw DatasetError(node_label_path.filename().string() + ": " +
                           std::to_string(node_label_lines.size()) + " lines for " +
                           std::to_string(total_nodes) + " nodes");
    }
    if (has_attributes && attribute_lines.size() != total_nodes) {
        throw DatasetError(attribute_path.filename().string() + ": " +
                           std::to_string(attribute_lines.size()) + " lines for " +
                           std::to_string(total_nodes) + " nodes");
    }

    std::map<std::int64_t, std::size_t> node_label_index;
    std::vector<std::int64_t> node_labels(has_node_labels ? total_nodes : 0);
    for (std::size_t i = 0; i < node_labels.size(); ++i) {
        node_labels[i] = parse_int(split_commas(node_label_lines[i]).front(), node_label_path, i + 1);
        node_label_index.emplace(node_labels[i], 0);
    }
    std::size_t next_index = 0;
    for (auto& [raw, idx] : node_label_index) idx = next_index++;
    const std::size_t one_hot_dim = node_label_index.size();

    std::size_t attr_dim = 0;
    std::vector<std::vector<double>> attributes(has_attributes ? total_nodes : 0);
    for (std::size_t i = 0; i < attributes.size(); ++i) {
        for (const auto& part : split_commas(attribute_lines[i])) {
            attributes[i].push_back(parse_double(part, attribute_path, i + 1));
        }
        if (i == 0) attr_dim = attributes[i].size();
        if (attributes[i].size() != attr_dim) {
            throw DatasetError(attribute_path.filename().string() + ":" + std::to_string(i + 1) +
                               ": expected " + std::to_string(attr_dim) + " attributes");
        }
    }

    const std::size_t feature_dim = (has_node_labels || has_attributes) ? one_hot_dim + attr_dim : 1;
    for (auto& g : graphs) {
        g.feature_dim = feature_dim;
        g.features.reserve(g.node_count * feature_dim);
        g.attribute_dim = attr_dim;
    }
    for (std::size_t i = 0; i < total_nodes; ++i) {
        Graph& g = graphs[graph_of[i]];
        if (!has_node_labels && !has_attributes) {
            g.features.push_back(1.0);
            continue;
        }
        if (has_node_labels) {
            g.node_labels.push_back(node_labels[i]);
            for (std::size_t c = 0; c < one_hot_dim; ++c) {
                g.features.push_back(node_label_index[node_labels[i]] == c ? 1.0 : 0.0);
            }
        }
        if (has_attributes) {
            g.features.insert(g.features.end(), attributes[i].begin(), attributes[i].end());
            g.node_attributes.insert(g.node_attributes.end(), attributes[i].begin(), attributes[i].end());
        }
    }
    // Nodes of one graph appear in indicator order; features were appended
    // in that order, which matches local_of.
    for (const auto& g : graphs) g.validate();
    return graphs;
}

void write_tu_dataset(const std::filesystem::path& directory, const std::string& name,
                      std::span<const Graph> graphs) {
    std::filesystem::create_directories(directory);
    auto open = [&](const char* suffix) {
        std::ofstream out(tu_file(directory, name, suffix));
        if (!out) throw DatasetError("cannot write " + tu_file(directory, name, suffix).string());
        out << std::setprecision(17);
        return out;
    };
    auto edges = open("_A.txt");
    auto indicator = open("_graph_indicator.txt");
    auto labels = open("_graph_labels.txt");
    const bool with_labels = !graphs.empty() && !graphs.front().node_labels.empty();
    const bool with_attributes = !graphs.empty() && graphs.front().attribute_dim > 0;
    std::ofstream node_labels, attributes;
    if (with_labels) node_labels = open("_node_labels.txt");
    if (with_attributes) attributes = open("_node_attributes.txt");

    std::size_t base = 1;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const Graph& g = graphs[gi];
        labels << g.label << '\n';
        for (std::size_t v = 0; v < g.node_count; ++v) {
            indicator << gi + 1 << '\n';
            if (with_labels) node_labels << g.node_labels.at(v) << '\n';
            if (with_attributes) {
                for (std::size_t c = 0; c < g.attribute_dim; ++c) {
                    attributes << (c ? ", " : "") << g.node_attributes.at(v * g.attribute_dim + c);
                }
                attributes << '\n';
            }
        }
        for (const auto& [a, b] : g.edges) {
            edges << base + a << ", " << base + b << '\n' << base + b << ", " << base + a << '\n';
        }
        base += g.node_count;
    }
}

// ---------------------------------------------------------------- synthetic

SyntheticSpec SyntheticSpec::from_json(const nlohmann::json& j) {
    SyntheticSpec s;
    s.classes = j.value("classes", s.classes);
    s.graphs_per_class = j.value("graphs_per_class", s.graphs_per_class);
    s.nodes_min = j.value("nodes_min", s.nodes_min);
    s.nodes_max = j.value("nodes_max", s.nodes_max);
    s.topology = j.value("topology", s.topology);
    s.feature_dim = j.value("feature_dim", s.feature_dim);
    s.noise_sigma = j.value("noise_sigma", s.noise_sigma);
    s.seed = j.value("seed", s.seed);
    s.families = j.value("families", s.families);
    s.context_scale = j.value("context_scale", s.context_scale);
    s.class_shift = j.value("class_shift", s.class_shift);
    s.node_jitter = j.value("node_jitter", s.node_jitter);
    s.ordered_codes = j.value("ordered_codes", s.ordered_codes);
    return s;
}

nlohmann::json SyntheticSpec::to_json() const {
    return {{"classes", classes},         {"graphs_per_class", graphs_per_class},
            {"nodes_min", nodes_min},     {"nodes_max", nodes_max},
            {"topology", topology},       {"feature_dim", feature_dim},
            {"noise_sigma", noise_sigma}, {"seed", seed},
            {"families", families},       {"context_scale", context_scale},
            {"class_shift", class_shift},  {"node_jitter", node_jitter},
            {"ordered_codes", ordered_codes}};
}

namespace {

enum class Motif { cycle, star, path, complete, wheel };

void build_motif(Graph& g, Motif motif) {
    const auto n = static_cast<std::uint32_t>(g.node_count);
    switch (motif) {
        case Motif::cycle:
            for (std::uint32_t i = 0; i < n; ++i) add_undirected_edge(g.edges, i, (i + 1) % n);
            break;
        case Motif::star:
            for (std::uint32_t i = 1; i < n; ++i) add_undirected_edge(g.edges, 0, i);
            break;
        case Motif::path:
            for (std::uint32_t i = 0; i + 1 < n; ++i) add_undirected_edge(g.edges, i, i + 1);
            break;
        case Motif::complete:
            for (std::uint32_t i = 0; i < n; ++i)
                for (std::uint32_t j = i + 1; j < n; ++j) add_undirected_edge(g.edges, i, j);
            break;
        case Motif::wheel:
            for (std::uint32_t i = 1; i < n; ++i) {
                add_undirected_edge(g.edges, 0, i);
                add_undirected_edge(g.edges, i, i + 1 < n ? i + 1 : 1);
            }
            break;
    }
    canonicalize_edges(g.edges);
}

// Grid cells whose coordinate sum is congruent to c mod classes go to the
// families of class c (family f has class f % classes).
std::vector<std::vector<double>> checkerboard_codes(std::size_t families, std::size_t classes, std::size_t dim,
                                                    double scale, std::mt19937_64& rng) {
    const std::size_t per_class = (families + classes - 1) / classes;
    std::size_t side = 2;
    auto cells = [&] {
        std::size_t n = 1;
        for (std::size_t d = 0; d < dim; ++d) n *= side;
        return n;
    };
    while (cells() / classes < per_class + 1) ++side;
    std::vector<std::vector<std::vector<std::size_t>>> by_class(classes);
    for (std::size_t cell = 0; cell < cells(); ++cell) {
        std::vector<std::size_t> digit(dim);
        std::size_t rest = cell, sum = 0;
        for (std::size_t d = 0; d < dim; ++d) {
            digit[d] = rest % side;
            rest /= side;
            sum += digit[d];
        }
        by_class[sum % classes].push_back(std::move(digit));
    }
    for (auto& list : by_class) std::shuffle(list.begin(), list.end(), rng);
    std::vector<std::vector<double>> codes(families, std::vector<double>(dim));
    for (std::size_t f = 0; f < families; ++f) {
        const auto& digit = by_class[f % classes][f / classes];
        for (std::size_t d = 0; d < dim; ++d) {
            const double u = (static_cast<double>(digit[d]) + 0.5) / static_cast<double>(side);
            codes[f][d] = scale * (u - 0.5);
        }
    }
    return codes;
}

}  // namespace

std::vector<Graph> make_synthetic_dataset(const SyntheticSpec& spec, std::uint64_t seed) {
    if (spec.classes < 2) throw DatasetError("synthetic spec needs at least 2 classes");
    if (spec.graphs_per_class == 0) throw DatasetError("synthetic spec has a class with 0 samples");
    if (spec.nodes_min < 2 || spec.nodes_max < spec.nodes_min) {
        throw DatasetError("synthetic spec needs 2 <= nodes_min <= nodes_max");
    }
    if (spec.feature_dim == 0) throw DatasetError("synthetic spec needs feature_dim > 0");
    if (spec.noise_sigma < 0.0) throw DatasetError("synthetic spec needs noise_sigma >= 0");
    const bool family = spec.topology == "family";
    if (!family && spec.topology != "motifs") {
        throw DatasetError("unknown synthetic topology '" + spec.topology + "'");
    }
    if (family && (spec.families < spec.classes || spec.feature_dim < 2)) {
        throw DatasetError("family topology needs families >= classes and feature_dim >= 2");
    }

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> size_dist(spec.nodes_min, spec.nodes_max);

    // Family codes occupy all but the last feature; the last carries the
    // class signal. Families are pure: family f has class f % classes.
    // Codes form a Latin hypercube over [-scale/2, scale/2]: along every
    // dimension the families sit on evenly spaced, shuffled positions. With
    // ordered_codes the codes sit on a regular grid instead and classes
    // alternate like a checkerboard, so adjacent cells differ in class.
    const std::size_t code_dim = spec.feature_dim - 1;
    std::vector<std::vector<double>> codes(family ? spec.families : 0, std::vector<double>(code_dim));
    if (family && spec.ordered_codes) {
        codes = checkerboard_codes(spec.families, spec.classes, code_dim, spec.context_scale, rng);
    } else if (family) {
        std::vector<std::size_t> slot(spec.families);
        for (std::size_t d = 0; d < code_dim; ++d) {
            std::iota(slot.begin(), slot.end(), 0);
            std::shuffle(slot.begin(), slot.end(), rng);
            for (std::size_t f = 0; f < spec.families; ++f) {
                const double u = (static_cast<double>(slot[f]) + 0.5) / static_cast<double>(spec.families);
                codes[f][d] = spec.context_scale * (u - 0.5);
            }
        }
    }
    const std::size_t families_per_class = family ? std::max<std::size_t>(1, spec.families / spec.classes) : 0;

    const std::size_t total = spec.classes * spec.graphs_per_class;
    std::vector<Graph> graphs(total);
    for (std::size_t i = 0; i < total; ++i) {
        Graph& g = graphs[i];
        const std::size_t cls = i % spec.classes;
        g.label = static_cast<std::int64_t>(cls);
        const std::size_t fam = family ? cls + spec.classes * ((i / spec.classes) % families_per_class) : 0;
        g.node_count = size_dist(rng);
        g.feature_dim = spec.feature_dim;
        g.features.resize(g.node_count * spec.feature_dim);
        if (!family) {
            build_motif(g, static_cast<Motif>(cls % 5));
            for (std::size_t v = 0; v < g.node_count; ++v) {
                for (std::size_t d = 0; d < spec.feature_dim; ++d) {
                    const double mean = (d % spec.classes == cls) ? 1.0 : 0.0;
                    g.features[v * spec.feature_dim + d] = mean + spec.noise_sigma * normal(rng);
                }
            }
        } else {
            // Every node has degree 2, so neither size nor topology tells
            // families apart.
            build_motif(g, Motif::cycle);
            const auto& code = codes[fam];
            const double centered = static_cast<double>(cls) - 0.5 * static_cast<double>(spec.classes - 1);
            // Graph-level noise: pooling over nodes cannot average it away.
            const double signal = spec.class_shift * centered + spec.noise_sigma * normal(rng);
            for (std::size_t v = 0; v < g.node_count; ++v) {
                for (std::size_t d = 0; d < code_dim; ++d) {
                    g.features[v * spec.feature_dim + d] = code[d] + spec.node_jitter * normal(rng);
                }
                g.features[v * spec.feature_dim + code_dim] = signal + spec.node_jitter * normal(rng);
            }
        }
        g.validate();
    }
    return graphs;
}

// ---------------------------------------------------------------- splits

SplitPlan make_splits(std::size_t n, double test_fraction, std::size_t k, std::uint64_t seed,
                      std::span<const std::int64_t> labels) {
    if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
        throw std::invalid_argument("test_fraction must lie in (0, 1)");
    }
    if (k < 2) throw std::invalid_argument("k-fold split needs k >= 2");
    if (n < k + 2) {
        throw std::invalid_argument("dataset of " + std::to_string(n) + " samples is too small for " +
                                    std::to_string(k) + " folds plus a test set");
    }
    if (!labels.empty() && labels.size() != n) {
        throw std::invalid_argument("label vector length does not match n");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    // Group by label, keeping the shuffled order inside each group; dealing
    // from this list by stride keeps every slice label-stratified.
    if (!labels.empty()) {
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
    }

    auto test_count = static_cast<std::size_t>(std::llround(test_fraction * static_cast<double>(n)));
    test_count = std::clamp<std::size_t>(test_count, 1, n - k);

    SplitPlan plan;
    plan.seed = seed;
    plan.test_fraction = test_fraction;
    plan.k = k;
    std::vector<char> is_test(n, 0);
    for (std::size_t t = 0; t < test_count; ++t) {
        const auto pos = static_cast<std::size_t>((static_cast<double>(t) + 0.5) *
                                                  static_cast<double>(n) / static_cast<double>(test_count));
        is_test[std::min(pos, n - 1)] = 1;
    }
    std::vector<std::size_t> rest;
    for (std::size_t p = 0; p < n; ++p) {
        (is_test[p] ? plan.test : rest).push_back(order[p]);
    }
    std::vector<std::vector<std::size_t>> fold_members(k);
    for (std::size_t p = 0; p < rest.size(); ++p) fold_members[p % k].push_back(rest[p]);
    plan.folds.resize(k);
    for (std::size_t f = 0; f < k; ++f) {
        plan.folds[f].validation = fold_members[f];
        for (std::size_t o = 0; o < k; ++o) {
            if (o != f) plan.folds[f].train.insert(plan.folds[f].train.end(), fold_members[o].begin(), fold_members[o].end());
        }
        std::sort(plan.folds[f].train.begin(), plan.folds[f].train.end());
        std::sort(plan.folds[f].validation.begin(), plan.folds[f].validation.end());
    }
    std::sort(plan.test.begin(), plan.test.end());
    return plan;
}

}  // namespace gig
