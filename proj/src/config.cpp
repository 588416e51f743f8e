#include "gig/config.h"

#include <fstream>

namespace gig {

ModelVariant parse_variant(const std::string& name) {
    if (name == "gcn_only") return ModelVariant::gcn_only;
    if (name == "random") return ModelVariant::random;
    if (name == "knn") return ModelVariant::knn;
    if (name == "dgcnn") return ModelVariant::dgcnn;
    if (name == "lgl") return ModelVariant::lgl;
    if (name == "lgl_kl") return ModelVariant::lgl_kl;
    throw ConfigError("unknown model variant '" + name +
                      "' (expected gcn_only, random, knn, dgcnn, lgl or lgl_kl)");
}

std::string to_string(ModelVariant variant) {
    switch (variant) {
        case ModelVariant::gcn_only: return "gcn_only";
        case ModelVariant::random: return "random";
        case ModelVariant::knn: return "knn";
        case ModelVariant::dgcnn: return "dgcnn";
        case ModelVariant::lgl: return "lgl";
        case ModelVariant::lgl_kl: return "lgl_kl";
    }
    return "unknown";
}

bool learns_population(ModelVariant variant) {
    return variant == ModelVariant::lgl || variant == ModelVariant::lgl_kl;
}

DatasetSource DatasetSource::from_path(const std::filesystem::path& path) {
    DatasetSource src;
    if (path.extension() == ".json") {
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot read synthetic spec " + path.string());
        src.synthetic = SyntheticSpec::from_json(nlohmann::json::parse(in));
        return src;
    }
    auto clean = path;
    if (!clean.has_filename()) clean = clean.parent_path();
    src.tu_path = clean;
    src.tu_name = clean.filename().string();
    return src;
}

std::vector<Graph> DatasetSource::load() const {
    if (synthetic) return make_synthetic_dataset(*synthetic);
    if (tu_name.empty()) throw ConfigError("no dataset configured");
    return load_tu_dataset(tu_path, tu_name);
}

namespace {

template <typename T>
void read_if(const nlohmann::json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

RunConfig RunConfig::from_json(const nlohmann::json& j) {
    RunConfig c;
    try {
        if (j.contains("dataset")) {
            const auto& d = j.at("dataset");
            if (d.is_string()) {
                c.dataset = DatasetSource::from_path(d.get<std::string>());
            } else if (d.contains("synthetic")) {
                c.dataset.synthetic = SyntheticSpec::from_json(d.at("synthetic"));
            } else if (d.contains("tu")) {
                c.dataset.tu_path = d.at("tu").at("path").get<std::string>();
                c.dataset.tu_name = d.at("tu").value("name", c.dataset.tu_path.filename().string());
            } else {
                throw ConfigError("dataset must be a path, {\"tu\": ...} or {\"synthetic\": ...}");
            }
        }
        if (j.contains("model_variant")) c.variant = parse_variant(j.at("model_variant").get<std::string>());
        if (j.contains("pooling")) c.pooling = parse_pooling(j.at("pooling").get<std::string>());
        if (j.contains("node_level")) {
            const auto& n = j.at("node_level");
            read_if(n, "layer_dims", c.node_level.layer_dims);
            if (n.contains("pooling")) c.pooling = parse_pooling(n.at("pooling").get<std::string>());
        }
        read_if(j, "latent_dims", c.latent_dims);
        if (j.contains("classifier")) {
            const auto& n = j.at("classifier");
            read_if(n, "gnn_dims", c.classifier.gnn_dims);
            read_if(n, "head_dims", c.classifier.head_dims);
        }
        read_if(j, "alpha", c.alpha);
        read_if(j, "batch_size", c.batch_size);
        read_if(j, "eval_batch_size", c.eval_batch_size);
        read_if(j, "learning_rate", c.learning_rate);
        read_if(j, "epochs", c.epochs);
        read_if(j, "seed", c.seed);
        if (j.contains("split")) {
            const auto& s = j.at("split");
            read_if(s, "test_fraction", c.split.test_fraction);
            read_if(s, "k", c.split.k);
            read_if(s, "repeats", c.split.repeats);
            read_if(s, "max_folds", c.split.max_folds);
        }
        read_if(j, "random_expected_degree", c.random_expected_degree);
        read_if(j, "knn_k", c.knn_k);
        read_if(j, "wl_iterations", c.wl_iterations);
        read_if(j, "keep_snapshots", c.keep_snapshots);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed run config: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    c.node_level.pooling = c.pooling;
    c.validate();
    return c;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config " + path.string());
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    return from_json(j);
}

nlohmann::json RunConfig::to_json() const {
    nlohmann::json d;
    if (dataset.synthetic) {
        d["synthetic"] = dataset.synthetic->to_json();
    } else {
        d["tu"] = {{"path", dataset.tu_path.string()}, {"name", dataset.tu_name}};
    }
    return {{"dataset", d},
            {"model_variant", gig::to_string(variant)},
            {"node_level", {{"layer_dims", node_level.layer_dims}, {"pooling", gig::to_string(pooling)}}},
            {"latent_dims", latent_dims},
            {"classifier", {{"gnn_dims", classifier.gnn_dims}, {"head_dims", classifier.head_dims}}},
            {"alpha", alpha},
            {"batch_size", batch_size},
            {"eval_batch_size", eval_batch_size},
            {"learning_rate", learning_rate},
            {"epochs", epochs},
            {"seed", seed},
            {"split",
             {{"test_fraction", split.test_fraction},
              {"k", split.k},
              {"repeats", split.repeats},
              {"max_folds", split.max_folds}}},
            {"pooling", gig::to_string(pooling)},
            {"random_expected_degree", random_expected_degree},
            {"knn_k", knn_k},
            {"wl_iterations", wl_iterations},
            {"keep_snapshots", keep_snapshots}};
}

void RunConfig::finalize(std::size_t num_classes) {
    if (classifier.head_dims.empty()) {
        classifier.head_dims.push_back(num_classes);
    } else if (classifier.head_dims.back() != num_classes) {
        throw ConfigError("classifier head ends in " + std::to_string(classifier.head_dims.back()) +
                          " outputs but the dataset has " + std::to_string(num_classes) + " classes");
    }
    if (variant != ModelVariant::lgl_kl) alpha = 0.0;
    node_level.pooling = pooling;
    validate();
    classifier.validate();
}

void RunConfig::validate() const {
    auto positive = [](std::size_t v, const char* what) {
        if (v == 0) throw ConfigError(std::string(what) + " must be positive");
    };
    try {
        node_level.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (latent_dims.empty()) throw ConfigError("latent_dims must list at least one layer");
    for (auto d : latent_dims) positive(d, "latent layer size");
    for (auto d : classifier.gnn_dims) positive(d, "classifier layer size");
    for (auto d : classifier.head_dims) positive(d, "classifier head size");
    if (alpha < 0.0) throw ConfigError("alpha must be non-negative");
    if (batch_size < 4) throw ConfigError("batch_size must be at least 4");
    if (!(learning_rate > 0.0)) throw ConfigError("learning_rate must be positive");
    positive(epochs, "epochs");
    positive(split.repeats, "split.repeats");
    if (split.k < 2) throw ConfigError("split.k must be at least 2");
    if (!(split.test_fraction > 0.0 && split.test_fraction < 1.0)) {
        throw ConfigError("split.test_fraction must lie in (0, 1)");
    }
    if (random_expected_degree < 0.0) throw ConfigError("random_expected_degree must be non-negative");
    positive(knn_k, "knn_k");
}

}  // namespace gig
