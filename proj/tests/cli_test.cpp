#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Result {
    int code = -1;
    std::string out;
    std::string err;
};

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("gig_cli_" + std::to_string(std::random_device{}()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    static std::string slurp(const fs::path& p) {
        std::ifstream in(p);
        std::stringstream s;
        s << in.rdbuf();
        return s.str();
    }

    Result run(const std::string& args) {
        const auto out = dir_ / "stdout.txt", err = dir_ / "stderr.txt";
        const std::string cmd = std::string(GIG_CLI_PATH) + " " + args + " >" + out.string() + " 2>" + err.string();
        const int status = std::system(cmd.c_str());
        return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
    }

    fs::path write(const std::string& name, const std::string& text) {
        std::ofstream(dir_ / name) << text;
        return dir_ / name;
    }

    fs::path small_config() {
        return write("config.json", R"({
  "dataset": {"synthetic": {"classes": 2, "graphs_per_class": 20, "nodes_min": 4, "nodes_max": 7,
                            "feature_dim": 3, "seed": 1}},
  "node_level": {"layer_dims": [8]}, "latent_dims": [8], "classifier": {"gnn_dims": [8]},
  "batch_size": 8, "learning_rate": 0.01, "epochs": 2,
  "split": {"test_fraction": 0.25, "k": 3, "max_folds": 1}
})");
    }

    fs::path dir_;
};

// One line: "gig: error: <kind>: <message>\n"
void expect_error_line(const Result& r, int code, const std::string& kind) {
    EXPECT_EQ(r.code, code) << r.err;
    static const std::regex line("^gig: error: ([a-z]+): [^\n]+\n$");
    std::smatch m;
    ASSERT_TRUE(std::regex_match(r.err, m, line)) << r.err;
    EXPECT_EQ(m[1].str(), kind);
}

}  // namespace

TEST_F(CliTest, MissingSubcommandIsUsageError) { expect_error_line(run(""), 2, "usage"); }

TEST_F(CliTest, UnknownFlagIsUsageError) { expect_error_line(run("train --bogus 1"), 2, "usage"); }

TEST_F(CliTest, MissingDatasetIsUsageError) { expect_error_line(run("train --out " + dir_.string()), 2, "usage"); }

TEST_F(CliTest, UnknownVariantIsConfigError) {
    expect_error_line(run("train --config " + small_config().string() + " --variant transformer"), 3, "config");
}

TEST_F(CliTest, MalformedConfigIsConfigError) {
    expect_error_line(run("train --config " + write("bad.json", "{\"batch_size\": ").string()), 3, "config");
}

TEST_F(CliTest, MissingDatasetDirectoryIsDatasetError) {
    expect_error_line(run("train --config " + small_config().string() + " --dataset " + (dir_ / "NOPE").string()),
                      4, "dataset");
}

TEST_F(CliTest, MissingReportIsRuntimeError) {
    expect_error_line(run("eval --report " + (dir_ / "none.json").string()), 1, "runtime");
}

TEST_F(CliTest, TrainEvalExportRoundTrip) {
    const auto out = dir_ / "run";
    auto r = run("train --config " + small_config().string() + " --variant lgl_kl --seed 3 --out " + out.string());
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("variant lgl_kl accuracy"), std::string::npos);
    EXPECT_TRUE(fs::exists(out / "report.json"));
    EXPECT_TRUE(fs::exists(out / "metrics.csv"));

    r = run("eval --out " + out.string());
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(fs::exists(out / "eval.csv"));

    r = run("export --out " + out.string());
    ASSERT_EQ(r.code, 0) << r.err;
    for (const char* f : {"population_0.dot", "population_0.json", "population_0_values.csv",
                          "population_0_degrees.csv"})
        EXPECT_TRUE(fs::exists(out / f)) << f;

    expect_error_line(run("export --snapshot 9999 --out " + out.string()), 2, "usage");
}

TEST_F(CliTest, TrainOnMutag) {
    const auto out = dir_ / "mutag";
    auto r = run("train --config " + small_config().string() + " --dataset " +
                 (fs::path(GIG_TEST_DATA_DIR) / "MUTAG").string() + " --variant gcn_only --out " + out.string());
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(fs::exists(out / "report.json"));
}

TEST_F(CliTest, SweepWritesCsv) {
    const auto out = dir_ / "sweep";
    auto r = run("sweep-batch-size --config " + small_config().string() +
                 " --variant gcn_only --sizes 4,8 --learning-rates 0.01 --out " + out.string());
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream csv(out / "sweep.csv");
    std::string line;
    std::size_t lines = 0;
    while (std::getline(csv, line)) ++lines;
    EXPECT_EQ(lines, 3u);
}

TEST_F(CliTest, OversizedSweepIsConfigError) {
    expect_error_line(run("sweep-batch-size --config " + small_config().string() + " --sizes 4,1000 --out " +
                          (dir_ / "s").string()),
                      3, "config");
}
