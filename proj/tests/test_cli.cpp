#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef AJSIM_PATH
#error "AJSIM_PATH must point at the built command-line binary"
#endif

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
    const std::string cmd = std::string(AJSIM_PATH) + " " + args + " > cli_out.log 2>&1";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

// A deliberately tiny sc1 experiment so the full pipeline runs in seconds.
void write_tiny_config(const fs::path& path, const fs::path& out_dir) {
    nlohmann::json j;
    j["scenario"] = "sc1";
    j["network"] = {{"channels", 8}, {"users", 1}};
    j["jammer"] = {{"kind", "sweeping"}, {"width", 2}, {"dwell", 5}};
    j["train"] = {{"a", 10},   {"b", 10},    {"hidden", 12},          {"epochs", 3},
                  {"seed", 5}, {"stride", 3}, {"slots_per_episode", 40},
                  {"episodes_per_class", 1}};
    j["eval"] = {{"slots", 40}, {"repetitions", 2}};
    j["dql"] = {{"history", 2}, {"hidden", 16}};
    j["output"] = {{"dir", out_dir.string()}};
    std::ofstream(path) << j.dump(2);
}

} // namespace

TEST_CASE("usage and configuration errors exit with code 2") {
    CHECK(run("--help") == 0);
    CHECK(run("no-such-subcommand") == 2);
    CHECK(run("eval") == 2);                                // missing --config
    CHECK(run("eval --config does_not_exist.json") == 2);   // missing file
    std::ofstream("cli_bad.json") << "{ nope";
    CHECK(run("eval --config cli_bad.json") == 2);          // unparseable file
    fs::remove("cli_bad.json");
    write_tiny_config("cli_tiny.json", "cli_run");
    CHECK(run("train --config cli_tiny.json") == 2);        // dataset not generated yet
    CHECK(run("eval --config cli_tiny.json") == 2);         // checkpoint missing too
    fs::remove("cli_tiny.json");
    fs::remove_all("cli_run");
}

TEST_CASE("generate, train, evaluate, and compare round trip end to end") {
    const fs::path out = "cli_run";
    fs::remove_all(out);
    write_tiny_config("cli_tiny.json", out);

    REQUIRE(run("gen-data --config cli_tiny.json") == 0);
    CHECK(fs::exists(out / "sc1_dataset.csv"));
    CHECK(fs::exists(out / "manifest.json"));

    // Regeneration with the same seed is byte identical.
    const std::string first = slurp(out / "sc1_dataset.csv");
    REQUIRE(run("gen-data --config cli_tiny.json") == 0);
    CHECK(slurp(out / "sc1_dataset.csv") == first);

    REQUIRE(run("train --config cli_tiny.json") == 0);
    CHECK(fs::exists(out / "sc1_model.ckpt"));
    CHECK(fs::exists(out / "loss_curve.csv"));

    REQUIRE(run("eval --config cli_tiny.json") == 0);
    CHECK(fs::exists(out / "report_proposed.json"));
    CHECK(fs::exists(out / "trace_proposed.csv"));

    REQUIRE(run("eval --config cli_tiny.json --method dql") == 0);
    CHECK(fs::exists(out / "report_dql.json"));

    REQUIRE(run("compare " + (out / "report_proposed.json").string() + " " +
                (out / "report_dql.json").string() + " --out " +
                (out / "compare.csv").string()) == 0);
    const std::string csv = slurp(out / "compare.csv");
    CHECK(csv.find("proposed_str") != std::string::npos);
    CHECK(csv.find("dql_str") != std::string::npos);

    fs::remove("cli_tiny.json");
    fs::remove_all(out);
    fs::remove("cli_out.log");
}

TEST_CASE("analytic table covers every jammed count") {
    CHECK(run("analytic --out cli_analytic.csv") == 0);
    const std::string csv = slurp("cli_analytic.csv");
    CHECK(csv.find("jammed_count,er_best_channel,er_interference,er_random") !=
          std::string::npos);
    int lines = 0;
    for (char c : csv)
        if (c == '\n') ++lines;
    CHECK(lines == 13); // header plus one row per jammed count on 12 channels
    fs::remove("cli_analytic.csv");
    fs::remove("cli_out.log");
}
