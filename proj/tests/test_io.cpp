#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "cogsim/agent.hpp"
#include "cogsim/io.hpp"
#include "cogsim/synthetic.hpp"

using namespace cogsim;
namespace fs = std::filesystem;

namespace {

const fs::path kDataDir = COGSIM_DATA_DIR;

fs::path temp_dir() {
    const fs::path dir = fs::temp_directory_path() / "cogsim_io_test";
    fs::create_directories(dir);
    return dir;
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

}  // namespace

TEST_CASE("format_double uses the shortest round-trip form") {
    CHECK(format_double(0.25) == "0.25");
    CHECK(format_double(2007.0) == "2007");
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(-3.5e-7) == "-3.5e-07");
}

TEST_CASE("the shipped default config equals the built-in defaults") {
    const AgentConfig loaded = load_config(kDataDir / "default.cfg");
    CHECK(loaded == AgentConfig::defaults());
    CHECK_NOTHROW(validate_config(loaded));
}

TEST_CASE("the shipped support table equals the built-in scores") {
    const auto table = load_support_table(kDataDir / "support_table.csv");
    CHECK(table == AgentConfig::defaults().support_scores);
    CHECK(table.at("landscape").plausibility == 0.9);
    CHECK(table.at("landscape").credibility == 0.9);
    CHECK(table.at("landscape").possibility == 0.8);
    CHECK(table.at("terrorism").plausibility == 0.1);
}

TEST_CASE("the shipped stub table equals the built-in rows") {
    const auto table = load_stub_table(kDataDir / "stub_table.csv",
                                       AgentConfig::defaults().emotion_classes);
    CHECK(table == AgentConfig::defaults().stub_rows);
}

TEST_CASE("the shipped episode loads, has 360 steps and known labels") {
    const AgentConfig cfg = AgentConfig::defaults();
    const auto stream = load_stimulus_stream(kDataDir / "episode.csv", cfg.k);
    CHECK(stream.size() == 360);
    for (const auto& rec : stream) {
        CHECK(cfg.stub_rows.count(rec.label) == 1);
        REQUIRE(rec.expected_class.has_value());
        CHECK(cfg.semantic_subjective.count(*rec.expected_class) == 1);
    }
}

TEST_CASE("config save/load round trip through a file") {
    AgentConfig cfg = AgentConfig::defaults();
    cfg.radius = 1.0 / 3.0;
    cfg.layers[3].beta = {0.7, 0.1};
    const fs::path path = temp_dir() / "roundtrip.cfg";
    save_config(cfg, path);
    CHECK(load_config(path) == cfg);
}

TEST_CASE("unknown config keys are parse errors with a line number") {
    try {
        parse_config("k = 8\nwibble = 3\n");
        FAIL("expected a parse error");
    } catch (const error& e) {
        CHECK(e.code() == errc::parse);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        CHECK(std::string(e.what()).find("wibble") != std::string::npos);
    }
}

TEST_CASE("bad gain rules and malformed numbers are parse errors") {
    CHECK_THROWS_AS(parse_config("layer1.gain = sometimes\n"), error);
    CHECK_THROWS_AS(parse_config("R = two thousand\n"), error);
    CHECK_THROWS_AS(parse_config("phi = 1, 2\n"), error);
}

TEST_CASE("stub_table requires emotion_classes to be declared first") {
    const fs::path table = temp_dir() / "order_stub.csv";
    write_file(table,
               "label,a,b\n"
               "thing,0.5,0.5\n");
    const std::string good =
        "emotion_classes = a, b\nstub_table = order_stub.csv\n";
    const std::string bad =
        "stub_table = order_stub.csv\nemotion_classes = a, b\n";
    CHECK_NOTHROW(parse_config(good, temp_dir()));
    CHECK_THROWS_AS(parse_config(bad, temp_dir()), error);
}

TEST_CASE("trace files with the wrong column count are parse errors") {
    const fs::path path = temp_dir() / "bad_traces.csv";
    write_file(path,
               "step,label,r1_mean\n"
               "1,landscape,0\n");
    CHECK_THROWS_AS(read_traces_csv(path), error);
}

TEST_CASE("stimulus streams reject step gaps, naming the line") {
    const fs::path path = temp_dir() / "gap.csv";
    write_file(path,
               "1,landscape,neutral,0,0\n"
               "3,war,fear,0,0\n");
    try {
        load_stimulus_stream(path, 2);
        FAIL("expected a stream error");
    } catch (const error& e) {
        CHECK(e.code() == errc::stream);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("stimulus streams must start at step one") {
    const fs::path path = temp_dir() / "start.csv";
    write_file(path, "2,landscape,neutral,0,0\n");
    CHECK_THROWS_AS(load_stimulus_stream(path, 2), error);
}

TEST_CASE("stimulus records validate the feature count") {
    const fs::path path = temp_dir() / "short.csv";
    write_file(path, "1,landscape,neutral,0.5\n");
    try {
        load_stimulus_stream(path, 2);
        FAIL("expected a parse error");
    } catch (const error& e) {
        CHECK(e.code() == errc::parse);
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }
}

TEST_CASE("the expected class may be empty") {
    const fs::path path = temp_dir() / "noclass.csv";
    write_file(path, "1,landscape,,0.5,0.25\n");
    const auto stream = load_stimulus_stream(path, 2);
    CHECK_FALSE(stream[0].expected_class.has_value());
    CHECK(stream[0].features == Vec{0.5, 0.25});
}

TEST_CASE("missing files are io errors") {
    CHECK_THROWS_AS(load_config(temp_dir() / "absent.cfg"), error);
    CHECK_THROWS_AS(load_stimulus_stream(temp_dir() / "absent.csv", 2), error);
    CHECK_THROWS_AS(load_support_table(temp_dir() / "absent.csv"), error);
}

TEST_CASE("stub tables reject rows that do not sum to one") {
    const fs::path path = temp_dir() / "badstub.csv";
    write_file(path,
               "label,a,b\n"
               "thing,0.9,0.2\n");
    CHECK_THROWS_AS(load_stub_table(path, {"a", "b"}), error);
}

TEST_CASE("support tables insist on the exact header") {
    const fs::path path = temp_dir() / "badsupport.csv";
    write_file(path, "label,pl,cr,po\nthing,0.1,0.2,0.3\n");
    CHECK_THROWS_AS(load_support_table(path), error);
}

TEST_CASE("traces survive a CSV round trip bit-exactly") {
    const AgentConfig cfg = AgentConfig::defaults();
    const auto stream = synthetic_episode(cfg, 40, 11);
    const auto traces = run_agent(stream, cfg, true);
    const fs::path path = temp_dir() / "traces.csv";
    write_traces_csv(traces, path);
    const auto reread = read_traces_csv(path);
    REQUIRE(reread.size() == traces.size());
    for (std::size_t i = 0; i < traces.size(); ++i) CHECK(reread[i] == traces[i]);
}

TEST_CASE("summary JSON carries groups, anova and the support flag") {
    const AgentConfig cfg = AgentConfig::defaults();
    const auto stream = synthetic_episode(cfg, 60, 12);
    const auto traces = run_agent(stream, cfg, true);
    const std::string json = summary_to_json(make_run_summary(traces, true));
    CHECK(json.find("\"support\": true") != std::string::npos);
    CHECK(json.find("\"by_label\"") != std::string::npos);
    CHECK(json.find("\"by_class\"") != std::string::npos);
    CHECK(json.find("\"anova\"") != std::string::npos);
    CHECK(json.find("landscape") != std::string::npos);
    // The flat-trajectory fixture hits the zero-within-variance sentinel.
    CHECK(json.find("\"F\": \"inf\"") != std::string::npos);
}

TEST_CASE("graph export lists nodes and edges per layer") {
    const AgentConfig cfg = AgentConfig::defaults();
    Agent agent(cfg, false);
    const auto stream = synthetic_episode(cfg, 10, 13);
    for (const auto& rec : stream) agent.step(rec);
    const fs::path nodes_path = temp_dir() / "nodes.csv";
    const fs::path edges_path = temp_dir() / "edges.csv";
    write_graphs_csv(agent.graphs(), agent.stores(), nodes_path, edges_path);

    std::ifstream nodes(nodes_path);
    std::string line;
    std::getline(nodes, line);
    CHECK(line == "layer,id,semantic,pr");
    std::size_t node_rows = 0;
    while (std::getline(nodes, line))
        if (!line.empty()) ++node_rows;
    // One zero-vector hypersphere per layer at the cold-start fixed point.
    CHECK(node_rows == 4);
}
