#include "cogsim/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cogsim {

namespace {

using json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_double(const std::string& text, const std::string& where) {
    const std::string t = trim(text);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size())
        fail(errc::parse, where + ": \"" + t + "\" is not a number");
    return value;
}

long long parse_integer(const std::string& text, const std::string& where) {
    const std::string t = trim(text);
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size())
        fail(errc::parse, where + ": \"" + t + "\" is not an integer");
    return value;
}

Vec parse_double_list(const std::string& text, const std::string& where) {
    Vec out;
    for (const auto& field : split(text, ','))
        out.push_back(parse_double(field, where));
    return out;
}

std::vector<std::string> parse_string_list(const std::string& text) {
    std::vector<std::string> out;
    for (const auto& field : split(text, ',')) out.push_back(trim(field));
    return out;
}

GainRule parse_gain_rule(const std::string& text, const std::string& where) {
    const std::string t = trim(text);
    if (t == "unit") return GainRule::unit;
    if (t == "perception_times_attention")
        return GainRule::perception_times_attention;
    if (t == "previous_affection") return GainRule::previous_affection;
    fail(errc::parse, where + ": unknown gain rule \"" + t + "\"");
}

const char* gain_rule_name(GainRule rule) {
    switch (rule) {
        case GainRule::unit: return "unit";
        case GainRule::perception_times_attention:
            return "perception_times_attention";
        case GainRule::previous_affection: return "previous_affection";
    }
    return "unit";
}

std::string join_doubles(std::span<const double> values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ", ";
        out += format_double(values[i]);
    }
    return out;
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io, "cannot open " + path.string());
    return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) fail(errc::io, "cannot write " + path.string());
    return out;
}

json mean_sd_json(const MeanSd& ms) {
    return json{{"mean", ms.mean}, {"sd", ms.sd}};
}

json anova_json(const AnovaResult& a) {
    json out;
    if (std::isinf(a.f))
        out["F"] = "inf";  // zero within-group variance sentinel
    else
        out["F"] = a.f;
    out["p"] = a.p;
    return out;
}

}  // namespace

std::string format_double(double value) {
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc{}) fail(errc::internal, "cannot format double");
    return std::string(buffer, ptr);
}

AgentConfig parse_config(const std::string& text,
                         const std::filesystem::path& base_dir) {
    AgentConfig cfg;
    cfg.layers[0].gain_rule = GainRule::perception_times_attention;
    cfg.layers[2].gain_rule = GainRule::previous_affection;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const std::string where = "config line " + std::to_string(line_no);

        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            fail(errc::parse, where + ": expected key = value");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));

        if (key == "k") {
            cfg.k = static_cast<std::size_t>(parse_integer(value, where));
        } else if (key == "H") {
            cfg.sensation_threshold = parse_double(value, where);
        } else if (key == "S_b") {
            cfg.sensation_bound = parse_double(value, where);
        } else if (key == "P_b") {
            cfg.perception_bound = parse_double(value, where);
        } else if (key == "A_b") {
            cfg.affection_bound = parse_double(value, where);
        } else if (key == "H_c") {
            cfg.saturation = parse_double(value, where);
        } else if (key == "R") {
            cfg.radius = parse_double(value, where);
        } else if (key == "k6") {
            cfg.awareness_gain = parse_double(value, where);
        } else if (key == "k7") {
            cfg.consciousness_gain = parse_double(value, where);
        } else if (key == "phi" || key == "psi") {
            const Vec v = parse_double_list(value, where);
            if (v.size() != 4) fail(errc::parse, where + ": expected 4 weights");
            auto& target = key == "phi" ? cfg.awareness_weights
                                        : cfg.consciousness_weights;
            for (int i = 0; i < 4; ++i) target[i] = v[i];
        } else if (key == "w_plausibility" || key == "w_credibility" ||
                   key == "w_possibility") {
            const Vec v = parse_double_list(value, where);
            if (v.size() != 4) fail(errc::parse, where + ": expected 4 weights");
            const int row = key == "w_plausibility" ? 0
                            : key == "w_credibility" ? 1
                                                     : 2;
            for (int i = 0; i < 4; ++i) cfg.support_weights[row][i] = v[i];
        } else if (key == "emotion_classes") {
            cfg.emotion_classes = parse_string_list(value);
        } else if (key.starts_with("layer")) {
            const std::size_t dot = key.find('.');
            if (dot == std::string::npos)
                fail(errc::parse, where + ": unknown key \"" + key + "\"");
            const long long index =
                parse_integer(key.substr(5, dot - 5), where);
            if (index < 1 || index > 4)
                fail(errc::parse, where + ": layer index must be 1..4");
            LayerParams& layer = cfg.layers[index - 1];
            const std::string field = key.substr(dot + 1);
            if (field == "alpha")
                layer.alpha = parse_double_list(value, where);
            else if (field == "beta")
                layer.beta = parse_double_list(value, where);
            else if (field == "removal_period")
                layer.removal_period =
                    static_cast<int>(parse_integer(value, where));
            else if (field == "gain")
                layer.gain_rule = parse_gain_rule(value, where);
            else
                fail(errc::parse, where + ": unknown key \"" + key + "\"");
        } else if (key.starts_with("semantic_env.") ||
                   key.starts_with("semantic_subj.")) {
            const std::size_t dot = key.find('.');
            const std::string cls = key.substr(dot + 1);
            auto& map = key.starts_with("semantic_env.")
                            ? cfg.semantic_environment
                            : cfg.semantic_subjective;
            map[cls] = static_cast<int>(parse_integer(value, where));
        } else if (key.starts_with("stub.")) {
            cfg.stub_rows[key.substr(5)] = parse_double_list(value, where);
        } else if (key.starts_with("support.")) {
            const Vec v = parse_double_list(value, where);
            if (v.size() != 3)
                fail(errc::parse,
                     where + ": expected plausibility, credibility, possibility");
            cfg.support_scores[key.substr(8)] = {v[0], v[1], v[2]};
        } else if (key.starts_with("centroid.")) {
            cfg.centroids[key.substr(9)] = parse_double_list(value, where);
        } else if (key == "support_table") {
            const auto table = load_support_table(base_dir / value);
            for (const auto& [label, scores] : table)
                cfg.support_scores[label] = scores;
        } else if (key == "stub_table") {
            if (cfg.emotion_classes.empty())
                fail(errc::parse,
                     where + ": emotion_classes must be declared before stub_table");
            const auto table =
                load_stub_table(base_dir / value, cfg.emotion_classes);
            for (const auto& [label, row] : table) cfg.stub_rows[label] = row;
        } else {
            fail(errc::parse, where + ": unknown key \"" + key + "\"");
        }
    }
    return cfg;
}

AgentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str(), path.parent_path());
}

std::string serialize_config(const AgentConfig& cfg) {
    std::string out;
    out += "# cogsim agent configuration\n";
    out += "k = " + std::to_string(cfg.k) + "\n";
    out += "H = " + format_double(cfg.sensation_threshold) + "\n";
    out += "S_b = " + format_double(cfg.sensation_bound) + "\n";
    out += "P_b = " + format_double(cfg.perception_bound) + "\n";
    out += "A_b = " + format_double(cfg.affection_bound) + "\n";
    out += "H_c = " + format_double(cfg.saturation) + "\n";
    out += "R = " + format_double(cfg.radius) + "\n";
    out += "k6 = " + format_double(cfg.awareness_gain) + "\n";
    out += "k7 = " + format_double(cfg.consciousness_gain) + "\n";
    out += "phi = " + join_doubles(cfg.awareness_weights) + "\n";
    out += "psi = " + join_doubles(cfg.consciousness_weights) + "\n";
    out += "w_plausibility = " + join_doubles(cfg.support_weights[0]) + "\n";
    out += "w_credibility = " + join_doubles(cfg.support_weights[1]) + "\n";
    out += "w_possibility = " + join_doubles(cfg.support_weights[2]) + "\n";

    out += "emotion_classes = ";
    for (std::size_t i = 0; i < cfg.emotion_classes.size(); ++i) {
        if (i > 0) out += ", ";
        out += cfg.emotion_classes[i];
    }
    out += "\n";

    for (int i = 0; i < 4; ++i) {
        const std::string name = "layer" + std::to_string(i + 1);
        const LayerParams& layer = cfg.layers[i];
        out += "\n";
        out += name + ".alpha = " + join_doubles(layer.alpha) + "\n";
        out += name + ".beta = " + join_doubles(layer.beta) + "\n";
        out += name + ".removal_period = " + std::to_string(layer.removal_period) +
               "\n";
        out += name + ".gain = " + std::string(gain_rule_name(layer.gain_rule)) +
               "\n";
    }

    out += "\n";
    for (const auto& [cls, sem] : cfg.semantic_environment)
        out += "semantic_env." + cls + " = " + std::to_string(sem) + "\n";
    for (const auto& [cls, sem] : cfg.semantic_subjective)
        out += "semantic_subj." + cls + " = " + std::to_string(sem) + "\n";

    if (!cfg.stub_rows.empty()) out += "\n";
    for (const auto& [label, row] : cfg.stub_rows)
        out += "stub." + label + " = " + join_doubles(row) + "\n";
    if (!cfg.support_scores.empty()) out += "\n";
    for (const auto& [label, s] : cfg.support_scores)
        out += "support." + label + " = " + format_double(s.plausibility) + ", " +
               format_double(s.credibility) + ", " + format_double(s.possibility) +
               "\n";
    for (const auto& [cls, centroid] : cfg.centroids)
        out += "centroid." + cls + " = " + join_doubles(centroid) + "\n";
    return out;
}

void save_config(const AgentConfig& cfg, const std::filesystem::path& path) {
    std::ofstream out = open_output(path);
    out << serialize_config(cfg);
    if (!out) fail(errc::io, "cannot write " + path.string());
}

std::map<std::string, SupportScores> load_support_table(
    const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    std::map<std::string, SupportScores> table;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const std::string where =
            path.filename().string() + " line " + std::to_string(line_no);
        if (!header_seen) {
            if (stripped != "label,plausibility,credibility,possibility")
                fail(errc::parse,
                     where +
                         ": expected header "
                         "\"label,plausibility,credibility,possibility\"");
            header_seen = true;
            continue;
        }
        const auto fields = split(stripped, ',');
        if (fields.size() != 4)
            fail(errc::parse, where + ": expected 4 fields");
        table[trim(fields[0])] = {parse_double(fields[1], where),
                                  parse_double(fields[2], where),
                                  parse_double(fields[3], where)};
    }
    if (!header_seen) fail(errc::parse, path.string() + ": empty support table");
    return table;
}

std::map<std::string, Vec> load_stub_table(
    const std::filesystem::path& path,
    const std::vector<std::string>& emotion_classes) {
    std::ifstream in = open_input(path);
    std::map<std::string, Vec> table;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const std::string where =
            path.filename().string() + " line " + std::to_string(line_no);
        if (!header_seen) {
            std::string expected = "label";
            for (const auto& cls : emotion_classes) expected += "," + cls;
            if (stripped != expected)
                fail(errc::parse, where + ": header must be \"" + expected + "\"");
            header_seen = true;
            continue;
        }
        const auto fields = split(stripped, ',');
        if (fields.size() != emotion_classes.size() + 1)
            fail(errc::parse, where + ": expected " +
                                  std::to_string(emotion_classes.size() + 1) +
                                  " fields");
        Vec row;
        double sum = 0.0;
        for (std::size_t i = 1; i < fields.size(); ++i) {
            row.push_back(parse_double(fields[i], where));
            sum += row.back();
        }
        if (std::abs(sum - 1.0) > 1e-9)
            fail(errc::parse, where + ": probabilities must sum to 1");
        table[trim(fields[0])] = std::move(row);
    }
    if (!header_seen) fail(errc::parse, path.string() + ": empty stub table");
    return table;
}

std::vector<StimulusRecord> load_stimulus_stream(
    const std::filesystem::path& path, std::size_t expected_k) {
    std::ifstream in = open_input(path);
    std::vector<StimulusRecord> records;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const std::string where =
            path.filename().string() + " line " + std::to_string(line_no);

        const auto fields = split(stripped, ',');
        if (fields.size() != 3 + expected_k)
            fail(errc::parse, where + ": expected step,label,class plus " +
                                  std::to_string(expected_k) + " features, got " +
                                  std::to_string(fields.size()) + " fields");
        StimulusRecord record;
        record.step = parse_integer(fields[0], where);
        record.label = trim(fields[1]);
        if (record.label.empty()) fail(errc::parse, where + ": empty label");
        const std::string cls = trim(fields[2]);
        if (!cls.empty()) record.expected_class = cls;
        for (std::size_t i = 3; i < fields.size(); ++i)
            record.features.push_back(parse_double(fields[i], where));

        const long long expected_step =
            records.empty() ? 1 : records.back().step + 1;
        if (record.step != expected_step)
            fail(errc::stream, where + ": step " + std::to_string(record.step) +
                                   " out of order (expected " +
                                   std::to_string(expected_step) + ")");
        records.push_back(std::move(record));
    }
    return records;
}

void write_traces_csv(std::span<const StepTrace> traces,
                      const std::filesystem::path& path) {
    std::ofstream out = open_output(path);
    out << "step,label,r1_mean,r2_mean,r3_mean,r4_mean,"
           "attention,awareness,consciousness,"
           "pr1,pr2,pr3,pr4,o1,o2,o3,o4,"
           "h1,h2,h3,h4,e1,e2,e3,e4,y1,y2,y3,y4,"
           "top_class,semantic_env,semantic_subj\n";
    for (const auto& t : traces) {
        out << t.step << ',' << t.label;
        for (double v : t.layer_mean) out << ',' << format_double(v);
        out << ',' << format_double(t.attention) << ','
            << format_double(t.awareness) << ','
            << format_double(t.consciousness);
        for (double v : t.probability) out << ',' << format_double(v);
        for (double v : t.expectation_score) out << ',' << format_double(v);
        for (double v : t.graph_entropy) out << ',' << format_double(v);
        for (double v : t.graph_energy) out << ',' << format_double(v);
        for (double v : t.intensity) out << ',' << format_double(v);
        out << ',' << t.top_class << ',' << t.semantic_environment << ','
            << t.semantic_subjective << '\n';
    }
    if (!out) fail(errc::io, "cannot write " + path.string());
}

std::vector<StepTrace> read_traces_csv(const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    std::vector<StepTrace> traces;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        if (!header_seen) {
            if (!stripped.starts_with("step,label,"))
                fail(errc::parse, path.string() + ": missing trace header");
            header_seen = true;
            continue;
        }
        const std::string where =
            path.filename().string() + " line " + std::to_string(line_no);
        const auto fields = split(stripped, ',');
        if (fields.size() != 32)
            fail(errc::parse, where + ": expected 32 fields");
        StepTrace t;
        std::size_t i = 0;
        t.step = parse_integer(fields[i++], where);
        t.label = fields[i++];
        for (double& v : t.layer_mean) v = parse_double(fields[i++], where);
        t.attention = parse_double(fields[i++], where);
        t.awareness = parse_double(fields[i++], where);
        t.consciousness = parse_double(fields[i++], where);
        for (double& v : t.probability) v = parse_double(fields[i++], where);
        for (double& v : t.expectation_score) v = parse_double(fields[i++], where);
        for (double& v : t.graph_entropy) v = parse_double(fields[i++], where);
        for (double& v : t.graph_energy) v = parse_double(fields[i++], where);
        for (double& v : t.intensity) v = parse_double(fields[i++], where);
        t.top_class = fields[i++];
        t.semantic_environment = static_cast<int>(parse_integer(fields[i++], where));
        t.semantic_subjective = static_cast<int>(parse_integer(fields[i++], where));
        traces.push_back(std::move(t));
    }
    if (!header_seen) fail(errc::parse, path.string() + ": empty trace file");
    return traces;
}

std::string summary_to_json(const RunSummary& summary) {
    json root;
    root["support"] = summary.support;
    root["steps"] = summary.steps;

    const auto group_json = [](const std::map<std::string, GroupStats>& groups) {
        json out = json::object();
        for (const auto& [key, s] : groups) {
            json g;
            g["count"] = s.count;
            g["attention"] = mean_sd_json(s.attention);
            g["awareness"] = mean_sd_json(s.awareness);
            g["consciousness"] = mean_sd_json(s.consciousness);
            out[key] = std::move(g);
        }
        return out;
    };
    root["by_label"] = group_json(summary.by_label);
    root["by_class"] = group_json(summary.by_class);

    const auto metric_anova_json = [](const MetricAnova& a) {
        if (!a.valid) return json(nullptr);
        json out;
        out["attention"] = anova_json(a.attention);
        out["awareness"] = anova_json(a.awareness);
        out["consciousness"] = anova_json(a.consciousness);
        return out;
    };
    root["anova"] = {{"by_label", metric_anova_json(summary.anova_by_label)},
                     {"by_class", metric_anova_json(summary.anova_by_class)}};
    return root.dump(2) + "\n";
}

void write_summary_json(const RunSummary& summary,
                        const std::filesystem::path& path) {
    std::ofstream out = open_output(path);
    out << summary_to_json(summary);
    if (!out) fail(errc::io, "cannot write " + path.string());
}

void write_graphs_csv(const std::array<ConsciousnessGraph, 4>& graphs,
                      const std::array<HypersphereStore, 4>& stores,
                      const std::filesystem::path& nodes_path,
                      const std::filesystem::path& edges_path) {
    std::ofstream nodes = open_output(nodes_path);
    nodes << "layer,id,semantic,pr\n";
    for (int i = 0; i < 4; ++i)
        for (const auto& node : graphs[i].nodes)
            nodes << i + 1 << ',' << node.ref_id << ','
                  << semantic_value(node.semantic) << ','
                  << format_double(stores[i].probability_of(node.ref_id)) << '\n';
    if (!nodes) fail(errc::io, "cannot write " + nodes_path.string());

    std::ofstream edges = open_output(edges_path);
    edges << "layer,l,h,weight,normalized_weight\n";
    for (int i = 0; i < 4; ++i) {
        const std::vector<double> normalized = normalize_adjacency(graphs[i]);
        for (std::size_t e = 0; e < graphs[i].edges.size(); ++e) {
            const GraphEdge& edge = graphs[i].edges[e];
            edges << i + 1 << ',' << graphs[i].nodes[edge.a].ref_id << ','
                  << graphs[i].nodes[edge.b].ref_id << ','
                  << format_double(edge.weight) << ','
                  << format_double(normalized[e]) << '\n';
        }
    }
    if (!edges) fail(errc::io, "cannot write " + edges_path.string());
}

void write_delta_csv(std::span<const DeltaRow> rows,
                     const std::filesystem::path& path) {
    std::ofstream out = open_output(path);
    out << "grouping,group,"
           "attention_no_support,attention_support,attention_delta,"
           "awareness_no_support,awareness_support,awareness_delta,"
           "consciousness_no_support,consciousness_support,consciousness_delta\n";
    for (const auto& r : rows) {
        out << r.grouping << ',' << r.group << ','
            << format_double(r.attention_no) << ','
            << format_double(r.attention_with) << ','
            << format_double(r.attention_delta) << ','
            << format_double(r.awareness_no) << ','
            << format_double(r.awareness_with) << ','
            << format_double(r.awareness_delta) << ','
            << format_double(r.consciousness_no) << ','
            << format_double(r.consciousness_with) << ','
            << format_double(r.consciousness_delta) << '\n';
    }
    if (!out) fail(errc::io, "cannot write " + path.string());
}

}  // namespace cogsim
