#include "cogsim/config.hpp"

#include <cmath>

namespace cogsim {

namespace {

bool in_unit_interval(double v) { return v >= 0.0 && v <= 1.0; }

bool all_finite(std::span<const double> v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

LayerParams default_layer(std::size_t k, GainRule rule) {
    LayerParams p;
    p.alpha.assign(k, 1.0);
    p.beta = {0.5, 0.25};
    p.removal_period = 3;
    p.gain_rule = rule;
    return p;
}

void check_semantic_map(const std::map<std::string, int>& map,
                        const std::vector<std::string>& classes,
                        const char* channel_name) {
    for (const auto& cls : classes) {
        auto it = map.find(cls);
        if (it == map.end())
            fail(errc::config, std::string(channel_name) +
                                   " semantic map missing class \"" + cls + "\"");
        if (it->second < -1 || it->second > 1)
            fail(errc::config, std::string(channel_name) +
                                   " semantic for class \"" + cls +
                                   "\" must be -1, 0 or 1");
    }
}

}  // namespace

AgentConfig AgentConfig::defaults() {
    AgentConfig cfg;
    cfg.k = 8;
    cfg.emotion_classes = {"neutral", "happiness", "anger",   "fear",
                           "surprise", "contempt", "sadness", "disgust"};
    for (const auto& [cls, sem] :
         std::initializer_list<std::pair<const char*, int>>{
             {"neutral", 0},  {"happiness", 1}, {"anger", -1},
             {"fear", -1},    {"surprise", 1},  {"contempt", -1},
             {"sadness", -1}, {"disgust", -1}}) {
        cfg.semantic_environment[cls] = sem;
        cfg.semantic_subjective[cls] = sem;
    }

    cfg.layers[0] = default_layer(cfg.k, GainRule::perception_times_attention);
    cfg.layers[1] = default_layer(cfg.k, GainRule::unit);
    cfg.layers[2] = default_layer(cfg.k, GainRule::previous_affection);
    cfg.layers[3] = default_layer(cfg.k, GainRule::unit);

    // Class order: neutral, happiness, anger, fear, surprise, contempt,
    // sadness, disgust.
    cfg.stub_rows = {
        {"landscape", {0.93, 0.01, 0.01, 0.01, 0.01, 0.01, 0.01, 0.01}},
        {"beautiful woman", {0.02, 0.86, 0.02, 0.02, 0.02, 0.02, 0.02, 0.02}},
        {"own home", {0.04, 0.90, 0.01, 0.01, 0.01, 0.01, 0.01, 0.01}},
        {"murder of animal", {0.02, 0.02, 0.82, 0.06, 0.02, 0.02, 0.02, 0.02}},
        {"war", {0.02, 0.02, 0.03, 0.85, 0.02, 0.02, 0.02, 0.02}},
        {"man pointing weapon", {0.02, 0.02, 0.10, 0.78, 0.02, 0.02, 0.02, 0.02}},
        {"terrorism", {0.01, 0.01, 0.06, 0.88, 0.01, 0.01, 0.01, 0.01}},
        {"crazy sportsman", {0.03, 0.10, 0.03, 0.03, 0.72, 0.03, 0.03, 0.03}},
        {"politician", {0.02, 0.02, 0.12, 0.02, 0.02, 0.76, 0.02, 0.02}},
        {"parking car", {0.14, 0.03, 0.03, 0.03, 0.03, 0.68, 0.03, 0.03}},
        {"someone's death or sick",
         {0.10, 0.10, 0.10, 0.16, 0.10, 0.10, 0.24, 0.10}},
        {"car accident", {0.10, 0.10, 0.10, 0.18, 0.10, 0.10, 0.22, 0.10}},
        {"injury", {0.10, 0.10, 0.10, 0.10, 0.10, 0.10, 0.18, 0.22}},
        {"autopsy", {0.10, 0.10, 0.10, 0.10, 0.10, 0.10, 0.14, 0.26}},
    };

    cfg.support_scores = {
        {"beautiful woman", {0.2, 0.6, 0.4}},
        {"own home", {0.9, 0.8, 0.5}},
        {"murder of animal", {0.8, 0.6, 0.8}},
        {"war", {0.3, 0.9, 0.2}},
        {"man pointing weapon", {0.6, 0.8, 0.5}},
        {"terrorism", {0.1, 0.8, 0.5}},
        {"crazy sportsman", {0.7, 0.2, 0.9}},
        {"politician", {0.9, 0.9, 0.9}},
        {"parking car", {0.9, 0.8, 0.9}},
        {"someone's death or sick", {0.2, 0.4, 0.6}},
        {"car accident", {0.5, 0.8, 0.7}},
        {"injury", {0.9, 0.7, 0.4}},
        {"autopsy", {0.1, 0.3, 0.6}},
        {"landscape", {0.9, 0.9, 0.8}},
    };
    return cfg;
}

const AgentConfig& validate_config(const AgentConfig& cfg) {
    if (cfg.k < 1) fail(errc::config, "k must be positive");
    if (cfg.emotion_classes.empty())
        fail(errc::config, "emotion_classes must not be empty");
    if (cfg.k < cfg.emotion_classes.size())
        fail(errc::config, "k must be at least the number of emotion classes");
    if (!std::isfinite(cfg.sensation_threshold))
        fail(errc::config, "H must be finite");
    if (cfg.saturation != 1.0) fail(errc::config, "H_c must be 1");
    if (!(cfg.radius > 0.0)) fail(errc::config, "R must be positive");
    if (!(cfg.sensation_bound > 0.0)) fail(errc::config, "S_b must be positive");
    if (!(cfg.perception_bound > 0.0)) fail(errc::config, "P_b must be positive");
    if (!(cfg.affection_bound > 0.0)) fail(errc::config, "A_b must be positive");

    static const char* kWeightNames[3] = {"w_plausibility", "w_credibility",
                                          "w_possibility"};
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 4; ++i)
            if (!in_unit_interval(cfg.support_weights[j][i]))
                fail(errc::config, std::string(kWeightNames[j]) + "[" +
                                       std::to_string(i + 1) +
                                       "] must lie in [0,1]");
    if (!all_finite(cfg.awareness_weights)) fail(errc::config, "phi must be finite");
    if (!all_finite(cfg.consciousness_weights))
        fail(errc::config, "psi must be finite");
    if (!std::isfinite(cfg.awareness_gain)) fail(errc::config, "k6 must be finite");
    if (!std::isfinite(cfg.consciousness_gain))
        fail(errc::config, "k7 must be finite");

    for (int i = 0; i < 4; ++i) {
        const std::string name = "layer" + std::to_string(i + 1);
        const LayerParams& p = cfg.layers[i];
        if (p.alpha.size() != cfg.k)
            fail(errc::config, name + ".alpha must have k entries");
        if (p.removal_period < 1)
            fail(errc::config, name + ".removal_period must be at least 1");
        if (p.beta.size() + 1 < static_cast<std::size_t>(p.removal_period))
            fail(errc::config,
                 name + ".beta must cover the memory window (at least "
                        "removal_period - 1 entries)");
        if (!all_finite(p.alpha) || !all_finite(p.beta))
            fail(errc::config, name + " weights must be finite");
    }

    check_semantic_map(cfg.semantic_environment, cfg.emotion_classes,
                       "environment");
    check_semantic_map(cfg.semantic_subjective, cfg.emotion_classes,
                       "subjective");

    for (const auto& [label, row] : cfg.stub_rows) {
        if (row.size() != cfg.emotion_classes.size())
            fail(errc::config, "stub row for label \"" + label +
                                   "\" must have one entry per emotion class");
        double sum = 0.0;
        for (double p : row) {
            if (!in_unit_interval(p))
                fail(errc::config, "stub row for label \"" + label +
                                       "\" must contain probabilities in [0,1]");
            sum += p;
        }
        if (std::abs(sum - 1.0) > 1e-9)
            fail(errc::config,
                 "stub row for label \"" + label + "\" must sum to 1");
    }

    for (const auto& [label, s] : cfg.support_scores)
        if (!in_unit_interval(s.plausibility) || !in_unit_interval(s.credibility) ||
            !in_unit_interval(s.possibility))
            fail(errc::config, "support scores for label \"" + label +
                                   "\" must lie in [0,1]");

    for (const auto& [cls, centroid] : cfg.centroids) {
        bool known = false;
        for (const auto& name : cfg.emotion_classes) known = known || name == cls;
        if (!known)
            fail(errc::config, "centroid for unknown class \"" + cls + "\"");
        if (centroid.size() != cfg.k)
            fail(errc::config,
                 "centroid for class \"" + cls + "\" must have k entries");
        if (!all_finite(centroid))
            fail(errc::config, "centroid for class \"" + cls + "\" must be finite");
    }

    return cfg;
}

std::array<double, 3> support_weights_for_layer(const AgentConfig& cfg,
                                                Layer layer) {
    const int i = layer_index(layer);
    return {cfg.support_weights[0][i], cfg.support_weights[1][i],
            cfg.support_weights[2][i]};
}

SupportScores support_for_label(const AgentConfig& cfg, const std::string& label) {
    auto it = cfg.support_scores.find(label);
    if (it == cfg.support_scores.end()) return {};
    return it->second;
}

}  // namespace cogsim
