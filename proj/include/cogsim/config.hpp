#pragma once

#include <array>
#include <map>
#include <string>

#include "cogsim/types.hpp"

namespace cogsim {

// Per-layer parameters of the sensing cascade.
struct LayerParams {
    Vec alpha;                 // input weights, one per feature dimension
    Vec beta;                  // memory weights, oldest trace first
    int removal_period = 1;    // steps a trace survives (T_i >= 1)
    GainRule gain_rule = GainRule::unit;

    bool operator==(const LayerParams&) const = default;
};

// Indirect-experience scores attached to a stimulus label.
struct SupportScores {
    double plausibility = 0.0;
    double credibility = 0.0;
    double possibility = 0.0;

    bool operator==(const SupportScores&) const = default;
};

// Full agent configuration. Loaded from a flat key=value document; the
// stub and support tables may live inline or in referenced CSV files.
struct AgentConfig {
    std::size_t k = 8;         // feature dimension
    double sensation_threshold = 0.0;   // H
    double sensation_bound = 1.0;       // S_b
    double perception_bound = 1.0;      // P_b
    double affection_bound = 1.0;       // A_b
    double saturation = 1.0;            // H_c, fixed at 1
    double radius = 2007.0;             // hypersphere radius R

    // Support fusion weights per layer: [0] plausibility, [1] credibility,
    // [2] possibility.
    std::array<std::array<double, 4>, 3> support_weights{{
        {1.0, 1.0, 1.0, 1.0},
        {1.0, 1.0, 1.0, 1.0},
        {1.0, 1.0, 1.0, 1.0},
    }};

    std::array<double, 4> awareness_weights{1.0, 1.0, 1.0, 1.0};      // phi
    std::array<double, 4> consciousness_weights{1.0, 1.0, 1.0, 1.0};  // psi
    double awareness_gain = 1.0;       // k6
    double consciousness_gain = 1.0;   // k7

    std::array<LayerParams, 4> layers;

    std::vector<std::string> emotion_classes;
    std::map<std::string, int> semantic_environment;  // class -> {-1,0,1}
    std::map<std::string, int> semantic_subjective;

    // Classifier stub: per-label probability rows over emotion_classes.
    std::map<std::string, Vec> stub_rows;
    // Optional per-class centroids for the nearest-centroid fallback.
    std::map<std::string, Vec> centroids;
    // Support scores keyed by stimulus label; absent labels contribute 0.
    std::map<std::string, SupportScores> support_scores;

    bool operator==(const AgentConfig&) const = default;

    // Built-in configuration: eight emotion classes, fourteen stimulus
    // labels with stub rows and support scores, unit weights, R = 2007.
    static AgentConfig defaults();
};

// Returns cfg unchanged iff every invariant holds; otherwise throws
// errc::config naming the first violated invariant.
const AgentConfig& validate_config(const AgentConfig& cfg);

// Column j of the support-weight matrix (layer-indexed).
std::array<double, 3> support_weights_for_layer(const AgentConfig& cfg, Layer layer);

// Support scores for a label; zeros when the label is not in the table.
SupportScores support_for_label(const AgentConfig& cfg, const std::string& label);

}  // namespace cogsim
