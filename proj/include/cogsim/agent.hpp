#pragma once

// Per-step cascade for one agent. The layer order is fixed: Sensation ->
// Perception -> Emotion -> classify -> Affection -> Attention -> absorb
// + expectation + Awareness -> graph sync + metrics + Consciousness.

#include <array>
#include <optional>
#include <string>

#include "cogsim/attention.hpp"
#include "cogsim/awareness.hpp"
#include "cogsim/config.hpp"
#include "cogsim/consciousness.hpp"
#include "cogsim/emotion.hpp"
#include "cogsim/sensing.hpp"

namespace cogsim {

struct StimulusRecord {
    long long step = 0;  // strictly increasing from 1, no gaps
    std::string label;
    FeatureVector features;
    std::optional<std::string> expected_class;
};

// One row of the run trace: everything needed to plot or summarize a run.
struct StepTrace {
    long long step = 0;
    std::string label;
    std::array<double, 4> layer_mean{};  // mean component of r1..r4
    double attention = 0.0;              // r5
    double awareness = 0.0;              // r6
    double consciousness = 0.0;          // r7
    std::array<double, 4> probability{};
    std::array<double, 4> expectation_score{};
    std::array<double, 4> graph_entropy{};
    std::array<double, 4> graph_energy{};
    std::array<double, 4> intensity{};
    std::string top_class;
    int semantic_environment = 0;
    int semantic_subjective = 0;

    bool operator==(const StepTrace&) const = default;
};

class Agent {
public:
    // cfg is validated on construction.
    Agent(AgentConfig cfg, bool support_enabled);

    // Runs one cascade step. rec.step must be exactly one past the
    // previous step (starting at 1) and rec.features of length k.
    StepTrace step(const StimulusRecord& record);

    const AgentConfig& config() const { return cfg_; }
    bool support_enabled() const { return support_; }
    SensingState& sensing() { return sensing_; }
    const std::array<HypersphereStore, 4>& stores() const { return stores_; }
    const std::array<ConsciousnessGraph, 4>& graphs() const { return graphs_; }
    const std::array<std::vector<Semantic>, 4>& node_semantics() const {
        return node_semantics_;
    }
    // Largest component seen so far in r1, r2 and r4 (0 when none positive).
    const std::array<double, 3>& observed_maxima() const {
        return observed_maxima_;
    }

private:
    AgentConfig cfg_;
    bool support_;
    SensingState sensing_;
    std::array<HypersphereStore, 4> stores_;
    std::array<std::vector<Semantic>, 4> node_semantics_;  // by ref id
    std::array<ConsciousnessGraph, 4> graphs_;
    std::array<double, 3> observed_maxima_{0.0, 0.0, 0.0};
    long long next_step_ = 1;
};

// Suggested S_b / P_b / A_b for a stream: the maximum observed component
// of the sensation, perception and affection instances, falling back to
// 1 when a layer never goes positive.
struct CalibrationResult {
    std::array<double, 3> observed{};   // raw maxima
    std::array<double, 3> suggested{};  // maxima with the 1.0 fallback
};

CalibrationResult calibrate_bounds(std::span<const StimulusRecord> stream,
                                   const AgentConfig& cfg);

// Runs a whole stream through a fresh agent.
std::vector<StepTrace> run_agent(std::span<const StimulusRecord> stream,
                                 const AgentConfig& cfg, bool support_enabled);

// Two runs over the same stream, without and with support. The runs are
// independent and execute concurrently.
std::pair<std::vector<StepTrace>, std::vector<StepTrace>> paired_experiment(
    std::span<const StimulusRecord> stream, const AgentConfig& cfg);

}  // namespace cogsim
