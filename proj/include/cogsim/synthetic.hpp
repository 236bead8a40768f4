#pragma once

// Deterministic synthetic episode generator: the fourteen stimulus labels
// each get a Gaussian feature cloud around a fixed per-label centroid.
// Class frequencies follow the shipped episode mix. Fully reproducible
// from the seed (mt19937 plus a hand-rolled Box-Muller transform).

#include <cstdint>
#include <filesystem>
#include <vector>

#include "cogsim/agent.hpp"

namespace cogsim {

// Label and its elicited emotion class, in generation order.
struct SyntheticStimulus {
    std::string label;
    std::string emotion_class;
};

const std::vector<SyntheticStimulus>& synthetic_stimuli();

std::vector<StimulusRecord> synthetic_episode(const AgentConfig& cfg,
                                              std::size_t steps,
                                              std::uint32_t seed);

void write_stimulus_stream(std::span<const StimulusRecord> records,
                           const std::filesystem::path& path);

}  // namespace cogsim
