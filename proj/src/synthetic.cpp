#include "cogsim/synthetic.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>

#include "cogsim/io.hpp"

namespace cogsim {

namespace {

// Percent shares of the emotion classes in the generated episode.
struct ClassShare {
    const char* emotion_class;
    int percent;
};

constexpr ClassShare kShares[] = {
    {"neutral", 21},  {"happiness", 11}, {"anger", 11},  {"fear", 18},
    {"surprise", 11}, {"contempt", 6},   {"sadness", 6}, {"disgust", 16},
};

double uniform01(std::mt19937& rng) {
    return (static_cast<double>(rng()) + 1.0) / 4294967297.0;  // (0, 1)
}

// Box-Muller; engine-only randomness so streams replay bit-identically.
double standard_normal(std::mt19937& rng) {
    const double u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

const std::vector<SyntheticStimulus>& synthetic_stimuli() {
    static const std::vector<SyntheticStimulus> stimuli = {
        {"landscape", "neutral"},
        {"beautiful woman", "happiness"},
        {"own home", "happiness"},
        {"murder of animal", "anger"},
        {"war", "fear"},
        {"man pointing weapon", "fear"},
        {"terrorism", "fear"},
        {"crazy sportsman", "surprise"},
        {"politician", "contempt"},
        {"parking car", "contempt"},
        {"someone's death or sick", "sadness"},
        {"car accident", "sadness"},
        {"injury", "disgust"},
        {"autopsy", "disgust"},
    };
    return stimuli;
}

std::vector<StimulusRecord> synthetic_episode(const AgentConfig& cfg,
                                              std::size_t steps,
                                              std::uint32_t seed) {
    if (steps == 0) fail(errc::argument, "episode must have at least one step");
    std::mt19937 rng(seed);

    // Fixed per-label feature centroids, spread over [1, 9].
    const auto& stimuli = synthetic_stimuli();
    std::vector<Vec> centroids(stimuli.size());
    for (auto& centroid : centroids) {
        centroid.resize(cfg.k);
        for (double& c : centroid) c = 1.0 + 8.0 * uniform01(rng);
    }

    std::vector<std::vector<std::size_t>> by_class;
    for (const auto& share : kShares) {
        std::vector<std::size_t> indexes;
        for (std::size_t i = 0; i < stimuli.size(); ++i)
            if (stimuli[i].emotion_class == share.emotion_class)
                indexes.push_back(i);
        by_class.push_back(std::move(indexes));
    }

    constexpr double kSpread = 0.5;
    std::vector<StimulusRecord> records;
    records.reserve(steps);
    for (std::size_t n = 1; n <= steps; ++n) {
        const int draw = static_cast<int>(rng() % 100);
        int cumulative = 0;
        std::size_t class_index = 0;
        for (std::size_t c = 0; c < std::size(kShares); ++c) {
            cumulative += kShares[c].percent;
            if (draw < cumulative) {
                class_index = c;
                break;
            }
        }
        const auto& candidates = by_class[class_index];
        const std::size_t stimulus_index =
            candidates[rng() % candidates.size()];

        StimulusRecord record;
        record.step = static_cast<long long>(n);
        record.label = stimuli[stimulus_index].label;
        record.expected_class = stimuli[stimulus_index].emotion_class;
        record.features.resize(cfg.k);
        for (std::size_t j = 0; j < cfg.k; ++j)
            record.features[j] =
                centroids[stimulus_index][j] + kSpread * standard_normal(rng);
        records.push_back(std::move(record));
    }
    return records;
}

void write_stimulus_stream(std::span<const StimulusRecord> records,
                           const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) fail(errc::io, "cannot write " + path.string());
    out << "# step,label,class,features...\n";
    for (const auto& r : records) {
        out << r.step << ',' << r.label << ','
            << (r.expected_class ? *r.expected_class : "");
        for (double f : r.features) out << ',' << format_double(f);
        out << '\n';
    }
    if (!out) fail(errc::io, "cannot write " + path.string());
}

}  // namespace cogsim
