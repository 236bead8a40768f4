#include "cogsim/emotion.hpp"

#include <limits>

namespace cogsim {

namespace {

std::size_t argmax_index(const Vec& probabilities) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < probabilities.size(); ++i)
        if (probabilities[i] > probabilities[best]) best = i;  // ties keep the first
    return best;
}

}  // namespace

EmotionSpectrum classify(const CognitiveInstance& r3,
                         const std::optional<std::string>& stimulus_label,
                         const AgentConfig& cfg) {
    if (r3.layer != Layer::emotion)
        fail(errc::argument, "classify expects an emotion-layer instance");

    EmotionSpectrum spectrum;
    spectrum.step = r3.step;

    if (stimulus_label) {
        auto it = cfg.stub_rows.find(*stimulus_label);
        if (it != cfg.stub_rows.end()) {
            spectrum.probabilities = it->second;
            spectrum.top_class = cfg.emotion_classes[argmax_index(it->second)];
            return spectrum;
        }
    }

    // Nearest configured class centroid, ties broken by class order.
    if (cfg.centroids.empty()) {
        if (stimulus_label)
            fail(errc::domain, "no stub row for label \"" + *stimulus_label +
                                   "\" and no centroid fallback configured");
        fail(errc::domain, "unlabeled stimulus and no centroids configured");
    }
    std::size_t best = std::numeric_limits<std::size_t>::max();
    double best_distance = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < cfg.emotion_classes.size(); ++i) {
        auto it = cfg.centroids.find(cfg.emotion_classes[i]);
        if (it == cfg.centroids.end()) continue;
        const double d = euclidean_distance(r3.values, it->second);
        if (d < best_distance) {
            best_distance = d;
            best = i;
        }
    }
    if (best == std::numeric_limits<std::size_t>::max())
        fail(errc::domain, "no centroid matches any configured emotion class");

    spectrum.probabilities.assign(cfg.emotion_classes.size(), 0.0);
    spectrum.probabilities[best] = 1.0;
    spectrum.top_class = cfg.emotion_classes[best];
    return spectrum;
}

Vec zero_pad_spectrum(const EmotionSpectrum& spectrum, std::size_t k) {
    if (k < spectrum.probabilities.size())
        fail(errc::dimension,
             "zero_pad_spectrum: k is smaller than the spectrum width");
    Vec out(k, 0.0);
    for (std::size_t i = 0; i < spectrum.probabilities.size(); ++i)
        out[i] = spectrum.probabilities[i];
    return out;
}

Semantic semantic_of(const std::string& emotion_class, Channel channel,
                     const AgentConfig& cfg) {
    const auto& map = channel == Channel::environment ? cfg.semantic_environment
                                                      : cfg.semantic_subjective;
    auto it = map.find(emotion_class);
    if (it == map.end())
        fail(errc::domain, "unknown emotion class \"" + emotion_class + "\"");
    return semantic_from_int(it->second);
}

MoralityInstance make_morality_instance(int reference_id, Layer layer,
                                        const std::string& top_class,
                                        const AgentConfig& cfg) {
    return {reference_id, layer, semantic_of(top_class, channel_of(layer), cfg)};
}

}  // namespace cogsim
