#pragma once

// Classifier boundary: maps an Emotion instance to a probability spectrum
// over emotion classes and to moral semantics. The learner is a
// deterministic table-driven stub; any drop-in classifier producing a
// valid spectrum can replace it behind classify().

#include <optional>
#include <string>

#include "cogsim/config.hpp"
#include "cogsim/types.hpp"

namespace cogsim {

struct EmotionSpectrum {
    Vec probabilities;      // one entry per configured class, sums to 1
    std::string top_class;  // argmax, ties broken by class-list order
    long long step = 0;
};

// Stub classification of an Emotion instance. With a label present the
// configured per-label row is emitted; otherwise the nearest configured
// class centroid wins (one-hot spectrum). Throws errc::domain when
// neither source can answer.
EmotionSpectrum classify(const CognitiveInstance& r3,
                         const std::optional<std::string>& stimulus_label,
                         const AgentConfig& cfg);

// Probabilities padded with k - C_e trailing zeros; k >= C_e.
Vec zero_pad_spectrum(const EmotionSpectrum& spectrum, std::size_t k);

// Moral semantic of an emotion class on the given channel.
Semantic semantic_of(const std::string& emotion_class, Channel channel,
                     const AgentConfig& cfg);

// A reference instance paired with its moral semantic. Environment
// layers (sensation, perception) carry social morality; subjective
// layers (emotion, affection) carry personal morality. The semantic is
// fixed when the reference is created and never updated.
struct MoralityInstance {
    int reference_id = 0;
    Layer layer = Layer::sensation;
    Semantic semantic = Semantic::neutral;

    Channel channel() const { return channel_of(layer); }
};

// Morality instance for a newly created reference, using the channel
// that matches the reference's layer.
MoralityInstance make_morality_instance(int reference_id, Layer layer,
                                        const std::string& top_class,
                                        const AgentConfig& cfg);

}  // namespace cogsim
