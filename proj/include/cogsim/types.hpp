#pragma once

// Shared domain types and numeric conventions.
//
// All quantities are 64-bit doubles. Every summation in this library
// accumulates left to right in index order so that identical inputs
// give bit-identical results across runs.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cogsim {

using Vec = std::vector<double>;

// Input feature vector of fixed dimension k.
using FeatureVector = Vec;

// The four prodromal cognitive layers. Numbering is part of the wire
// format (trace columns, graph exports), so values are fixed.
enum class Layer : int {
    sensation = 1,
    perception = 2,
    emotion = 3,
    affection = 4,
};

constexpr int layer_index(Layer l) { return static_cast<int>(l) - 1; }

// Moral semantic attached to experiences: negative, neutral, positive.
enum class Semantic : int {
    negative = -1,
    neutral = 0,
    positive = 1,
};

constexpr int semantic_value(Semantic s) { return static_cast<int>(s); }
Semantic semantic_from_int(int v);

// Which semantic table a layer draws from. Sensation and Perception carry
// environment (social) semantics, Emotion and Affection subjective
// (personal) ones.
enum class Channel { environment, subjective };

constexpr Channel channel_of(Layer l) {
    return static_cast<int>(l) <= 2 ? Channel::environment : Channel::subjective;
}

// Gain rule selecting k_i for a layer.
enum class GainRule {
    unit,                        // k_i = 1
    perception_times_attention,  // k_i = r2[n-1] * r5[n-1]
    previous_affection,          // k_i = r4[n-1]
};

// Output of one cognitive layer at one discrete step.
struct CognitiveInstance {
    Layer layer = Layer::sensation;
    long long step = 0;
    Vec values;

    bool operator==(const CognitiveInstance&) const = default;
};

// Error taxonomy mirrored 1:1 by the C API status codes.
enum class errc {
    argument = 1,   // null/invalid argument
    config = 2,     // config invariant violation
    parse = 3,      // malformed text input
    io = 4,         // file not readable/writable
    dimension = 5,  // vector length != k
    stream = 6,     // step numbering violation
    domain = 7,     // unknown label/class without fallback
    internal = 8,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw error(code, message);
}

// Standard L2 distance; lengths must match.
double euclidean_distance(std::span<const double> a, std::span<const double> b);

// Mean component of a vector; 0 for the empty vector.
double mean_component(std::span<const double> v);

}  // namespace cogsim
