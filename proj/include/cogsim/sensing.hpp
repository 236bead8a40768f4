#pragma once

// The four prodromal layers: Sensation with exponentially decaying
// memory traces, Perception/Emotion/Affection with polynomially decaying
// ones. Each step emits a cognitive instance and stores it as a trace
// that fades to zero at emitted_at + removal_period.

#include <array>

#include "cogsim/config.hpp"
#include "cogsim/types.hpp"

namespace cogsim {

enum class DecayKind { exponential, polynomial };

// One stored layer output. Polynomial traces freeze their reconstruction
// parameters at emission time; the bracket alpha_x/t + beta_m/t^2 - t0
// then crosses zero exactly at the removal step.
struct DecayingTrace {
    long long emitted_at = 0;
    long long removal_at = 0;
    DecayKind kind = DecayKind::exponential;
    Vec base_value;  // layer output at emission, before any decay

    // Polynomial-only frozen parameters.
    Vec alpha_x;    // alpha (.) input at emission
    Vec beta_m;     // beta-weighted memory fold at emission
    Vec t_zero;     // zero-crossing offset
    Vec gain;       // k_i at emission
    Vec amplitude;  // rescaling that makes the bracket equal base/gain at emission
};

// Trace value at integer time t. Equals base_value at t = emitted_at,
// the zero vector for t >= removal_at; throws for t < emitted_at.
Vec evaluate_trace(const DecayingTrace& trace, long long t);

// Ordered window of live traces for one layer.
struct MemoryWindow {
    Layer layer = Layer::sensation;
    std::vector<DecayingTrace> traces;  // sorted by emitted_at

    void append(DecayingTrace trace);
    // Drops every trace with removal_at <= now.
    void evict(long long now);
};

// Beta-weighted sum of the live traces evaluated at time t, oldest trace
// paired with beta[0]. Trailing beta entries beyond the live count are
// unused; beta must cover every live trace.
Vec memory_fold(const MemoryWindow& memory, std::span<const double> beta, long long t);

// Zeroes every component below the cutoff.
Vec zero_below(std::span<const double> x, double cutoff);

// Mutable cascade state for one agent; zeros before the first step.
struct SensingState {
    explicit SensingState(const AgentConfig& cfg);

    std::array<MemoryWindow, 4> memories;
    Vec last_perception;          // r2 at the previous step
    Vec last_affection;           // r4 at the previous step
    double last_attention = 0.0;  // r5 at the previous step
};

// Gain vector k_i for a layer at the current step, from the layer's rule
// and the previous-step state.
Vec layer_gain(const SensingState& state, const LayerParams& params, std::size_t k);

// Sensation step: r1 = k1 (.) (alpha1 (.) zero_below(x, H) + beta1-fold),
// appends the new exponential trace and evicts expired ones. n >= 1.
CognitiveInstance step_sensation(SensingState& state, const FeatureVector& x,
                                 long long n, const AgentConfig& cfg);

// Perception/Emotion/Affection step over the previous layer's output.
// Emits r_i = k_i (.) (alpha_i (.) input + beta_i-fold) and stores a
// polynomial trace with parameters frozen at t = n. n >= 1.
CognitiveInstance step_polynomial_layer(Layer layer, SensingState& state,
                                        const Vec& input, long long n,
                                        const AgentConfig& cfg);

}  // namespace cogsim
