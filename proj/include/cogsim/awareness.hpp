#pragma once

// Awareness hyperspaces. Each layer keeps a store of reference instances;
// new cognitive instances either join the nearest reference within radius
// R (incrementing its counter) or open a new hypersphere. Frequentist
// probability is fused with plausibility/credibility/possibility support
// into a per-layer expectation, and the Awareness score is their weighted
// sum.

#include <array>
#include <string>

#include "cogsim/config.hpp"
#include "cogsim/types.hpp"

namespace cogsim {

// Center of one hypersphere plus its absorption counter.
struct ReferenceInstance {
    int id = 0;               // index in the store, stable for its lifetime
    Layer layer = Layer::sensation;
    Vec center;
    long long counter = 1;
    long long first_seen = 0;
    std::string label;        // stimulus label of the first occurrence
};

struct AbsorbResult {
    int ref_id = 0;
    bool created = false;     // true when a new hypersphere was opened
    double probability = 0.0; // counter / total_count after the update
};

class HypersphereStore {
public:
    explicit HypersphereStore(Layer layer) : layer_(layer) {}

    // Absorbs one instance: the nearest reference within distance <= R
    // wins (exact ties go to the older reference); otherwise a new
    // reference is created with counter 1. total_count always grows by 1.
    AbsorbResult absorb(const CognitiveInstance& instance, double radius,
                        const std::string& label);

    Layer layer() const { return layer_; }
    const std::vector<ReferenceInstance>& refs() const { return refs_; }
    long long total_count() const { return total_count_; }

    // counter / total_count for one reference.
    double probability_of(int ref_id) const;

private:
    Layer layer_;
    std::vector<ReferenceInstance> refs_;
    long long total_count_ = 0;
};

// Piecewise fusion of probability with support scores. With support
// disabled the probability passes through unchanged. Branches, high
// probability first:
//   pr >= 0.05           -> pr
//   0.01 < pr < 0.05     -> (pr + w0*Pl) / 2
//   0.005 <= pr <= 0.01  -> (pr + w0*Pl + w1*Cr) / 3
//   pr < 0.005           -> (pr + w0*Pl + w1*Cr + w2*Po) / 4
double expectation(double probability, const SupportScores& support,
                   const std::array<double, 3>& weights, bool support_enabled);

// r6 = k6 * (phi1*O1 + phi2*O2 + phi3*O3 + phi4*O4), accumulated left to
// right.
double awareness_score(const std::array<double, 4>& expectations,
                       const AgentConfig& cfg);

}  // namespace cogsim
