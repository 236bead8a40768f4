#include "cogsim/awareness.hpp"

namespace cogsim {

AbsorbResult HypersphereStore::absorb(const CognitiveInstance& instance,
                                      double radius, const std::string& label) {
    if (!(radius > 0.0)) fail(errc::argument, "R must be positive");
    if (!refs_.empty() && instance.values.size() != refs_.front().center.size())
        fail(errc::dimension, "absorb: instance dimension differs from the store");

    // Nearest reference within the radius wins; exact distance ties go to
    // the oldest (lowest-id) reference.
    int nearest = -1;
    double nearest_distance = 0.0;
    for (const auto& ref : refs_) {
        const double d = euclidean_distance(instance.values, ref.center);
        if (d <= radius && (nearest < 0 || d < nearest_distance)) {
            nearest = ref.id;
            nearest_distance = d;
        }
    }

    ++total_count_;
    if (nearest >= 0) {
        ++refs_[nearest].counter;
        return {nearest, false, probability_of(nearest)};
    }

    ReferenceInstance ref;
    ref.id = static_cast<int>(refs_.size());
    ref.layer = layer_;
    ref.center = instance.values;
    ref.counter = 1;
    ref.first_seen = instance.step;
    ref.label = label;
    refs_.push_back(std::move(ref));
    return {refs_.back().id, true, probability_of(refs_.back().id)};
}

double HypersphereStore::probability_of(int ref_id) const {
    if (ref_id < 0 || static_cast<std::size_t>(ref_id) >= refs_.size())
        fail(errc::argument, "unknown reference id");
    return static_cast<double>(refs_[ref_id].counter) /
           static_cast<double>(total_count_);
}

double expectation(double probability, const SupportScores& support,
                   const std::array<double, 3>& weights, bool support_enabled) {
    if (!support_enabled) return probability;
    if (probability >= 0.05) return probability;
    if (probability > 0.01)
        return (probability + weights[0] * support.plausibility) / 2.0;
    if (probability >= 0.005)
        return (probability + weights[0] * support.plausibility +
                weights[1] * support.credibility) /
               3.0;
    return (probability + weights[0] * support.plausibility +
            weights[1] * support.credibility + weights[2] * support.possibility) /
           4.0;
}

double awareness_score(const std::array<double, 4>& expectations,
                       const AgentConfig& cfg) {
    const auto& phi = cfg.awareness_weights;
    return cfg.awareness_gain *
           (phi[0] * expectations[0] + phi[1] * expectations[1] +
            phi[2] * expectations[2] + phi[3] * expectations[3]);
}

}  // namespace cogsim
