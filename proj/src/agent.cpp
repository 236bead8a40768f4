#include "cogsim/agent.hpp"

#include <algorithm>
#include <future>

namespace cogsim {

namespace {

AgentConfig validated(AgentConfig cfg) {
    validate_config(cfg);
    return cfg;
}

}  // namespace

Agent::Agent(AgentConfig cfg, bool support_enabled)
    : cfg_(validated(std::move(cfg))),
      support_(support_enabled),
      sensing_(cfg_),
      stores_{HypersphereStore(Layer::sensation),
              HypersphereStore(Layer::perception),
              HypersphereStore(Layer::emotion),
              HypersphereStore(Layer::affection)} {
    for (int i = 0; i < 4; ++i)
        graphs_[i].layer = static_cast<Layer>(i + 1);
}

StepTrace Agent::step(const StimulusRecord& record) {
    if (record.step != next_step_)
        fail(errc::stream, "record " + std::to_string(record.step) +
                               ": expected step " + std::to_string(next_step_));
    if (record.features.size() != cfg_.k)
        fail(errc::dimension, "record " + std::to_string(record.step) +
                                  ": feature length " +
                                  std::to_string(record.features.size()) +
                                  " does not match k = " + std::to_string(cfg_.k));
    // Classifiability is checked before any state mutates so a rejected
    // record leaves the agent reusable.
    if (cfg_.centroids.empty() &&
        (record.label.empty() ||
         cfg_.stub_rows.find(record.label) == cfg_.stub_rows.end())) {
        const std::string reason =
            record.label.empty()
                ? "unlabeled stimulus"
                : "no stub row for label \"" + record.label + "\"";
        fail(errc::domain, "record " + std::to_string(record.step) + ": " +
                               reason + " and no centroid fallback configured");
    }
    const long long n = record.step;

    // Prodromal cascade. The emotion gain reads the previous affection, so
    // state rolls over only after all four layers have emitted.
    const CognitiveInstance r1 = step_sensation(sensing_, record.features, n, cfg_);
    const CognitiveInstance r2 =
        step_polynomial_layer(Layer::perception, sensing_, r1.values, n, cfg_);
    const CognitiveInstance r3 =
        step_polynomial_layer(Layer::emotion, sensing_, r2.values, n, cfg_);
    const std::optional<std::string> label =
        record.label.empty() ? std::nullopt
                             : std::optional<std::string>(record.label);
    const EmotionSpectrum spectrum = classify(r3, label, cfg_);
    const CognitiveInstance r4 =
        step_polynomial_layer(Layer::affection, sensing_, r3.values, n, cfg_);

    const Vec padded = zero_pad_spectrum(spectrum, cfg_.k);
    const CognitiveMatrix matrix = build_cognitive_matrix(r1, r2, r4, padded, cfg_);
    const double r5 = tension(matrix, cfg_.saturation);

    sensing_.last_perception = r2.values;
    sensing_.last_affection = r4.values;
    sensing_.last_attention = r5;

    StepTrace trace;
    trace.step = n;
    trace.label = record.label;
    trace.top_class = spectrum.top_class;
    trace.semantic_environment = semantic_value(
        semantic_of(spectrum.top_class, Channel::environment, cfg_));
    trace.semantic_subjective = semantic_value(
        semantic_of(spectrum.top_class, Channel::subjective, cfg_));
    trace.attention = r5;

    for (std::size_t j = 0; j < cfg_.k; ++j) {
        observed_maxima_[0] = std::max(observed_maxima_[0], r1.values[j]);
        observed_maxima_[1] = std::max(observed_maxima_[1], r2.values[j]);
        observed_maxima_[2] = std::max(observed_maxima_[2], r4.values[j]);
    }

    const std::array<const CognitiveInstance*, 4> instances{&r1, &r2, &r3, &r4};
    const SupportScores support = support_for_label(cfg_, record.label);
    std::array<double, 4> expectations{};
    for (int i = 0; i < 4; ++i) {
        trace.layer_mean[i] = mean_component(instances[i]->values);
        const AbsorbResult absorbed =
            stores_[i].absorb(*instances[i], cfg_.radius, record.label);
        if (absorbed.created) {
            // Semantic fixed at creation from this step's classification.
            const MoralityInstance morality = make_morality_instance(
                absorbed.ref_id, static_cast<Layer>(i + 1), spectrum.top_class,
                cfg_);
            node_semantics_[i].push_back(morality.semantic);
        }
        trace.probability[i] = absorbed.probability;
        expectations[i] =
            expectation(absorbed.probability, support,
                        support_weights_for_layer(cfg_, static_cast<Layer>(i + 1)),
                        support_);
        trace.expectation_score[i] = expectations[i];
    }
    trace.awareness = awareness_score(expectations, cfg_);

    std::array<double, 4> intensities{};
    for (int i = 0; i < 4; ++i) {
        sync_graph(graphs_[i], stores_[i], node_semantics_[i]);
        const EntropyEnergyPoint point = graph_metrics(graphs_[i]);
        trace.graph_entropy[i] = point.entropy;
        trace.graph_energy[i] = point.energy;
        intensities[i] = consciousness_intensity(point, EntropyEnergyPoint{});
        trace.intensity[i] = intensities[i];
    }
    trace.consciousness = consciousness_score(intensities, cfg_);

    ++next_step_;
    return trace;
}

std::vector<StepTrace> run_agent(std::span<const StimulusRecord> stream,
                                 const AgentConfig& cfg, bool support_enabled) {
    if (stream.empty()) fail(errc::argument, "stimulus stream is empty");
    Agent agent(cfg, support_enabled);
    std::vector<StepTrace> traces;
    traces.reserve(stream.size());
    for (const auto& record : stream) traces.push_back(agent.step(record));
    return traces;
}

std::pair<std::vector<StepTrace>, std::vector<StepTrace>> paired_experiment(
    std::span<const StimulusRecord> stream, const AgentConfig& cfg) {
    auto with_support = std::async(std::launch::async, [&] {
        return run_agent(stream, cfg, true);
    });
    std::vector<StepTrace> without = run_agent(stream, cfg, false);
    return {std::move(without), with_support.get()};
}

CalibrationResult calibrate_bounds(std::span<const StimulusRecord> stream,
                                   const AgentConfig& cfg) {
    if (stream.empty()) fail(errc::argument, "stimulus stream is empty");
    Agent agent(cfg, false);
    for (const auto& record : stream) agent.step(record);
    CalibrationResult result;
    result.observed = agent.observed_maxima();
    for (int i = 0; i < 3; ++i)
        result.suggested[i] = result.observed[i] > 0.0 ? result.observed[i] : 1.0;
    return result;
}

}  // namespace cogsim
