#include "cogsim/sensing.hpp"

#include <algorithm>
#include <cmath>

namespace cogsim {

namespace {

void check_dimension(std::size_t got, std::size_t want, const char* what) {
    if (got != want)
        fail(errc::dimension, std::string(what) + ": expected " +
                                  std::to_string(want) + " components, got " +
                                  std::to_string(got));
}

// Decay factor of an exponential trace emitted at n with removal period T:
// (e^{-(t-n)/n} - e^{-T/n}) / (1 - e^{-T/n}). Equals 1 at t = n and 0 at
// t = n + T.
double exponential_factor(long long emitted_at, long long removal_period,
                          long long t) {
    const double n = static_cast<double>(emitted_at);
    const double tail = std::exp(-static_cast<double>(removal_period) / n);
    const double num = std::exp(-static_cast<double>(t - emitted_at) / n) - tail;
    return num / (1.0 - tail);
}

}  // namespace

Vec evaluate_trace(const DecayingTrace& trace, long long t) {
    if (t < trace.emitted_at)
        fail(errc::argument, "evaluate_trace: t precedes the emission step");
    const std::size_t k = trace.base_value.size();
    if (t == trace.emitted_at) return trace.base_value;
    if (t >= trace.removal_at) return Vec(k, 0.0);

    Vec out(k, 0.0);
    if (trace.kind == DecayKind::exponential) {
        const double factor = exponential_factor(
            trace.emitted_at, trace.removal_at - trace.emitted_at, t);
        for (std::size_t j = 0; j < k; ++j) out[j] = trace.base_value[j] * factor;
    } else {
        if (trace.alpha_x.size() != k || trace.beta_m.size() != k ||
            trace.t_zero.size() != k || trace.gain.size() != k ||
            trace.amplitude.size() != k)
            fail(errc::argument,
                 "evaluate_trace: polynomial trace parameters do not match its "
                 "dimension");
        const double td = static_cast<double>(t);
        for (std::size_t j = 0; j < k; ++j) {
            const double bracket =
                trace.alpha_x[j] / td + trace.beta_m[j] / (td * td) - trace.t_zero[j];
            out[j] = trace.gain[j] * trace.amplitude[j] * bracket;
        }
    }
    return out;
}

void MemoryWindow::append(DecayingTrace trace) {
    if (!traces.empty() && traces.back().emitted_at >= trace.emitted_at)
        fail(errc::argument, "memory traces must be appended in step order");
    traces.push_back(std::move(trace));
}

void MemoryWindow::evict(long long now) {
    std::erase_if(traces,
                  [now](const DecayingTrace& tr) { return tr.removal_at <= now; });
}

Vec memory_fold(const MemoryWindow& memory, std::span<const double> beta,
                long long t) {
    std::size_t live = 0;
    for (const auto& tr : memory.traces)
        if (tr.removal_at > t) ++live;
    if (beta.size() < live)
        fail(errc::argument, "memory_fold: beta covers " +
                                 std::to_string(beta.size()) + " traces but " +
                                 std::to_string(live) + " are live");

    const std::size_t k =
        memory.traces.empty() ? 0 : memory.traces.front().base_value.size();
    Vec out(k, 0.0);
    std::size_t slot = 0;  // oldest live trace pairs with beta[0]
    for (const auto& tr : memory.traces) {
        if (tr.removal_at <= t) continue;
        const Vec value = evaluate_trace(tr, t);
        for (std::size_t j = 0; j < k; ++j) out[j] += beta[slot] * value[j];
        ++slot;
    }
    return out;
}

Vec zero_below(std::span<const double> x, double cutoff) {
    Vec out(x.size(), 0.0);
    for (std::size_t j = 0; j < x.size(); ++j)
        out[j] = x[j] >= cutoff ? x[j] : 0.0;
    return out;
}

SensingState::SensingState(const AgentConfig& cfg) {
    for (int i = 0; i < 4; ++i)
        memories[i].layer = static_cast<Layer>(i + 1);
    last_perception.assign(cfg.k, 0.0);
    last_affection.assign(cfg.k, 0.0);
}

Vec layer_gain(const SensingState& state, const LayerParams& params,
               std::size_t k) {
    switch (params.gain_rule) {
        case GainRule::unit:
            return Vec(k, 1.0);
        case GainRule::perception_times_attention: {
            Vec gain(k, 0.0);
            for (std::size_t j = 0; j < k; ++j)
                gain[j] = state.last_perception[j] * state.last_attention;
            return gain;
        }
        case GainRule::previous_affection:
            return state.last_affection;
    }
    fail(errc::internal, "unknown gain rule");
}

CognitiveInstance step_sensation(SensingState& state, const FeatureVector& x,
                                 long long n, const AgentConfig& cfg) {
    if (n < 1) fail(errc::argument, "step index must be at least 1");
    check_dimension(x.size(), cfg.k, "sensation input");
    const LayerParams& params = cfg.layers[0];

    const Vec thresholded = zero_below(x, cfg.sensation_threshold);
    const Vec fold = memory_fold(state.memories[0], params.beta, n);
    const Vec gain = layer_gain(state, params, cfg.k);

    Vec value(cfg.k, 0.0);
    for (std::size_t j = 0; j < cfg.k; ++j) {
        const double memory_term = fold.empty() ? 0.0 : fold[j];
        value[j] = gain[j] * (params.alpha[j] * thresholded[j] + memory_term);
    }

    DecayingTrace trace;
    trace.emitted_at = n;
    trace.removal_at = n + params.removal_period;
    trace.kind = DecayKind::exponential;
    trace.base_value = value;
    state.memories[0].append(std::move(trace));
    state.memories[0].evict(n);

    return {Layer::sensation, n, std::move(value)};
}

CognitiveInstance step_polynomial_layer(Layer layer, SensingState& state,
                                        const Vec& input, long long n,
                                        const AgentConfig& cfg) {
    if (layer == Layer::sensation)
        fail(errc::argument, "polynomial step does not apply to the sensation layer");
    if (n < 1) fail(errc::argument, "step index must be at least 1");
    check_dimension(input.size(), cfg.k, "layer input");
    const int idx = layer_index(layer);
    const LayerParams& params = cfg.layers[idx];
    MemoryWindow& memory = state.memories[idx];

    const Vec fold = memory_fold(memory, params.beta, n);
    const Vec gain = layer_gain(state, params, cfg.k);

    Vec alpha_x(cfg.k, 0.0);
    Vec beta_m(cfg.k, 0.0);
    for (std::size_t j = 0; j < cfg.k; ++j) {
        alpha_x[j] = params.alpha[j] * input[j];
        beta_m[j] = fold.empty() ? 0.0 : fold[j];
    }

    // Freeze the reconstruction parameters at emission time t = n. The
    // bracket alpha_x/t + beta_m/t^2 - t0 then vanishes at t = n + T and
    // the amplitude rescales it so the emitted value is exactly
    // gain (.) (alpha_x + beta_m).
    const double td = static_cast<double>(n);
    const double removal = static_cast<double>(n + params.removal_period);
    Vec t_zero(cfg.k, 0.0);
    Vec amplitude(cfg.k, 0.0);
    Vec value(cfg.k, 0.0);
    for (std::size_t j = 0; j < cfg.k; ++j) {
        t_zero[j] = alpha_x[j] / removal + beta_m[j] / (removal * removal);
        const double bracket_now =
            alpha_x[j] / td + beta_m[j] / (td * td) - t_zero[j];
        const double emitted = alpha_x[j] + beta_m[j];
        amplitude[j] = bracket_now != 0.0 ? emitted / bracket_now : 0.0;
        value[j] = gain[j] * emitted;
    }

    DecayingTrace trace;
    trace.emitted_at = n;
    trace.removal_at = n + params.removal_period;
    trace.kind = DecayKind::polynomial;
    trace.base_value = value;
    trace.alpha_x = std::move(alpha_x);
    trace.beta_m = std::move(beta_m);
    trace.t_zero = std::move(t_zero);
    trace.gain = gain;
    trace.amplitude = std::move(amplitude);
    memory.append(std::move(trace));
    memory.evict(n);

    return {layer, n, std::move(value)};
}

}  // namespace cogsim
