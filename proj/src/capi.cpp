// extern-C surface of the shared library. Opaque handles wrap the C++
// core; every entry point traps exceptions and maps them to status codes,
// keeping the detail message in thread-local storage.

#include "cogsim.h"

#include <cstdio>
#include <future>
#include <memory>
#include <string>

#include "cogsim/agent.hpp"
#include "cogsim/io.hpp"
#include "cogsim/summary.hpp"
#include "cogsim/synthetic.hpp"

namespace {

thread_local std::string g_last_error;

cogsim_status to_status(cogsim::errc code) {
    switch (code) {
        case cogsim::errc::argument: return COGSIM_ERR_ARGUMENT;
        case cogsim::errc::config: return COGSIM_ERR_CONFIG;
        case cogsim::errc::parse: return COGSIM_ERR_PARSE;
        case cogsim::errc::io: return COGSIM_ERR_IO;
        case cogsim::errc::dimension: return COGSIM_ERR_DIMENSION;
        case cogsim::errc::stream: return COGSIM_ERR_STREAM;
        case cogsim::errc::domain: return COGSIM_ERR_DOMAIN;
        case cogsim::errc::internal: return COGSIM_ERR_INTERNAL;
    }
    return COGSIM_ERR_INTERNAL;
}

template <typename F>
cogsim_status guarded(F&& body) {
    try {
        body();
        g_last_error.clear();
        return COGSIM_OK;
    } catch (const cogsim::error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return COGSIM_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return COGSIM_ERR_INTERNAL;
    }
}

cogsim_status argument_error(const char* message) {
    g_last_error = message;
    return COGSIM_ERR_ARGUMENT;
}

}  // namespace

struct cogsim_config {
    cogsim::AgentConfig cfg;
};

struct cogsim_agent {
    explicit cogsim_agent(const cogsim::AgentConfig& cfg, bool support)
        : agent(cfg, support) {}
    cogsim::Agent agent;
    long long next_step = 1;
};

struct cogsim_result {
    std::vector<cogsim::StepTrace> traces;
    cogsim::RunSummary summary;
    std::array<cogsim::ConsciousnessGraph, 4> graphs;
    std::array<cogsim::HypersphereStore, 4> stores{
        cogsim::HypersphereStore(cogsim::Layer::sensation),
        cogsim::HypersphereStore(cogsim::Layer::perception),
        cogsim::HypersphereStore(cogsim::Layer::emotion),
        cogsim::HypersphereStore(cogsim::Layer::affection)};
    bool support = false;
};

namespace {

void fill_trace(const cogsim::StepTrace& in, cogsim_step_trace* out) {
    out->step = in.step;
    for (int i = 0; i < 4; ++i) {
        out->layer_mean[i] = in.layer_mean[i];
        out->probability[i] = in.probability[i];
        out->expectation[i] = in.expectation_score[i];
        out->graph_entropy[i] = in.graph_entropy[i];
        out->graph_energy[i] = in.graph_energy[i];
        out->intensity[i] = in.intensity[i];
    }
    out->attention = in.attention;
    out->awareness = in.awareness;
    out->consciousness = in.consciousness;
    std::snprintf(out->top_class, sizeof(out->top_class), "%s",
                  in.top_class.c_str());
    out->semantic_environment = in.semantic_environment;
    out->semantic_subjective = in.semantic_subjective;
}

cogsim_result* run_to_result(const cogsim::AgentConfig& cfg,
                             std::span<const cogsim::StimulusRecord> stream,
                             bool support) {
    if (stream.empty())
        cogsim::fail(cogsim::errc::argument, "stimulus stream is empty");
    cogsim::Agent agent(cfg, support);
    auto result = std::make_unique<cogsim_result>();
    result->support = support;
    result->traces.reserve(stream.size());
    for (const auto& record : stream) result->traces.push_back(agent.step(record));
    result->summary = cogsim::make_run_summary(result->traces, support);
    result->graphs = agent.graphs();
    result->stores = agent.stores();
    return result.release();
}

}  // namespace

extern "C" {
#pragma GCC visibility push(default)

const char* cogsim_version(void) { return "1.0.0"; }

const char* cogsim_status_name(cogsim_status status) {
    switch (status) {
        case COGSIM_OK: return "ok";
        case COGSIM_ERR_ARGUMENT: return "invalid argument";
        case COGSIM_ERR_CONFIG: return "invalid config";
        case COGSIM_ERR_PARSE: return "parse error";
        case COGSIM_ERR_IO: return "io error";
        case COGSIM_ERR_DIMENSION: return "dimension mismatch";
        case COGSIM_ERR_STREAM: return "stream error";
        case COGSIM_ERR_DOMAIN: return "unknown label or class";
        case COGSIM_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* cogsim_last_error(void) { return g_last_error.c_str(); }

cogsim_status cogsim_config_default(cogsim_config** out) {
    if (!out) return argument_error("out must not be null");
    return guarded([&] {
        auto cfg = std::make_unique<cogsim_config>();
        cfg->cfg = cogsim::AgentConfig::defaults();
        cogsim::validate_config(cfg->cfg);
        *out = cfg.release();
    });
}

cogsim_status cogsim_config_load(const char* path, cogsim_config** out) {
    if (!path || !out) return argument_error("path and out must not be null");
    return guarded([&] {
        auto cfg = std::make_unique<cogsim_config>();
        cfg->cfg = cogsim::load_config(path);
        cogsim::validate_config(cfg->cfg);
        *out = cfg.release();
    });
}

cogsim_status cogsim_config_save(const cogsim_config* cfg, const char* path) {
    if (!cfg || !path) return argument_error("cfg and path must not be null");
    return guarded([&] { cogsim::save_config(cfg->cfg, path); });
}

cogsim_status cogsim_config_dimension(const cogsim_config* cfg, size_t* out_k) {
    if (!cfg || !out_k) return argument_error("cfg and out_k must not be null");
    *out_k = cfg->cfg.k;
    return COGSIM_OK;
}

void cogsim_config_free(cogsim_config* cfg) { delete cfg; }

cogsim_status cogsim_agent_new(const cogsim_config* cfg, int support_enabled,
                               cogsim_agent** out) {
    if (!cfg || !out) return argument_error("cfg and out must not be null");
    return guarded([&] {
        *out = new cogsim_agent(cfg->cfg, support_enabled != 0);
    });
}

cogsim_status cogsim_agent_step(cogsim_agent* agent, const char* label,
                                const double* features, size_t n_features,
                                cogsim_step_trace* out_trace) {
    if (!agent) return argument_error("agent must not be null");
    if (!features && n_features > 0)
        return argument_error("features must not be null");
    return guarded([&] {
        cogsim::StimulusRecord record;
        record.step = agent->next_step;
        record.label = label ? label : "";
        record.features.assign(features, features + n_features);
        const cogsim::StepTrace trace = agent->agent.step(record);
        ++agent->next_step;
        if (out_trace) fill_trace(trace, out_trace);
    });
}

void cogsim_agent_free(cogsim_agent* agent) { delete agent; }

cogsim_status cogsim_run_file(const cogsim_config* cfg, const char* stimuli_path,
                              int support_enabled, cogsim_result** out) {
    if (!cfg || !stimuli_path || !out)
        return argument_error("cfg, stimuli_path and out must not be null");
    return guarded([&] {
        const auto stream = cogsim::load_stimulus_stream(stimuli_path, cfg->cfg.k);
        *out = run_to_result(cfg->cfg, stream, support_enabled != 0);
    });
}

cogsim_status cogsim_paired_file(const cogsim_config* cfg,
                                 const char* stimuli_path,
                                 cogsim_result** out_no_support,
                                 cogsim_result** out_with_support) {
    if (!cfg || !stimuli_path || !out_no_support || !out_with_support)
        return argument_error("cfg, stimuli_path and outputs must not be null");
    return guarded([&] {
        const auto stream = cogsim::load_stimulus_stream(stimuli_path, cfg->cfg.k);
        auto with_support = std::async(std::launch::async, [&] {
            return run_to_result(cfg->cfg, stream, true);
        });
        *out_no_support = run_to_result(cfg->cfg, stream, false);
        *out_with_support = with_support.get();
    });
}

size_t cogsim_result_steps(const cogsim_result* result) {
    return result ? result->traces.size() : 0;
}

cogsim_status cogsim_result_trace(const cogsim_result* result, size_t index,
                                  cogsim_step_trace* out_trace) {
    if (!result || !out_trace)
        return argument_error("result and out_trace must not be null");
    if (index >= result->traces.size())
        return argument_error("trace index out of range");
    fill_trace(result->traces[index], out_trace);
    return COGSIM_OK;
}

cogsim_status cogsim_result_save(const cogsim_result* result,
                                 const char* directory) {
    if (!result || !directory)
        return argument_error("result and directory must not be null");
    return guarded([&] {
        const std::filesystem::path dir(directory);
        std::filesystem::create_directories(dir);
        cogsim::write_traces_csv(result->traces, dir / "traces.csv");
        cogsim::write_summary_json(result->summary, dir / "summary.json");
        cogsim::write_graphs_csv(result->graphs, result->stores,
                                 dir / "graph_nodes.csv", dir / "graph_edges.csv");
    });
}

cogsim_status cogsim_result_save_graphs(const cogsim_result* result,
                                        const char* directory) {
    if (!result || !directory)
        return argument_error("result and directory must not be null");
    return guarded([&] {
        const std::filesystem::path dir(directory);
        std::filesystem::create_directories(dir);
        cogsim::write_graphs_csv(result->graphs, result->stores,
                                 dir / "graph_nodes.csv", dir / "graph_edges.csv");
    });
}

void cogsim_result_free(cogsim_result* result) { delete result; }

cogsim_status cogsim_write_delta_report(const cogsim_result* no_support,
                                        const cogsim_result* with_support,
                                        const char* path) {
    if (!no_support || !with_support || !path)
        return argument_error("results and path must not be null");
    return guarded([&] {
        const auto rows =
            cogsim::delta_report(no_support->summary, with_support->summary);
        cogsim::write_delta_csv(rows, path);
    });
}

cogsim_status cogsim_stats_file(const char* traces_csv_path,
                                const char* out_summary_json_path) {
    if (!traces_csv_path || !out_summary_json_path)
        return argument_error("paths must not be null");
    return guarded([&] {
        const auto traces = cogsim::read_traces_csv(traces_csv_path);
        if (traces.empty())
            cogsim::fail(cogsim::errc::parse, "trace file has no rows");
        const auto summary = cogsim::make_run_summary(traces, false);
        cogsim::write_summary_json(summary, out_summary_json_path);
    });
}

cogsim_status cogsim_calibrate_file(const cogsim_config* cfg,
                                    const char* stimuli_path,
                                    double* out_sensation_bound,
                                    double* out_perception_bound,
                                    double* out_affection_bound) {
    if (!cfg || !stimuli_path || !out_sensation_bound || !out_perception_bound ||
        !out_affection_bound)
        return argument_error("cfg, stimuli_path and outputs must not be null");
    return guarded([&] {
        const auto stream = cogsim::load_stimulus_stream(stimuli_path, cfg->cfg.k);
        const auto result = cogsim::calibrate_bounds(stream, cfg->cfg);
        *out_sensation_bound = result.suggested[0];
        *out_perception_bound = result.suggested[1];
        *out_affection_bound = result.suggested[2];
    });
}

cogsim_status cogsim_synthesize_episode(const cogsim_config* cfg, size_t steps,
                                        unsigned seed, const char* out_path) {
    if (!cfg || !out_path) return argument_error("cfg and out_path must not be null");
    return guarded([&] {
        const auto records = cogsim::synthetic_episode(
            cfg->cfg, steps, static_cast<std::uint32_t>(seed));
        cogsim::write_stimulus_stream(records, out_path);
    });
}

#pragma GCC visibility pop
}  // extern "C"
