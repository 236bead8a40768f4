#pragma once

// File formats.
//
// Config: flat "key = value" lines, '#' comments. Lists are
// comma-separated. The keys support_table / stub_table reference CSV
// files resolved relative to the config file; save() always writes the
// fully inlined canonical form.
//
// Stimulus stream: one record per line,
//   step,label,expected_class,f1,...,fk
// with expected_class possibly empty. Steps run 1,2,3,...
//
// Outputs: traces.csv (one StepTrace per row), summary.json,
// graph_nodes.csv (layer,id,semantic,pr) and graph_edges.csv
// (layer,l,h,weight,normalized_weight).

#include <filesystem>
#include <string>

#include "cogsim/agent.hpp"
#include "cogsim/summary.hpp"

namespace cogsim {

// Shortest round-trip decimal form of a double (to_chars).
std::string format_double(double value);

AgentConfig load_config(const std::filesystem::path& path);
AgentConfig parse_config(const std::string& text,
                         const std::filesystem::path& base_dir = {});
std::string serialize_config(const AgentConfig& cfg);
void save_config(const AgentConfig& cfg, const std::filesystem::path& path);

// Support table: header "label,plausibility,credibility,possibility".
std::map<std::string, SupportScores> load_support_table(
    const std::filesystem::path& path);

// Stub table: header "label,<class>,...", one probability row per label;
// rows must sum to 1 within 1e-9.
std::map<std::string, Vec> load_stub_table(
    const std::filesystem::path& path,
    const std::vector<std::string>& emotion_classes);

std::vector<StimulusRecord> load_stimulus_stream(
    const std::filesystem::path& path, std::size_t expected_k);

void write_traces_csv(std::span<const StepTrace> traces,
                      const std::filesystem::path& path);
std::vector<StepTrace> read_traces_csv(const std::filesystem::path& path);

std::string summary_to_json(const RunSummary& summary);
void write_summary_json(const RunSummary& summary,
                        const std::filesystem::path& path);

void write_graphs_csv(const std::array<ConsciousnessGraph, 4>& graphs,
                      const std::array<HypersphereStore, 4>& stores,
                      const std::filesystem::path& nodes_path,
                      const std::filesystem::path& edges_path);

void write_delta_csv(std::span<const DeltaRow> rows,
                     const std::filesystem::path& path);

}  // namespace cogsim
