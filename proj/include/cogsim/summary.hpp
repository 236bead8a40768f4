#pragma once

// Run summaries: per-group mean/SD of the Attention, Awareness and
// Consciousness traces plus one-way ANOVA per grouping.

#include <map>
#include <span>
#include <string>

#include "cogsim/agent.hpp"
#include "cogsim/stats.hpp"

namespace cogsim {

enum class Grouping { by_label, by_class };

struct GroupStats {
    std::size_t count = 0;
    MeanSd attention;
    MeanSd awareness;
    MeanSd consciousness;
};

struct MetricAnova {
    bool valid = false;  // ANOVA preconditions met for this grouping
    AnovaResult attention;
    AnovaResult awareness;
    AnovaResult consciousness;
};

struct RunSummary {
    bool support = false;
    std::size_t steps = 0;
    std::map<std::string, GroupStats> by_label;
    std::map<std::string, GroupStats> by_class;  // classified top class
    MetricAnova anova_by_label;
    MetricAnova anova_by_class;
};

// Per-group statistics for one grouping. by_class groups on the
// classifier's top class recorded in each trace.
std::map<std::string, GroupStats> summarize(std::span<const StepTrace> traces,
                                            Grouping grouping);

RunSummary make_run_summary(std::span<const StepTrace> traces, bool support);

// One row of the paired-run comparison, group means side by side.
struct DeltaRow {
    std::string grouping;  // "label" or "class"
    std::string group;
    double attention_no = 0.0, attention_with = 0.0, attention_delta = 0.0;
    double awareness_no = 0.0, awareness_with = 0.0, awareness_delta = 0.0;
    double consciousness_no = 0.0, consciousness_with = 0.0,
           consciousness_delta = 0.0;
};

std::vector<DeltaRow> delta_report(const RunSummary& no_support,
                                   const RunSummary& with_support);

}  // namespace cogsim
