#include "cogsim/summary.hpp"

namespace cogsim {

namespace {

struct MetricSamples {
    std::vector<double> attention, awareness, consciousness;
};

std::map<std::string, MetricSamples> collect(std::span<const StepTrace> traces,
                                             Grouping grouping) {
    std::map<std::string, MetricSamples> groups;
    for (const auto& t : traces) {
        const std::string& key =
            grouping == Grouping::by_label ? t.label : t.top_class;
        MetricSamples& g = groups[key];
        g.attention.push_back(t.attention);
        g.awareness.push_back(t.awareness);
        g.consciousness.push_back(t.consciousness);
    }
    return groups;
}

MetricAnova anova_over(const std::map<std::string, MetricSamples>& groups) {
    MetricAnova out;
    if (groups.size() < 2) return out;
    bool has_replicates = false;
    for (const auto& [key, g] : groups)
        if (g.attention.size() >= 2) has_replicates = true;
    if (!has_replicates) return out;

    std::vector<std::vector<double>> attention, awareness, consciousness;
    for (const auto& [key, g] : groups) {
        attention.push_back(g.attention);
        awareness.push_back(g.awareness);
        consciousness.push_back(g.consciousness);
    }
    out.valid = true;
    out.attention = one_way_anova(attention);
    out.awareness = one_way_anova(awareness);
    out.consciousness = one_way_anova(consciousness);
    return out;
}

std::map<std::string, GroupStats> stats_over(
    const std::map<std::string, MetricSamples>& groups) {
    std::map<std::string, GroupStats> out;
    for (const auto& [key, g] : groups) {
        GroupStats s;
        s.count = g.attention.size();
        s.attention = mean_sd(g.attention);
        s.awareness = mean_sd(g.awareness);
        s.consciousness = mean_sd(g.consciousness);
        out[key] = s;
    }
    return out;
}

}  // namespace

std::map<std::string, GroupStats> summarize(std::span<const StepTrace> traces,
                                            Grouping grouping) {
    if (traces.empty()) fail(errc::argument, "summarize: no traces");
    return stats_over(collect(traces, grouping));
}

RunSummary make_run_summary(std::span<const StepTrace> traces, bool support) {
    if (traces.empty()) fail(errc::argument, "summarize: no traces");
    RunSummary summary;
    summary.support = support;
    summary.steps = traces.size();

    const auto label_groups = collect(traces, Grouping::by_label);
    const auto class_groups = collect(traces, Grouping::by_class);
    summary.by_label = stats_over(label_groups);
    summary.by_class = stats_over(class_groups);
    summary.anova_by_label = anova_over(label_groups);
    summary.anova_by_class = anova_over(class_groups);
    return summary;
}

std::vector<DeltaRow> delta_report(const RunSummary& no_support,
                                   const RunSummary& with_support) {
    std::vector<DeltaRow> rows;
    const auto emit = [&rows](const char* grouping,
                              const std::map<std::string, GroupStats>& a,
                              const std::map<std::string, GroupStats>& b) {
        for (const auto& [key, sa] : a) {
            auto it = b.find(key);
            if (it == b.end()) continue;
            const GroupStats& sb = it->second;
            DeltaRow row;
            row.grouping = grouping;
            row.group = key;
            row.attention_no = sa.attention.mean;
            row.attention_with = sb.attention.mean;
            row.attention_delta = sb.attention.mean - sa.attention.mean;
            row.awareness_no = sa.awareness.mean;
            row.awareness_with = sb.awareness.mean;
            row.awareness_delta = sb.awareness.mean - sa.awareness.mean;
            row.consciousness_no = sa.consciousness.mean;
            row.consciousness_with = sb.consciousness.mean;
            row.consciousness_delta =
                sb.consciousness.mean - sa.consciousness.mean;
            rows.push_back(std::move(row));
        }
    };
    emit("label", no_support.by_label, with_support.by_label);
    emit("class", no_support.by_class, with_support.by_class);
    return rows;
}

}  // namespace cogsim
