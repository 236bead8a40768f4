#include "cogsim/consciousness.hpp"

#include <cmath>

namespace cogsim {

double edge_weight(Semantic a, Semantic b, double distance) {
    if (distance < 0.0) fail(errc::argument, "edge distance must be nonnegative");
    const double mean_semantic =
        (static_cast<double>(semantic_value(a)) + semantic_value(b)) / 2.0;
    return mean_semantic * distance;
}

void sync_graph(ConsciousnessGraph& graph, const HypersphereStore& store,
                std::span<const Semantic> semantics) {
    const auto& refs = store.refs();
    if (semantics.size() < refs.size())
        fail(errc::argument, "sync_graph: missing semantic for reference " +
                                 std::to_string(semantics.size()));

    graph.layer = store.layer();
    graph.nodes.clear();
    graph.nodes.reserve(refs.size());
    for (std::size_t i = 0; i < refs.size(); ++i)
        graph.nodes.push_back({refs[i].id, refs[i].center, semantics[i]});

    graph.edges.clear();
    graph.edges.reserve(refs.size() * (refs.size() + 1) / 2);
    for (std::size_t l = 0; l < graph.nodes.size(); ++l)
        for (std::size_t h = l + 1; h < graph.nodes.size(); ++h) {
            const double d = euclidean_distance(graph.nodes[l].center,
                                                graph.nodes[h].center);
            graph.edges.push_back(
                {static_cast<int>(l), static_cast<int>(h),
                 edge_weight(graph.nodes[l].semantic, graph.nodes[h].semantic, d)});
        }
}

std::vector<double> normalize_adjacency(const ConsciousnessGraph& graph) {
    double max_abs = 0.0;
    for (const auto& e : graph.edges) max_abs = std::max(max_abs, std::abs(e.weight));
    std::vector<double> normalized(graph.edges.size(), 0.0);
    if (max_abs == 0.0) return normalized;
    for (std::size_t i = 0; i < graph.edges.size(); ++i)
        normalized[i] = graph.edges[i].weight / max_abs;
    return normalized;
}

double graph_energy(const ConsciousnessGraph& graph) {
    const std::vector<double> normalized = normalize_adjacency(graph);
    double energy = 0.0;
    for (double g : normalized) energy += std::abs(g);
    return energy;
}

double graph_entropy(const ConsciousnessGraph& graph) {
    const std::vector<double> normalized = normalize_adjacency(graph);
    double entropy = 0.0;
    for (double g : normalized) {
        const double a = std::abs(g);
        if (a > 0.0) entropy -= a * std::log(a);
    }
    return entropy;
}

EntropyEnergyPoint graph_metrics(const ConsciousnessGraph& graph) {
    const std::vector<double> normalized = normalize_adjacency(graph);
    double energy = 0.0;
    double entropy = 0.0;
    for (double g : normalized) {
        const double a = std::abs(g);
        energy += a;
        if (a > 0.0) entropy -= a * std::log(a);
    }
    return {entropy, energy};
}

double consciousness_intensity(const EntropyEnergyPoint& current,
                               const EntropyEnergyPoint& origin) {
    const double dh = current.entropy - origin.entropy;
    const double de = current.energy - origin.energy;
    return std::sqrt(dh * dh + de * de);
}

double consciousness_score(const std::array<double, 4>& intensities,
                           const AgentConfig& cfg) {
    const auto& psi = cfg.consciousness_weights;
    return cfg.consciousness_gain *
           (psi[0] * intensities[0] + psi[1] * intensities[1] +
            psi[2] * intensities[2] + psi[3] * intensities[3]);
}

}  // namespace cogsim
