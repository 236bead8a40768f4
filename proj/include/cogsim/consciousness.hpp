#pragma once

// Consciousness graphs: one complete weighted undirected graph per layer
// over that layer's reference instances. Edge weights combine the mean
// semantic of the endpoints with their center distance; energy and
// entropy of the max-abs-normalized weights place the graph on the
// entropy-energy plane, and the displacement from the origin gives the
// per-layer Consciousness intensity.

#include <array>

#include "cogsim/awareness.hpp"
#include "cogsim/config.hpp"
#include "cogsim/types.hpp"

namespace cogsim {

struct GraphNode {
    int ref_id = 0;
    Vec center;
    Semantic semantic = Semantic::neutral;
};

struct GraphEdge {
    int a = 0;  // node indexes, a < b
    int b = 0;
    double weight = 0.0;
};

struct ConsciousnessGraph {
    Layer layer = Layer::sensation;
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges;  // complete graph, lexicographic order
};

struct EntropyEnergyPoint {
    double entropy = 0.0;
    double energy = 0.0;
};

// g = ((S_l + S_h) / 2) * d.
double edge_weight(Semantic a, Semantic b, double distance);

// Rebuilds the graph as the complete graph over the store's references,
// one semantic per reference. Throws when a semantic is missing.
void sync_graph(ConsciousnessGraph& graph, const HypersphereStore& store,
                std::span<const Semantic> semantics);

// Edge weights divided by the maximum absolute weight; an all-zero graph
// normalizes to all zeros. Same order as graph.edges.
std::vector<double> normalize_adjacency(const ConsciousnessGraph& graph);

// Sum of |normalized weight| over unordered edges.
double graph_energy(const ConsciousnessGraph& graph);

// -sum |g| ln |g| over unordered edges, with 0 ln 0 = 0.
double graph_entropy(const ConsciousnessGraph& graph);

EntropyEnergyPoint graph_metrics(const ConsciousnessGraph& graph);

// Euclidean displacement between two entropy-energy points.
double consciousness_intensity(const EntropyEnergyPoint& current,
                               const EntropyEnergyPoint& origin);

// r7 = k7 * (psi1*Y1 + psi2*Y2 + psi3*Y3 + psi4*Y4), accumulated left to
// right.
double consciousness_score(const std::array<double, 4>& intensities,
                           const AgentConfig& cfg);

}  // namespace cogsim
