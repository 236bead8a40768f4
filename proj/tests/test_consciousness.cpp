#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "cogsim/consciousness.hpp"

using namespace cogsim;

namespace {

// Store with one reference per given center (radius chosen tiny so every
// center opens its own hypersphere).
HypersphereStore store_of(Layer layer, const std::vector<Vec>& centers,
                          double radius = 1e-9) {
    HypersphereStore store(layer);
    long long step = 1;
    for (const auto& c : centers)
        store.absorb({layer, step++, c}, radius, "n");
    return store;
}

ConsciousnessGraph graph_of(const std::vector<Vec>& centers,
                            const std::vector<Semantic>& semantics) {
    const HypersphereStore store = store_of(Layer::sensation, centers);
    ConsciousnessGraph g;
    sync_graph(g, store, semantics);
    return g;
}

Vec random_vec(std::mt19937& rng, std::size_t n, double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    Vec v(n);
    for (double& x : v) x = dist(rng);
    return v;
}

Semantic random_semantic(std::mt19937& rng) {
    return static_cast<Semantic>(static_cast<int>(rng() % 3) - 1);
}

}  // namespace

TEST_CASE("edge weights follow the mean-semantic times distance rule") {
    CHECK(edge_weight(Semantic::positive, Semantic::positive, 2.0) == 2.0);
    CHECK(edge_weight(Semantic::positive, Semantic::negative, 123.0) == 0.0);
    CHECK(edge_weight(Semantic::neutral, Semantic::negative, 4.0) == -2.0);
    CHECK(edge_weight(Semantic::neutral, Semantic::neutral, 9.0) == 0.0);
    CHECK_THROWS_AS(edge_weight(Semantic::positive, Semantic::positive, -1.0),
                    error);
}

TEST_CASE("normalization: a single edge normalizes to itself") {
    ConsciousnessGraph g;
    g.nodes.resize(2);
    g.edges = {{0, 1, 5.0}};
    CHECK(normalize_adjacency(g) == std::vector<double>{1.0});
    g.edges = {{0, 1, -5.0}};
    CHECK(normalize_adjacency(g) == std::vector<double>{-1.0});
}

TEST_CASE("normalization divides by the maximum absolute weight") {
    ConsciousnessGraph g;
    g.nodes.resize(3);
    g.edges = {{0, 1, 2.0}, {0, 2, -4.0}};
    CHECK(normalize_adjacency(g) == std::vector<double>{0.5, -1.0});
}

TEST_CASE("an all-zero graph normalizes to all zeros") {
    ConsciousnessGraph g;
    g.nodes.resize(3);
    g.edges = {{0, 1, 0.0}, {0, 2, 0.0}, {1, 2, 0.0}};
    CHECK(normalize_adjacency(g) == std::vector<double>(3, 0.0));
    CHECK(graph_energy(g) == 0.0);
    CHECK(graph_entropy(g) == 0.0);
}

TEST_CASE("empty and single-node graphs have zero energy and entropy") {
    ConsciousnessGraph g;
    CHECK(graph_energy(g) == 0.0);
    CHECK(graph_entropy(g) == 0.0);
    g.nodes.resize(1);
    CHECK(graph_energy(g) == 0.0);
}

TEST_CASE("a two-node graph with one nonzero edge has unit energy") {
    const auto g = graph_of({Vec{0.0, 0.0}, Vec{3.0, 4.0}},
                            {Semantic::positive, Semantic::positive});
    CHECK(g.edges.size() == 1);
    CHECK(g.edges[0].weight == 5.0);
    CHECK(graph_energy(g) == 1.0);
    CHECK(graph_entropy(g) == 0.0);  // ln 1 = 0
}

TEST_CASE("entropy hand oracle: normalized weights one and 1/e") {
    // Semantics (0, +1, -1) zero out the far edge; distances pick the
    // weight ratio e.
    const double e = std::exp(1.0);
    const auto g = graph_of({Vec{0.0, 0.0}, Vec{2.0, 0.0}, Vec{2.0 / e, 0.0}},
                            {Semantic::neutral, Semantic::positive,
                             Semantic::negative});
    REQUIRE(g.edges.size() == 3);
    CHECK(graph_entropy(g) == doctest::Approx(1.0 / e).epsilon(1e-12));
    CHECK(graph_energy(g) == doctest::Approx(1.0 + 1.0 / e).epsilon(1e-12));
}

TEST_CASE("random graphs match the brute-force double-loop oracle") {
    std::mt19937 rng(97);
    for (int it = 0; it < 100; ++it) {
        const std::size_t n = 2 + rng() % 5;  // up to 6 nodes
        std::vector<Vec> centers;
        std::vector<Semantic> semantics;
        for (std::size_t i = 0; i < n; ++i) {
            centers.push_back(random_vec(rng, 3, -5.0, 5.0));
            semantics.push_back(random_semantic(rng));
        }
        const auto g = graph_of(centers, semantics);

        // Independent transcription over the index pairs l < h.
        std::vector<double> weights;
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t h = l + 1; h < n; ++h) {
                const double d = euclidean_distance(centers[l], centers[h]);
                weights.push_back(
                    (static_cast<double>(semantic_value(semantics[l])) +
                     semantic_value(semantics[h])) /
                    2.0 * d);
            }
        double max_abs = 0.0;
        for (double w : weights) max_abs = std::max(max_abs, std::abs(w));
        double energy = 0.0, entropy = 0.0;
        if (max_abs > 0.0)
            for (double w : weights) {
                const double a = std::abs(w) / max_abs;
                energy += a;
                if (a > 0.0) entropy -= a * std::log(a);
            }
        CHECK(graph_energy(g) == doctest::Approx(energy).epsilon(1e-9));
        CHECK(graph_entropy(g) == doctest::Approx(entropy).epsilon(1e-9));
    }
}

TEST_CASE("metrics are invariant under node relabeling") {
    std::mt19937 rng(101);
    std::vector<Vec> centers;
    std::vector<Semantic> semantics;
    for (int i = 0; i < 6; ++i) {
        centers.push_back(random_vec(rng, 2, -8.0, 8.0));
        semantics.push_back(random_semantic(rng));
    }
    const auto g1 = graph_of(centers, semantics);

    std::vector<std::size_t> order{3, 0, 5, 1, 4, 2};
    std::vector<Vec> shuffled_centers;
    std::vector<Semantic> shuffled_semantics;
    for (std::size_t i : order) {
        shuffled_centers.push_back(centers[i]);
        shuffled_semantics.push_back(semantics[i]);
    }
    const auto g2 = graph_of(shuffled_centers, shuffled_semantics);
    CHECK(graph_energy(g2) == doctest::Approx(graph_energy(g1)).epsilon(1e-12));
    CHECK(graph_entropy(g2) == doctest::Approx(graph_entropy(g1)).epsilon(1e-12));
}

TEST_CASE("energy is invariant under a global semantic sign flip") {
    std::mt19937 rng(103);
    for (int it = 0; it < 50; ++it) {
        std::vector<Vec> centers;
        std::vector<Semantic> semantics, flipped;
        for (int i = 0; i < 5; ++i) {
            centers.push_back(random_vec(rng, 2, -5.0, 5.0));
            const Semantic s = random_semantic(rng);
            semantics.push_back(s);
            flipped.push_back(static_cast<Semantic>(-semantic_value(s)));
        }
        const auto g = graph_of(centers, semantics);
        const auto h = graph_of(centers, flipped);
        CHECK(graph_energy(h) == graph_energy(g));
        CHECK(graph_entropy(h) == graph_entropy(g));
    }
}

TEST_CASE("power-of-two distance scaling leaves normalized metrics unchanged") {
    std::mt19937 rng(107);
    for (double c : {0.5, 2.0}) {
        std::vector<Vec> centers, scaled;
        std::vector<Semantic> semantics;
        for (int i = 0; i < 5; ++i) {
            centers.push_back(random_vec(rng, 3, -4.0, 4.0));
            Vec s = centers.back();
            for (double& x : s) x *= c;
            scaled.push_back(std::move(s));
            semantics.push_back(random_semantic(rng));
        }
        const auto g = graph_of(centers, semantics);
        const auto h = graph_of(scaled, semantics);
        CHECK(graph_energy(h) == graph_energy(g));
        CHECK(graph_entropy(h) == graph_entropy(g));
    }
}

TEST_CASE("each edge contributes at most 1/e to the entropy") {
    std::mt19937 rng(109);
    for (int it = 0; it < 100; ++it) {
        const std::size_t n = 2 + rng() % 5;
        std::vector<Vec> centers;
        std::vector<Semantic> semantics;
        for (std::size_t i = 0; i < n; ++i) {
            centers.push_back(random_vec(rng, 2, -5.0, 5.0));
            semantics.push_back(random_semantic(rng));
        }
        const auto g = graph_of(centers, semantics);
        CHECK(graph_entropy(g) <=
              static_cast<double>(g.edges.size()) / std::exp(1.0) + 1e-12);
    }
}

TEST_CASE("consciousness intensity is the planar displacement") {
    CHECK(consciousness_intensity({0.0, 0.0}, {0.0, 0.0}) == 0.0);
    CHECK(consciousness_intensity({3.0, 4.0}, {0.0, 0.0}) == 5.0);

    std::mt19937 rng(113);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int it = 0; it < 200; ++it) {
        const EntropyEnergyPoint p{dist(rng), dist(rng)};
        const EntropyEnergyPoint q{dist(rng), dist(rng)};
        const Vec a{p.entropy, p.energy};
        const Vec b{q.entropy, q.energy};
        CHECK(consciousness_intensity(p, q) ==
              doctest::Approx(euclidean_distance(a, b)).epsilon(1e-12));
    }
}

TEST_CASE("intensity of a fresh empty graph is zero") {
    ConsciousnessGraph g;
    CHECK(consciousness_intensity(graph_metrics(g), {0.0, 0.0}) == 0.0);
}

TEST_CASE("consciousness score is the weighted intensity sum") {
    AgentConfig cfg;
    CHECK(consciousness_score({0.0, 0.0, 0.0, 0.0}, cfg) == 0.0);
    CHECK(consciousness_score({1.0, 1.0, 1.0, 1.0}, cfg) == 4.0);

    std::mt19937 rng(127);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int it = 0; it < 500; ++it) {
        for (double& psi : cfg.consciousness_weights) psi = dist(rng);
        cfg.consciousness_gain = dist(rng);
        std::array<double, 4> y{};
        for (double& v : y) v = dist(rng);
        const double expected =
            cfg.consciousness_gain * (cfg.consciousness_weights[0] * y[0] +
                                      cfg.consciousness_weights[1] * y[1] +
                                      cfg.consciousness_weights[2] * y[2] +
                                      cfg.consciousness_weights[3] * y[3]);
        CHECK(consciousness_score(y, cfg) ==
              doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("sync_graph builds the complete graph over the store") {
    std::mt19937 rng(131);
    for (std::size_t n : {1u, 3u, 5u}) {
        std::vector<Vec> centers;
        std::vector<Semantic> semantics;
        for (std::size_t i = 0; i < n; ++i) {
            centers.push_back(random_vec(rng, 2, -9.0, 9.0));
            semantics.push_back(random_semantic(rng));
        }
        const auto g = graph_of(centers, semantics);
        CHECK(g.nodes.size() == n);
        CHECK(g.edges.size() == n * (n - 1) / 2);
        for (const auto& e : g.edges) {
            const double d = euclidean_distance(centers[e.a], centers[e.b]);
            const double expected =
                (static_cast<double>(semantic_value(semantics[e.a])) +
                 semantic_value(semantics[e.b])) /
                2.0 * d;
            CHECK(e.weight == doctest::Approx(expected).epsilon(1e-12));
        }
    }
}

TEST_CASE("sync_graph requires a semantic for every reference") {
    const auto store = store_of(Layer::emotion, {Vec{0.0}, Vec{5.0}});
    ConsciousnessGraph g;
    const std::vector<Semantic> short_list{Semantic::positive};
    CHECK_THROWS_AS(sync_graph(g, store, short_list), error);
}
