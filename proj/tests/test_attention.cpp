#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "cogsim/attention.hpp"

using namespace cogsim;

namespace {

AgentConfig bounds_config(std::size_t k, double sb, double pb, double ab) {
    AgentConfig cfg;
    cfg.k = k;
    cfg.sensation_bound = sb;
    cfg.perception_bound = pb;
    cfg.affection_bound = ab;
    return cfg;
}

CognitiveInstance instance(Layer layer, Vec values) {
    return {layer, 1, std::move(values)};
}

CognitiveMatrix matrix_of(std::array<Vec, 4> rows) {
    CognitiveMatrix m;
    m.rows = std::move(rows);
    return m;
}

}  // namespace

TEST_CASE("zero instances and spectrum give the zero matrix") {
    const AgentConfig cfg = bounds_config(4, 1.0, 1.0, 1.0);
    const auto m = build_cognitive_matrix(
        instance(Layer::sensation, Vec(4, 0.0)),
        instance(Layer::perception, Vec(4, 0.0)),
        instance(Layer::affection, Vec(4, 0.0)), Vec(4, 0.0), cfg);
    for (const Vec& row : m.rows)
        for (double a : row) CHECK(a == 0.0);
}

TEST_CASE("a sensation row at its bound normalizes to ones") {
    const AgentConfig cfg = bounds_config(3, 2.5, 1.0, 1.0);
    const auto m = build_cognitive_matrix(
        instance(Layer::sensation, Vec(3, 2.5)),
        instance(Layer::perception, Vec(3, 0.0)),
        instance(Layer::affection, Vec(3, 0.0)), Vec(3, 0.0), cfg);
    CHECK(m.rows[0] == Vec(3, 1.0));
}

TEST_CASE("components exceeding their bound clamp to one, negatives to zero") {
    const AgentConfig cfg = bounds_config(2, 1.0, 1.0, 1.0);
    const auto m = build_cognitive_matrix(
        instance(Layer::sensation, Vec{3.0, -2.0}),
        instance(Layer::perception, Vec{0.5, 1.5}),
        instance(Layer::affection, Vec{-0.1, 0.25}), Vec{0.0, 1.0}, cfg);
    CHECK(m.rows[0] == Vec{1.0, 0.0});
    CHECK(m.rows[1] == Vec{0.5, 1.0});
    CHECK(m.rows[3] == Vec{0.0, 0.25});
    // Clamp oracle over every entry.
    for (const Vec& row : m.rows)
        for (double a : row) {
            CHECK(a >= 0.0);
            CHECK(a <= 1.0);
        }
}

TEST_CASE("nonpositive bounds are rejected") {
    AgentConfig cfg = bounds_config(2, 1.0, 1.0, 1.0);
    cfg.perception_bound = 0.0;
    CHECK_THROWS_AS(
        build_cognitive_matrix(instance(Layer::sensation, Vec(2, 0.0)),
                               instance(Layer::perception, Vec(2, 0.0)),
                               instance(Layer::affection, Vec(2, 0.0)),
                               Vec(2, 0.0), cfg),
        error);
}

TEST_CASE("row length mismatches are rejected") {
    const AgentConfig cfg = bounds_config(3, 1.0, 1.0, 1.0);
    CHECK_THROWS_AS(
        build_cognitive_matrix(instance(Layer::sensation, Vec(2, 0.0)),
                               instance(Layer::perception, Vec(3, 0.0)),
                               instance(Layer::affection, Vec(3, 0.0)),
                               Vec(3, 0.0), cfg),
        error);
}

TEST_CASE("tension of the zero matrix is zero") {
    const auto m = matrix_of({Vec(5, 0.0), Vec(5, 0.0), Vec(5, 0.0), Vec(5, 0.0)});
    CHECK(tension(m, 1.0) == 0.0);
}

TEST_CASE("a single unit impulse saturates tension at one") {
    auto m = matrix_of({Vec(6, 0.0), Vec(6, 0.0), Vec(6, 0.0), Vec(6, 0.0)});
    m.rows[2][3] = 1.0;
    CHECK(tension(m, 1.0) == 1.0);
}

TEST_CASE("uniform 0.1 matrix saturates the sum term") {
    const auto m = matrix_of({Vec(4, 0.1), Vec(4, 0.1), Vec(4, 0.1), Vec(4, 0.1)});
    // Hand evaluation: (0.1 + min(1, 1.6)) / 2 = 0.55.
    CHECK(tension(m, 1.0) == doctest::Approx(0.55).epsilon(1e-12));
}

TEST_CASE("tension stays in [0,1] and matches the direct formula") {
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (int it = 0; it < 500; ++it) {
        auto m = matrix_of({Vec(7), Vec(7), Vec(7), Vec(7)});
        for (Vec& row : m.rows)
            for (double& a : row) a = dist(rng);
        const double got = tension(m, 1.0);
        CHECK(got >= 0.0);
        CHECK(got <= 1.0);

        double mx = 0.0, sum = 0.0;
        for (const Vec& row : m.rows)
            for (double a : row) {
                mx = std::max(mx, a);
                sum += a;
            }
        CHECK(got == doctest::Approx((mx + std::min(1.0, sum)) / 2.0)
                         .epsilon(1e-12));
    }
}

TEST_CASE("raising any entry never decreases tension") {
    std::mt19937 rng(67);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (int it = 0; it < 200; ++it) {
        auto m = matrix_of({Vec(5), Vec(5), Vec(5), Vec(5)});
        for (Vec& row : m.rows)
            for (double& a : row) a = dist(rng);
        const double before = tension(m, 1.0);
        auto bumped = m;
        const std::size_t r = rng() % 4;
        const std::size_t c = rng() % 5;
        bumped.rows[r][c] = std::min(1.0, bumped.rows[r][c] + dist(rng));
        CHECK(tension(bumped, 1.0) >= before - 1e-15);
    }
}

TEST_CASE("tension is invariant under entry permutation") {
    std::mt19937 rng(71);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (int it = 0; it < 200; ++it) {
        std::vector<double> entries(4 * 6);
        for (double& a : entries) a = dist(rng);
        auto fill = [](std::span<const double> flat) {
            auto m = matrix_of({Vec(6), Vec(6), Vec(6), Vec(6)});
            for (std::size_t i = 0; i < flat.size(); ++i)
                m.rows[i / 6][i % 6] = flat[i];
            return m;
        };
        const double before = tension(fill(entries), 1.0);
        std::shuffle(entries.begin(), entries.end(), rng);
        const double after = tension(fill(entries), 1.0);
        CHECK(after == doctest::Approx(before).epsilon(1e-12));
    }
}
