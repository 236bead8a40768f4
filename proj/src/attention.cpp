#include "cogsim/attention.hpp"

#include <algorithm>

namespace cogsim {

namespace {

Vec normalized_row(const Vec& values, double bound) {
    Vec row(values.size(), 0.0);
    for (std::size_t j = 0; j < values.size(); ++j)
        row[j] = std::clamp(values[j] / bound, 0.0, 1.0);
    return row;
}

}  // namespace

CognitiveMatrix build_cognitive_matrix(const CognitiveInstance& r1,
                                       const CognitiveInstance& r2,
                                       const CognitiveInstance& r4,
                                       const Vec& padded_spectrum,
                                       const AgentConfig& cfg) {
    if (!(cfg.sensation_bound > 0.0) || !(cfg.perception_bound > 0.0) ||
        !(cfg.affection_bound > 0.0))
        fail(errc::config, "normalization bounds must be positive");
    const std::size_t k = cfg.k;
    if (r1.values.size() != k || r2.values.size() != k ||
        r4.values.size() != k || padded_spectrum.size() != k)
        fail(errc::dimension, "cognitive matrix rows must have k components");

    CognitiveMatrix m;
    m.rows[0] = normalized_row(r1.values, cfg.sensation_bound);
    m.rows[1] = normalized_row(r2.values, cfg.perception_bound);
    m.rows[2].resize(k);
    for (std::size_t j = 0; j < k; ++j)
        m.rows[2][j] = std::clamp(padded_spectrum[j], 0.0, 1.0);
    m.rows[3] = normalized_row(r4.values, cfg.affection_bound);
    return m;
}

double tension(const CognitiveMatrix& matrix, double saturation) {
    double max_entry = 0.0;
    double sum = 0.0;
    for (const Vec& row : matrix.rows)
        for (double a : row) {
            max_entry = std::max(max_entry, a);
            sum += a;
        }
    return (max_entry + std::min(saturation, sum)) / 2.0;
}

}  // namespace cogsim
