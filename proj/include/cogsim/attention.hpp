#pragma once

// Bottom-up Attention: the tension of the 4 x k cognitive matrix built
// from normalized Sensation/Perception/Affection instances and the
// padded emotion spectrum.

#include <array>

#include "cogsim/config.hpp"
#include "cogsim/types.hpp"

namespace cogsim {

// Rows: normalized sensation, normalized perception, padded spectrum,
// normalized affection. Every entry lies in [0,1] after clamping.
struct CognitiveMatrix {
    std::array<Vec, 4> rows;
};

CognitiveMatrix build_cognitive_matrix(const CognitiveInstance& r1,
                                       const CognitiveInstance& r2,
                                       const CognitiveInstance& r4,
                                       const Vec& padded_spectrum,
                                       const AgentConfig& cfg);

// (max entry + min(saturation, sum of entries)) / 2. The sum saturates
// at H_c so the result stays in [0,1] for matrices in [0,1].
double tension(const CognitiveMatrix& matrix, double saturation);

}  // namespace cogsim
