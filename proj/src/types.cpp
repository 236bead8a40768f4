#include "cogsim/types.hpp"

#include <cmath>

namespace cogsim {

Semantic semantic_from_int(int v) {
    if (v < -1 || v > 1) fail(errc::argument, "semantic must be -1, 0 or 1");
    return static_cast<Semantic>(v);
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        fail(errc::dimension, "euclidean_distance: length mismatch (" +
                                  std::to_string(a.size()) + " vs " +
                                  std::to_string(b.size()) + ")");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

double mean_component(std::span<const double> v) {
    if (v.empty()) return 0.0;
    double sum = 0.0;
    for (double x : v) sum += x;
    return sum / static_cast<double>(v.size());
}

}  // namespace cogsim
