#include "cogsim/stats.hpp"

#include <cmath>
#include <limits>

namespace cogsim {

namespace {

bool all_equal(std::span<const double> values) {
    for (double v : values)
        if (v != values.front()) return false;
    return true;
}

}  // namespace

MeanSd mean_sd(std::span<const double> values) {
    if (values.empty()) fail(errc::argument, "mean_sd: empty sample");
    // Constant samples must report exactly zero spread; the accumulated
    // mean can drift by an ulp and manufacture a tiny variance otherwise.
    if (all_equal(values)) return {values.front(), 0.0};
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) {
        const double d = v - mean;
        ss += d * d;
    }
    return {mean, std::sqrt(ss / static_cast<double>(values.size()))};
}

namespace {

// Continued fraction of the incomplete beta function, modified Lentz.
// Iteration count grows roughly with sqrt(max(a, b)); the cap covers
// degrees of freedom well beyond million-step streams.
double beta_continued_fraction(double a, double b, double x) {
    constexpr int kMaxIterations = 5000;
    constexpr double kEpsilon = 1e-15;
    constexpr double kTiny = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIterations; ++m) {
        const double md = static_cast<double>(m);
        const double m2 = 2.0 * md;
        double aa = md * (b - md) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + md) * (qab + md) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kEpsilon) return h;
    }
    fail(errc::internal, "incomplete beta continued fraction did not converge");
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0))
        fail(errc::argument, "incomplete beta parameters must be positive");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;

    const double log_front = std::lgamma(a + b) - std::lgamma(a) -
                             std::lgamma(b) + a * std::log(x) +
                             b * std::log1p(-x);
    const double front = std::exp(log_front);
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * beta_continued_fraction(a, b, x) / a;
    return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

AnovaResult one_way_anova(std::span<const std::vector<double>> groups) {
    if (groups.size() < 2)
        fail(errc::argument, "one_way_anova requires at least two groups");
    std::size_t n_total = 0;
    bool has_replicates = false;
    for (const auto& g : groups) {
        if (g.empty()) fail(errc::argument, "one_way_anova: empty group");
        if (g.size() >= 2) has_replicates = true;
        n_total += g.size();
    }
    if (!has_replicates)
        fail(errc::argument, "one_way_anova: no group has two or more members");

    double grand_sum = 0.0;
    for (const auto& g : groups)
        for (double v : g) grand_sum += v;
    const double grand_mean = grand_sum / static_cast<double>(n_total);

    double ss_between = 0.0;
    double ss_within = 0.0;
    for (const auto& g : groups) {
        double mean;
        if (all_equal(g)) {
            mean = g.front();  // exact: constant groups add no within-variance
        } else {
            double sum = 0.0;
            for (double v : g) sum += v;
            mean = sum / static_cast<double>(g.size());
            for (double v : g) {
                const double d = v - mean;
                ss_within += d * d;
            }
        }
        const double dm = mean - grand_mean;
        ss_between += static_cast<double>(g.size()) * dm * dm;
    }

    const double df_between = static_cast<double>(groups.size() - 1);
    const double df_within = static_cast<double>(n_total - groups.size());
    if (ss_within == 0.0)
        return {std::numeric_limits<double>::infinity(), 0.0};

    const double f = (ss_between / df_between) / (ss_within / df_within);
    const double x = df_within / (df_within + df_between * f);
    const double p = regularized_incomplete_beta(df_within / 2.0,
                                                 df_between / 2.0, x);
    return {f, p};
}

}  // namespace cogsim
