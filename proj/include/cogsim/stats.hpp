#pragma once

#include <span>
#include <utility>

#include "cogsim/types.hpp"

namespace cogsim {

struct MeanSd {
    double mean = 0.0;
    double sd = 0.0;  // population standard deviation
};

MeanSd mean_sd(std::span<const double> values);

// Regularized incomplete beta function I_x(a, b), continued-fraction
// evaluation, |error| < 1e-10 over the tested domain.
double regularized_incomplete_beta(double a, double b, double x);

struct AnovaResult {
    double f = 0.0;
    double p = 1.0;
};

// One-way ANOVA over >= 2 nonempty groups with at least one group of
// size >= 2. Zero within-group variance is reported as f = +infinity
// with p = 0.
AnovaResult one_way_anova(std::span<const std::vector<double>> groups);

}  // namespace cogsim
