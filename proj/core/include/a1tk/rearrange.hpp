#pragma once

#include "a1tk/weight.hpp"

#include <vector>

namespace a1tk {

/// The decreasing rearrangement: the non-increasing, left-continuous
/// function on (0, 1] equimeasurable with w. Step weights sort their cells
/// by value in non-increasing order, carrying lengths, and are returned in
/// canonical form; power weights are already non-increasing and come back
/// unchanged.
Weight decreasing_rearrangement(const Weight& w);

/// Lebesgue measure of the super-level set {x in (0,1) : w(x) > lambda}.
/// Exact for both representations. Requires lambda > 0.
double distribution(const Weight& w, double lambda);

/// True iff the distributions agree at every supplied level to 1e-12
/// absolute. For two step weights, checking at the merged set of distinct
/// values is sufficient. Requires a non-empty level list.
bool is_equimeasurable(const Weight& w1, const Weight& w2, const std::vector<double>& levels);

/// Sorted distinct cell values of one or two step weights; the natural level
/// set for equimeasurability checks.
std::vector<double> distinct_values(const StepWeight& w);
std::vector<double> merged_distinct_values(const StepWeight& w1, const StepWeight& w2);

} // namespace a1tk
