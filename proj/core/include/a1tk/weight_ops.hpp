#pragma once

#include "a1tk/weight.hpp"

namespace a1tk {

/// Result of an L^p integral that may fail to converge. Divergence is a
/// value, not an error: the interesting theorems are exactly about where
/// L^p membership fails.
struct LpResult {
    bool diverges = false;
    double value = 0.0;

    static LpResult finite(double v) { return LpResult{false, v}; }
    static LpResult divergent() { return LpResult{true, 0.0}; }
};

/// Exact integral of w over i. Step weights sum value * overlap per cell;
/// power weights use the closed-form antiderivative a * t^(alpha+1)/(alpha+1).
double integral(const Weight& w, const Interval& i);

/// integral(w, i) / |i|.
double average(const Weight& w, const Interval& i);

/// Essential infimum of w over i. Cells meeting i in a set of measure zero
/// are ignored; a power weight with alpha <= 0 attains it at the right
/// endpoint.
double ess_inf(const Weight& w, const Interval& i);

/// Integral of w^p over i for p >= 1 (std::range_error otherwise).
/// Step weights are exact sums; power weights use the closed form when
/// p*alpha > -1 and report divergence when p*alpha <= -1 and i touches 0.
LpResult lp_integral(const Weight& w, const Interval& i, double p);

/// The weight x -> w(lo + x*|i|) on (0, 1): the restriction of w to i pulled
/// back affinely onto the unit interval. Preserves averages, essential
/// infima and normalized L^p integrals, hence all A1-type ratios.
///
/// For power weights only prefix intervals (0, hi) are supported, so the
/// singularity stays at the left endpoint; anything else throws
/// std::invalid_argument.
Weight renormalize(const Weight& w, const Interval& i);

} // namespace a1tk
