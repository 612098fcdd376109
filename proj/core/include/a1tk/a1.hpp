#pragma once

#include "a1tk/weight.hpp"

#include <cstddef>
#include <cstdint>

namespace a1tk {

/// The exact A1 constant of a step weight together with a witness.
///
/// The supremum of average/ess-inf over arbitrary subintervals need not be
/// attained: extending an interval by an infinitesimal sliver into a
/// neighboring cell lowers the essential infimum without changing the
/// average in the limit. The sliver flags record when the supremum is only
/// attained that way. Witness indices are breakpoint indices of the
/// canonical form of the input.
struct A1Report {
    double constant = 1.0;
    std::size_t witness_lo_index = 0;
    std::size_t witness_hi_index = 0;
    bool sliver_left = false;
    bool sliver_right = false;
};

struct HardyReport {
    double constant = 1.0;
    double witness_t = 1.0; // left boundary of the supremizing cell
};

struct Theorem1Report {
    A1Report original;
    A1Report rearranged;
    HardyReport hardy_rearranged;
    bool holds = false;
};

/// Exact supremum over all subintervals I of average(w, I) / ess_inf(w, I).
///
/// Within a fixed set of touched cells the average is monotone in each
/// endpoint, so optima land on cell boundaries; a vanishing sliver into a
/// neighbor cell then contributes that neighbor's value to the essential
/// infimum at zero cost to the average. The scan therefore takes, for every
/// aligned interval (t_i, t_j), the ratio
///
///     average(t_i, t_j) / min( min_{i<k<=j} v_k,
///                              v_i     if i >= 1,
///                              v_{j+1} if j <= n-1 )
///
/// using prefix sums and an incrementally maintained running minimum:
/// O(n^2) time, O(n) space. Ties resolve to the smaller left, then smaller
/// right, index. Validated against a1_constant_bruteforce.
A1Report a1_constant(const StepWeight& w);

/// Windowed variant of the scan: only aligned intervals spanning at most
/// max_span cells enter (the sliver rule still applies). A lower bound for
/// the full supremum, O(n * max_span); identical to a1_constant when
/// max_span covers every cell. Available for large n; the exact scan is
/// what acceptance runs use.
A1Report a1_constant_windowed(const StepWeight& w, std::size_t max_span);

/// Independent grid oracle: the plain maximum of average/ess-inf over all
/// intervals with endpoints on the uniform grid {k/grid} merged with the
/// breakpoint set plus breakpoints perturbed by +-|cell|/grid. Every tested
/// interval is genuine, so the value converges to the true supremum from
/// below as the grid is refined. O(grid^2); internally parallelized over
/// left endpoints (an exact max-reduction, so the result is identical to
/// the sequential scan).
double a1_constant_bruteforce(const StepWeight& w, std::uint64_t grid);

/// (1/t) * integral of g over (0, t): the running mean from the left.
double hardy_average(const Weight& g, double t);

/// Exact sup over t in (0, 1] of hardy_average(g, t) / g(t).
///
/// The running average A is monotone on each cell and g is constant there,
/// so the supremum restricted to cell k is the left-limit ratio
/// A(t_{k-1})/v_k; with require_nonincreasing the input must be
/// non-increasing (std::invalid_argument otherwise) and those n-1 ratios
/// are the whole story. Without the flag the sup is additionally evaluated
/// at right cell endpoints, which covers non-monotone step inputs as well
/// since A - g has a fixed sign inside every cell.
HardyReport hardy_constant(const StepWeight& g, bool require_nonincreasing = true);

/// Checks that the decreasing rearrangement keeps the A1 constant
/// (to 1e-12 relative) and that the rearranged weight satisfies the Hardy
/// inequality with the original constant.
Theorem1Report verify_theorem1(const StepWeight& w);

} // namespace a1tk
