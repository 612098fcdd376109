#pragma once

#include "a1tk/weight.hpp"
#include "a1tk/weight_ops.hpp"

#include <cstddef>
#include <cstdint>

namespace a1tk {

/// Outcome of a reverse-Hoelder verification: the worst ratio of the p-mean
/// side to sharp_constant(c,p) times the p-th power of the 1-mean, over the
/// tested family of intervals.
struct RHReport {
    double p = 1.0;
    double c = 1.0;
    double worst_ratio = 0.0;
    Interval witness = Interval::unit();
    bool holds = false;
};

struct Lemma1Report {
    double delta = 1.0;
    double p = 2.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0; // |lhs - rhs| / max(lhs, rhs)
    std::size_t quadrature_cells = 0;
    bool diverges = false;
};

/// Critical integrability exponent c/(c-1); +infinity for c = 1.
/// c < 1 throws std::domain_error.
double p_critical(double c);

/// The sharp reverse-Hoelder constant 1 / (c^(p-1) * (c + p - p*c)).
/// The denominator factor is evaluated as c + p*(1-c) in one expression;
/// results within ~1e-12 of the pole at p_critical(c) are unreliable.
/// Requires 1 <= p < p_critical(c) (std::range_error otherwise).
double sharp_constant(double c, double p);

enum class Theorem2Mode {
    direct,            // evaluate both sides per interval from prefix sums
    via_rearrangement, // restrict, renormalize, rearrange, then evaluate
};

/// Verifies the sharp reverse-Hoelder inequality for every aligned
/// subinterval of w at exponent p, with c the exact A1 constant of w, plus
/// 1000 seeded random non-aligned intervals as a spot check. All step-weight
/// evaluations are exact. The via_rearrangement mode mirrors the dilation
/// pipeline instead: each restriction is renormalized onto (0,1), rearranged
/// and checked there; it must agree with the direct route to rounding.
/// Refuses p within 1e-9 of p_critical(c).
RHReport verify_theorem2(const StepWeight& w, double p, double tol,
                         Theorem2Mode mode = Theorem2Mode::direct);

/// Left side of the averaging identity: integral over (0, delta) of
/// ((1/t) integral_0^t g)^p dt. Step weights use adaptive GL16 panels per
/// cell (the integrand is smooth and bounded by v_1^p there); power weights
/// use the closed form and report divergence when p*alpha <= -1.
/// Requires non-increasing g and p > 1.
LpResult lemma1_lhs(const Weight& g, double p, double delta, std::size_t* panels = nullptr);

/// Right side of the identity:
///   -(1/(p-1)) (integral_0^delta g)^p / delta^(p-1)
///   + (p/(p-1)) integral_0^delta ((1/t) integral_0^t g)^(p-1) g(t) dt.
/// Same evaluation scheme as lemma1_lhs.
LpResult lemma1_rhs(const Weight& g, double p, double delta, std::size_t* panels = nullptr);

/// Packages both sides with their relative residual.
Lemma1Report lemma1_residual(const Weight& g, double p, double delta);

/// h_y(x) = x^(p-1) * y - ((p-1)/p) * x^p, the comparison function whose
/// decrease on [y, c*y] drives the sharp bound. Requires x, y > 0 and p > 1.
double hy(double x, double y, double p);

/// Samples h_y on a uniform grid of [y, c*y] and checks both the pairwise
/// decrease (to 1e-12) and the closed-form derivative sign
/// (p-1) x^(p-2) (y - x) <= 0 at every sample. Requires samples >= 2.
bool verify_hy_monotone(double y, double c, double p, std::size_t samples);

/// Reverse-Hoelder check for a non-increasing g over the prefix intervals
/// (0, delta') with delta' ranging over the breakpoints plus the supplied
/// delta, with c the exact Hardy constant of g. Exact on both sides.
RHReport verify_lemma2(const StepWeight& g, double p, double delta, double tol = 1e-9);

/// The extremal weight (1/c) t^(1/c - 1) attaining equality in the sharp
/// bound; the constant weight 1 for c = 1. Requires c >= 1.
PowerWeight extremal_weight(double c);

/// |lhs/rhs - 1| for the extremal weight over (0, 1): lhs the L^p mean,
/// rhs the sharp bound applied to the 1-mean. Zero up to rounding for every
/// p in [1, p_critical(c)).
double sharpness_gap(double c, double p);

} // namespace a1tk
