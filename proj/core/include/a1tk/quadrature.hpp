#pragma once

#include <array>
#include <cstddef>
#include <functional>

namespace a1tk {

/// Nodes and weights of the 16-point Gauss-Legendre rule on [-1, 1],
/// computed once by Newton iteration on the Legendre recurrence.
const std::array<double, 16>& gauss_legendre16_nodes();
const std::array<double, 16>& gauss_legendre16_weights();

/// Single 16-point Gauss-Legendre panel over [a, b].
double gl16(const std::function<double(double)>& f, double a, double b);

/// Composite adaptive integral over [a, b]: fixed-order GL16 panels with
/// recursive bisection until successive refinement levels agree to rel_tol,
/// subject to a hard cap of 2^max_depth subcells. panel_count, when given,
/// accumulates the number of GL16 panels evaluated.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-10, int max_depth = 20,
                          std::size_t* panel_count = nullptr);

} // namespace a1tk
