#pragma once

#include "a1tk/weight.hpp"

#include <cmath>

namespace a1tk::testing {

inline bool close_rel(double a, double b, double tol = 1e-12) {
    double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= tol * std::max(scale, 1e-300);
}

inline StepWeight thirds(double v1, double v2, double v3) {
    return StepWeight({0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0}, {v1, v2, v3});
}

inline StepWeight halves(double v1, double v2) {
    return StepWeight({0.0, 0.5, 1.0}, {v1, v2});
}

} // namespace a1tk::testing
