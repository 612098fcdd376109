#include "a1tk/weight.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace a1tk {

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw std::domain_error("Interval: endpoints must be finite");
    if (!(lo >= 0.0 && lo < 1.0 && hi > 0.0 && hi <= 1.0 && lo < hi))
        throw std::domain_error("Interval: need 0 <= lo < hi <= 1, got (" +
                                std::to_string(lo) + ", " + std::to_string(hi) + ")");
}

StepWeight::StepWeight(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (breakpoints_.size() < 2)
        throw std::domain_error("StepWeight: need at least two breakpoints");
    if (values_.size() + 1 != breakpoints_.size())
        throw std::domain_error("StepWeight: values must have one entry per cell (" +
                                std::to_string(breakpoints_.size() - 1) + " expected, " +
                                std::to_string(values_.size()) + " given)");
    if (breakpoints_.front() != 0.0)
        throw std::domain_error("StepWeight: first breakpoint must be 0");
    if (breakpoints_.back() != 1.0)
        throw std::domain_error("StepWeight: last breakpoint must be 1");
    for (std::size_t k = 0; k + 1 < breakpoints_.size(); ++k) {
        if (!std::isfinite(breakpoints_[k + 1]) || breakpoints_[k] >= breakpoints_[k + 1])
            throw std::domain_error("StepWeight: breakpoints must be strictly increasing (index " +
                                    std::to_string(k + 1) + ")");
    }
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (!std::isfinite(values_[k]) || values_[k] <= 0.0)
            throw std::domain_error("StepWeight: cell " + std::to_string(k + 1) +
                                    " has non-positive or non-finite value " +
                                    std::to_string(values_[k]));
    }
}

StepWeight StepWeight::constant(double value) {
    return StepWeight({0.0, 1.0}, {value});
}

double StepWeight::value_at(double x) const {
    if (!(x > 0.0 && x <= 1.0))
        throw std::domain_error("StepWeight::value_at: x must lie in (0, 1]");
    // cell k covers (t_k, t_{k+1}]: first breakpoint >= x closes the cell
    auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
    std::size_t idx = static_cast<std::size_t>(it - breakpoints_.begin());
    if (idx == 0) idx = 1;
    return values_[idx - 1];
}

StepWeight StepWeight::canonical() const {
    std::vector<double> bp;
    std::vector<double> vals;
    bp.reserve(breakpoints_.size());
    vals.reserve(values_.size());
    bp.push_back(0.0);
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (breakpoints_[k + 1] == breakpoints_[k])
            continue; // zero-length cell
        if (!vals.empty() && vals.back() == values_[k]) {
            bp.back() = breakpoints_[k + 1]; // merge equal-value neighbors
        } else {
            bp.push_back(breakpoints_[k + 1]);
            vals.push_back(values_[k]);
        }
    }
    bp.back() = 1.0;
    return StepWeight(std::move(bp), std::move(vals));
}

bool StepWeight::is_nonincreasing() const {
    for (std::size_t k = 0; k + 1 < values_.size(); ++k)
        if (values_[k] < values_[k + 1]) return false;
    return true;
}

PowerWeight::PowerWeight(double a, double alpha) : a_(a), alpha_(alpha) {
    if (!std::isfinite(a) || a <= 0.0)
        throw std::domain_error("PowerWeight: coefficient must be positive and finite");
    if (!std::isfinite(alpha) || alpha <= -1.0 || alpha > 0.0)
        throw std::domain_error("PowerWeight: exponent must lie in (-1, 0]");
}

double PowerWeight::value_at(double x) const {
    if (!(x > 0.0 && x <= 1.0))
        throw std::domain_error("PowerWeight::value_at: x must lie in (0, 1]");
    return a_ * std::pow(x, alpha_);
}

bool approx_equal(const StepWeight& lhs, const StepWeight& rhs, double tol) {
    StepWeight a = lhs.canonical();
    StepWeight b = rhs.canonical();
    if (a.cell_count() != b.cell_count()) return false;
    for (std::size_t k = 0; k < a.breakpoints().size(); ++k)
        if (std::abs(a.breakpoints()[k] - b.breakpoints()[k]) > tol) return false;
    for (std::size_t k = 0; k < a.cell_count(); ++k) {
        double va = a.values()[k];
        double vb = b.values()[k];
        if (std::abs(va - vb) > tol * std::max(std::abs(va), std::abs(vb))) return false;
    }
    return true;
}

} // namespace a1tk
