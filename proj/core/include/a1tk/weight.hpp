#pragma once

#include <cstddef>
#include <variant>
#include <vector>

namespace a1tk {

/// Open subinterval (lo, hi) of the unit interval. Construction validates
/// 0 <= lo < hi <= 1; a violation throws std::domain_error.
class Interval {
public:
    Interval(double lo, double hi);

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double length() const { return hi_ - lo_; }

    static Interval unit() { return Interval(0.0, 1.0); }

private:
    double lo_;
    double hi_;
};

/// Positive piecewise-constant function on (0, 1]. Cell k lives on the
/// half-open interval (breakpoints[k-1], breakpoints[k]] and takes the value
/// values[k-1]; the function is therefore left-continuous by construction.
///
/// Invariants, enforced at construction (std::domain_error otherwise):
///   - breakpoints strictly increasing, first exactly 0, last exactly 1
///   - every value strictly positive and finite
class StepWeight {
public:
    StepWeight(std::vector<double> breakpoints, std::vector<double> values);

    /// Constant weight of the given positive value.
    static StepWeight constant(double value);

    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& values() const { return values_; }
    std::size_t cell_count() const { return values_.size(); }
    double cell_length(std::size_t k) const { return breakpoints_[k + 1] - breakpoints_[k]; }

    /// Value at x in (0, 1]: the cell whose half-open interval contains x.
    double value_at(double x) const;

    /// Merges adjacent cells with equal values and drops zero-length cells.
    /// Functions equal almost everywhere compare equal in canonical form.
    StepWeight canonical() const;

    bool is_nonincreasing() const;

private:
    std::vector<double> breakpoints_;
    std::vector<double> values_;
};

/// The analytic family a * t^alpha on (0, 1], with a > 0 and alpha in (-1, 0]
/// so the function is locally integrable at 0 and non-increasing. The
/// singularity, when present, sits at the left endpoint.
class PowerWeight {
public:
    PowerWeight(double a, double alpha);

    double a() const { return a_; }
    double alpha() const { return alpha_; }

    double value_at(double x) const;

private:
    double a_;
    double alpha_;
};

using Weight = std::variant<StepWeight, PowerWeight>;

inline bool is_step(const Weight& w) { return std::holds_alternative<StepWeight>(w); }
inline bool is_power(const Weight& w) { return std::holds_alternative<PowerWeight>(w); }
inline const StepWeight& as_step(const Weight& w) { return std::get<StepWeight>(w); }
inline const PowerWeight& as_power(const Weight& w) { return std::get<PowerWeight>(w); }

/// Equality of canonical forms to a relative tolerance on values and an
/// absolute tolerance on breakpoints (the domain is [0, 1]).
bool approx_equal(const StepWeight& lhs, const StepWeight& rhs, double tol = 1e-12);

} // namespace a1tk
