#include "a1tk/weight_ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace a1tk {

namespace {

double step_integral(const StepWeight& w, const Interval& i) {
    const auto& t = w.breakpoints();
    const auto& v = w.values();
    double sum = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (t[k] >= i.hi()) break;
        double overlap = std::min(t[k + 1], i.hi()) - std::max(t[k], i.lo());
        if (overlap > 0.0) sum += v[k] * overlap;
    }
    return sum;
}

// integral of a * t^alpha over (lo, hi); alpha > -1 so this always converges
double power_integral(const PowerWeight& w, double lo, double hi) {
    double q = w.alpha() + 1.0;
    return w.a() * (std::pow(hi, q) - std::pow(lo, q)) / q;
}

} // namespace

double integral(const Weight& w, const Interval& i) {
    if (is_step(w)) return step_integral(as_step(w), i);
    return power_integral(as_power(w), i.lo(), i.hi());
}

double average(const Weight& w, const Interval& i) {
    return integral(w, i) / i.length();
}

double ess_inf(const Weight& w, const Interval& i) {
    if (is_power(w)) {
        // alpha <= 0: non-increasing, so the essential infimum over (lo, hi)
        // sits at the right endpoint
        return as_power(w).value_at(i.hi());
    }
    const auto& sw = as_step(w);
    const auto& t = sw.breakpoints();
    const auto& v = sw.values();
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (t[k] >= i.hi()) break;
        double overlap = std::min(t[k + 1], i.hi()) - std::max(t[k], i.lo());
        if (overlap > 0.0) m = std::min(m, v[k]);
    }
    return m;
}

LpResult lp_integral(const Weight& w, const Interval& i, double p) {
    if (!(p >= 1.0))
        throw std::range_error("lp_integral: p must be >= 1");
    if (is_step(w)) {
        const auto& sw = as_step(w);
        const auto& t = sw.breakpoints();
        const auto& v = sw.values();
        double sum = 0.0;
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (t[k] >= i.hi()) break;
            double overlap = std::min(t[k + 1], i.hi()) - std::max(t[k], i.lo());
            if (overlap > 0.0) sum += std::pow(v[k], p) * overlap;
        }
        return LpResult::finite(sum);
    }
    const auto& pw = as_power(w);
    double q = p * pw.alpha() + 1.0;
    double ap = std::pow(pw.a(), p);
    if (i.lo() == 0.0) {
        if (q <= 0.0) return LpResult::divergent();
        return LpResult::finite(ap * std::pow(i.hi(), q) / q);
    }
    // away from the singularity the integral always converges; route through
    // expm1 so q near 0 does not cancel
    double lr = std::log(i.hi() / i.lo());
    double base = ap * std::pow(i.lo(), q);
    if (q == 0.0) return LpResult::finite(base * lr);
    return LpResult::finite(base * std::expm1(q * lr) / q);
}

Weight renormalize(const Weight& w, const Interval& i) {
    if (is_power(w)) {
        const auto& pw = as_power(w);
        if (i.lo() != 0.0)
            throw std::invalid_argument(
                "renormalize: power weights support only prefix intervals (0, hi)");
        // w(x*hi) = a * hi^alpha * x^alpha
        return PowerWeight(pw.a() * std::pow(i.hi(), pw.alpha()), pw.alpha());
    }
    const auto& sw = as_step(w);
    const auto& t = sw.breakpoints();
    const auto& v = sw.values();
    double len = i.length();
    std::vector<double> bp{0.0};
    std::vector<double> vals;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (t[k] >= i.hi()) break;
        double overlap = std::min(t[k + 1], i.hi()) - std::max(t[k], i.lo());
        if (overlap <= 0.0) continue;
        double edge = std::min((std::min(t[k + 1], i.hi()) - i.lo()) / len, 1.0);
        if (edge <= bp.back()) continue; // cell collapsed under rounding
        bp.push_back(edge);
        vals.push_back(v[k]);
    }
    bp.back() = 1.0;
    return StepWeight(std::move(bp), std::move(vals)).canonical();
}

} // namespace a1tk
