#include "a1tk/reverse_holder.hpp"

#include "a1tk/a1.hpp"
#include "a1tk/generators.hpp"
#include "a1tk/quadrature.hpp"
#include "a1tk/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace a1tk {

namespace {

constexpr std::uint64_t kSpotCheckSeed = 0x51de'c4ec'a15eull;
constexpr std::size_t kSpotCheckCount = 1000;

void require_p_in_range(double c, double p) {
    if (!(p >= 1.0))
        throw std::range_error("p must be >= 1");
    double pc = p_critical(c);
    if (std::isfinite(pc) && p > pc - 1e-9)
        throw std::range_error("p within 1e-9 of the critical exponent c/(c-1)");
}

std::vector<double> prefix_integrals(const StepWeight& w, double p) {
    std::vector<double> out(w.breakpoints().size(), 0.0);
    for (std::size_t k = 0; k < w.cell_count(); ++k)
        out[k + 1] = out[k] + std::pow(w.values()[k], p) * w.cell_length(k);
    return out;
}

Interval random_interval(SplitMix64& rng) {
    double x = rng.next_double();
    double y = rng.next_double();
    double lo = std::min(x, y) * 0.999;
    double hi = std::max(x, y);
    if (hi <= lo + 1e-9) hi = lo + 1e-9;
    return Interval(lo, std::min(hi, 1.0));
}

} // namespace

double p_critical(double c) {
    if (!(c >= 1.0))
        throw std::domain_error("p_critical: c must be >= 1");
    if (c == 1.0) return std::numeric_limits<double>::infinity();
    return c / (c - 1.0);
}

double sharp_constant(double c, double p) {
    if (!(c >= 1.0))
        throw std::domain_error("sharp_constant: c must be >= 1");
    if (!(p >= 1.0) || !(p < p_critical(c)))
        throw std::range_error("sharp_constant: need 1 <= p < c/(c-1)");
    double factor = c + p * (1.0 - c);
    if (!(factor > 0.0))
        throw std::range_error("sharp_constant: denominator factor c + p(1-c) is not positive");
    return 1.0 / (std::pow(c, p - 1.0) * factor);
}

RHReport verify_theorem2(const StepWeight& w, double p, double tol, Theorem2Mode mode) {
    const StepWeight cw = w.canonical();
    const double c = a1_constant(cw).constant;
    if (c > 1.0) require_p_in_range(c, p);
    else if (!(p >= 1.0)) throw std::range_error("verify_theorem2: p must be >= 1");
    const double sharp = sharp_constant(c, p);

    const auto& t = cw.breakpoints();
    const std::size_t n = cw.cell_count();
    const std::vector<double> P = prefix_integrals(cw, 1.0);
    const std::vector<double> Q = prefix_integrals(cw, p);

    RHReport report;
    report.p = p;
    report.c = c;
    report.worst_ratio = -std::numeric_limits<double>::infinity();

    const Weight wv = cw;
    auto consider = [&](double lhs, double avg, const Interval& where) {
        double ratio = lhs / (sharp * std::pow(avg, p));
        if (ratio > report.worst_ratio) {
            report.worst_ratio = ratio;
            report.witness = where;
        }
    };
    auto consider_interval = [&](const Interval& where) {
        if (mode == Theorem2Mode::direct) {
            double lhs = lp_integral(wv, where, p).value / where.length();
            consider(lhs, average(wv, where), where);
        } else {
            // the dilation pipeline: restrict, pull back onto (0,1),
            // rearrange, evaluate there
            Weight g = decreasing_rearrangement(renormalize(wv, where));
            double lhs = lp_integral(g, Interval::unit(), p).value;
            consider(lhs, average(g, Interval::unit()), where);
        }
    };

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
            Interval where(t[i], t[j]);
            if (mode == Theorem2Mode::direct) {
                double len = t[j] - t[i];
                consider((Q[j] - Q[i]) / len, (P[j] - P[i]) / len, where);
            } else {
                consider_interval(where);
            }
        }
    }
    SplitMix64 rng(kSpotCheckSeed);
    for (std::size_t s = 0; s < kSpotCheckCount; ++s)
        consider_interval(random_interval(rng));

    report.holds = report.worst_ratio <= 1.0 + tol;
    return report;
}

namespace {

struct CellAverager {
    double prefix;  // integral of g over (0, t_k)
    double value;   // cell value
    double left;    // t_k

    double operator()(double s) const { return (prefix + value * (s - left)) / s; }
};

// integral over (0, delta) of A(t)^p * g(t)^mix, with mix 0 or 1; covers
// both sides of the averaging identity
LpResult hardy_power_integral(const Weight& g, double p, double delta, double outer_p,
                              bool times_g, std::size_t* panels) {
    if (is_power(g)) {
        const auto& pw = as_power(g);
        double alpha = pw.alpha();
        double a = pw.a();
        // A(t) = (a/(alpha+1)) t^alpha
        double coeff = std::pow(a / (alpha + 1.0), outer_p);
        double expo = outer_p * alpha;
        if (times_g) {
            coeff *= a;
            expo += alpha;
        }
        double q = expo + 1.0;
        if (panels) *panels += 1;
        if (q <= 0.0) return LpResult::divergent();
        return LpResult::finite(coeff * std::pow(delta, q) / q);
    }
    const auto& sw = as_step(g);
    const auto& t = sw.breakpoints();
    const auto& v = sw.values();
    double prefix = 0.0;
    double total = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (t[k] >= delta) break;
        double b = std::min(t[k + 1], delta);
        CellAverager avg{prefix, v[k], t[k]};
        auto f = [&](double s) {
            double val = std::pow(avg(s), outer_p);
            return times_g ? val * v[k] : val;
        };
        total += integrate_adaptive(f, t[k], b, 1e-10, 20, panels);
        prefix += v[k] * (t[k + 1] - t[k]);
    }
    return LpResult::finite(total);
}

void check_lemma1_args(const Weight& g, double p, double delta) {
    if (!(p > 1.0))
        throw std::range_error("lemma1: p must be > 1");
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::domain_error("lemma1: delta must lie in (0, 1]");
    if (is_step(g) && !as_step(g).is_nonincreasing())
        throw std::invalid_argument("lemma1: weight must be non-increasing");
}

} // namespace

LpResult lemma1_lhs(const Weight& g, double p, double delta, std::size_t* panels) {
    check_lemma1_args(g, p, delta);
    return hardy_power_integral(g, p, delta, p, false, panels);
}

LpResult lemma1_rhs(const Weight& g, double p, double delta, std::size_t* panels) {
    check_lemma1_args(g, p, delta);
    LpResult second = hardy_power_integral(g, p, delta, p - 1.0, true, panels);
    if (second.diverges) return second;
    double mass = integral(g, Interval(0.0, delta));
    double first = -std::pow(mass, p) / ((p - 1.0) * std::pow(delta, p - 1.0));
    return LpResult::finite(first + p / (p - 1.0) * second.value);
}

Lemma1Report lemma1_residual(const Weight& g, double p, double delta) {
    Lemma1Report report;
    report.delta = delta;
    report.p = p;
    std::size_t panels = 0;
    LpResult lhs = lemma1_lhs(g, p, delta, &panels);
    LpResult rhs = lemma1_rhs(g, p, delta, &panels);
    report.quadrature_cells = std::max<std::size_t>(panels, 1);
    if (lhs.diverges || rhs.diverges) {
        report.diverges = true;
        report.residual = std::numeric_limits<double>::infinity();
        return report;
    }
    report.lhs = lhs.value;
    report.rhs = rhs.value;
    report.residual =
        std::abs(lhs.value - rhs.value) / std::max(std::abs(lhs.value), std::abs(rhs.value));
    return report;
}

double hy(double x, double y, double p) {
    if (!(x > 0.0) || !(y > 0.0))
        throw std::domain_error("hy: x and y must be positive");
    if (!(p > 1.0))
        throw std::range_error("hy: p must be > 1");
    return std::pow(x, p - 1.0) * y - (p - 1.0) / p * std::pow(x, p);
}

bool verify_hy_monotone(double y, double c, double p, std::size_t samples) {
    if (samples < 2)
        throw std::domain_error("verify_hy_monotone: need at least 2 samples");
    if (!(y > 0.0) || !(c >= 1.0))
        throw std::domain_error("verify_hy_monotone: need y > 0 and c >= 1");
    const double step = (c * y - y) / static_cast<double>(samples - 1);
    double prev = hy(y, y, p);
    for (std::size_t i = 0; i < samples; ++i) {
        double x = y + step * static_cast<double>(i);
        double h = hy(x, y, p);
        if (i > 0 && h > prev + 1e-12) return false;
        // derivative sign is exact: (y - x) <= 0 on the grid
        if ((p - 1.0) * std::pow(x, p - 2.0) * (y - x) > 0.0) return false;
        prev = h;
    }
    return true;
}

RHReport verify_lemma2(const StepWeight& g, double p, double delta, double tol) {
    const StepWeight cg = g.canonical();
    const double c = hardy_constant(cg, true).constant;
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::domain_error("verify_lemma2: delta must lie in (0, 1]");
    if (c > 1.0) require_p_in_range(c, p);
    else if (!(p >= 1.0)) throw std::range_error("verify_lemma2: p must be >= 1");
    const double sharp = sharp_constant(c, p);

    const auto& t = cg.breakpoints();
    const std::vector<double> P = prefix_integrals(cg, 1.0);
    const std::vector<double> Q = prefix_integrals(cg, p);

    RHReport report;
    report.p = p;
    report.c = c;
    report.worst_ratio = -std::numeric_limits<double>::infinity();

    auto consider = [&](double d, double lhs, double avg) {
        double ratio = lhs / (sharp * std::pow(avg, p));
        if (ratio > report.worst_ratio) {
            report.worst_ratio = ratio;
            report.witness = Interval(0.0, d);
        }
    };
    for (std::size_t k = 1; k < t.size(); ++k)
        consider(t[k], Q[k] / t[k], P[k] / t[k]);
    const Weight gv = cg;
    Interval id(0.0, delta);
    consider(delta, lp_integral(gv, id, p).value / delta, average(gv, id));

    report.holds = report.worst_ratio <= 1.0 + tol;
    return report;
}

PowerWeight extremal_weight(double c) {
    if (!(c >= 1.0))
        throw std::domain_error("extremal_weight: c must be >= 1");
    if (c == 1.0) return PowerWeight(1.0, 0.0);
    return PowerWeight(1.0 / c, 1.0 / c - 1.0);
}

double sharpness_gap(double c, double p) {
    PowerWeight g = extremal_weight(c);
    if (c > 1.0) require_p_in_range(c, p);
    else if (!(p >= 1.0)) throw std::range_error("sharpness_gap: p must be >= 1");
    const Weight gv = g;
    LpResult lhs = lp_integral(gv, Interval::unit(), p);
    double rhs = sharp_constant(c, p) * std::pow(integral(gv, Interval::unit()), p);
    return std::abs(lhs.value / rhs - 1.0);
}

} // namespace a1tk
