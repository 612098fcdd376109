#include "a1tk/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace a1tk {

namespace {

// normalized draw with raw parts in [0.5, 1.5): cell-length ratios stay
// below 3 so grid oracles can resolve slivers at modest resolution
std::vector<double> random_breakpoints(std::size_t n, SplitMix64& rng) {
    std::vector<double> raw(n);
    double sum = 0.0;
    for (auto& r : raw) {
        r = 0.5 + rng.next_double();
        sum += r;
    }
    std::vector<double> bp(n + 1, 0.0);
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        acc += raw[k];
        bp[k + 1] = acc / sum;
    }
    bp[n] = 1.0;
    return bp;
}

} // namespace

GenKind parse_gen_kind(const std::string& name) {
    if (name == "bounded_ratio") return GenKind::bounded_ratio;
    if (name == "nonincreasing_hardy") return GenKind::nonincreasing_hardy;
    if (name == "shuffle") return GenKind::shuffle;
    if (name == "extremal_discretized") return GenKind::extremal_discretized;
    throw std::invalid_argument("unknown generator kind: " + name);
}

std::string gen_kind_name(GenKind kind) {
    switch (kind) {
        case GenKind::bounded_ratio: return "bounded_ratio";
        case GenKind::nonincreasing_hardy: return "nonincreasing_hardy";
        case GenKind::shuffle: return "shuffle";
        case GenKind::extremal_discretized: return "extremal_discretized";
    }
    return "?";
}

StepWeight gen_bounded_ratio(std::size_t n, double ratio_bound, std::uint64_t seed) {
    if (n < 1) throw std::domain_error("gen_bounded_ratio: n must be >= 1");
    if (!(ratio_bound >= 1.0))
        throw std::domain_error("gen_bounded_ratio: ratio bound must be >= 1");
    SplitMix64 rng(seed);
    std::vector<double> bp = random_breakpoints(n, rng);
    std::vector<double> values(n, 1.0);
    if (ratio_bound > 1.0) {
        double lnR = std::log(ratio_bound);
        for (auto& v : values) v = std::exp(rng.next_double() * lnR);
    }
    return StepWeight(std::move(bp), std::move(values)).canonical();
}

StepWeight gen_nonincreasing_hardy(std::size_t n, double hardy_bound, std::uint64_t seed) {
    if (n < 1) throw std::domain_error("gen_nonincreasing_hardy: n must be >= 1");
    if (!(hardy_bound >= 1.0))
        throw std::domain_error("gen_nonincreasing_hardy: hardy bound must be >= 1");
    SplitMix64 rng(seed);
    const double c = hardy_bound;
    if (c == 1.0) {
        // the sampling window collapses to the running average: constant
        return StepWeight::constant(std::exp(rng.next_double() * std::log(10.0)));
    }
    std::vector<double> bp = random_breakpoints(n, rng);
    std::vector<double> values(n);
    values[0] = std::exp(rng.next_double() * std::log(10.0));
    double prefix = values[0] * bp[1];
    for (std::size_t k = 1; k < n; ++k) {
        double avg = prefix / bp[k];
        // guard band keeps the Hardy bound intact under rounding
        double lo = std::max(avg / c * (1.0 + 1e-12), 1e-300);
        double hi = std::min(values[k - 1], avg);
        double v = (lo < hi) ? lo * std::exp(rng.next_double() * std::log(hi / lo)) : hi;
        v = std::clamp(v, std::min(lo, hi), hi);
        // belt: nudge until the exact Hardy ratio arithmetic accepts it
        while (prefix > c * (bp[k] * v) && v < values[k - 1])
            v = std::nextafter(v, values[k - 1]);
        values[k] = v;
        prefix += v * (bp[k + 1] - bp[k]);
    }
    return StepWeight(std::move(bp), std::move(values)).canonical();
}

StepWeight shuffle_cells(const StepWeight& w, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::pair<double, double>> cells; // (length, value)
    cells.reserve(w.cell_count());
    for (std::size_t k = 0; k < w.cell_count(); ++k)
        cells.emplace_back(w.cell_length(k), w.values()[k]);
    for (std::size_t i = cells.size(); i > 1; --i) {
        auto j = static_cast<std::size_t>(rng.next_double() * static_cast<double>(i));
        std::swap(cells[i - 1], cells[j]);
    }
    std::vector<double> bp{0.0};
    std::vector<double> values;
    double pos = 0.0;
    for (const auto& [len, value] : cells) {
        pos += len;
        if (pos <= bp.back()) continue;
        bp.push_back(pos);
        values.push_back(value);
    }
    bp.back() = 1.0;
    return StepWeight(std::move(bp), std::move(values)).canonical();
}

StepWeight discretize_extremal(double c, std::size_t n, double t0) {
    if (!(c > 1.0))
        throw std::domain_error("discretize_extremal: c must be > 1");
    if (n < 1) throw std::domain_error("discretize_extremal: n must be >= 1");
    if (!(t0 > 0.0 && t0 < 1.0))
        throw std::domain_error("discretize_extremal: t0 must lie in (0, 1)");
    const double inv_c = 1.0 / c;
    // geometric grid: the extremal's variation concentrates at 0
    std::vector<double> bp;
    bp.reserve(n + 2);
    bp.push_back(0.0);
    for (std::size_t k = 0; k <= n; ++k)
        bp.push_back(std::pow(t0, 1.0 - static_cast<double>(k) / static_cast<double>(n)));
    bp.back() = 1.0;
    std::vector<double> values;
    values.reserve(n + 1);
    values.push_back(std::pow(t0, inv_c - 1.0)); // prefix average over (0, t0]
    for (std::size_t k = 1; k <= n; ++k) {
        double a = bp[k];
        double b = bp[k + 1];
        values.push_back((std::pow(b, inv_c) - std::pow(a, inv_c)) / (b - a));
    }
    return StepWeight(std::move(bp), std::move(values)).canonical();
}

StepWeight generate(const GenSpec& spec) {
    switch (spec.kind) {
        case GenKind::bounded_ratio:
            return gen_bounded_ratio(spec.n, spec.parameter, spec.seed);
        case GenKind::nonincreasing_hardy:
            return gen_nonincreasing_hardy(spec.n, spec.parameter, spec.seed);
        case GenKind::extremal_discretized:
            return discretize_extremal(spec.parameter, spec.n, 1.0 / 1024.0);
        case GenKind::shuffle:
            throw std::invalid_argument("generate: shuffle needs an input weight");
    }
    throw std::invalid_argument("generate: unknown kind");
}

} // namespace a1tk
