#include "a1tk/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace a1tk {

Weight decreasing_rearrangement(const Weight& w) {
    if (is_power(w)) return w; // already non-increasing

    const auto& sw = as_step(w);
    std::vector<std::pair<double, double>> cells; // (value, length)
    cells.reserve(sw.cell_count());
    for (std::size_t k = 0; k < sw.cell_count(); ++k) {
        double len = sw.cell_length(k);
        if (len > 0.0) cells.emplace_back(sw.values()[k], len);
    }
    std::stable_sort(cells.begin(), cells.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });

    std::vector<double> bp{0.0};
    std::vector<double> vals;
    bp.reserve(cells.size() + 1);
    vals.reserve(cells.size());
    double pos = 0.0;
    for (const auto& [value, len] : cells) {
        pos += len;
        if (pos <= bp.back()) continue; // length below rounding resolution
        bp.push_back(pos);
        vals.push_back(value);
    }
    bp.back() = 1.0;
    return StepWeight(std::move(bp), std::move(vals)).canonical();
}

double distribution(const Weight& w, double lambda) {
    if (!(lambda > 0.0))
        throw std::domain_error("distribution: level must be positive");
    if (is_step(w)) {
        const auto& sw = as_step(w);
        double measure = 0.0;
        for (std::size_t k = 0; k < sw.cell_count(); ++k)
            if (sw.values()[k] > lambda) measure += sw.cell_length(k);
        return measure;
    }
    const auto& pw = as_power(w);
    if (pw.alpha() == 0.0) return pw.a() > lambda ? 1.0 : 0.0;
    // a * t^alpha > lambda  <=>  t < (lambda/a)^(1/alpha)  (alpha < 0)
    return std::min(1.0, std::pow(lambda / pw.a(), 1.0 / pw.alpha()));
}

bool is_equimeasurable(const Weight& w1, const Weight& w2, const std::vector<double>& levels) {
    if (levels.empty())
        throw std::domain_error("is_equimeasurable: need at least one level");
    for (double lambda : levels)
        if (std::abs(distribution(w1, lambda) - distribution(w2, lambda)) > 1e-12)
            return false;
    return true;
}

std::vector<double> distinct_values(const StepWeight& w) {
    std::vector<double> out = w.values();
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<double> merged_distinct_values(const StepWeight& w1, const StepWeight& w2) {
    std::vector<double> out = w1.values();
    out.insert(out.end(), w2.values().begin(), w2.values().end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace a1tk
