#pragma once

#include "a1tk/weight.hpp"

#include <cstdint>
#include <string>

namespace a1tk {

/// splitmix64: the 64-bit shift-multiply generator used for every seeded
/// corpus in this project. Chosen because the algorithm is a handful of
/// lines, fully specified, and reproduces bit-for-bit on any platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1): the top 53 bits scaled by 2^-53.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

enum class GenKind {
    bounded_ratio,
    nonincreasing_hardy,
    shuffle,
    extremal_discretized,
};

struct GenSpec {
    GenKind kind = GenKind::bounded_ratio;
    std::size_t n = 1;
    double parameter = 1.0; // ratio bound R, Hardy target c, or extremal c
    std::uint64_t seed = 0;
};

GenKind parse_gen_kind(const std::string& name);
std::string gen_kind_name(GenKind kind);

/// n cells with values log-uniform in [1, R) and lengths from a seeded
/// normalized draw bounded between 0.5/n-ish and 1.5/n-ish, so cell-length
/// ratios stay small enough for the grid oracle to resolve slivers.
/// Every output satisfies a1_constant <= R exactly, because
/// average <= max <= R <= R * ess_inf.
StepWeight gen_bounded_ratio(std::size_t n, double ratio_bound, std::uint64_t seed);

/// Non-increasing weight with hardy_constant <= c, built left to right: at
/// the start of cell k with prefix average A, the value is sampled
/// log-uniformly in [A/c, min(v_{k-1}, A)] with a small guard band so the
/// bound survives floating-point evaluation. c = 1 collapses to a constant
/// weight.
StepWeight gen_nonincreasing_hardy(std::size_t n, double hardy_bound, std::uint64_t seed);

/// Seeded permutation of the (length, value) cell pairs, re-laid from 0:
/// an equimeasurable rearrangement-mate of w.
StepWeight shuffle_cells(const StepWeight& w, std::uint64_t seed);

/// Cell averages of the extremal weight on a geometric grid from t0 to 1
/// (the variation concentrates at 0), with one extra cell (0, t0] at the
/// prefix average. Non-increasing by construction. Requires c > 1 and
/// t0 in (0, 1).
StepWeight discretize_extremal(double c, std::size_t n, double t0);

StepWeight generate(const GenSpec& spec);

} // namespace a1tk
