#include "a1tk/quadrature.hpp"

#include <cmath>

namespace a1tk {

namespace {

struct Gl16Table {
    std::array<double, 16> nodes{};
    std::array<double, 16> weights{};
};

// Newton iteration on the Legendre three-term recurrence; roots seeded by
// the Chebyshev approximation. Symmetric pairs are mirrored.
Gl16Table build_gl16() {
    constexpr int n = 16;
    Gl16Table table;
    const int mid = (n + 1) / 2;
    for (int i = 0; i < mid; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        table.nodes[i] = -z;
        table.nodes[n - 1 - i] = z;
        table.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        table.weights[n - 1 - i] = table.weights[i];
    }
    return table;
}

const Gl16Table& gl16_table() {
    static const Gl16Table table = build_gl16();
    return table;
}

double gl16_panel(const std::function<double(double)>& f, double a, double b) {
    const Gl16Table& table = gl16_table();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < 16; ++i)
        sum += table.weights[i] * f(mid + half * table.nodes[i]);
    return sum * half;
}

double adapt(const std::function<double(double)>& f, double a, double b, double whole,
             double rel_tol, int depth, int max_depth, std::size_t* panel_count) {
    const double mid = 0.5 * (a + b);
    double left = gl16_panel(f, a, mid);
    double right = gl16_panel(f, mid, b);
    if (panel_count) *panel_count += 2;
    double refined = left + right;
    double scale = std::max(std::abs(refined), 1e-300);
    if (depth >= max_depth || std::abs(refined - whole) <= rel_tol * scale)
        return refined;
    return adapt(f, a, mid, left, rel_tol, depth + 1, max_depth, panel_count) +
           adapt(f, mid, b, right, rel_tol, depth + 1, max_depth, panel_count);
}

} // namespace

const std::array<double, 16>& gauss_legendre16_nodes() { return gl16_table().nodes; }
const std::array<double, 16>& gauss_legendre16_weights() { return gl16_table().weights; }

double gl16(const std::function<double(double)>& f, double a, double b) {
    return gl16_panel(f, a, b);
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, int max_depth, std::size_t* panel_count) {
    if (a == b) return 0.0;
    double whole = gl16_panel(f, a, b);
    if (panel_count) *panel_count += 1;
    return adapt(f, a, b, whole, rel_tol, 0, max_depth, panel_count);
}

} // namespace a1tk
