#pragma once

#include <vector>

namespace fracnup {

// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Cached per order; nodes ascending. Accurate to a few ulps for n <= 1000.
const GaussRule& gauss_legendre(int n);

// Panel rule on [a, b]: `panels` equal panels, `order` nodes each.
struct PanelRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

PanelRule panel_rule(double a, double b, int panels, int order);

template <class F>
double integrate(F&& f, double a, double b, int panels, int order) {
    const PanelRule r = panel_rule(a, b, panels, order);
    double sum = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) sum += r.weights[i] * f(r.nodes[i]);
    return sum;
}

}  // namespace fracnup
