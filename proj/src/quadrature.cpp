#include "copgraph/quadrature.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace copgraph {

namespace {

// Newton iteration on P_n over [-1,1], then affine map to [0,1].
QuadratureRule build_rule(int order) {
    QuadratureRule rule;
    rule.order = order;
    rule.nodes.resize(order);
    rule.weights.resize(order);

    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence for P_n(x) and its derivative
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // map node to [0,1] and halve the weight; fill both symmetric slots
        rule.nodes[i] = (1.0 - x) / 2.0;
        rule.nodes[order - 1 - i] = (1.0 + x) / 2.0;
        rule.weights[i] = w / 2.0;
        rule.weights[order - 1 - i] = w / 2.0;
    }
    return rule;
}

} // namespace

const QuadratureRule& gauss_legendre(int order) {
    if (order < 1 || order > 100000)
        throw domain_error("quadrature order must be in [1, 100000], got " +
                           std::to_string(order));
    static std::map<int, QuadratureRule> cache;
    auto it = cache.find(order);
    if (it == cache.end())
        it = cache.emplace(order, build_rule(order)).first;
    return it->second;
}

} // namespace copgraph
