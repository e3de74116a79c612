#pragma once

#include <vector>

#include "copgraph/errors.hpp"

namespace copgraph {

// Gauss-Legendre rule mapped to [0,1]; weights sum to 1.
struct QuadratureRule {
    int order = 0;
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Rules are computed once per order and cached for reuse.
const QuadratureRule& gauss_legendre(int order);

} // namespace copgraph
