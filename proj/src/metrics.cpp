#include "copgraph/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace copgraph {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

unsigned long long choose2(unsigned long long d) { return d * (d - 1) / 2; }

unsigned long long choose3(unsigned long long d) {
    if (d < 3) return 0;
    return choose2(d) * (d - 2) / 3;
}

// common neighbors k of edge (i,j) with k > j, via the sorted lists
unsigned long long common_above(const std::vector<std::uint32_t>& a,
                                const std::vector<std::uint32_t>& b,
                                std::uint32_t j) {
    auto ia = std::upper_bound(a.begin(), a.end(), j);
    auto ib = std::upper_bound(b.begin(), b.end(), j);
    unsigned long long count = 0;
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else { ++count; ++ia; ++ib; }
    }
    return count;
}

} // namespace

SubgraphCounts count_subgraphs(const SampledGraph& graph) {
    SubgraphCounts c;
    const auto d = degrees(graph);
    for (auto deg : d) {
        c.edges += deg;
        c.paths2 += choose2(deg);
        c.stars3 += choose3(deg);
    }
    c.edges /= 2;

    for (const auto& [i, j] : graph.edges)
        c.triangles += common_above(graph.adjacency[i], graph.adjacency[j], j);

    // every path on 3 edges picks a middle edge; subtract the walks that
    // close into a triangle (each triangle closes 3 of them)
    unsigned long long walks = 0;
    for (const auto& [i, j] : graph.edges)
        walks += static_cast<unsigned long long>(d[i] - 1) * (d[j] - 1);
    c.paths3 = walks - 3 * c.triangles;
    return c;
}

double global_clustering(const SubgraphCounts& counts) {
    if (counts.paths2 == 0)
        throw undefined_error("clustering undefined: the graph has no wedge");
    return 3.0 * static_cast<double>(counts.triangles) /
           static_cast<double>(counts.paths2);
}

double assortativity_newman(const SampledGraph& graph) {
    if (graph.edges.empty())
        throw undefined_error("assortativity undefined: the graph has no edge");
    const auto d = degrees(graph);
    const double m = static_cast<double>(graph.edges.size());
    double sum_prod = 0.0, sum_half = 0.0, sum_sq_half = 0.0;
    for (const auto& [i, j] : graph.edges) {
        const double a = static_cast<double>(d[i]);
        const double b = static_cast<double>(d[j]);
        sum_prod += a * b;
        sum_half += 0.5 * (a + b);
        sum_sq_half += 0.5 * (a * a + b * b);
    }
    const double mean = sum_half / m;
    const double num = sum_prod / m - mean * mean;
    const double den = sum_sq_half / m - mean * mean;
    if (den == 0.0)
        throw undefined_error("assortativity undefined: end degrees are "
                              "constant");
    return num / den;
}

double assortativity_combinatorial(const SubgraphCounts& c) {
    if (c.edges == 0)
        throw undefined_error("assortativity undefined: the graph has no edge");
    const double p1 = static_cast<double>(c.edges);
    const double p2 = static_cast<double>(c.paths2);
    const double p3 = static_cast<double>(c.paths3);
    const double c3 = static_cast<double>(c.triangles);
    const double s3 = static_cast<double>(c.stars3);
    const double ratio = p2 * p2 / p1;
    const double den = 3.0 * s3 + p2 - ratio;
    if (den == 0.0)
        throw undefined_error("assortativity undefined: end degrees are "
                              "constant");
    return (p3 + 3.0 * c3 - ratio) / den;
}

double assortativity_mixing(const SampledGraph& graph) {
    if (graph.edges.empty())
        throw undefined_error("assortativity undefined: the graph has no edge");
    const auto d = degrees(graph);
    const double ends = 2.0 * static_cast<double>(graph.edges.size());
    // moments of the excess-degree edge-end distribution q and the joint
    // distribution e, accumulated without materializing either
    double q1 = 0.0, q2 = 0.0, e_prod = 0.0;
    for (const auto& [i, j] : graph.edges) {
        const double a = static_cast<double>(d[i]) - 1.0;
        const double b = static_cast<double>(d[j]) - 1.0;
        q1 += a + b;
        q2 += a * a + b * b;
        e_prod += 2.0 * a * b;
    }
    q1 /= ends;
    q2 /= ends;
    e_prod /= ends;
    const double var = q2 - q1 * q1;
    if (var == 0.0)
        throw undefined_error("assortativity undefined: end degrees are "
                              "constant");
    return (e_prod - q1 * q1) / var;
}

MixingStats mixing_matrix(const SampledGraph& graph) {
    const auto d = degrees(graph);
    const std::size_t maxd = d.empty() ? 0 : *std::max_element(d.begin(), d.end());
    if (maxd > 20000)
        throw size_error("mixing matrix would be " + std::to_string(maxd) +
                         "^2; use assortativity_mixing instead");
    MixingStats stats;
    const std::size_t D = maxd;  // excess degrees range over 0 .. maxd-1
    stats.q.assign(D, 0.0);
    stats.e.assign(D, std::vector<double>(D, 0.0));
    if (graph.edges.empty()) {
        stats.r = kNaN;
        return stats;
    }
    // accumulate counts and normalize once, so a regular graph yields an
    // exactly zero variance instead of rounding noise
    const double ends = 2.0 * static_cast<double>(graph.edges.size());
    for (const auto& [i, j] : graph.edges) {
        const std::size_t a = d[i] - 1;
        const std::size_t b = d[j] - 1;
        stats.q[a] += 1.0;
        stats.q[b] += 1.0;
        stats.e[a][b] += 1.0;
        stats.e[b][a] += 1.0;
    }
    for (auto& qk : stats.q) qk /= ends;
    for (auto& row : stats.e)
        for (auto& cell : row) cell /= ends;
    double mean = 0.0, second = 0.0;
    for (std::size_t k = 0; k < D; ++k) {
        mean += static_cast<double>(k) * stats.q[k];
        second += static_cast<double>(k) * static_cast<double>(k) * stats.q[k];
    }
    stats.sigma_q_sq = second - mean * mean;
    if (stats.sigma_q_sq == 0.0) {
        stats.r = kNaN;
        return stats;
    }
    double joint = 0.0;
    for (std::size_t a = 0; a < D; ++a)
        for (std::size_t b = 0; b < D; ++b)
            joint += static_cast<double>(a) * static_cast<double>(b) *
                     stats.e[a][b];
    stats.r = (joint - mean * mean) / stats.sigma_q_sq;
    return stats;
}

const char* sign_class_name(SignClass s) {
    switch (s) {
        case SignClass::assortative: return "assortative";
        case SignClass::neutral: return "neutral";
        case SignClass::disassortative: return "disassortative";
        case SignClass::undefined: return "undefined";
    }
    throw usage_error("unknown sign class enum value");
}

SignClass assortativity_sign(double r, double tol) {
    if (std::isnan(r)) return SignClass::undefined;
    if (std::fabs(r) <= tol) return SignClass::neutral;
    return r > 0.0 ? SignClass::assortative : SignClass::disassortative;
}

SignClass classify_sign(const SubgraphCounts& counts, double tol) {
    try {
        return assortativity_sign(assortativity_combinatorial(counts), tol);
    } catch (const undefined_error&) {
        return SignClass::undefined;
    }
}

DensityReport empirical_densities(const SubgraphCounts& c, std::size_t n) {
    if (n < 4)
        throw domain_error("empirical densities need n >= 4, got " +
                           std::to_string(n));
    const double nn = static_cast<double>(n);
    const double f2 = nn * (nn - 1.0);
    const double f3 = f2 * (nn - 2.0);
    const double f4 = f3 * (nn - 3.0);
    DensityReport r;
    r.edge = 2.0 * static_cast<double>(c.edges) / f2;
    r.path2 = 2.0 * static_cast<double>(c.paths2) / f3;
    r.path3 = 2.0 * static_cast<double>(c.paths3) / f4;
    r.star3 = 6.0 * static_cast<double>(c.stars3) / f4;
    r.triangle = 6.0 * static_cast<double>(c.triangles) / (nn * nn * nn);
    return r;
}

double empirical_density(const SubgraphCounts& c, std::size_t n, Motif m) {
    const std::size_t needed =
        (m == Motif::edge) ? 2 : (m == Motif::path2 || m == Motif::triangle) ? 3
                                                                             : 4;
    if (n < needed)
        throw size_error(std::string("motif ") + motif_name(m) + " needs " +
                         std::to_string(needed) + " nodes, graph has " +
                         std::to_string(n));
    const double nn = static_cast<double>(n);
    switch (m) {
        case Motif::edge:
            return 2.0 * static_cast<double>(c.edges) / (nn * (nn - 1.0));
        case Motif::path2:
            return 2.0 * static_cast<double>(c.paths2) /
                   (nn * (nn - 1.0) * (nn - 2.0));
        case Motif::path3:
            return 2.0 * static_cast<double>(c.paths3) /
                   (nn * (nn - 1.0) * (nn - 2.0) * (nn - 3.0));
        case Motif::star3:
            return 6.0 * static_cast<double>(c.stars3) /
                   (nn * (nn - 1.0) * (nn - 2.0) * (nn - 3.0));
        case Motif::triangle:
            return 6.0 * static_cast<double>(c.triangles) / (nn * nn * nn);
    }
    throw usage_error("unknown motif enum value");
}

} // namespace copgraph
