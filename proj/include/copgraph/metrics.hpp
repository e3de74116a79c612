#pragma once

#include <vector>

#include "copgraph/homdensity.hpp"
#include "copgraph/sampler.hpp"

namespace copgraph {

// Subgraph (not homomorphism) counts: paths by edge count, triangle, claw.
struct SubgraphCounts {
    unsigned long long edges = 0;      // P1
    unsigned long long paths2 = 0;     // P2, i.e. wedges
    unsigned long long paths3 = 0;     // P3
    unsigned long long triangles = 0;  // C3
    unsigned long long stars3 = 0;     // S3 = K_{1,3}
};

// Degree-based counting with per-edge neighbor intersection for triangles;
// needs the sorted adjacency a SampledGraph carries.
SubgraphCounts count_subgraphs(const SampledGraph& graph);

// 3 * triangles / wedges; throws undefined_error when there is no wedge.
double global_clustering(const SubgraphCounts& counts);

/* Degree assortativity three ways. All three agree on non-regular graphs
 * and throw undefined_error when the end-degree variance vanishes.
 *   newman: Pearson correlation of end degrees over edges
 *   combinatorial: closed form in the five subgraph counts
 *   mixing: computed through the excess-degree mixing distribution */
double assortativity_newman(const SampledGraph& graph);
double assortativity_combinatorial(const SubgraphCounts& counts);
double assortativity_mixing(const SampledGraph& graph);

// Excess-degree mixing matrix e_jk with its marginal q and the variance of
// q, mainly for tests and small graphs; D x D storage where D = max degree.
struct MixingStats {
    std::vector<double> q;               // edge-end excess degree tally
    std::vector<std::vector<double>> e;  // symmetric joint distribution
    double sigma_q_sq = 0.0;             // variance of q
    double r = 0.0;                      // NaN when undefined
};
MixingStats mixing_matrix(const SampledGraph& graph);

// Sign of the assortativity with a tolerance band around zero. Undefined
// is a value here, not an error: regular graphs land there.
enum class SignClass { assortative, neutral, disassortative, undefined };

const char* sign_class_name(SignClass s);
SignClass assortativity_sign(double r, double tol = 1e-12);
SignClass classify_sign(const SubgraphCounts& counts, double tol = 1e-12);

/* Injective homomorphism densities observed in one graph, packaged as a
 * DensityReport so the same finite-n assortativity formula applies; with
 * these inputs it reproduces assortativity_combinatorial exactly. The
 * one-motif form checks only that n can host the motif. */
DensityReport empirical_densities(const SubgraphCounts& counts, std::size_t n);
double empirical_density(const SubgraphCounts& counts, std::size_t n, Motif m);

} // namespace copgraph
