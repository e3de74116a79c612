#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "copgraph/graphon.hpp"
#include "copgraph/rng.hpp"

namespace copgraph {

struct SampledGraph {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::string descriptor;  // canonical form of the graphon sampled from
    // one latent vector per node, length = graphon latent dimension
    std::vector<std::vector<double>> latents;
    // i < j, sorted lexicographically
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    // sorted neighbor lists, redundant with edges but handy for counting
    std::vector<std::vector<std::uint32_t>> adjacency;
};

/* Draw an n-vertex graph: one SplitMix64 stream per call consumes first
 * the n*s latent uniforms (node-major), then one coin per pair (i,j) in
 * lexicographic order, connecting when coin < W(x_i, x_j). The layout is
 * part of the reproducibility contract and must not change. */
SampledGraph sample(const Graphon& g, std::size_t n, std::uint64_t seed);

// Replicate k uses seed derive_seed(base_seed, k), so rep 0 == sample(base_seed).
std::vector<SampledGraph> sample_batch(const Graphon& g, std::size_t n,
                                       std::uint64_t base_seed,
                                       std::size_t reps);

std::vector<std::size_t> degrees(const SampledGraph& graph);

} // namespace copgraph
