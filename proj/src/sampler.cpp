#include "copgraph/sampler.hpp"

namespace copgraph {

SampledGraph sample(const Graphon& g, std::size_t n, std::uint64_t seed) {
    if (n < 1) throw domain_error("sample needs n >= 1");
    if (n > 0xffffffffull) throw size_error("n too large for 32-bit vertex ids");
    const std::size_t s = g.latent_dim();

    SampledGraph out;
    out.n = n;
    out.seed = seed;
    out.descriptor = g.descriptor();
    out.latents.assign(n, std::vector<double>(s));
    out.adjacency.assign(n, {});

    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < s; ++j)
            out.latents[i][j] = rng.uniform();

    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double coin = rng.uniform();
            if (coin < g.evaluate(out.latents[i], out.latents[j])) {
                const auto a = static_cast<std::uint32_t>(i);
                const auto b = static_cast<std::uint32_t>(j);
                out.edges.emplace_back(a, b);
                out.adjacency[i].push_back(b);
                out.adjacency[j].push_back(a);
            }
        }
    }
    // lexicographic pair order already leaves edges and neighbor lists sorted
    return out;
}

std::vector<SampledGraph> sample_batch(const Graphon& g, std::size_t n,
                                       std::uint64_t base_seed,
                                       std::size_t reps) {
    std::vector<SampledGraph> out;
    out.reserve(reps);
    for (std::size_t k = 0; k < reps; ++k)
        out.push_back(sample(g, n, derive_seed(base_seed, k)));
    return out;
}

std::vector<std::size_t> degrees(const SampledGraph& graph) {
    std::vector<std::size_t> d(graph.n);
    for (std::size_t i = 0; i < graph.n; ++i) d[i] = graph.adjacency[i].size();
    return d;
}

} // namespace copgraph
