#pragma once

#include <iosfwd>
#include <string>

#include "copgraph/sampler.hpp"

namespace copgraph {

/* Plain text interchange format:
 *   # n=<n> seed=<seed> graphon=<descriptor>
 *   i j
 *   ...
 * Edges are 0-indexed with i < j, in ascending order, LF line endings.
 * The header keeps isolated vertices representable. */

// The descriptor argument overrides the one the graph carries; the CLI
// uses that to echo the descriptor exactly as the caller typed it.
void write_edge_list(std::ostream& out, const SampledGraph& graph,
                     const std::string& descriptor);
void write_edge_list_file(const std::string& path, const SampledGraph& graph,
                          const std::string& descriptor);
void write_edge_list(std::ostream& out, const SampledGraph& graph);
void write_edge_list_file(const std::string& path, const SampledGraph& graph);

struct EdgeListData {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::string descriptor;  // empty when the header omitted it
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

// Throws io_error with a line number on malformed input, out-of-range
// endpoints, self-loops or duplicate edges.
EdgeListData read_edge_list(std::istream& in);
EdgeListData read_edge_list_file(const std::string& path);

// Rebuild adjacency from parsed data, e.g. for analyzing external graphs.
SampledGraph graph_from_edges(const EdgeListData& data);

} // namespace copgraph
