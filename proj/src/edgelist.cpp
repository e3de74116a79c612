#include "copgraph/edgelist.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace copgraph {

void write_edge_list(std::ostream& out, const SampledGraph& graph,
                     const std::string& descriptor) {
    out << "# n=" << graph.n << " seed=" << graph.seed
        << " graphon=" << descriptor << "\n";
    for (const auto& [i, j] : graph.edges)
        out << i << ' ' << j << "\n";
    if (!out) throw io_error("failed while writing edge list");
}

void write_edge_list_file(const std::string& path, const SampledGraph& graph,
                          const std::string& descriptor) {
    std::ofstream out(path, std::ios::binary);  // binary keeps LF endings
    if (!out) throw io_error("cannot open '" + path + "' for writing");
    write_edge_list(out, graph, descriptor);
}

void write_edge_list(std::ostream& out, const SampledGraph& graph) {
    write_edge_list(out, graph, graph.descriptor);
}

void write_edge_list_file(const std::string& path, const SampledGraph& graph) {
    write_edge_list_file(path, graph, graph.descriptor);
}

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
    throw io_error("edge list line " + std::to_string(line_no) + ": " + what);
}

template <typename T>
T parse_number(const std::string& text, std::size_t line_no,
               const char* what) {
    T value{};
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        fail(line_no, std::string("cannot parse ") + what + " '" + text + "'");
    return value;
}

} // namespace

EdgeListData read_edge_list(std::istream& in) {
    EdgeListData data;
    bool have_n = false;
    std::unordered_set<std::uint64_t> seen;
    std::string line;
    std::size_t line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        if (line[0] == '#') {
            std::istringstream tokens(line.substr(1));
            std::string tok;
            while (tokens >> tok) {
                const auto eq = tok.find('=');
                if (eq == std::string::npos) continue;
                const std::string key = tok.substr(0, eq);
                const std::string value = tok.substr(eq + 1);
                if (key == "n") {
                    data.n = parse_number<std::size_t>(value, line_no, "n");
                    have_n = true;
                } else if (key == "seed") {
                    data.seed = parse_number<std::uint64_t>(value, line_no, "seed");
                } else if (key == "graphon") {
                    data.descriptor = value;
                }
                // other keys are ignored for forward compatibility
            }
            continue;
        }

        if (!have_n) fail(line_no, "edges before a '# n=...' header");
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a >> b)) fail(line_no, "expected two vertex ids");
        if (fields >> extra) fail(line_no, "trailing text '" + extra + "'");
        const auto i = parse_number<std::uint32_t>(a, line_no, "vertex id");
        const auto j = parse_number<std::uint32_t>(b, line_no, "vertex id");
        if (i >= data.n || j >= data.n)
            fail(line_no, "vertex id out of range for n=" + std::to_string(data.n));
        if (i == j) fail(line_no, "self-loop at vertex " + std::to_string(i));
        if (i > j) fail(line_no, "edges must be written as i j with i < j");
        const std::uint64_t key = (static_cast<std::uint64_t>(i) << 32) | j;
        if (!seen.insert(key).second)
            fail(line_no, "duplicate edge " + std::to_string(i) + " " +
                              std::to_string(j));
        data.edges.emplace_back(i, j);
    }
    if (!have_n) throw io_error("edge list has no '# n=...' header");
    return data;
}

EdgeListData read_edge_list_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open '" + path + "' for reading");
    return read_edge_list(in);
}

SampledGraph graph_from_edges(const EdgeListData& data) {
    SampledGraph g;
    g.n = data.n;
    g.seed = data.seed;
    g.descriptor = data.descriptor;
    g.edges = data.edges;
    std::sort(g.edges.begin(), g.edges.end());
    g.adjacency.assign(g.n, {});
    for (const auto& [i, j] : g.edges) {
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
    }
    for (auto& nb : g.adjacency) std::sort(nb.begin(), nb.end());
    return g;
}

} // namespace copgraph
