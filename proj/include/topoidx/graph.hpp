#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "topoidx/errors.hpp"

namespace topoidx {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;
using EdgeList = std::vector<Edge>;

/// Undirected simple graph, immutable after construction. Edges are stored
/// canonically (u < v, sorted ascending) so equal graphs compare equal and
/// serialize identically; adjacency lists are sorted and symmetric.
class MolecularGraph {
public:
    MolecularGraph() = default;

    static MolecularGraph from_edges(std::size_t vertex_count, const EdgeList& edge_list) {
        std::set<Edge> seen;
        EdgeList edges;
        edges.reserve(edge_list.size());
        for (const auto& [a, b] : edge_list) {
            if (a >= vertex_count || b >= vertex_count)
                throw OutOfRangeVertexError("edge (" + std::to_string(a) + ", " +
                                            std::to_string(b) + "): vertex id out of range [0, " +
                                            std::to_string(vertex_count) + ")");
            if (a == b)
                throw SelfLoopError("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                    ") is a self-loop");
            const Edge e{std::min(a, b), std::max(a, b)};
            if (!seen.insert(e).second)
                throw DuplicateEdgeError("edge (" + std::to_string(e.first) + ", " +
                                         std::to_string(e.second) + ") appears more than once");
            edges.push_back(e);
        }
        std::sort(edges.begin(), edges.end());

        MolecularGraph g;
        g.adjacency_.resize(vertex_count);
        g.edges_ = std::move(edges);
        for (const auto& [u, v] : g.edges_) {
            g.adjacency_[u].push_back(v);
            g.adjacency_[v].push_back(u);
        }
        for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
        return g;
    }

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    std::size_t degree(VertexId v) const {
        check_vertex(v);
        return adjacency_[v].size();
    }

    std::span<const VertexId> neighbors(VertexId v) const {
        check_vertex(v);
        return adjacency_[v];
    }

    // Canonical edge list: each pair has u < v, sorted ascending.
    const EdgeList& edges() const { return edges_; }

    /// True iff a traversal from vertex 0 reaches every vertex.
    bool is_connected() const {
        if (vertex_count() == 0)
            throw EmptyGraphError("connectivity is undefined for the empty graph");
        std::vector<bool> visited(vertex_count(), false);
        std::vector<VertexId> stack{0};
        visited[0] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : adjacency_[v]) {
                if (!visited[w]) {
                    visited[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        return reached == vertex_count();
    }

    friend bool operator==(const MolecularGraph&, const MolecularGraph&) = default;

private:
    void check_vertex(VertexId v) const {
        if (v >= vertex_count())
            throw OutOfRangeVertexError("vertex " + std::to_string(v) + " out of range [0, " +
                                        std::to_string(vertex_count()) + ")");
    }

    std::vector<std::vector<VertexId>> adjacency_;
    EdgeList edges_;
};

/// Vertex counts grouped by degree; keys exist only for occurring degrees.
struct DegreePartition {
    std::map<std::size_t, std::size_t> counts;
    friend bool operator==(const DegreePartition&, const DegreePartition&) = default;
};

/// Edge counts grouped by unordered endpoint-degree pair (d1 <= d2).
struct EdgePartition {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> counts;
    friend bool operator==(const EdgePartition&, const EdgePartition&) = default;
};

inline DegreePartition degree_partition(const MolecularGraph& g) {
    DegreePartition dp;
    for (VertexId v = 0; v < g.vertex_count(); ++v) ++dp.counts[g.degree(v)];
    return dp;
}

inline EdgePartition edge_partition(const MolecularGraph& g) {
    EdgePartition ep;
    for (const auto& [u, v] : g.edges()) {
        const std::size_t du = g.degree(u);
        const std::size_t dv = g.degree(v);
        ++ep.counts[{std::min(du, dv), std::max(du, dv)}];
    }
    return ep;
}

// ---- edge-list file format ----
//
// First line:   # vertices <N>
// Other lines:  "u v" (decimal, 0-indexed, one undirected edge per line,
//               u < v on write), or comments starting with '#'.

inline void write_edge_list(const MolecularGraph& g, std::ostream& out) {
    out << "# vertices " << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

inline MolecularGraph read_edge_list(std::istream& in, const std::string& source = "<stream>") {
    auto fail = [&](std::size_t line_no, const std::string& what) -> ParseError {
        return ParseError(source + ":" + std::to_string(line_no) + ": " + what);
    };

    std::string line;
    if (!std::getline(in, line)) throw fail(1, "missing '# vertices <N>' header");
    std::uint64_t vertex_count = 0;
    {
        std::istringstream hdr(line);
        std::string hash, keyword;
        if (!(hdr >> hash >> keyword >> vertex_count) || hash != "#" || keyword != "vertices" ||
            (hdr >> std::ws, !hdr.eof()))
            throw fail(1, "malformed header, expected '# vertices <N>': '" + line + "'");
        if (vertex_count > std::numeric_limits<VertexId>::max())
            throw fail(1, "vertex count " + std::to_string(vertex_count) + " too large");
    }

    EdgeList edges;
    std::set<Edge> seen;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream row(line);
        std::uint64_t a = 0, b = 0;
        if (!(row >> a >> b) || (row >> std::ws, !row.eof()))
            throw fail(line_no, "expected 'u v': '" + line + "'");
        if (a >= vertex_count || b >= vertex_count)
            throw fail(line_no, "vertex id out of range [0, " + std::to_string(vertex_count) +
                                    "): '" + line + "'");
        if (a == b) throw fail(line_no, "self-loop: '" + line + "'");
        const Edge e{static_cast<VertexId>(std::min(a, b)), static_cast<VertexId>(std::max(a, b))};
        if (!seen.insert(e).second)
            throw fail(line_no, "duplicate edge (" + std::to_string(e.first) + ", " +
                                    std::to_string(e.second) + ")");
        edges.push_back(e);
    }
    return MolecularGraph::from_edges(static_cast<std::size_t>(vertex_count), edges);
}

inline void write_edge_list_file(const MolecularGraph& g, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    write_edge_list(g, out);
    if (!out) throw IoError("write to '" + path.string() + "' failed");
}

inline MolecularGraph read_edge_list_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    return read_edge_list(in, path.string());
}

} // namespace topoidx
