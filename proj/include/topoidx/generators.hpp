#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "topoidx/families.hpp"
#include "topoidx/graph.hpp"

namespace topoidx {
namespace detail {

// Assigns dense vertex ids to exact integer lattice points in first-encounter
// order; hexagon enumeration order is fixed, so ids are deterministic.
class LatticeInterner {
public:
    VertexId intern(std::int64_t x, std::int64_t y) {
        const auto next = static_cast<VertexId>(ids_.size());
        return ids_.try_emplace({x, y}, next).first->second;
    }
    std::size_t size() const { return ids_.size(); }

private:
    std::map<std::pair<std::int64_t, std::int64_t>, VertexId> ids_;
};

// One hexagon's corners in cyclic order, in doubled integer coordinates.
// Flat-top cell: center of axial cell (q, r) sits at (3q, 2r + q).
inline constexpr std::array<std::pair<int, int>, 6> kFlatTopCorners{
    {{2, 0}, {1, 1}, {-1, 1}, {-2, 0}, {-1, -1}, {1, -1}}};
// Pointy-top cell: centers at (2*col + row_offset, 3*row).
inline constexpr std::array<std::pair<int, int>, 6> kPointyTopCorners{
    {{0, 2}, {-1, 1}, {-1, -1}, {0, -2}, {1, -1}, {1, 1}}};

template <std::size_t N>
void add_hexagon(LatticeInterner& interner, std::set<Edge>& edges, std::int64_t cx,
                 std::int64_t cy, const std::array<std::pair<int, int>, N>& corners) {
    std::array<VertexId, N> ids{};
    for (std::size_t i = 0; i < N; ++i)
        ids[i] = interner.intern(cx + corners[i].first, cy + corners[i].second);
    for (std::size_t i = 0; i < N; ++i) {
        const VertexId a = ids[i];
        const VertexId b = ids[(i + 1) % N];
        edges.emplace(std::min(a, b), std::max(a, b));
    }
}

// Parameters are pre-capped at 10^6 so the vertex-count polynomial below
// cannot overflow int64 before this check runs.
inline constexpr std::int64_t kMaxGeneratorParam = 1'000'000;

inline void check_generator_param(std::int64_t value, const char* name) {
    if (value > kMaxGeneratorParam)
        throw InvalidParameterError(std::string(name) + "=" + std::to_string(value) +
                                    " exceeds the generator limit " +
                                    std::to_string(kMaxGeneratorParam));
}

inline void check_generated_size(std::int64_t vertices) {
    if (vertices > static_cast<std::int64_t>(std::numeric_limits<VertexId>::max()))
        throw InvalidParameterError("graph too large to materialize (" +
                                    std::to_string(vertices) + " vertices)");
}

// Attach one pendant vertex to every degree-2 vertex of the skeleton.
inline MolecularGraph with_leaves_on_degree2(const std::set<Edge>& skeleton_edges,
                                             std::size_t skeleton_vertices) {
    std::vector<std::size_t> degree(skeleton_vertices, 0);
    for (const auto& [u, v] : skeleton_edges) {
        ++degree[u];
        ++degree[v];
    }
    EdgeList edges(skeleton_edges.begin(), skeleton_edges.end());
    auto next = static_cast<VertexId>(skeleton_vertices);
    for (VertexId v = 0; v < skeleton_vertices; ++v)
        if (degree[v] == 2) edges.emplace_back(v, next++);
    return MolecularGraph::from_edges(next, edges);
}

} // namespace detail

/// Builds the n-layer hexagonal flake (1, 7, 19, ... fused hexagons), then
/// attaches a pendant vertex to every boundary carbon. Yields 6n^2 + 6n
/// vertices and 9n^2 + 3n edges.
inline MolecularGraph generate_pah(const PahParams& p) {
    validate(p);
    detail::check_generator_param(p.n, "n");
    detail::check_generated_size(6 * p.n * p.n + 6 * p.n);

    detail::LatticeInterner interner;
    std::set<Edge> skeleton;
    const std::int64_t radius = p.n - 1;
    for (std::int64_t q = -radius; q <= radius; ++q) {
        const std::int64_t r_lo = std::max(-radius, -q - radius);
        const std::int64_t r_hi = std::min(radius, -q + radius);
        for (std::int64_t r = r_lo; r <= r_hi; ++r)
            detail::add_hexagon(interner, skeleton, 3 * q, 2 * r + q, detail::kFlatTopCorners);
    }
    return detail::with_leaves_on_degree2(skeleton, interner.size());
}

/// Builds the jagged rectangle: rows 0..2n of hexagons, where even rows hold
/// m-1 cells and odd rows hold m cells offset by half a cell, so vertically
/// adjacent rows share edges. Yields 4mn + 4m + 2n - 2 vertices.
inline MolecularGraph generate_benzenoid(const BenzenoidParams& p) {
    validate(p);
    detail::check_generator_param(p.m, "m");
    detail::check_generator_param(p.n, "n");
    detail::check_generated_size(4 * p.m * p.n + 4 * p.m + 2 * p.n - 2);

    detail::LatticeInterner interner;
    std::set<Edge> edges;
    for (std::int64_t row = 0; row <= 2 * p.n; ++row) {
        const bool full_row = row % 2 == 1;
        const std::int64_t cells = full_row ? p.m : p.m - 1;
        for (std::int64_t col = 0; col < cells; ++col) {
            const std::int64_t cx = 2 * col + (full_row ? 0 : 1);
            detail::add_hexagon(interner, edges, cx, 3 * row, detail::kPointyTopCorners);
        }
    }
    EdgeList edge_list(edges.begin(), edges.end());
    return MolecularGraph::from_edges(interner.size(), edge_list);
}

inline MolecularGraph generate(const FamilyId& family) {
    return std::visit(
        [](const auto& params) {
            if constexpr (std::is_same_v<std::decay_t<decltype(params)>, PahParams>)
                return generate_pah(params);
            else
                return generate_benzenoid(params);
        },
        family);
}

/// Number of pendant (hydrogen) vertices of the n-layer flake: 6n.
inline std::int64_t pah_hydrogen_count(const PahParams& p) {
    validate(p);
    return 6 * p.n;
}

} // namespace topoidx
