#pragma once

// Constructive Gallai-Roy dichotomy and the two-path Hamilton cycle of a
// 2-colored complete symmetric digraph.

#include "dipath/graph.hpp"

#include <variant>

namespace dipath {

/// Spanning acyclic subgraph of g that is maximal under edge insertion:
/// edges are offered in id order and kept unless they would close a cycle.
OrientedGraph maximal_acyclic_subgraph(const OrientedGraph& g);

using GallaiRoyResult = std::variant<VertexColoring, DirectedPath>;

/// Proper coloring with at most `threshold` colors, or a path of g with at
/// least `threshold` edges. Vertices are colored by their level in a
/// maximal acyclic spanning subgraph H; the path is H's longest path.
GallaiRoyResult gallai_roy(const OrientedGraph& g, int threshold);

/// Hamilton cycle of the complete symmetric digraph split into a red run
/// and a blue run. `cycle` starts at the first vertex of the red run;
/// red_segment followed by blue_segment walks the cycle once. A
/// monochromatic cycle is reported as one segment holding all vertices
/// (the closing edge is dropped) and an empty other segment.
struct HamiltonDecomposition {
    std::vector<Vertex> cycle;
    DirectedPath red_segment;
    DirectedPath blue_segment;
};

/// Largest vertex count for which the exhaustive fallback of raynaud runs.
inline constexpr int kRaynaudFallbackLimit = 22;

/// g must be complete symmetric and `coloring` a total 2-coloring of it.
/// Throws std::invalid_argument otherwise.
HamiltonDecomposition raynaud(const OrientedGraph& g, const EdgeColoring& coloring);

bool is_valid_decomposition(const OrientedGraph& g, const EdgeColoring& coloring, const HamiltonDecomposition& d);

struct ColoredPath {
    DirectedPath path;
    int color = kRed;
};

/// The longer of the two segments; red wins ties.
ColoredPath longest_segment(const HamiltonDecomposition& d);

} // namespace dipath
