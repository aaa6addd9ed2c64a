#pragma once

#include "dipath/graph.hpp"

#include <optional>
#include <vector>

namespace dipath {

inline constexpr int kDefaultExactLimit = 16;

/// A directed cycle as a closed vertex walk v0 -> v1 -> ... -> v0 (v0 not
/// repeated), or nullopt when g is acyclic.
std::optional<std::vector<Vertex>> find_cycle(const OrientedGraph& g);

/// Kahn order, smallest available vertex first. Throws CyclicGraphError.
std::vector<Vertex> topological_order(const OrientedGraph& g);

/// For each vertex, the length of the longest path ending there.
/// Throws CyclicGraphError.
std::vector<int> longest_path_ending_lengths(const OrientedGraph& g);

/// Maximum-length path of an acyclic graph in O(|V| + |E|).
/// Throws CyclicGraphError carrying a cycle witness.
DirectedPath longest_path_dag(const OrientedGraph& g);

/// Z_i = vertices whose longest incoming path has length i. Every edge goes
/// from a lower level to a strictly higher one.
std::vector<std::vector<Vertex>> level_decomposition(const OrientedGraph& g);

/// Component id per vertex; ids are a topological order of the condensation
/// (every edge goes from a lower or equal id to a higher or equal id).
struct Components {
    std::vector<int> component_of;
    std::vector<std::vector<Vertex>> members;
};
Components strongly_connected_components(const OrientedGraph& g);

/// Exact longest directed path. Acyclic parts go through the condensation
/// DAG; inside each strongly connected component simple paths are searched
/// exhaustively over vertex subsets, so the cost is exponential only in the
/// largest component. Throws BudgetExceeded when a component has more than
/// `component_limit` vertices.
DirectedPath longest_path_exact(const OrientedGraph& g, int component_limit = kDefaultExactLimit);

} // namespace dipath
