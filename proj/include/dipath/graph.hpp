#pragma once

// Directed graphs, paths and colorings shared by every module.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace dipath {

using Vertex = int;

/// Color ids are 1-based. Two-color code uses red = 1, blue = 2.
inline constexpr int kRed = 1;
inline constexpr int kBlue = 2;
inline constexpr int kUncolored = 0;

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an acyclic input turns out to contain a directed cycle.
class CyclicGraphError : public GraphError {
public:
    explicit CyclicGraphError(std::vector<Vertex> cycle);
    const std::vector<Vertex>& cycle() const { return cycle_; }

private:
    std::vector<Vertex> cycle_;
};

/// Thrown when an exhaustive routine would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Edge {
    Vertex from = 0;
    Vertex to = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Directed graph on vertices 0..n-1 without self-loops. Unless
/// `allow_antiparallel` is set, (u,v) and (v,u) are never both present.
///
/// Edges keep their insertion order; an edge's position is its id and is
/// what EdgeColoring indexes. Direction queries go through a bit matrix,
/// neighbor lists are kept sorted by vertex id.
class OrientedGraph {
public:
    OrientedGraph() = default;
    explicit OrientedGraph(int vertex_count, bool allow_antiparallel = false);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool allow_antiparallel() const { return allow_antiparallel_; }

    /// Adds u->v and returns its id. Throws GraphError on loops, duplicates,
    /// out-of-range ids and forbidden antiparallel pairs.
    int add_edge(Vertex u, Vertex v);

    bool has_edge(Vertex u, Vertex v) const
    {
        const auto bit = static_cast<std::size_t>(u) * words_ * 64 + static_cast<std::size_t>(v);
        return (matrix_[bit >> 6] >> (bit & 63)) & 1u;
    }
    /// Edge id of u->v, or -1.
    int edge_id(Vertex u, Vertex v) const;

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }

    std::span<const Vertex> out_neighbors(Vertex v) const { return out_[static_cast<std::size_t>(v)]; }
    std::span<const Vertex> in_neighbors(Vertex v) const { return in_[static_cast<std::size_t>(v)]; }
    int out_degree(Vertex v) const { return static_cast<int>(out_[static_cast<std::size_t>(v)].size()); }
    int in_degree(Vertex v) const { return static_cast<int>(in_[static_cast<std::size_t>(v)].size()); }
    int degree(Vertex v) const { return out_degree(v) + in_degree(v); }
    int max_degree() const;

    /// |E| / |V|^2
    double edge_density() const;

    /// Row of the adjacency bit matrix (out-neighbors of v), `words()` words.
    std::span<const std::uint64_t> out_row(Vertex v) const
    {
        return {matrix_.data() + static_cast<std::size_t>(v) * words_, words_};
    }
    std::size_t words() const { return words_; }

    friend bool operator==(const OrientedGraph& a, const OrientedGraph& b)
    {
        return a.n_ == b.n_ && a.allow_antiparallel_ == b.allow_antiparallel_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    bool allow_antiparallel_ = false;
    std::size_t words_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
    std::vector<std::uint64_t> matrix_;
    std::unordered_map<std::uint64_t, int> ids_;
};

/// Ordered sequence of distinct vertices; length counts edges.
struct DirectedPath {
    std::vector<Vertex> vertices;

    int length() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }
    bool empty() const { return vertices.empty(); }
    friend bool operator==(const DirectedPath&, const DirectedPath&) = default;
};

/// Color per edge id of a host graph, colors in 1..num_colors. kUncolored
/// marks edges a partial construction has not reached yet.
struct EdgeColoring {
    int num_colors = 1;
    std::vector<int> colors;

    EdgeColoring() = default;
    EdgeColoring(int num_colors, int edge_count, int fill = kUncolored)
        : num_colors(num_colors), colors(static_cast<std::size_t>(edge_count), fill)
    {
    }

    int operator[](int edge_id) const { return colors[static_cast<std::size_t>(edge_id)]; }
    int& operator[](int edge_id) { return colors[static_cast<std::size_t>(edge_id)]; }
    int size() const { return static_cast<int>(colors.size()); }

    /// Every entry is in 1..num_colors.
    bool is_total() const;
    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

/// Color per vertex, colors in 1..num_colors().
struct VertexColoring {
    std::vector<int> colors;

    int num_colors() const;
    /// Vertices grouped by color, ascending ids inside each class.
    std::vector<std::vector<Vertex>> classes() const;
};

/// A subgraph together with the maps back into its host.
struct Subgraph {
    OrientedGraph graph;
    std::vector<Vertex> to_host_vertex;
    std::vector<int> to_host_edge;

    DirectedPath lift(const DirectedPath& local) const;
};

// --- constructors -------------------------------------------------------

OrientedGraph complete_symmetric_digraph(int n);
/// i -> j for all i < j.
OrientedGraph transitive_tournament(int n);
OrientedGraph directed_path_graph(int n);
OrientedGraph directed_cycle_graph(int n);

/// Induced subgraph on `vertices` (kept in the given order as local ids).
Subgraph induced_subgraph(const OrientedGraph& g, std::span<const Vertex> vertices);
/// Spanning subgraph holding the edges whose color equals `color`.
Subgraph color_class_subgraph(const OrientedGraph& g, const EdgeColoring& coloring, int color);

/// Coloring of a subgraph pulled back from a coloring of its host.
EdgeColoring restrict_coloring(const EdgeColoring& host, const Subgraph& sub);

// --- validation ---------------------------------------------------------

bool is_valid_path(const OrientedGraph& g, const DirectedPath& path);
bool is_monochromatic_path(const OrientedGraph& g, const EdgeColoring& coloring, const DirectedPath& path,
                           int color);
bool is_proper_coloring(const OrientedGraph& g, const VertexColoring& coloring);
bool is_acyclic_set(const OrientedGraph& g, std::span<const Vertex> vertices);
bool is_independent_set(const OrientedGraph& g, std::span<const Vertex> vertices);
bool is_complete_symmetric(const OrientedGraph& g);
bool is_tournament(const OrientedGraph& g);

} // namespace dipath
