#include "dipath/graph.hpp"

#include <algorithm>
#include <numeric>

namespace dipath {

namespace {

std::string describe_cycle(const std::vector<Vertex>& cycle)
{
    std::string text = "graph contains a directed cycle:";
    for (auto v : cycle)
        text += " " + std::to_string(v);
    return text;
}

std::uint64_t pair_key(Vertex u, Vertex v)
{
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) | static_cast<std::uint32_t>(v);
}

} // namespace

CyclicGraphError::CyclicGraphError(std::vector<Vertex> cycle)
    : GraphError(describe_cycle(cycle)), cycle_(std::move(cycle))
{
}

OrientedGraph::OrientedGraph(int vertex_count, bool allow_antiparallel)
    : n_(vertex_count), allow_antiparallel_(allow_antiparallel)
{
    if (vertex_count < 0)
        throw GraphError("negative vertex count");
    words_ = (static_cast<std::size_t>(vertex_count) + 63) / 64;
    out_.resize(static_cast<std::size_t>(vertex_count));
    in_.resize(static_cast<std::size_t>(vertex_count));
    matrix_.assign(words_ * static_cast<std::size_t>(vertex_count), 0);
}

int OrientedGraph::add_edge(Vertex u, Vertex v)
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw GraphError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v)
        throw GraphError("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v))
        throw GraphError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    if (!allow_antiparallel_ && has_edge(v, u))
        throw GraphError("antiparallel edge " + std::to_string(u) + " " + std::to_string(v) +
                         " in an oriented graph");

    const auto bit = static_cast<std::size_t>(u) * words_ * 64 + static_cast<std::size_t>(v);
    matrix_[bit >> 6] |= std::uint64_t{1} << (bit & 63);

    auto& outs = out_[static_cast<std::size_t>(u)];
    outs.insert(std::lower_bound(outs.begin(), outs.end(), v), v);
    auto& ins = in_[static_cast<std::size_t>(v)];
    ins.insert(std::lower_bound(ins.begin(), ins.end(), u), u);

    const int id = edge_count();
    edges_.push_back({u, v});
    ids_.emplace(pair_key(u, v), id);
    return id;
}

int OrientedGraph::edge_id(Vertex u, Vertex v) const
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || !has_edge(u, v))
        return -1;
    return ids_.at(pair_key(u, v));
}

int OrientedGraph::max_degree() const
{
    int best = 0;
    for (Vertex v = 0; v < n_; ++v)
        best = std::max(best, degree(v));
    return best;
}

double OrientedGraph::edge_density() const
{
    if (n_ == 0)
        return 0.0;
    return static_cast<double>(edge_count()) / (static_cast<double>(n_) * static_cast<double>(n_));
}

bool EdgeColoring::is_total() const
{
    return std::all_of(colors.begin(), colors.end(), [&](int c) { return c >= 1 && c <= num_colors; });
}

int VertexColoring::num_colors() const
{
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
}

std::vector<std::vector<Vertex>> VertexColoring::classes() const
{
    std::vector<std::vector<Vertex>> result(static_cast<std::size_t>(num_colors()));
    for (std::size_t v = 0; v < colors.size(); ++v)
        result[static_cast<std::size_t>(colors[v] - 1)].push_back(static_cast<Vertex>(v));
    return result;
}

DirectedPath Subgraph::lift(const DirectedPath& local) const
{
    DirectedPath host;
    host.vertices.reserve(local.vertices.size());
    for (auto v : local.vertices)
        host.vertices.push_back(to_host_vertex[static_cast<std::size_t>(v)]);
    return host;
}

OrientedGraph complete_symmetric_digraph(int n)
{
    OrientedGraph g(n, true);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v)
                g.add_edge(u, v);
    return g;
}

OrientedGraph transitive_tournament(int n)
{
    OrientedGraph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

OrientedGraph directed_path_graph(int n)
{
    OrientedGraph g(n);
    for (Vertex v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

OrientedGraph directed_cycle_graph(int n)
{
    OrientedGraph g(n);
    for (Vertex v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

Subgraph induced_subgraph(const OrientedGraph& g, std::span<const Vertex> vertices)
{
    Subgraph sub;
    sub.graph = OrientedGraph(static_cast<int>(vertices.size()), g.allow_antiparallel());
    sub.to_host_vertex.assign(vertices.begin(), vertices.end());

    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (local[static_cast<std::size_t>(vertices[i])] != -1)
            throw GraphError("duplicate vertex in induced subgraph request");
        local[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (auto w : g.out_neighbors(vertices[i])) {
            const int j = local[static_cast<std::size_t>(w)];
            if (j < 0)
                continue;
            sub.graph.add_edge(static_cast<Vertex>(i), j);
            sub.to_host_edge.push_back(g.edge_id(vertices[i], w));
        }
    }
    return sub;
}

Subgraph color_class_subgraph(const OrientedGraph& g, const EdgeColoring& coloring, int color)
{
    Subgraph sub;
    sub.graph = OrientedGraph(g.vertex_count(), g.allow_antiparallel());
    sub.to_host_vertex.resize(static_cast<std::size_t>(g.vertex_count()));
    std::iota(sub.to_host_vertex.begin(), sub.to_host_vertex.end(), 0);
    for (int id = 0; id < g.edge_count(); ++id) {
        if (coloring[id] != color)
            continue;
        sub.graph.add_edge(g.edge(id).from, g.edge(id).to);
        sub.to_host_edge.push_back(id);
    }
    return sub;
}

EdgeColoring restrict_coloring(const EdgeColoring& host, const Subgraph& sub)
{
    EdgeColoring result(host.num_colors, sub.graph.edge_count());
    for (int id = 0; id < sub.graph.edge_count(); ++id)
        result[id] = host[sub.to_host_edge[static_cast<std::size_t>(id)]];
    return result;
}

bool is_valid_path(const OrientedGraph& g, const DirectedPath& path)
{
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (std::size_t i = 0; i < path.vertices.size(); ++i) {
        const auto v = path.vertices[i];
        if (v < 0 || v >= g.vertex_count() || seen[static_cast<std::size_t>(v)])
            return false;
        seen[static_cast<std::size_t>(v)] = 1;
        if (i > 0 && !g.has_edge(path.vertices[i - 1], v))
            return false;
    }
    return true;
}

bool is_monochromatic_path(const OrientedGraph& g, const EdgeColoring& coloring, const DirectedPath& path,
                           int color)
{
    if (!is_valid_path(g, path))
        return false;
    for (std::size_t i = 1; i < path.vertices.size(); ++i)
        if (coloring[g.edge_id(path.vertices[i - 1], path.vertices[i])] != color)
            return false;
    return true;
}

bool is_proper_coloring(const OrientedGraph& g, const VertexColoring& coloring)
{
    if (static_cast<int>(coloring.colors.size()) != g.vertex_count())
        return false;
    if (std::any_of(coloring.colors.begin(), coloring.colors.end(), [](int c) { return c < 1; }))
        return false;
    return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
        return coloring.colors[static_cast<std::size_t>(e.from)] != coloring.colors[static_cast<std::size_t>(e.to)];
    });
}

bool is_acyclic_set(const OrientedGraph& g, std::span<const Vertex> vertices)
{
    // Kahn's algorithm restricted to the set.
    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        local[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);

    std::vector<int> indegree(vertices.size(), 0);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (auto w : g.out_neighbors(vertices[i]))
            if (local[static_cast<std::size_t>(w)] >= 0)
                ++indegree[static_cast<std::size_t>(local[static_cast<std::size_t>(w)])];

    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (indegree[i] == 0)
            stack.push_back(i);
    std::size_t removed = 0;
    while (!stack.empty()) {
        const auto i = stack.back();
        stack.pop_back();
        ++removed;
        for (auto w : g.out_neighbors(vertices[i])) {
            const int j = local[static_cast<std::size_t>(w)];
            if (j >= 0 && --indegree[static_cast<std::size_t>(j)] == 0)
                stack.push_back(static_cast<std::size_t>(j));
        }
    }
    return removed == vertices.size();
}

bool is_independent_set(const OrientedGraph& g, std::span<const Vertex> vertices)
{
    for (auto u : vertices)
        for (auto v : vertices)
            if (u != v && g.has_edge(u, v))
                return false;
    return true;
}

bool is_complete_symmetric(const OrientedGraph& g)
{
    const auto n = static_cast<long long>(g.vertex_count());
    return g.allow_antiparallel() && g.edge_count() == n * (n - 1);
}

bool is_tournament(const OrientedGraph& g)
{
    const auto n = static_cast<long long>(g.vertex_count());
    if (g.edge_count() != n * (n - 1) / 2)
        return false;
    for (const auto& e : g.edges())
        if (g.has_edge(e.to, e.from))
            return false;
    return true;
}

} // namespace dipath
