#include "dipath/paths.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>

namespace dipath {

std::optional<std::vector<Vertex>> find_cycle(const OrientedGraph& g)
{
    const int n = g.vertex_count();
    enum : char { white, grey, black };
    std::vector<char> state(static_cast<std::size_t>(n), white);
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<std::pair<Vertex, std::size_t>> stack;

    for (Vertex root = 0; root < n; ++root) {
        if (state[static_cast<std::size_t>(root)] != white)
            continue;
        stack.push_back({root, 0});
        state[static_cast<std::size_t>(root)] = grey;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            const auto outs = g.out_neighbors(v);
            if (next == outs.size()) {
                state[static_cast<std::size_t>(v)] = black;
                stack.pop_back();
                continue;
            }
            const Vertex w = outs[next++];
            if (state[static_cast<std::size_t>(w)] == grey) {
                std::vector<Vertex> cycle;
                for (Vertex x = v; x != w; x = parent[static_cast<std::size_t>(x)])
                    cycle.push_back(x);
                cycle.push_back(w);
                std::reverse(cycle.begin(), cycle.end());
                return cycle;
            }
            if (state[static_cast<std::size_t>(w)] == white) {
                parent[static_cast<std::size_t>(w)] = v;
                state[static_cast<std::size_t>(w)] = grey;
                stack.push_back({w, 0});
            }
        }
    }
    return std::nullopt;
}

std::vector<Vertex> topological_order(const OrientedGraph& g)
{
    const int n = g.vertex_count();
    std::vector<int> indegree(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        indegree[static_cast<std::size_t>(v)] = g.in_degree(v);

    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
    for (Vertex v = 0; v < n; ++v)
        if (indegree[static_cast<std::size_t>(v)] == 0)
            ready.push(v);

    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n));
    while (!ready.empty()) {
        const Vertex v = ready.top();
        ready.pop();
        order.push_back(v);
        for (auto w : g.out_neighbors(v))
            if (--indegree[static_cast<std::size_t>(w)] == 0)
                ready.push(w);
    }
    if (static_cast<int>(order.size()) != n)
        throw CyclicGraphError(*find_cycle(g));
    return order;
}

std::vector<int> longest_path_ending_lengths(const OrientedGraph& g)
{
    std::vector<int> level(static_cast<std::size_t>(g.vertex_count()), 0);
    for (auto v : topological_order(g))
        for (auto w : g.out_neighbors(v))
            level[static_cast<std::size_t>(w)] =
                std::max(level[static_cast<std::size_t>(w)], level[static_cast<std::size_t>(v)] + 1);
    return level;
}

DirectedPath longest_path_dag(const OrientedGraph& g)
{
    const int n = g.vertex_count();
    if (n == 0)
        return {};
    std::vector<int> best(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> pred(static_cast<std::size_t>(n), -1);
    for (auto v : topological_order(g)) {
        for (auto w : g.out_neighbors(v)) {
            if (best[static_cast<std::size_t>(v)] + 1 > best[static_cast<std::size_t>(w)]) {
                best[static_cast<std::size_t>(w)] = best[static_cast<std::size_t>(v)] + 1;
                pred[static_cast<std::size_t>(w)] = v;
            }
        }
    }
    Vertex end = static_cast<Vertex>(std::max_element(best.begin(), best.end()) - best.begin());
    DirectedPath path;
    for (Vertex v = end; v != -1; v = pred[static_cast<std::size_t>(v)])
        path.vertices.push_back(v);
    std::reverse(path.vertices.begin(), path.vertices.end());
    return path;
}

std::vector<std::vector<Vertex>> level_decomposition(const OrientedGraph& g)
{
    const auto level = longest_path_ending_lengths(g);
    const int top = level.empty() ? -1 : *std::max_element(level.begin(), level.end());
    std::vector<std::vector<Vertex>> levels(static_cast<std::size_t>(top + 1));
    for (std::size_t v = 0; v < level.size(); ++v)
        levels[static_cast<std::size_t>(level[v])].push_back(static_cast<Vertex>(v));
    return levels;
}

Components strongly_connected_components(const OrientedGraph& g)
{
    // Iterative Tarjan. Components pop out in reverse topological order and
    // are renumbered at the end.
    const int n = g.vertex_count();
    std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> scc_stack;
    std::vector<std::pair<Vertex, std::size_t>> call;
    std::vector<std::vector<Vertex>> reversed;
    int counter = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (index[static_cast<std::size_t>(root)] != -1)
            continue;
        call.push_back({root, 0});
        while (!call.empty()) {
            auto& [v, next] = call.back();
            const auto vi = static_cast<std::size_t>(v);
            if (next == 0) {
                index[vi] = low[vi] = counter++;
                scc_stack.push_back(v);
                on_stack[vi] = 1;
            }
            const auto outs = g.out_neighbors(v);
            bool descended = false;
            while (next < outs.size()) {
                const Vertex w = outs[next++];
                const auto wi = static_cast<std::size_t>(w);
                if (index[wi] == -1) {
                    call.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[wi])
                    low[vi] = std::min(low[vi], index[wi]);
            }
            if (descended)
                continue;
            if (low[vi] == index[vi]) {
                std::vector<Vertex> component;
                Vertex w;
                do {
                    w = scc_stack.back();
                    scc_stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = 0;
                    component.push_back(w);
                } while (w != v);
                std::sort(component.begin(), component.end());
                reversed.push_back(std::move(component));
            }
            const Vertex finished = v;
            call.pop_back();
            if (!call.empty()) {
                const auto parent = static_cast<std::size_t>(call.back().first);
                low[parent] = std::min(low[parent], low[static_cast<std::size_t>(finished)]);
            }
        }
    }

    Components result;
    result.component_of.assign(static_cast<std::size_t>(n), -1);
    result.members.assign(reversed.rbegin(), reversed.rend());
    for (std::size_t c = 0; c < result.members.size(); ++c)
        for (auto v : result.members[c])
            result.component_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    return result;
}

namespace {

/// Simple-path reachability inside one component from a fixed start vertex:
/// reach[mask] has bit e set iff some simple path from the start visits
/// exactly `mask` and ends at e.
std::vector<std::uint32_t> subset_reach(const std::vector<std::uint32_t>& local_out, int start)
{
    const std::size_t s = local_out.size();
    std::vector<std::uint32_t> reach(std::size_t{1} << s, 0);
    reach[std::size_t{1} << start] = std::uint32_t{1} << start;
    for (std::size_t mask = 1; mask < reach.size(); ++mask) {
        std::uint32_t ends = reach[mask];
        while (ends) {
            const int e = std::countr_zero(ends);
            ends &= ends - 1;
            std::uint32_t next = local_out[static_cast<std::size_t>(e)] & ~static_cast<std::uint32_t>(mask);
            while (next) {
                const int w = std::countr_zero(next);
                next &= next - 1;
                reach[mask | (std::size_t{1} << w)] |= std::uint32_t{1} << w;
            }
        }
    }
    return reach;
}

std::vector<int> path_lengths_from(const std::vector<std::uint32_t>& reach, std::size_t s)
{
    std::vector<int> best(s, -1);
    for (std::size_t mask = 1; mask < reach.size(); ++mask) {
        std::uint32_t ends = reach[mask];
        const int len = std::popcount(static_cast<std::uint32_t>(mask)) - 1;
        while (ends) {
            const int e = std::countr_zero(ends);
            ends &= ends - 1;
            best[static_cast<std::size_t>(e)] = std::max(best[static_cast<std::size_t>(e)], len);
        }
    }
    return best;
}

/// Local vertex sequence of a longest simple path start -> end.
std::vector<int> extract_path(const std::vector<std::uint32_t>& local_out, int start, int end, int length)
{
    const auto reach = subset_reach(local_out, start);
    std::size_t mask = 0;
    for (std::size_t m = 1; m < reach.size(); ++m) {
        if (((reach[m] >> end) & 1u) && std::popcount(static_cast<std::uint32_t>(m)) == length + 1) {
            mask = m;
            break;
        }
    }
    std::vector<int> reversed{end};
    int cur = end;
    while (cur != start) {
        const std::size_t rest = mask & ~(std::size_t{1} << cur);
        std::uint32_t candidates = reach[rest];
        int prev = -1;
        while (candidates) {
            const int p = std::countr_zero(candidates);
            candidates &= candidates - 1;
            if ((local_out[static_cast<std::size_t>(p)] >> cur) & 1u) {
                prev = p;
                break;
            }
        }
        mask = rest;
        cur = prev;
        reversed.push_back(cur);
    }
    std::reverse(reversed.begin(), reversed.end());
    return reversed;
}

} // namespace

DirectedPath longest_path_exact(const OrientedGraph& g, int component_limit)
{
    const int n = g.vertex_count();
    if (n == 0)
        return {};
    const auto comps = strongly_connected_components(g);
    const int hard_cap = std::min(component_limit, 31);
    for (const auto& members : comps.members)
        if (static_cast<int>(members.size()) > hard_cap)
            throw BudgetExceeded("strongly connected component of size " + std::to_string(members.size()) +
                                 " exceeds the exact search limit " + std::to_string(hard_cap));

    // best_end[v]: longest path ending at v. entry[v]: where that path entered
    // v's component. enter_val/enter_pred: best arrival at v from an earlier
    // component.
    std::vector<int> best_end(static_cast<std::size_t>(n), 0), entry(static_cast<std::size_t>(n), -1);
    std::vector<int> enter_val(static_cast<std::size_t>(n), 0), enter_pred(static_cast<std::size_t>(n), -1);
    std::vector<int> local(static_cast<std::size_t>(n), -1);
    // Within-component lengths, kept for reconstruction.
    std::vector<std::vector<std::uint32_t>> comp_out(comps.members.size());

    for (std::size_t c = 0; c < comps.members.size(); ++c) {
        const auto& members = comps.members[c];
        for (std::size_t i = 0; i < members.size(); ++i)
            local[static_cast<std::size_t>(members[i])] = static_cast<int>(i);

        for (auto v : members) {
            for (auto w : g.in_neighbors(v)) {
                if (comps.component_of[static_cast<std::size_t>(w)] == static_cast<int>(c))
                    continue;
                const int candidate = best_end[static_cast<std::size_t>(w)] + 1;
                if (candidate > enter_val[static_cast<std::size_t>(v)]) {
                    enter_val[static_cast<std::size_t>(v)] = candidate;
                    enter_pred[static_cast<std::size_t>(v)] = w;
                }
            }
        }

        if (members.size() == 1) {
            const auto v = static_cast<std::size_t>(members[0]);
            best_end[v] = enter_val[v];
            entry[v] = members[0];
            continue;
        }

        auto& outs = comp_out[c];
        outs.assign(members.size(), 0);
        for (std::size_t i = 0; i < members.size(); ++i)
            for (auto w : g.out_neighbors(members[i]))
                if (comps.component_of[static_cast<std::size_t>(w)] == static_cast<int>(c))
                    outs[i] |= std::uint32_t{1} << local[static_cast<std::size_t>(w)];

        for (auto v : members)
            best_end[static_cast<std::size_t>(v)] = -1;
        for (std::size_t u = 0; u < members.size(); ++u) {
            const auto lengths = path_lengths_from(subset_reach(outs, static_cast<int>(u)), members.size());
            const int base = enter_val[static_cast<std::size_t>(members[u])];
            for (std::size_t v = 0; v < members.size(); ++v) {
                if (lengths[v] < 0)
                    continue;
                const auto hv = static_cast<std::size_t>(members[v]);
                if (base + lengths[v] > best_end[hv]) {
                    best_end[hv] = base + lengths[v];
                    entry[hv] = members[u];
                }
            }
        }
    }

    Vertex end = static_cast<Vertex>(std::max_element(best_end.begin(), best_end.end()) - best_end.begin());
    std::vector<Vertex> reversed;
    Vertex cur = end;
    while (cur != -1) {
        const auto ci = static_cast<std::size_t>(comps.component_of[static_cast<std::size_t>(cur)]);
        const Vertex in = entry[static_cast<std::size_t>(cur)];
        if (in == cur) {
            reversed.push_back(cur);
        } else {
            const auto& members = comps.members[ci];
            const int length = best_end[static_cast<std::size_t>(cur)] - enter_val[static_cast<std::size_t>(in)];
            auto inner = extract_path(comp_out[ci], local[static_cast<std::size_t>(in)],
                                      local[static_cast<std::size_t>(cur)], length);
            for (auto it = inner.rbegin(); it != inner.rend(); ++it)
                reversed.push_back(members[static_cast<std::size_t>(*it)]);
        }
        cur = enter_pred[static_cast<std::size_t>(in)];
    }
    std::reverse(reversed.begin(), reversed.end());
    return DirectedPath{std::move(reversed)};
}

} // namespace dipath
