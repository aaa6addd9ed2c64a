#include "dipath/adversary.hpp"
#include "dipath/paths.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace dipath {

namespace {

// s^q >= k without overflow.
bool power_reaches(long long s, int q, long long k)
{
    long long value = 1;
    for (int i = 0; i < q; ++i) {
        if (value >= (k + s - 1) / s)
            return true;
        value *= s;
    }
    return value >= k;
}

std::vector<Vertex> all_vertices(int n)
{
    std::vector<Vertex> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

// Edge u->v of the completion restricted to the candidates.
bool beats(const OrientedGraph& g, Vertex u, Vertex v)
{
    const bool forward = g.has_edge(u, v);
    const bool backward = g.has_edge(v, u);
    if (forward != backward)
        return forward;
    return !forward && u < v;
}

// Would adding w to the acyclic set close a cycle? Searches from w's
// out-neighbors inside the set for one of w's in-neighbors.
bool closes_cycle(const OrientedGraph& g, const std::vector<char>& in_set, Vertex w, std::vector<int>& mark,
                  int stamp)
{
    std::vector<Vertex> stack;
    for (auto x : g.out_neighbors(w)) {
        if (in_set[static_cast<std::size_t>(x)] && mark[static_cast<std::size_t>(x)] != stamp) {
            mark[static_cast<std::size_t>(x)] = stamp;
            stack.push_back(x);
        }
    }
    while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        if (g.has_edge(x, w))
            return true;
        for (auto y : g.out_neighbors(x)) {
            if (in_set[static_cast<std::size_t>(y)] && mark[static_cast<std::size_t>(y)] != stamp) {
                mark[static_cast<std::size_t>(y)] = stamp;
                stack.push_back(y);
            }
        }
    }
    return false;
}

long long induced_edge_count(const OrientedGraph& g, const std::vector<char>& in_set)
{
    long long count = 0;
    for (const auto& e : g.edges())
        if (in_set[static_cast<std::size_t>(e.from)] && in_set[static_cast<std::size_t>(e.to)])
            ++count;
    return count;
}

// Longest monochromatic path inside one small block.
int block_mono_path(const OrientedGraph& g, std::span<const Vertex> block, const EdgeColoring& coloring)
{
    const auto sub = induced_subgraph(g, block);
    const auto local = restrict_coloring(coloring, sub);
    int best = 0;
    for (int color = 1; color <= coloring.num_colors; ++color) {
        const auto cls = color_class_subgraph(sub.graph, local, color);
        best = std::max(best, longest_path_exact(cls.graph, 16).length());
    }
    return best;
}

void copy_into_host(EdgeColoring& host, const Subgraph& sub, const EdgeColoring& local)
{
    for (int id = 0; id < local.size(); ++id)
        host[sub.to_host_edge[static_cast<std::size_t>(id)]] = local[id];
}

} // namespace

DigitEncoding encode_digits(long long index, int base, int q)
{
    if (base < 1 || q < 1)
        throw std::invalid_argument("digit encoding needs base >= 1 and q >= 1");
    if (index < 0 || power_reaches(base, q, index + 1) == false)
        throw std::invalid_argument("index " + std::to_string(index) + " does not fit in " + std::to_string(q) +
                                    " base-" + std::to_string(base) + " digits");
    DigitEncoding enc;
    enc.base = base;
    enc.digits.assign(static_cast<std::size_t>(q), 0);
    for (int y = q - 1; y >= 0 && base > 1; --y) {
        enc.digits[static_cast<std::size_t>(y)] = static_cast<int>(index % base);
        index /= base;
    }
    return enc;
}

int minimal_base(long long k, int q)
{
    if (q < 1)
        throw std::invalid_argument("q must be positive");
    if (k <= 1)
        return 1;
    auto s = static_cast<long long>(std::pow(static_cast<double>(k), 1.0 / q));
    s = std::max(1LL, s - 1);
    while (!power_reaches(s, q, k))
        ++s;
    return static_cast<int>(s);
}

int minimal_base_real(double x, int q)
{
    if (x <= 1.0)
        return 1;
    auto s = static_cast<long long>(std::pow(x, 1.0 / q));
    s = std::max(1LL, s - 1);
    while (std::pow(static_cast<long double>(s), q) < static_cast<long double>(x))
        ++s;
    return static_cast<int>(s);
}

std::vector<Vertex> completion_acyclic_set(const OrientedGraph& g, std::span<const Vertex> vertices)
{
    std::vector<Vertex> cur(vertices.begin(), vertices.end());
    std::sort(cur.begin(), cur.end());
    std::vector<Vertex> chain;
    while (!cur.empty()) {
        Vertex best = cur.front();
        int best_degree = -1;
        for (auto u : cur) {
            int degree = 0;
            for (auto w : cur)
                if (w != u && beats(g, u, w))
                    ++degree;
            if (degree > best_degree) {
                best_degree = degree;
                best = u;
            }
        }
        chain.push_back(best);
        std::vector<Vertex> next;
        for (auto w : cur)
            if (w != best && beats(g, best, w))
                next.push_back(w);
        cur = std::move(next);
    }
    return chain;
}

std::vector<Vertex> tournament_acyclic_set(const Tournament& t)
{
    const auto all = all_vertices(t.vertex_count());
    return completion_acyclic_set(t.graph(), all);
}

void extend_acyclic_set(const OrientedGraph& g, std::vector<Vertex>& set, std::span<const Vertex> candidates)
{
    std::vector<char> in_set(static_cast<std::size_t>(g.vertex_count()), 0);
    for (auto v : set)
        in_set[static_cast<std::size_t>(v)] = 1;
    std::vector<int> mark(static_cast<std::size_t>(g.vertex_count()), 0);
    int stamp = 0;
    for (auto w : candidates) {
        if (in_set[static_cast<std::size_t>(w)])
            continue;
        if (closes_cycle(g, in_set, w, mark, ++stamp))
            continue;
        in_set[static_cast<std::size_t>(w)] = 1;
        set.push_back(w);
    }
}

SparseAcyclicResult sparse_acyclic_set(const OrientedGraph& g, const ConstantsConfig& cfg, double target)
{
    const int n = g.vertex_count();
    SparseAcyclicResult result;
    if (n == 0) {
        result.reached_target = true;
        return result;
    }
    const double nd = n;
    const double eps = g.edge_count() / (nd * nd);
    result.epsilon = eps;
    const double log_floor = std::floor(std::log2(nd)) + 1.0;
    if (target < 0.0) {
        if (eps == 0.0)
            target = nd;
        else if (eps < 0.25)
            target = cfg.c * std::log2(nd) / (eps * std::log2(1.0 / eps));
        else
            target = log_floor;
    }
    result.target = target;
    const auto everything = all_vertices(n);

    std::vector<Vertex> u;
    if (eps >= 0.25) {
        result.delegated = true;
        u = completion_acyclic_set(g, everything);
        extend_acyclic_set(g, u, everything);
    } else {
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < n; ++v)
            if (g.in_degree(v) <= 2.0 * eps * nd)
                keep.push_back(v);
        std::vector<Vertex> by_degree = keep;
        std::stable_sort(by_degree.begin(), by_degree.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
        extend_acyclic_set(g, u, by_degree);

        std::vector<char> in_u(static_cast<std::size_t>(n), 0);
        while (static_cast<double>(u.size()) < target) {
            std::fill(in_u.begin(), in_u.end(), 0);
            for (auto v : u)
                in_u[static_cast<std::size_t>(v)] = 1;
            const double cover = 5.0 * eps * static_cast<double>(u.size());
            const auto cover_size = static_cast<std::size_t>(std::ceil(cover));
            std::vector<Vertex> sorted_u = u;
            std::sort(sorted_u.begin(), sorted_u.end());

            // Group the vertices outside U and R* by a cover S_v of N+(v) in U
            // of size ceil(5 eps |U|), padded with the smallest free ids.
            std::map<std::vector<Vertex>, std::vector<Vertex>> groups;
            for (auto v : keep) {
                if (in_u[static_cast<std::size_t>(v)])
                    continue;
                std::vector<Vertex> hit;
                for (auto w : g.out_neighbors(v))
                    if (in_u[static_cast<std::size_t>(w)])
                        hit.push_back(w);
                if (static_cast<double>(hit.size()) >= cover && !hit.empty())
                    continue;
                for (auto w : sorted_u) {
                    if (hit.size() >= cover_size)
                        break;
                    if (!std::binary_search(hit.begin(), hit.end(), w))
                        hit.insert(std::lower_bound(hit.begin(), hit.end(), w), w);
                }
                groups[hit].push_back(v);
            }

            std::vector<Vertex> best;
            for (const auto& [signature, members] : groups) {
                auto chosen = completion_acyclic_set(g, members);
                extend_acyclic_set(g, chosen, members);
                std::vector<char> hit(static_cast<std::size_t>(n), 0);
                for (auto v : chosen)
                    for (auto w : g.out_neighbors(v))
                        hit[static_cast<std::size_t>(w)] = 1;
                std::vector<Vertex> candidate = chosen;
                for (auto w : u)
                    if (!hit[static_cast<std::size_t>(w)])
                        candidate.push_back(w);
                if (candidate.size() > best.size())
                    best = std::move(candidate);
            }
            if (best.size() <= u.size())
                break;
            u = std::move(best);
            extend_acyclic_set(g, u, by_degree);
            ++result.improvements;
        }
        extend_acyclic_set(g, u, everything);

        auto chain = completion_acyclic_set(g, everything);
        if (chain.size() > u.size()) {
            extend_acyclic_set(g, chain, everything);
            u = std::move(chain);
        }
    }
    std::sort(u.begin(), u.end());
    result.vertices = std::move(u);
    result.reached_target = static_cast<double>(result.vertices.size()) >= target;
    return result;
}

VertexColoring constructive_chromatic(const OrientedGraph& g)
{
    const int n = g.vertex_count();
    VertexColoring vc;
    vc.colors.assign(static_cast<std::size_t>(n), 0);
    std::vector<int> used;
    for (Vertex v = 0; v < n; ++v) {
        used.assign(static_cast<std::size_t>(n) + 2, 0);
        for (auto w : g.out_neighbors(v))
            used[static_cast<std::size_t>(vc.colors[static_cast<std::size_t>(w)])] = 1;
        for (auto w : g.in_neighbors(v))
            used[static_cast<std::size_t>(vc.colors[static_cast<std::size_t>(w)])] = 1;
        int c = 1;
        while (used[static_cast<std::size_t>(c)])
            ++c;
        vc.colors[static_cast<std::size_t>(v)] = c;
    }

    // Merge any two classes with no edge between them until none remain.
    const int k = vc.num_colors();
    std::vector<std::vector<char>> joined(static_cast<std::size_t>(k + 1), std::vector<char>(k + 1, 0));
    for (const auto& e : g.edges()) {
        const auto a = static_cast<std::size_t>(vc.colors[static_cast<std::size_t>(e.from)]);
        const auto b = static_cast<std::size_t>(vc.colors[static_cast<std::size_t>(e.to)]);
        joined[a][b] = joined[b][a] = 1;
    }
    std::vector<int> alias(static_cast<std::size_t>(k + 1));
    std::iota(alias.begin(), alias.end(), 0);
    std::vector<char> alive(static_cast<std::size_t>(k + 1), 1);
    bool merged = true;
    while (merged) {
        merged = false;
        for (int a = 1; a <= k && !merged; ++a) {
            if (!alive[static_cast<std::size_t>(a)])
                continue;
            for (int b = a + 1; b <= k; ++b) {
                if (!alive[static_cast<std::size_t>(b)] || joined[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
                    continue;
                alive[static_cast<std::size_t>(b)] = 0;
                alias[static_cast<std::size_t>(b)] = a;
                for (int c = 1; c <= k; ++c) {
                    const auto ac = static_cast<std::size_t>(c);
                    if (joined[static_cast<std::size_t>(b)][ac]) {
                        joined[static_cast<std::size_t>(a)][ac] = joined[ac][static_cast<std::size_t>(a)] = 1;
                    }
                }
                merged = true;
                break;
            }
        }
    }
    std::vector<int> renumber(static_cast<std::size_t>(k + 1), 0);
    int next = 0;
    for (auto& c : vc.colors) {
        int root = c;
        while (alias[static_cast<std::size_t>(root)] != root)
            root = alias[static_cast<std::size_t>(root)];
        if (renumber[static_cast<std::size_t>(root)] == 0)
            renumber[static_cast<std::size_t>(root)] = ++next;
        c = renumber[static_cast<std::size_t>(root)];
    }
    return vc;
}

DigitColoring block_product_coloring(const OrientedGraph& g, const std::vector<std::vector<Vertex>>& blocks,
                                     const EdgeColoring& inner, int r, int q)
{
    if (q < 1)
        throw std::invalid_argument("q must be positive");
    if (r < 0)
        throw std::invalid_argument("r must be nonnegative");
    if (inner.size() != g.edge_count())
        throw std::invalid_argument("inner coloring does not match the graph's edges");
    const int n = g.vertex_count();
    std::vector<int> block_of(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (auto v : blocks[i]) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("block vertex out of range");
            if (block_of[static_cast<std::size_t>(v)] != -1)
                throw std::invalid_argument("blocks are not disjoint");
            block_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    }

    const auto k = static_cast<long long>(blocks.size());
    DigitColoring out;
    out.base = minimal_base(k, q);
    out.coloring = inner;
    out.coloring.num_colors = q + 1;
    out.bound = k == 0 ? 0 : static_cast<long long>(q) * (r + 1) * out.base;

    std::vector<std::vector<int>> digits;
    digits.reserve(blocks.size());
    for (long long i = 0; i < k; ++i)
        digits.push_back(encode_digits(i, out.base, q).digits);

    for (int id = 0; id < g.edge_count(); ++id) {
        const auto& e = g.edge(id);
        const int a = block_of[static_cast<std::size_t>(e.from)];
        const int b = block_of[static_cast<std::size_t>(e.to)];
        if (a < 0 || b < 0)
            continue;
        if (a == b) {
            if (inner[id] < 1 || inner[id] > q + 1)
                throw std::invalid_argument("inner coloring leaves a block edge without a color in 1..q+1");
            continue;
        }
        int color = q + 1;
        for (int y = 0; y < q; ++y) {
            if (digits[static_cast<std::size_t>(a)][static_cast<std::size_t>(y)] <
                digits[static_cast<std::size_t>(b)][static_cast<std::size_t>(y)]) {
                color = y + 1;
                break;
            }
        }
        out.coloring[id] = color;
    }

    for (const auto& block : blocks)
        if (block.size() >= 2 && block.size() <= 12 && block_mono_path(g, block, out.coloring) > r)
            throw std::invalid_argument("inner coloring has a monochromatic path longer than r inside a block");
    return out;
}

DigitColoring color_classes_coloring(const OrientedGraph& g, const VertexColoring& vc, int q)
{
    if (!is_proper_coloring(g, vc))
        throw std::invalid_argument("vertex coloring is not proper");
    EdgeColoring empty(q + 1, g.edge_count());
    return block_product_coloring(g, vc.classes(), empty, 0, q);
}

DigitColoring acyclic_edge_coloring(const OrientedGraph& z, int q)
{
    if (q < 1)
        throw std::invalid_argument("q must be positive");
    const auto level = longest_path_ending_lengths(z);
    const int t = level.empty() ? 0 : *std::max_element(level.begin(), level.end());
    DigitColoring out;
    out.base = minimal_base(t + 1, q);
    out.bound = out.base - 1;
    out.coloring = EdgeColoring(q, z.edge_count());
    std::vector<std::vector<int>> digits;
    for (int i = 0; i <= t; ++i)
        digits.push_back(encode_digits(i, out.base, q).digits);
    for (int id = 0; id < z.edge_count(); ++id) {
        const auto& e = z.edge(id);
        const auto& from = digits[static_cast<std::size_t>(level[static_cast<std::size_t>(e.from)])];
        const auto& to = digits[static_cast<std::size_t>(level[static_cast<std::size_t>(e.to)])];
        int color = 0;
        for (int y = 0; y < q && color == 0; ++y)
            if (to[static_cast<std::size_t>(y)] > from[static_cast<std::size_t>(y)])
                color = y + 1;
        out.coloring[id] = color;
    }
    return out;
}

namespace {

struct PartColoring {
    int classes = 0;
    long long bound = 0;
};

// Claim-style chromatic coloring of g[part] written into the host coloring.
PartColoring color_part(const OrientedGraph& g, const std::vector<Vertex>& part, int q, EdgeColoring& host)
{
    PartColoring pc;
    if (part.empty())
        return pc;
    const auto sub = induced_subgraph(g, part);
    const auto vc = constructive_chromatic(sub.graph);
    const auto dc = color_classes_coloring(sub.graph, vc, q);
    copy_into_host(host, sub, dc.coloring);
    pc.classes = vc.num_colors();
    pc.bound = dc.bound;
    return pc;
}

double family_block_size(double eps, double size, const ConstantsConfig& cfg)
{
    if (eps > 0.0 && eps < 0.25 && size > 1.0)
        return cfg.c * std::log2(size) / (eps * std::log2(1.0 / eps));
    return std::floor(std::log2(std::max(size, 1.0))) + 1.0;
}

constexpr int kMaxSteps = 256;

} // namespace

std::vector<int> part_of_vertices(const FamilyPartition& trace, int vertex_count)
{
    std::vector<int> part(static_cast<std::size_t>(vertex_count), -1);
    for (auto v : trace.low_degree)
        part[static_cast<std::size_t>(v)] = 0;
    for (auto v : trace.residue)
        part[static_cast<std::size_t>(v)] = 1;
    for (auto v : trace.covered)
        part[static_cast<std::size_t>(v)] = 2;
    return part;
}

AdversaryResult theorem1_adversary(const OrientedGraph& g, int q, const ConstantsConfig& cfg)
{
    if (q < 1)
        throw std::invalid_argument("q must be positive");
    cfg.validate();
    const int n_vertices = g.vertex_count();
    AdversaryResult result;
    auto& trace = result.trace;
    result.coloring = EdgeColoring(q + 1, g.edge_count());

    const int n = cfg.target_path_length > 0 ? cfg.target_path_length : n_vertices;
    trace.target_path_length = n;
    trace.degree_threshold = cfg.effective_degree_threshold(n, q);
    trace.termination_threshold = cfg.effective_termination_threshold(n, q);
    trace.c1 = cfg.effective_c1(q);
    if (n > 2) {
        const double ln = std::log2(static_cast<double>(n));
        const double lln = std::log2(ln);
        if (lln > 0.0) {
            const double budget = trace.c1 * std::pow(static_cast<double>(n), 2.0 * q) * std::pow(ln, 1.0 / q) /
                                  std::pow(lln, (q + 2.0) / q);
            trace.hypothesis_holds = g.edge_count() <= budget;
        }
    }

    std::vector<char> in_residue(static_cast<std::size_t>(n_vertices), 0);
    for (Vertex v = 0; v < n_vertices; ++v) {
        if (g.degree(v) <= trace.degree_threshold)
            trace.low_degree.push_back(v);
        else
            in_residue[static_cast<std::size_t>(v)] = 1;
    }
    trace.m = n_vertices - static_cast<int>(trace.low_degree.size());

    // Families of equal-size acyclic blocks.
    long long residue_edges = induced_edge_count(g, in_residue);
    int residue_size = trace.m;
    for (int i = 1; residue_size > 0 && residue_edges > trace.termination_threshold; ++i) {
        if (i > kMaxSteps) {
            trace.terminated_early = true;
            break;
        }
        ++trace.steps;
        FamilyRecord family;
        family.step_size = trace.m / std::pow(2.0, i);
        family.epsilon = residue_edges / (family.step_size * family.step_size);
        double a = family_block_size(family.epsilon, family.step_size, cfg);
        if (cfg.relax)
            a = std::max(a * cfg.block_size_factor, static_cast<double>(cfg.min_block_size));
        family.block_size = std::max(1, static_cast<int>(std::floor(a)));

        while (residue_size > family.step_size && residue_edges > trace.termination_threshold) {
            std::vector<Vertex> residue;
            for (Vertex v = 0; v < n_vertices; ++v)
                if (in_residue[static_cast<std::size_t>(v)])
                    residue.push_back(v);
            const auto sub = induced_subgraph(g, residue);
            const auto found = sparse_acyclic_set(sub.graph, cfg, family.block_size);
            if (static_cast<int>(found.vertices.size()) < family.block_size) {
                ++trace.shortfalls;
                break;
            }
            std::vector<Vertex> block;
            for (int j = 0; j < family.block_size; ++j)
                block.push_back(sub.to_host_vertex[static_cast<std::size_t>(found.vertices[static_cast<std::size_t>(j)])]);
            for (auto v : block)
                in_residue[static_cast<std::size_t>(v)] = 0;
            residue_size -= family.block_size;
            residue_edges = induced_edge_count(g, in_residue);
            family.blocks.push_back(std::move(block));
        }
        if (!family.blocks.empty())
            trace.families.push_back(std::move(family));
    }
    for (Vertex v = 0; v < n_vertices; ++v)
        if (in_residue[static_cast<std::size_t>(v)])
            trace.residue.push_back(v);
    trace.residue_edges = residue_edges;

    auto& coloring = result.coloring;
    const auto low = color_part(g, trace.low_degree, q, coloring);
    trace.low_degree_classes = low.classes;
    trace.low_degree_bound = low.bound;
    const auto res = color_part(g, trace.residue, q, coloring);
    trace.residue_classes = res.classes;
    trace.residue_bound = res.bound;

    std::vector<std::vector<Vertex>> family_sets;
    long long worst_family = 0;
    for (auto& family : trace.families) {
        long long worst_block = 0;
        std::vector<Vertex> members;
        for (const auto& block : family.blocks) {
            const auto sub = induced_subgraph(g, block);
            const auto ac = acyclic_edge_coloring(sub.graph, q + 1);
            copy_into_host(coloring, sub, ac.coloring);
            family.block_bounds.push_back(ac.bound);
            worst_block = std::max(worst_block, ac.bound);
            members.insert(members.end(), block.begin(), block.end());
        }
        const auto dc = block_product_coloring(g, family.blocks, coloring, static_cast<int>(worst_block), q);
        coloring = dc.coloring;
        family.bound = dc.bound;
        worst_family = std::max(worst_family, dc.bound);
        std::sort(members.begin(), members.end());
        trace.covered.insert(trace.covered.end(), members.begin(), members.end());
        family_sets.push_back(std::move(members));
    }
    std::sort(trace.covered.begin(), trace.covered.end());
    if (!family_sets.empty()) {
        const auto dc = block_product_coloring(g, family_sets, coloring, static_cast<int>(worst_family), q);
        coloring = dc.coloring;
        trace.covered_bound = dc.bound;
    }

    const auto part = part_of_vertices(trace, n_vertices);
    for (int id = 0; id < g.edge_count(); ++id) {
        const auto& e = g.edge(id);
        const int a = part[static_cast<std::size_t>(e.from)];
        const int b = part[static_cast<std::size_t>(e.to)];
        if (a < b)
            coloring[id] = 1;
        else if (a > b)
            coloring[id] = 2;
    }
    trace.total_bound = trace.low_degree_bound + trace.residue_bound + trace.covered_bound + 2;
    return result;
}

SymmetricAdversaryResult symmetric_adversary(const OrientedGraph& g, int q)
{
    if (q < 1)
        throw std::invalid_argument("q must be positive");
    SymmetricAdversaryResult result;
    const auto vc = constructive_chromatic(g);
    const auto dc = color_classes_coloring(g, vc, q);
    result.coloring = dc.coloring;
    result.classes = vc.num_colors();
    result.bound = dc.bound;
    const double x = 2.0 * std::sqrt(static_cast<double>(g.edge_count())) + 1.0;
    result.edge_bound = static_cast<long long>(q) * minimal_base_real(x, q);
    return result;
}

nlohmann::json to_json(const FamilyPartition& trace)
{
    nlohmann::json families = nlohmann::json::array();
    for (const auto& f : trace.families) {
        families.push_back({
            {"epsilon", f.epsilon},
            {"step_size", f.step_size},
            {"block_size", f.block_size},
            {"block_count", f.blocks.size()},
            {"blocks", f.blocks},
            {"block_bounds", f.block_bounds},
            {"bound", f.bound},
        });
    }
    return {
        {"target_path_length", trace.target_path_length},
        {"degree_threshold", trace.degree_threshold},
        {"termination_threshold", trace.termination_threshold},
        {"c1", trace.c1},
        {"hypothesis_holds", trace.hypothesis_holds},
        {"X", trace.low_degree},
        {"m", trace.m},
        {"families", families},
        {"steps", trace.steps},
        {"shortfalls", trace.shortfalls},
        {"terminated_early", trace.terminated_early},
        {"residue", trace.residue},
        {"residue_edges", trace.residue_edges},
        {"covered", trace.covered},
        {"bounds",
         {{"X", trace.low_degree_bound},
          {"X_classes", trace.low_degree_classes},
          {"residue", trace.residue_bound},
          {"residue_classes", trace.residue_classes},
          {"covered", trace.covered_bound},
          {"total", trace.total_bound}}},
    };
}

} // namespace dipath
