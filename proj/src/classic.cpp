#include "dipath/classic.hpp"
#include "dipath/paths.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace dipath {

OrientedGraph maximal_acyclic_subgraph(const OrientedGraph& g)
{
    const int n = g.vertex_count();
    const std::size_t words = g.words();
    // reach[x] = vertices reachable from x in H, x included.
    std::vector<std::uint64_t> reach(static_cast<std::size_t>(n) * words, 0);
    auto row = [&](Vertex x) { return reach.data() + static_cast<std::size_t>(x) * words; };
    auto test = [&](Vertex x, Vertex y) { return (row(x)[y >> 6] >> (y & 63)) & 1u; };
    for (Vertex v = 0; v < n; ++v)
        row(v)[v >> 6] |= std::uint64_t{1} << (v & 63);

    OrientedGraph h(n, g.allow_antiparallel());
    for (const auto& e : g.edges()) {
        if (test(e.to, e.from))
            continue;
        h.add_edge(e.from, e.to);
        const auto* add = row(e.to);
        for (Vertex x = 0; x < n; ++x) {
            if (!test(x, e.from))
                continue;
            auto* r = row(x);
            for (std::size_t w = 0; w < words; ++w)
                r[w] |= add[w];
        }
    }
    return h;
}

GallaiRoyResult gallai_roy(const OrientedGraph& g, int threshold)
{
    if (threshold < 1)
        throw std::invalid_argument("gallai_roy threshold must be positive");
    const auto h = maximal_acyclic_subgraph(g);
    const auto level = longest_path_ending_lengths(h);
    VertexColoring coloring;
    coloring.colors.reserve(level.size());
    for (auto l : level)
        coloring.colors.push_back(l + 1);
    if (coloring.num_colors() <= threshold)
        return coloring;
    return longest_path_dag(h);
}

namespace {

// Colors of the complete symmetric digraph as a dense matrix; true = blue.
class ColorMatrix {
public:
    ColorMatrix(const OrientedGraph& g, const EdgeColoring& coloring)
        : t_(g.vertex_count()), blue_(static_cast<std::size_t>(t_ * t_), 0)
    {
        for (int id = 0; id < g.edge_count(); ++id) {
            const auto& e = g.edge(id);
            blue_[static_cast<std::size_t>(e.from * t_ + e.to)] = coloring[id] == kBlue;
        }
    }
    bool blue(Vertex u, Vertex v) const { return blue_[static_cast<std::size_t>(u * t_ + v)]; }

private:
    int t_;
    std::vector<char> blue_;
};

// A Hamilton path of the inserted vertices whose edge colors read red*blue*.
// Closing it up gives a Hamilton cycle with at most two color runs whatever
// the colors of the junction and closing edges are.
using Order = std::vector<Vertex>;

std::optional<Order> insert_local(const ColorMatrix& cm, const Order& p, Vertex x)
{
    const std::size_t s = p.size();
    if (s == 0)
        return Order{x};
    std::vector<char> cyc(s);
    for (std::size_t j = 0; j < s; ++j)
        cyc[j] = cm.blue(p[j], p[(j + 1) % s]);

    Order q(s);
    std::vector<char> f(s > 0 ? s - 1 : 0);
    for (std::size_t r = 0; r < s; ++r) {
        // Opening the cycle before p[r] drops the edge p[r-1] -> p[r].
        std::size_t first_blue = s - 1;
        bool ok = true;
        for (std::size_t j = 0; j + 1 < s; ++j) {
            f[j] = cyc[(r + j) % s];
            if (f[j] && first_blue == s - 1)
                first_blue = j;
            else if (!f[j] && first_blue != s - 1)
                ok = false;
        }
        if (!ok)
            continue;
        for (std::size_t j = 0; j < s; ++j)
            q[j] = p[(r + j) % s];

        auto build = [&](std::size_t i) {
            Order out(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(i));
            out.push_back(x);
            out.insert(out.end(), q.begin() + static_cast<std::ptrdiff_t>(i), q.end());
            return out;
        };
        if (!cm.blue(x, q[0]) || first_blue == 0)
            return build(0);
        if (cm.blue(q[s - 1], x) || first_blue == s - 1)
            return build(s);
        for (std::size_t i = 1; i < s; ++i) {
            const bool a = cm.blue(q[i - 1], x);
            const bool b = cm.blue(x, q[i]);
            const bool prefix_red = first_blue >= i - 1;
            const bool suffix_blue = first_blue <= i;
            bool valid;
            if (!prefix_red)
                valid = a && b;
            else if (!b)
                valid = !a;
            else
                valid = suffix_blue;
            if (valid)
                return build(i);
        }
    }
    return std::nullopt;
}

std::optional<Order> insert_with_repair(const ColorMatrix& cm, const Order& p, Vertex x)
{
    for (std::size_t i = 0; i < p.size(); ++i) {
        Order without = p;
        const Vertex y = without[i];
        without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
        const auto first = insert_local(cm, without, x);
        if (!first)
            continue;
        if (auto second = insert_local(cm, *first, y))
            return second;
    }
    return std::nullopt;
}

// Exhaustive red*blue* Hamilton path over `vertices`.
Order exhaustive_order(const ColorMatrix& cm, const Order& vertices)
{
    const std::size_t s = vertices.size();
    if (static_cast<int>(s) > kRaynaudFallbackLimit)
        throw std::logic_error("raynaud: insertion failed beyond the exhaustive fallback limit");
    const std::size_t full = (std::size_t{1} << s) - 1;
    // red_end[mask]: ends of all-red paths covering mask; blue_end[mask]:
    // ends of red*blue+ paths covering mask.
    std::vector<std::uint32_t> red_end(full + 1, 0), blue_end(full + 1, 0);
    for (std::size_t v = 0; v < s; ++v)
        red_end[std::size_t{1} << v] = std::uint32_t{1} << v;
    auto local_blue = [&](std::size_t a, std::size_t b) { return cm.blue(vertices[a], vertices[b]); };

    for (std::size_t mask = 1; mask <= full; ++mask) {
        for (int phase = 0; phase < 2; ++phase) {
            std::uint32_t ends = phase == 0 ? red_end[mask] : blue_end[mask];
            while (ends) {
                const auto e = static_cast<std::size_t>(std::countr_zero(ends));
                ends &= ends - 1;
                for (std::size_t w = 0; w < s; ++w) {
                    if ((mask >> w) & 1u)
                        continue;
                    const bool b = local_blue(e, w);
                    const std::size_t next = mask | (std::size_t{1} << w);
                    if (phase == 0 && !b)
                        red_end[next] |= std::uint32_t{1} << w;
                    else if (b)
                        blue_end[next] |= std::uint32_t{1} << w;
                }
            }
        }
    }

    std::size_t mask = full;
    int phase;
    std::size_t cur;
    if (red_end[full]) {
        phase = 0;
        cur = static_cast<std::size_t>(std::countr_zero(red_end[full]));
    } else if (blue_end[full]) {
        phase = 1;
        cur = static_cast<std::size_t>(std::countr_zero(blue_end[full]));
    } else {
        throw std::logic_error("raynaud: no red*blue* Hamilton path exists");
    }
    Order reversed{vertices[cur]};
    while (mask != (std::size_t{1} << cur)) {
        const std::size_t rest = mask & ~(std::size_t{1} << cur);
        std::size_t prev = s;
        int prev_phase = 0;
        for (std::size_t p = 0; p < s && prev == s; ++p) {
            if (!((rest >> p) & 1u))
                continue;
            const bool b = local_blue(p, cur);
            if (phase == 0) {
                if (!b && ((red_end[rest] >> p) & 1u)) {
                    prev = p;
                    prev_phase = 0;
                }
            } else if (b) {
                if ((blue_end[rest] >> p) & 1u) {
                    prev = p;
                    prev_phase = 1;
                } else if ((red_end[rest] >> p) & 1u) {
                    prev = p;
                    prev_phase = 0;
                }
            }
        }
        mask = rest;
        cur = prev;
        phase = prev_phase;
        reversed.push_back(vertices[cur]);
    }
    std::reverse(reversed.begin(), reversed.end());
    return reversed;
}

} // namespace

HamiltonDecomposition raynaud(const OrientedGraph& g, const EdgeColoring& coloring)
{
    const int t = g.vertex_count();
    if (t < 1)
        throw std::invalid_argument("raynaud needs at least one vertex");
    if (!is_complete_symmetric(g))
        throw std::invalid_argument("raynaud needs a complete symmetric digraph");
    if (coloring.num_colors != 2 || coloring.size() != g.edge_count() || !coloring.is_total())
        throw std::invalid_argument("raynaud needs a total 2-coloring of the host edges");

    const ColorMatrix cm(g, coloring);
    Order order{0};
    for (Vertex x = 1; x < t; ++x) {
        auto next = insert_local(cm, order, x);
        if (!next)
            next = insert_with_repair(cm, order, x);
        if (next) {
            order = std::move(*next);
        } else {
            order.push_back(x);
            order = exhaustive_order(cm, order);
        }
    }

    HamiltonDecomposition d;
    std::vector<char> edge_blue(static_cast<std::size_t>(t));
    for (int j = 0; j < t; ++j)
        edge_blue[static_cast<std::size_t>(j)] = t > 1 && cm.blue(order[static_cast<std::size_t>(j)],
                                                                  order[static_cast<std::size_t>((j + 1) % t)]);
    const auto blue_count = std::count(edge_blue.begin(), edge_blue.end(), 1);
    if (t == 1 || blue_count == 0 || blue_count == t) {
        d.cycle = order;
        if (t > 1 && blue_count == t)
            d.blue_segment.vertices = order;
        else
            d.red_segment.vertices = order;
        return d;
    }

    int start = 0;
    for (int j = 0; j < t; ++j)
        if (!edge_blue[static_cast<std::size_t>(j)] && edge_blue[static_cast<std::size_t>((j + t - 1) % t)])
            start = j;
    d.cycle.resize(static_cast<std::size_t>(t));
    for (int j = 0; j < t; ++j)
        d.cycle[static_cast<std::size_t>(j)] = order[static_cast<std::size_t>((start + j) % t)];
    const auto red_count = static_cast<std::size_t>(t - blue_count);
    d.red_segment.vertices.assign(d.cycle.begin(), d.cycle.begin() + static_cast<std::ptrdiff_t>(red_count) + 1);
    d.blue_segment.vertices.assign(d.cycle.begin() + static_cast<std::ptrdiff_t>(red_count), d.cycle.end());
    d.blue_segment.vertices.push_back(d.cycle.front());
    return d;
}

bool is_valid_decomposition(const OrientedGraph& g, const EdgeColoring& coloring, const HamiltonDecomposition& d)
{
    const int t = g.vertex_count();
    if (static_cast<int>(d.cycle.size()) != t)
        return false;
    std::vector<char> seen(static_cast<std::size_t>(t), 0);
    for (auto v : d.cycle) {
        if (v < 0 || v >= t || seen[static_cast<std::size_t>(v)])
            return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    if (!is_monochromatic_path(g, coloring, d.red_segment, kRed) ||
        !is_monochromatic_path(g, coloring, d.blue_segment, kBlue))
        return false;

    if (d.red_segment.empty() || d.blue_segment.empty()) {
        const auto& only = d.red_segment.empty() ? d.blue_segment : d.red_segment;
        return only.vertices == d.cycle;
    }
    // Red run from cycle[0] to cycle[a], blue run from cycle[a] back to cycle[0].
    const auto a = static_cast<std::size_t>(d.red_segment.length());
    if (a < 1 || a >= d.cycle.size())
        return false;
    if (!std::equal(d.red_segment.vertices.begin(), d.red_segment.vertices.end(), d.cycle.begin()))
        return false;
    std::vector<Vertex> blue(d.cycle.begin() + static_cast<std::ptrdiff_t>(a), d.cycle.end());
    blue.push_back(d.cycle.front());
    if (blue != d.blue_segment.vertices)
        return false;
    return std::max(d.red_segment.length(), d.blue_segment.length()) >= t / 2;
}

ColoredPath longest_segment(const HamiltonDecomposition& d)
{
    if (d.blue_segment.length() > d.red_segment.length() ||
        (d.red_segment.empty() && !d.blue_segment.empty()))
        return {d.blue_segment, kBlue};
    return {d.red_segment, kRed};
}

} // namespace dipath
