#include "dipath/builder.hpp"
#include "dipath/paths.hpp"
#include "dipath/pseudorandom.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dipath {

namespace {

int ceil_positive(double x)
{
    return std::max(1, static_cast<int>(std::ceil(x - 1e-9)));
}

struct Candidate {
    DirectedPath path;
    int color = kRed;
    Branch branch = Branch::small_n_fallback;
    int aux_rank = 0;
    std::vector<int> aux_path;
    std::vector<std::vector<Vertex>> threaded;
};

// Longest path of a maximal acyclic spanning subgraph: a Hamilton path in a
// tournament, a genuine path of g in general.
DirectedPath greedy_long_path(const OrientedGraph& g)
{
    if (g.vertex_count() == 0)
        return {};
    return longest_path_dag(maximal_acyclic_subgraph(g));
}

std::vector<Vertex> all_vertices(int n)
{
    std::vector<Vertex> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

// Single color used by every edge, 0 if mixed, kRed if there are no edges.
int sole_color(const EdgeColoring& coloring)
{
    if (coloring.colors.empty())
        return kRed;
    const int c = coloring.colors.front();
    for (auto x : coloring.colors)
        if (x != c)
            return 0;
    return c;
}

bool blue_edge(const OrientedGraph& g, const EdgeColoring& coloring, Vertex u, Vertex v)
{
    const int id = g.edge_id(u, v);
    return id >= 0 && coloring[id] == kBlue;
}

// Blue walk through the cycles named by `aux`: from the entry vertex walk
// forward to the nearest endpoint at distance >= k-1, hop, repeat; lap the
// last cycle.
DirectedPath blue_walk(const OrientedGraph& g, const EdgeColoring& coloring, const std::vector<std::vector<Vertex>>& cycles,
                       const std::vector<int>& aux, int k)
{
    DirectedPath path;
    std::size_t entry = 0;
    for (std::size_t j = 0; j < aux.size(); ++j) {
        const auto& cyc = cycles[static_cast<std::size_t>(aux[j])];
        const std::size_t len = cyc.size();
        if (j + 1 == aux.size()) {
            for (std::size_t s = 0; s < len; ++s)
                path.vertices.push_back(cyc[(entry + s) % len]);
            break;
        }
        const auto& next = cycles[static_cast<std::size_t>(aux[j + 1])];
        std::size_t chosen = len;
        std::size_t farthest = len;
        for (std::size_t d = 0; d < len; ++d) {
            const Vertex v = cyc[(entry + d) % len];
            const bool endpoint = std::any_of(next.begin(), next.end(), [&](Vertex w) { return blue_edge(g, coloring, v, w); });
            if (!endpoint)
                continue;
            farthest = d;
            if (chosen == len && static_cast<int>(d) >= k - 1)
                chosen = d;
        }
        if (chosen == len)
            chosen = farthest;
        if (chosen == len)
            return path; // no endpoint: the auxiliary edge was not blue
        for (std::size_t s = 0; s <= chosen; ++s)
            path.vertices.push_back(cyc[(entry + s) % len]);
        const Vertex end = path.vertices.back();
        for (std::size_t p = 0; p < next.size(); ++p) {
            if (blue_edge(g, coloring, end, next[p])) {
                entry = p;
                break;
            }
        }
    }
    return path;
}

BuilderCertificate finish(const BuilderTrace& trace, const Candidate& c, bool floors_ok)
{
    BuilderCertificate cert;
    cert.trace = trace;
    cert.path = c.path;
    cert.color = c.color;
    cert.branch = c.branch;
    cert.trace.aux_path = c.aux_path;
    cert.trace.aux_color = c.aux_path.empty() ? 0 : c.color;
    cert.trace.threaded_sets = c.threaded;
    cert.bound = c.color == kRed ? trace.chain.red_target : trace.chain.blue_target;
    cert.guarantee_active = floors_ok && trace.chain.closes && c.path.length() >= cert.bound;
    return cert;
}

EdgeColoring two_colors_of(const EdgeColoring& local)
{
    EdgeColoring out = local;
    out.num_colors = 2;
    return out;
}

} // namespace

std::string branch_name(Branch b)
{
    switch (b) {
    case Branch::red_case:
        return "red-case";
    case Branch::blue_case:
        return "blue-case";
    case Branch::monochromatic_shortcut:
        return "monochromatic-shortcut";
    case Branch::small_n_fallback:
        return "small-n-fallback";
    }
    return "unknown";
}

BuilderChain builder_chain(int n, int k, const ConstantsConfig& cfg)
{
    BuilderChain chain;
    if (k < 1)
        throw std::invalid_argument("k must be positive");
    chain.red_threshold = ceil_positive(n / (cfg.red_threshold_divisor * k));
    chain.block_size = ceil_positive(cfg.block_factor * k);
    const long long spare = static_cast<long long>(n) - static_cast<long long>(chain.red_threshold) * (chain.block_size - 1);
    chain.min_blocks = spare <= 0 ? 0 : static_cast<int>((spare + chain.block_size - 1) / chain.block_size);
    const int half = chain.min_blocks / 2;
    chain.red_promise = std::min(chain.red_threshold, half);
    chain.blue_promise = chain.min_blocks == 0 ? 0 : k * half + ceil_positive(cfg.cycle_factor * k) - 1;
    chain.red_target = n / (cfg.red_guarantee_divisor * k);
    chain.blue_target = n / cfg.blue_guarantee_divisor;
    chain.closes = chain.min_blocks >= 1 && chain.red_promise >= chain.red_target &&
                   chain.blue_promise >= chain.blue_target;
    return chain;
}

BuilderCertificate two_color_path_finder(const OrientedGraph& g, const EdgeColoring& coloring, int k,
                                         const ConstantsConfig& cfg)
{
    if (k < 1)
        throw std::invalid_argument("k must be positive");
    if (coloring.num_colors != 2 || coloring.size() != g.edge_count() || !coloring.is_total())
        throw std::invalid_argument("two_color_path_finder needs a total 2-coloring");
    const int n = g.vertex_count();
    BuilderTrace trace;
    trace.n = n;
    trace.k = k;
    trace.chain = builder_chain(n, k, cfg);

    if (n == 0)
        return finish(trace, Candidate{}, false);

    if (const int only = sole_color(coloring); only != 0) {
        Candidate c;
        c.path = greedy_long_path(g);
        c.color = only;
        c.branch = Branch::monochromatic_shortcut;
        return finish(trace, c, true);
    }

    const auto red = color_class_subgraph(g, coloring, kRed);
    auto split = gallai_roy(red.graph, trace.chain.red_threshold);
    if (auto* path = std::get_if<DirectedPath>(&split)) {
        Candidate c;
        c.path = *path;
        c.color = kRed;
        c.branch = Branch::monochromatic_shortcut;
        return finish(trace, c, true);
    }
    const auto& classes_coloring = std::get<VertexColoring>(split);
    auto classes = classes_coloring.classes();
    trace.red_classes = static_cast<int>(classes.size());

    std::vector<Candidate> fallback;
    {
        Candidate c;
        c.path = greedy_long_path(red.graph);
        c.color = kRed;
        fallback.push_back(std::move(c));
    }

    // Blocks of exactly block_size vertices, smallest classes first.
    const auto b = static_cast<std::size_t>(trace.chain.block_size);
    std::stable_sort(classes.begin(), classes.end(),
                     [](const auto& x, const auto& y) { return x.size() < y.size(); });
    for (const auto& cls : classes)
        for (std::size_t start = 0; start + b <= cls.size(); start += b)
            trace.blocks.emplace_back(cls.begin() + static_cast<std::ptrdiff_t>(start),
                                      cls.begin() + static_cast<std::ptrdiff_t>(start + b));
    if (static_cast<int>(trace.blocks.size()) < std::max(1, trace.chain.min_blocks))
        trace.failed_floors.push_back("blocks: " + std::to_string(trace.blocks.size()) + " < " +
                                      std::to_string(trace.chain.min_blocks));

    // A blue cycle inside every block.
    const int path_floor = ceil_positive(cfg.path_factor * k);
    const int cycle_floor = ceil_positive(cfg.cycle_factor * k);
    for (std::size_t i = 0; i < trace.blocks.size(); ++i) {
        const auto sub = induced_subgraph(g, trace.blocks[i]);
        const auto dfs = dfs_long_path(sub.graph);
        const auto p = sub.lift(dfs.path);
        trace.block_path_lengths.push_back(p.length());
        Candidate block_path;
        block_path.path = p;
        block_path.color = kBlue;
        fallback.push_back(std::move(block_path));
        if (p.length() < path_floor)
            trace.failed_floors.push_back("block " + std::to_string(i) + " path " + std::to_string(p.length()) +
                                          " < " + std::to_string(path_floor));

        const int last = p.length();
        int best_a = -1, best_b = -1;
        auto consider = [&](int lo_a, int hi_b) {
            for (int a = last; a >= lo_a; --a)
                for (int bb = 0; bb <= hi_b && bb < a; ++bb)
                    if (g.has_edge(p.vertices[static_cast<std::size_t>(a)], p.vertices[static_cast<std::size_t>(bb)]) &&
                        (best_a < 0 || a - bb > best_a - best_b)) {
                        best_a = a;
                        best_b = bb;
                    }
        };
        consider(std::max(0, last - k + 1), k - 1);
        if (best_a < 0) {
            trace.failed_floors.push_back("block " + std::to_string(i) + " has no back edge into its first k vertices");
            consider(0, last);
        }
        if (best_a < 0)
            continue;
        std::vector<Vertex> cycle(p.vertices.begin() + best_b, p.vertices.begin() + best_a + 1);
        if (static_cast<int>(cycle.size()) < cycle_floor)
            trace.failed_floors.push_back("block " + std::to_string(i) + " cycle " + std::to_string(cycle.size()) +
                                          " < " + std::to_string(cycle_floor));
        trace.cycles.push_back(std::move(cycle));
    }

    const int t = static_cast<int>(trace.cycles.size());
    if (t == 0) {
        auto best = *std::max_element(fallback.begin(), fallback.end(), [](const auto& x, const auto& y) {
            return x.path.length() < y.path.length();
        });
        best.branch = Branch::small_n_fallback;
        return finish(trace, best, false);
    }

    // Auxiliary complete symmetric digraph on the cycles.
    trace.aux_colors.assign(static_cast<std::size_t>(t * t), 0);
    auto aux = complete_symmetric_digraph(t);
    EdgeColoring aux_coloring(2, aux.edge_count());
    for (int i = 0; i < t; ++i) {
        for (int j = 0; j < t; ++j) {
            if (i == j)
                continue;
            int endpoints = 0;
            for (auto v : trace.cycles[static_cast<std::size_t>(i)]) {
                const auto& target = trace.cycles[static_cast<std::size_t>(j)];
                if (std::any_of(target.begin(), target.end(), [&](Vertex w) { return blue_edge(g, coloring, v, w); }))
                    ++endpoints;
            }
            const int color = endpoints >= k ? kBlue : kRed;
            trace.aux_colors[static_cast<std::size_t>(i * t + j)] = color;
            aux_coloring[aux.edge_id(i, j)] = color;
        }
    }
    const auto decomposition = raynaud(aux, aux_coloring);

    auto segment_or_single = [&](const DirectedPath& seg) {
        std::vector<int> out(seg.vertices.begin(), seg.vertices.end());
        if (out.empty())
            out.push_back(decomposition.cycle.front());
        return out;
    };
    const auto red_aux = segment_or_single(decomposition.red_segment);
    const auto blue_aux = segment_or_single(decomposition.blue_segment);

    std::vector<Candidate> realized;
    {
        Candidate c;
        c.color = kRed;
        c.branch = Branch::red_case;
        c.aux_path = red_aux;
        c.aux_rank = static_cast<int>(red_aux.size());
        for (std::size_t j = 0; j < red_aux.size(); ++j) {
            const auto& cyc = trace.cycles[static_cast<std::size_t>(red_aux[j])];
            std::vector<Vertex> set;
            for (auto v : cyc) {
                bool keep = true;
                if (j + 1 < red_aux.size()) {
                    const auto& next = trace.cycles[static_cast<std::size_t>(red_aux[j + 1])];
                    keep = std::none_of(next.begin(), next.end(), [&](Vertex w) { return blue_edge(g, coloring, v, w); });
                }
                if (keep)
                    set.push_back(v);
            }
            c.threaded.push_back(std::move(set));
        }
        bool sets_ok = true;
        for (const auto& s : c.threaded)
            sets_ok = sets_ok && static_cast<int>(s.size()) >= 2 * k;
        int failed = 0;
        auto threaded = thread_good_sets(red.graph, c.threaded, &failed);
        if (threaded) {
            c.path = *threaded;
            realized.push_back(std::move(c));
        }
        if (!sets_ok || !threaded) {
            // Only a floor failure when this is the segment Raynaud promises.
            if (decomposition.red_segment.length() >= decomposition.blue_segment.length())
                trace.failed_floors.push_back(threaded ? "red sets smaller than 2k"
                                                       : "threading failed at set " + std::to_string(failed));
        }
    }
    {
        Candidate c;
        c.color = kBlue;
        c.branch = Branch::blue_case;
        c.aux_path = blue_aux;
        c.aux_rank = static_cast<int>(blue_aux.size());
        c.path = blue_walk(g, coloring, trace.cycles, blue_aux, k);
        realized.push_back(std::move(c));
    }

    // Prefer the longer auxiliary segment, then any realization that meets
    // its own target, then the longest path found anywhere.
    std::stable_sort(realized.begin(), realized.end(),
                     [](const auto& x, const auto& y) { return x.aux_rank > y.aux_rank; });
    auto meets = [&](const Candidate& c) {
        const double target = c.color == kRed ? trace.chain.red_target : trace.chain.blue_target;
        return c.path.length() >= target;
    };
    for (const auto& c : realized)
        if (meets(c))
            return finish(trace, c, trace.failed_floors.empty());

    for (auto& c : realized)
        fallback.push_back(c);
    auto best = *std::max_element(fallback.begin(), fallback.end(),
                                  [](const auto& x, const auto& y) { return x.path.length() < y.path.length(); });
    if (best.branch == Branch::monochromatic_shortcut)
        best.branch = Branch::small_n_fallback;
    return finish(trace, best, false);
}

namespace {

struct Level {
    std::vector<Vertex> vertices;
    int colors = 0;
};

// Host ids of the largest class of a Gallai-Roy coloring of `local`.
std::vector<Vertex> largest_class(const VertexColoring& vc, const Subgraph& sub)
{
    const auto classes = vc.classes();
    std::size_t best = 0;
    for (std::size_t i = 1; i < classes.size(); ++i)
        if (classes[i].size() > classes[best].size())
            best = i;
    std::vector<Vertex> out;
    if (classes.empty())
        return out;
    for (auto v : classes[best])
        out.push_back(sub.to_host_vertex[static_cast<std::size_t>(v)]);
    return out;
}

template <class Base>
BuilderCertificate peel_colors(const OrientedGraph& g, const EdgeColoring& coloring, int n_target, Base&& base)
{
    if (n_target < 1)
        throw std::invalid_argument("n_target must be positive");
    if (coloring.size() != g.edge_count() || !coloring.is_total())
        throw std::invalid_argument("coloring must be total");
    std::vector<Vertex> current(static_cast<std::size_t>(g.vertex_count()));
    std::iota(current.begin(), current.end(), 0);
    std::vector<int> sizes;
    for (int top = coloring.num_colors; top >= 1; --top) {
        sizes.push_back(static_cast<int>(current.size()));
        const auto sub = induced_subgraph(g, current);
        auto local = restrict_coloring(coloring, sub);
        if (top <= 2) {
            local.num_colors = top;
            auto cert = base(sub, local, top);
            cert.path = sub.lift(cert.path);
            cert.trace.recursion_sizes = sizes;
            return cert;
        }
        const auto cls = color_class_subgraph(sub.graph, local, top);
        auto split = gallai_roy(cls.graph, n_target);
        if (auto* path = std::get_if<DirectedPath>(&split)) {
            BuilderCertificate cert;
            cert.path = sub.lift(*path);
            cert.color = top;
            cert.branch = Branch::monochromatic_shortcut;
            cert.bound = n_target;
            cert.guarantee_active = cert.path.length() >= n_target;
            cert.trace.n = g.vertex_count();
            cert.trace.recursion_sizes = sizes;
            return cert;
        }
        current = largest_class(std::get<VertexColoring>(split), sub);
    }
    return {};
}

} // namespace

BuilderCertificate multicolor_path_finder(const OrientedGraph& g, const EdgeColoring& coloring, int k, int n_target,
                                          const ConstantsConfig& cfg)
{
    auto cert = peel_colors(g, coloring, n_target, [&](const Subgraph& sub, const EdgeColoring& local, int colors) {
        if (colors == 2)
            return two_color_path_finder(sub.graph, local, k, cfg);
        BuilderCertificate one;
        one.path = greedy_long_path(sub.graph);
        one.color = 1;
        one.branch = Branch::monochromatic_shortcut;
        one.guarantee_active = true;
        return one;
    });
    cert.trace.n = g.vertex_count();
    cert.trace.k = k;
    cert.bound = n_target;
    cert.guarantee_active = cert.guarantee_active && cert.path.length() >= n_target;
    return cert;
}

BuilderCertificate symmetric_multicolor_finder(const OrientedGraph& g, const EdgeColoring& coloring, int n_target)
{
    if (!is_complete_symmetric(g))
        throw std::invalid_argument("symmetric_multicolor_finder needs a complete symmetric digraph");
    auto base = [](const Subgraph& sub, const EdgeColoring& local, int colors) {
        BuilderCertificate out;
        out.branch = Branch::monochromatic_shortcut;
        if (colors == 1 || sub.graph.vertex_count() < 2) {
            out.path.vertices = all_vertices(sub.graph.vertex_count());
            out.color = 1;
        } else {
            const auto d = raynaud(sub.graph, two_colors_of(local));
            const auto seg = longest_segment(d);
            out.path = seg.path;
            out.color = seg.color;
            out.branch = seg.color == kRed ? Branch::red_case : Branch::blue_case;
        }
        out.guarantee_active = true;
        return out;
    };

    // Any color may be peeled first; try every order (rotations only beyond
    // five colors) and keep the longest certificate.
    const int q1 = coloring.num_colors;
    std::vector<int> order(static_cast<std::size_t>(std::max(q1, 0)));
    std::iota(order.begin(), order.end(), 1);
    BuilderCertificate best;
    bool have = false;
    for (int round = 0;; ++round) {
        auto permuted = coloring;
        // order[i] is the original color that plays color i + 1.
        std::vector<int> to_local(static_cast<std::size_t>(q1) + 1, 0);
        for (int i = 0; i < q1; ++i)
            to_local[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i + 1;
        for (auto& x : permuted.colors)
            x = x == kUncolored ? x : to_local[static_cast<std::size_t>(x)];
        auto cert = peel_colors(g, permuted, n_target, base);
        cert.color = order[static_cast<std::size_t>(cert.color - 1)];
        if (!have || cert.path.length() > best.path.length()) {
            best = std::move(cert);
            have = true;
        }
        if (best.path.length() >= n_target)
            break;
        if (q1 <= 5 ? !std::next_permutation(order.begin(), order.end())
                    : (std::rotate(order.begin(), order.begin() + 1, order.end()), round + 1 >= q1))
            break;
    }
    best.trace.n = g.vertex_count();
    best.bound = n_target;
    best.guarantee_active = best.path.length() >= n_target;
    return best;
}

bool certificate_is_valid(const OrientedGraph& g, const EdgeColoring& coloring, const BuilderCertificate& cert)
{
    return is_monochromatic_path(g, coloring, cert.path, cert.color);
}

nlohmann::json to_json(const BuilderCertificate& cert)
{
    const auto& t = cert.trace;
    return {
        {"path", cert.path.vertices},
        {"length", cert.path.length()},
        {"color", cert.color},
        {"branch", branch_name(cert.branch)},
        {"guarantee_active", cert.guarantee_active},
        {"bound", cert.bound},
        {"trace",
         {{"n", t.n},
          {"k", t.k},
          {"red_threshold", t.chain.red_threshold},
          {"block_size", t.chain.block_size},
          {"min_blocks", t.chain.min_blocks},
          {"red_promise", t.chain.red_promise},
          {"blue_promise", t.chain.blue_promise},
          {"red_target", t.chain.red_target},
          {"blue_target", t.chain.blue_target},
          {"chain_closes", t.chain.closes},
          {"red_classes", t.red_classes},
          {"blocks", t.blocks.size()},
          {"block_path_lengths", t.block_path_lengths},
          {"cycle_lengths",
           [&] {
               std::vector<std::size_t> lengths;
               for (const auto& c : t.cycles)
                   lengths.push_back(c.size());
               return lengths;
           }()},
          {"aux_colors", t.aux_colors},
          {"aux_path", t.aux_path},
          {"aux_color", t.aux_color},
          {"recursion_sizes", t.recursion_sizes},
          {"failed_floors", t.failed_floors}}},
    };
}

} // namespace dipath
