#include "dipath/adversary.hpp"
#include "dipath/classic.hpp"
#include "dipath/oracle.hpp"
#include "dipath/paths.hpp"
#include "dipath/random.hpp"
#include "support/brute_force.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace dipath;

namespace {

OrientedGraph random_oriented(int n, double p, std::uint64_t seed)
{
    Rng rng(seed);
    OrientedGraph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (unit_interval(rng) < p) {
                if (coin(rng))
                    g.add_edge(u, v);
                else
                    g.add_edge(v, u);
            }
    return g;
}

OrientedGraph random_symmetric(int n, int edges, std::uint64_t seed)
{
    Rng rng(seed);
    OrientedGraph g(n, true);
    for (int tries = 0; tries < 8 * edges && g.edge_count() < edges; ++tries) {
        const auto u = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n)));
        const auto v = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n)));
        if (u != v && !g.has_edge(u, v))
            g.add_edge(u, v);
    }
    return g;
}

OrientedGraph random_dag(int n, double p, std::uint64_t seed)
{
    Rng rng(seed);
    OrientedGraph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (unit_interval(rng) < p)
                g.add_edge(u, v);
    return g;
}

ConstantsConfig relaxed()
{
    ConstantsConfig cfg;
    cfg.relax = true;
    cfg.degree_threshold = 3;
    cfg.termination_edge_threshold = 2;
    cfg.min_block_size = 2;
    return cfg;
}

int digit_sum(const DigitEncoding& d)
{
    int s = 0;
    for (int x : d.digits)
        s += x;
    return s;
}

int block_of(const std::vector<std::vector<Vertex>>& blocks, Vertex v)
{
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (std::find(blocks[i].begin(), blocks[i].end(), v) != blocks[i].end())
            return static_cast<int>(i);
    return -1;
}

// Every cross-block edge of color y <= q raises digit y; color q+1 lowers
// the digit sum.
void check_digit_structure(const OrientedGraph& g, const std::vector<std::vector<Vertex>>& blocks,
                           const EdgeColoring& c, int q)
{
    const int s = minimal_base(static_cast<long long>(blocks.size()), q);
    for (int id = 0; id < g.edge_count(); ++id) {
        const auto& e = g.edge(id);
        const int a = block_of(blocks, e.from);
        const int b = block_of(blocks, e.to);
        if (a < 0 || b < 0 || a == b)
            continue;
        const auto da = encode_digits(a, s, q);
        const auto db = encode_digits(b, s, q);
        const int y = c[id];
        if (y <= q) {
            CHECK(da.digits[static_cast<std::size_t>(y - 1)] < db.digits[static_cast<std::size_t>(y - 1)]);
        } else {
            CHECK(y == q + 1);
            CHECK(digit_sum(da) > digit_sum(db));
        }
    }
}

} // namespace

TEST_SUITE("digits")
{
    TEST_CASE("encodings are most significant digit first")
    {
        CHECK(encode_digits(0, 2, 2).digits == std::vector<int>{0, 0});
        CHECK(encode_digits(1, 2, 2).digits == std::vector<int>{0, 1});
        CHECK(encode_digits(2, 2, 2).digits == std::vector<int>{1, 0});
        CHECK(encode_digits(7, 3, 2).digits == std::vector<int>{2, 1});
        CHECK_THROWS_AS(encode_digits(4, 2, 2), std::invalid_argument);
        CHECK_THROWS_AS(encode_digits(-1, 2, 2), std::invalid_argument);
    }

    TEST_CASE("minimal bases")
    {
        CHECK(minimal_base(1, 3) == 1);
        CHECK(minimal_base(4, 2) == 2);
        CHECK(minimal_base(5, 2) == 3);
        CHECK(minimal_base(9, 1) == 9);
        CHECK(minimal_base(1000, 3) == 10);
        CHECK(minimal_base(1001, 3) == 11);
        CHECK(minimal_base_real(std::sqrt(12.0) * 2 + 1, 1) == 8);
        CHECK(minimal_base_real(4.0, 2) == 2);
        CHECK(minimal_base_real(4.01, 2) == 3);
    }
}

TEST_SUITE("acyclic sets")
{
    TEST_CASE("tournament_acyclic_set examples")
    {
        CHECK(tournament_acyclic_set(Tournament(OrientedGraph(1))).size() == 1);
        const auto t8 = tournament_acyclic_set(Tournament(transitive_tournament(8)));
        CHECK(t8.size() >= 4);
        CHECK(is_acyclic_set(transitive_tournament(8), t8));
        const auto c3 = tournament_acyclic_set(Tournament(directed_cycle_graph(3)));
        CHECK(c3.size() == 2);
        CHECK(is_acyclic_set(directed_cycle_graph(3), c3));
        CHECK_THROWS_AS(Tournament(directed_path_graph(3)), GraphError);
    }

    TEST_CASE("tournament_acyclic_set size and acyclicity")
    {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const int n = 1 + static_cast<int>(seed % 60);
            const auto t = random_tournament(n, seed);
            const auto set = tournament_acyclic_set(t);
            CHECK(is_acyclic_set(t.graph(), set));
            CHECK(static_cast<int>(set.size()) >= static_cast<int>(std::floor(std::log2(n))) + 1);
        }
    }

    TEST_CASE("sparse_acyclic_set examples")
    {
        ConstantsConfig cfg;
        CHECK(sparse_acyclic_set(OrientedGraph(9), cfg).vertices.size() == 9);
        const auto tt = sparse_acyclic_set(transitive_tournament(12), cfg);
        CHECK(tt.vertices.size() == 12);
        CHECK(tt.delegated);
    }

    TEST_CASE("sparse_acyclic_set on a sparse random graph beats subsample optima")
    {
        ConstantsConfig cfg;
        const int n = 200;
        // eps = |E| / n^2 = 0.01
        Rng rng(17);
        OrientedGraph g(n);
        while (g.edge_count() < 400) {
            const auto u = static_cast<Vertex>(uniform_below(rng, n));
            const auto v = static_cast<Vertex>(uniform_below(rng, n));
            if (u != v && !g.has_edge(u, v) && !g.has_edge(v, u))
                g.add_edge(u, v);
        }
        const auto r = sparse_acyclic_set(g, cfg);
        CHECK(r.epsilon == doctest::Approx(0.01));
        CHECK(is_acyclic_set(g, r.vertices));
        CHECK(static_cast<int>(r.vertices.size()) >= static_cast<int>(std::floor(std::log2(n))));
        for (int sample = 0; sample < 10; ++sample) {
            std::vector<Vertex> pick(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                pick[static_cast<std::size_t>(i)] = i;
            for (int i = 0; i < 15; ++i)
                std::swap(pick[static_cast<std::size_t>(i)],
                          pick[static_cast<std::size_t>(i) + uniform_below(rng, static_cast<std::uint64_t>(n - i))]);
            pick.resize(15);
            const auto sub = induced_subgraph(g, pick);
            CHECK(static_cast<int>(r.vertices.size()) >= brute::max_acyclic_subset(sub.graph));
        }
    }

    TEST_CASE("sparse_acyclic_set is acyclic and at least log n when eps < 1/4")
    {
        ConstantsConfig cfg;
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            const int n = 8 + static_cast<int>(seed % 40);
            const auto g = random_oriented(n, 0.05 + 0.01 * static_cast<double>(seed % 30), seed);
            const auto r = sparse_acyclic_set(g, cfg);
            CHECK(is_acyclic_set(g, r.vertices));
            if (r.epsilon < 0.25)
                CHECK(static_cast<int>(r.vertices.size()) >= static_cast<int>(std::floor(std::log2(n))));
            if (n <= 14)
                CHECK(static_cast<int>(r.vertices.size()) <= brute::max_acyclic_subset(g));
        }
    }
}

TEST_SUITE("constructive_chromatic")
{
    TEST_CASE("examples")
    {
        CHECK(constructive_chromatic(OrientedGraph(5)).num_colors() == 1);
        CHECK(constructive_chromatic(complete_symmetric_digraph(6)).num_colors() == 6);
        CHECK(constructive_chromatic(directed_path_graph(2)).num_colors() == 2);
    }

    TEST_CASE("proper, every two classes joined, at most 2 sqrt(m) + 1 classes")
    {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const auto g = random_symmetric(12, static_cast<int>(seed % 60), seed);
            const auto vc = constructive_chromatic(g);
            CHECK(is_proper_coloring(g, vc));
            const int k = vc.num_colors();
            CHECK(static_cast<double>(k) <= 2.0 * std::sqrt(static_cast<double>(g.edge_count())) + 1.0);
            const auto classes = vc.classes();
            for (std::size_t a = 0; a < classes.size(); ++a)
                for (std::size_t b = a + 1; b < classes.size(); ++b) {
                    bool joined = false;
                    for (auto u : classes[a])
                        for (auto v : classes[b])
                            joined = joined || g.has_edge(u, v) || g.has_edge(v, u);
                    CHECK(joined);
                }
        }
    }
}

TEST_SUITE("digit colorings")
{
    TEST_CASE("single block keeps the inner coloring")
    {
        const auto g = directed_path_graph(4);
        EdgeColoring inner(3, 3);
        inner.colors = {1, 2, 3};
        const auto r = block_product_coloring(g, {{0, 1, 2, 3}}, inner, 1, 2);
        CHECK(r.coloring.colors == inner.colors);
        CHECK(r.bound == 2 * (1 + 1) * 1);
    }

    TEST_CASE("four independent blocks, q = 2: digit table")
    {
        const auto g = complete_symmetric_digraph(4);
        const auto r = block_product_coloring(g, {{0}, {1}, {2}, {3}}, EdgeColoring(3, g.edge_count()), 0, 2);
        CHECK(r.base == 2);
        CHECK(r.coloring[g.edge_id(0, 1)] == 2);
        CHECK(r.coloring[g.edge_id(1, 2)] == 1);
        CHECK(r.coloring[g.edge_id(1, 0)] == 3);
        CHECK(r.coloring[g.edge_id(0, 3)] == 1);
        CHECK(r.coloring[g.edge_id(2, 3)] == 2);
        CHECK(r.coloring[g.edge_id(3, 0)] == 3);
        CHECK(r.bound == 4);
        CHECK(max_mono_path(g, r.coloring).value <= 4);
        check_digit_structure(g, {{0}, {1}, {2}, {3}}, r.coloring, 2);
    }

    TEST_CASE("color_classes_coloring examples")
    {
        // Two classes {0,1} and {2,3} with edges both ways between them.
        OrientedGraph bip(4, true);
        bip.add_edge(0, 2);
        bip.add_edge(3, 1);
        bip.add_edge(2, 1);
        bip.add_edge(1, 3);
        const auto two = color_classes_coloring(bip, VertexColoring{{1, 1, 2, 2}}, 1);
        CHECK(two.coloring.is_total());
        CHECK(max_mono_path(bip, two.coloring).value <= 2);

        CHECK(color_classes_coloring(OrientedGraph(3), VertexColoring{{1, 1, 1}}, 2).coloring.size() == 0);

        const auto c3 = directed_cycle_graph(3);
        const auto r = color_classes_coloring(c3, VertexColoring{{1, 2, 3}}, 2);
        CHECK(r.bound == 4);
        CHECK(max_mono_path(c3, r.coloring).value <= 1);

        CHECK_THROWS_AS(color_classes_coloring(c3, VertexColoring{{1, 1, 2}}, 1), std::invalid_argument);
    }

    TEST_CASE("acyclic_edge_coloring examples")
    {
        const auto path = directed_path_graph(4);
        const auto r = acyclic_edge_coloring(path, 2);
        CHECK(r.base == 2);
        CHECK(r.coloring.colors == std::vector<int>{2, 1, 2});
        CHECK(max_mono_path(path, r.coloring).value == 1);
        CHECK(r.bound == 1);

        CHECK(acyclic_edge_coloring(OrientedGraph(4), 2).coloring.size() == 0);

        const auto one = acyclic_edge_coloring(path, 1);
        CHECK(one.coloring.colors == std::vector<int>{1, 1, 1});
        CHECK(one.bound == 3);
        CHECK_THROWS_AS(acyclic_edge_coloring(directed_cycle_graph(3), 1), CyclicGraphError);
    }

    TEST_CASE("digit-coloring bounds hold on random instances")
    {
        Rng rng(11);
        for (std::uint64_t seed = 0; seed < 150; ++seed) {
            const int q = 1 + static_cast<int>(seed % 3);
            const auto z = random_dag(10 + static_cast<int>(seed % 5), 0.4, seed);
            const auto a = acyclic_edge_coloring(z, q);
            const int t = longest_path_dag(z).length();
            CHECK(a.coloring.is_total());
            CHECK(a.bound == minimal_base(t + 1, q) - 1);
            CHECK(max_mono_path(z, a.coloring).value <= a.bound);
            CHECK(brute::longest_mono_path(z, a.coloring) <= a.bound);

            const auto g = random_symmetric(12, 20 + static_cast<int>(seed % 30), seed);
            const auto vc = constructive_chromatic(g);
            const auto b = color_classes_coloring(g, vc, q);
            CHECK(b.coloring.is_total());
            CHECK(max_mono_path(g, b.coloring).value <= b.bound);
            check_digit_structure(g, vc.classes(), b.coloring, q);
        }
    }
}

TEST_SUITE("theorem1_adversary")
{
    TEST_CASE("edgeless graph")
    {
        const auto r = theorem1_adversary(OrientedGraph(6), 1, ConstantsConfig{});
        CHECK(r.coloring.size() == 0);
        CHECK(r.trace.families.empty());
        CHECK(r.trace.low_degree.size() == 6);
    }

    TEST_CASE("partition, blocks and escape scheme")
    {
        const auto cfg = relaxed();
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            const int n = 20 + static_cast<int>(seed % 30);
            const int q = 1 + static_cast<int>(seed % 2);
            const auto g = random_oriented(n, 0.25, seed);
            const auto r = theorem1_adversary(g, q, cfg);
            const auto& t = r.trace;
            CHECK(r.coloring.num_colors == q + 1);
            CHECK(r.coloring.is_total());

            std::vector<int> seen(static_cast<std::size_t>(n), 0);
            for (auto v : t.low_degree)
                ++seen[static_cast<std::size_t>(v)];
            for (auto v : t.residue)
                ++seen[static_cast<std::size_t>(v)];
            for (auto v : t.covered)
                ++seen[static_cast<std::size_t>(v)];
            CHECK(std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; }));

            std::size_t covered = 0;
            for (const auto& f : t.families) {
                CHECK_FALSE(f.blocks.empty());
                for (const auto& b : f.blocks) {
                    CHECK(static_cast<int>(b.size()) == f.block_size);
                    CHECK(is_acyclic_set(g, b));
                    covered += b.size();
                }
            }
            CHECK(covered == t.covered.size());
            if (!t.terminated_early && t.shortfalls == 0)
                CHECK(static_cast<double>(t.residue_edges) <= t.termination_threshold);

            const auto part = part_of_vertices(t, n);
            for (int id = 0; id < g.edge_count(); ++id) {
                const auto& e = g.edge(id);
                const int a = part[static_cast<std::size_t>(e.from)];
                const int b = part[static_cast<std::size_t>(e.to)];
                if (a < b)
                    CHECK(r.coloring[id] == 1);
                if (a > b)
                    CHECK(r.coloring[id] == 2);
            }
            CHECK(t.total_bound == t.low_degree_bound + t.residue_bound + t.covered_bound + 2);
        }
    }

    TEST_CASE("measured mono path stays within the trace bound, n = 300")
    {
        auto cfg = relaxed();
        cfg.degree_threshold = 8;
        cfg.termination_edge_threshold = 20;
        const auto g = random_oriented(300, 0.02, 2024);
        const auto r = theorem1_adversary(g, 1, cfg);
        CHECK(r.coloring.is_total());
        CHECK_FALSE(r.trace.families.empty());
        const auto measured = max_mono_path(g, r.coloring, 31);
        CHECK(is_monochromatic_path(g, r.coloring, measured.path, measured.color));
        CHECK(measured.value <= r.trace.total_bound);
    }

    TEST_CASE("never beats the exhaustive optimum on small graphs")
    {
        const auto cfg = relaxed();
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            const auto g = random_oriented(7, 0.6, seed);
            if (g.edge_count() > 14)
                continue;
            const auto r = theorem1_adversary(g, 1, cfg);
            const int measured = brute::longest_mono_path(g, r.coloring);
            CHECK(measured <= r.trace.total_bound);
            CHECK(measured >= min_max_mono_path(g, 2).value);
        }
    }

    TEST_CASE("faithful constants still give a valid coloring")
    {
        const auto g = random_oriented(40, 0.3, 5);
        const auto r = theorem1_adversary(g, 2, ConstantsConfig{});
        CHECK(r.coloring.is_total());
        CHECK(max_mono_path(g, r.coloring).value <= r.trace.total_bound);
    }

    TEST_CASE("trace JSON carries the families and bounds")
    {
        const auto g = random_oriented(30, 0.3, 9);
        const auto r = theorem1_adversary(g, 1, relaxed());
        const auto j = to_json(r.trace);
        CHECK(j.contains("families"));
        CHECK(j.at("bounds").at("total") == r.trace.total_bound);
        CHECK(j.at("families").size() == r.trace.families.size());
    }
}

TEST_SUITE("symmetric_adversary")
{
    TEST_CASE("examples")
    {
        const auto k4 = complete_symmetric_digraph(4);
        const auto r = symmetric_adversary(k4, 1);
        CHECK(r.edge_bound == 8);
        const int measured = max_mono_path(k4, r.coloring).value;
        CHECK(measured <= r.edge_bound);
        CHECK(measured >= min_max_mono_path(k4, 2).value);
        CHECK(min_max_mono_path(k4, 2).value >= 2);

        OrientedGraph pair(2, true);
        pair.add_edge(0, 1);
        pair.add_edge(1, 0);
        const auto rp = symmetric_adversary(pair, 1);
        CHECK(min_max_mono_path(pair, 2).value == 1);
        CHECK(max_mono_path(pair, rp.coloring).value >= 1);

        CHECK(symmetric_adversary(OrientedGraph(3, true), 1).coloring.size() == 0);
    }

    TEST_CASE("few edges leave no monochromatic path of length n")
    {
        for (int n : {4, 6, 8}) {
            const int limit = static_cast<int>(std::ceil(n * n / 9.0)) - 1;
            for (std::uint64_t seed = 0; seed < 50; ++seed) {
                const auto g = random_symmetric(n, limit, seed);
                const auto r = symmetric_adversary(g, 1);
                CHECK(brute::longest_mono_path(g, r.coloring) < n);
                CHECK(max_mono_path(g, r.coloring).value <= r.edge_bound);
            }
        }
    }
}
