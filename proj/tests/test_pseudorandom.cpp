#include "dipath/graph.hpp"
#include "dipath/pseudorandom.hpp"
#include "dipath/random.hpp"
#include "support/brute_force.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace dipath;

namespace {

bool has_edge_between(const OrientedGraph& g, const SetPair& p)
{
    for (auto a : p.a)
        for (auto b : p.b)
            if (g.has_edge(a, b))
                return true;
    return false;
}

bool disjoint(const SetPair& p)
{
    for (auto a : p.a)
        if (std::find(p.b.begin(), p.b.end(), a) != p.b.end())
            return false;
    return true;
}

} // namespace

TEST_SUITE("generators")
{
    TEST_CASE("random tournaments are deterministic tournaments")
    {
        CHECK(random_tournament(1, 42).graph().edge_count() == 0);
        CHECK(random_tournament(5, 7).graph() == random_tournament(5, 7).graph());
        CHECK_FALSE(random_tournament(30, 7).graph() == random_tournament(30, 8).graph());
        for (int n : {2, 9, 40})
            CHECK(is_tournament(random_tournament(n, 3).graph()));
        CHECK_THROWS_AS(random_tournament(0, 1), std::invalid_argument);
    }

    TEST_CASE("orientation frequency per pair over 100 seeds")
    {
        const int n = 200;
        std::vector<int> forward(static_cast<std::size_t>(n * n), 0);
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const auto t = random_tournament(n, seed);
            for (const auto& e : t.graph().edges())
                if (e.from < e.to)
                    ++forward[static_cast<std::size_t>(e.from * n + e.to)];
        }
        // 100 fair coins leave [35, 65] with probability about 1 - 4e-3 per
        // pair; nearly all of the 19900 pairs must fall inside.
        int outside = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const int f = forward[static_cast<std::size_t>(i * n + j)];
                outside += (f < 35 || f > 65) ? 1 : 0;
            }
        CHECK(outside < 200);
    }

    TEST_CASE("paley tournaments")
    {
        const auto p3 = paley_tournament(3).graph();
        CHECK(p3.has_edge(1, 0));
        CHECK(p3.has_edge(2, 1));
        CHECK(p3.has_edge(0, 2));
        CHECK(p3.edge_count() == 3);
        for (int p : {7, 11, 19, 23, 43}) {
            const auto g = paley_tournament(p).graph();
            CHECK(is_tournament(g));
            for (Vertex v = 0; v < p; ++v)
                CHECK(g.out_degree(v) == (p - 1) / 2);
        }
        CHECK_THROWS_AS(paley_tournament(5), std::invalid_argument);
        CHECK_THROWS_AS(paley_tournament(15), std::invalid_argument);
        CHECK_THROWS_AS(paley_tournament(1), std::invalid_argument);
    }
}

TEST_SUITE("pseudorandomness")
{
    TEST_CASE("exact examples")
    {
        const auto trans = pseudorandomness_exact(transitive_tournament(3));
        CHECK(trans.k == 2);
        CHECK(trans.vacuous);
        REQUIRE(trans.counterexample.has_value());
        CHECK(trans.counterexample->a.size() == 1);
        CHECK_FALSE(has_edge_between(transitive_tournament(3), *trans.counterexample));

        const auto cyc = pseudorandomness_exact(directed_cycle_graph(3));
        CHECK(cyc.k == 2);
        REQUIRE(cyc.counterexample.has_value());
        CHECK_FALSE(has_edge_between(directed_cycle_graph(3), *cyc.counterexample));

        CHECK(pseudorandomness_exact(complete_symmetric_digraph(6)).k == 1);
        CHECK(pseudorandomness_exact(OrientedGraph(1)).k == 1);
    }

    TEST_CASE("exact k_star matches pair enumeration")
    {
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            const int n = 4 + static_cast<int>(seed % 6);
            const auto g = random_tournament(n, seed).graph();
            const auto r = pseudorandomness_exact(g);
            CHECK(r.k == brute::k_star(g));
            CHECK(r.vacuous == (2 * r.k > n));
            if (r.k > 1) {
                REQUIRE(r.counterexample.has_value());
                CHECK(static_cast<int>(r.counterexample->a.size()) == r.k - 1);
                CHECK(static_cast<int>(r.counterexample->b.size()) == r.k - 1);
                CHECK(disjoint(*r.counterexample));
                CHECK_FALSE(has_edge_between(g, *r.counterexample));
            }
        }
    }

    TEST_CASE("budget is explicit")
    {
        CHECK_THROWS_AS(pseudorandomness_exact(random_tournament(40, 1).graph(), 10), BudgetExceeded);
    }

    TEST_CASE("no tournament is k-pseudorandom for k <= log2(n)/2")
    {
        for (int n = 2; n <= 16; ++n)
            for (std::uint64_t seed = 0; seed < 5; ++seed) {
                const auto r = pseudorandomness_exact(random_tournament(n, seed).graph());
                CHECK(r.k > std::log2(n) / 2.0);
            }
        for (int p : {3, 7, 11})
            CHECK(pseudorandomness_exact(paley_tournament(p).graph()).k > std::log2(p) / 2.0);
    }

    TEST_CASE("refuter finds a planted violation")
    {
        // Every edge goes from V2 = {k..2k-1} to V1 = {0..k-1}.
        const int k = 3;
        OrientedGraph g(2 * k);
        for (int u = k; u < 2 * k; ++u)
            for (int v = 0; v < k; ++v)
                g.add_edge(u, v);
        const auto r = refute_pseudorandomness(g, k, 10000, 1);
        REQUIRE(r.counterexample.has_value());
        CHECK(r.counterexample->a == std::vector<Vertex>{0, 1, 2});
        CHECK(r.counterexample->b == std::vector<Vertex>{3, 4, 5});
    }

    TEST_CASE("refuter never refutes a complete symmetric digraph")
    {
        const auto g = complete_symmetric_digraph(12);
        for (int k = 1; k <= 6; ++k)
            CHECK_FALSE(refute_pseudorandomness(g, k, 2000, static_cast<std::uint64_t>(k)).counterexample);
        CHECK_THROWS_AS(refute_pseudorandomness(g, 7, 10, 0), std::invalid_argument);
        CHECK_THROWS_AS(refute_pseudorandomness(g, 0, 10, 0), std::invalid_argument);
    }

    TEST_CASE("monotonicity against the exact k_star")
    {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto g = random_tournament(12, seed).graph();
            const auto r = pseudorandomness_exact(g);
            for (int k = r.k; 2 * k <= 12; ++k)
                CHECK_FALSE(refute_pseudorandomness(g, k, 3000, seed).counterexample);
            if (r.k > 1) {
                std::uint64_t explored = 0;
                CHECK(find_violation(g, r.k - 1, 1'000'000, explored).has_value());
            }
        }
    }

    TEST_CASE("refuter is deterministic for a fixed seed")
    {
        const auto g = random_tournament(20, 4).graph();
        const auto a = refute_pseudorandomness(g, 2, 500, 77);
        const auto b = refute_pseudorandomness(g, 2, 500, 77);
        CHECK(a.trials == b.trials);
        CHECK(a.counterexample.has_value() == b.counterexample.has_value());
        if (a.counterexample) {
            CHECK(a.counterexample->a == b.counterexample->a);
            CHECK(a.counterexample->b == b.counterexample->b);
        }
    }

    TEST_CASE("greedy k_star is a lower bound on the exact value")
    {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            const auto g = random_tournament(6 + static_cast<int>(seed % 10), seed).graph();
            CHECK(greedy_k_star(g) <= pseudorandomness_exact(g).k);
        }
    }
}

TEST_SUITE("dfs path")
{
    TEST_CASE("examples")
    {
        for (int n : {1, 2, 7, 20}) {
            const auto t = transitive_tournament(n);
            const auto r = dfs_long_path(t);
            CHECK(r.path.length() == n - 1);
            CHECK(is_valid_path(t, r.path));
            const auto k = complete_symmetric_digraph(n);
            CHECK(dfs_long_path(k).path.length() >= dfs_path_bound(n, 1));
        }
    }

    TEST_CASE("length >= n - 2 k_star + 1 on small tournaments")
    {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const int n = 2 + static_cast<int>(seed % 13);
            const auto g = random_tournament(n, seed).graph();
            const auto r = dfs_long_path(g);
            CHECK(is_valid_path(g, r.path));
            CHECK(r.path.length() >= dfs_path_bound(n, pseudorandomness_exact(g).k));
            CHECK(r.path.length() + 1 >= std::max(r.snapshot_length, r.max_stack_length));
        }
    }
}

TEST_SUITE("threading")
{
    TEST_CASE("single set gives a single vertex")
    {
        const auto g = complete_symmetric_digraph(4);
        const auto p = thread_path_through_sets(g, 1, {{2, 3}});
        CHECK(p.length() == 0);
        CHECK((p.vertices[0] == 2 || p.vertices[0] == 3));
    }

    TEST_CASE("one vertex per set in order")
    {
        const auto g = complete_symmetric_digraph(10);
        const std::vector<std::vector<Vertex>> sets{{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}};
        const auto p = thread_path_through_sets(g, 1, sets);
        REQUIRE(p.length() == 4);
        CHECK(is_valid_path(g, p));
        for (std::size_t i = 0; i < sets.size(); ++i)
            CHECK(std::find(sets[i].begin(), sets[i].end(), p.vertices[i]) != sets[i].end());
    }

    TEST_CASE("missing cross edges fail at the first set")
    {
        OrientedGraph g(4);
        g.add_edge(2, 0);
        g.add_edge(3, 1);
        try {
            thread_path_through_sets(g, 1, {{0, 1}, {2, 3}});
            FAIL("expected ThreadingFailure");
        } catch (const ThreadingFailure& e) {
            CHECK(e.index() == 1);
        }
        int failed = 0;
        CHECK_FALSE(thread_good_sets(g, {{0, 1}, {2, 3}}, &failed).has_value());
        CHECK(failed == 1);
    }

    TEST_CASE("preconditions")
    {
        const auto g = complete_symmetric_digraph(6);
        CHECK_THROWS_AS(thread_path_through_sets(g, 2, {{0, 1, 2}}), std::invalid_argument);
        CHECK_THROWS_AS(thread_path_through_sets(g, 1, {{0, 1}, {1, 2}}), std::invalid_argument);
    }

    TEST_CASE("threads through sets of a pseudorandom tournament")
    {
        int runs = 0;
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const auto g = random_tournament(16, seed).graph();
            const int k = pseudorandomness_exact(g).k;
            const int t = 16 / (2 * k);
            if (t < 2)
                continue;
            ++runs;
            std::vector<std::vector<Vertex>> sets(static_cast<std::size_t>(t));
            for (int v = 0; v < 2 * k * t; ++v)
                sets[static_cast<std::size_t>(v / (2 * k))].push_back(v);
            const auto p = thread_path_through_sets(g, k, sets);
            CHECK(p.length() == t - 1);
            CHECK(is_valid_path(g, p));
        }
        CHECK(runs > 0);
    }
}
