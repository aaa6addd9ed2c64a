#pragma once

// Random and quadratic-residue tournaments, k-pseudorandomness (every two
// disjoint k-sets A, B have an edge from A to B), and the long-path
// constructions that pseudorandomness powers.

#include "dipath/graph.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace dipath {

/// Oriented graph with exactly one edge between every two vertices.
class Tournament {
public:
    /// Throws GraphError unless g is a tournament.
    explicit Tournament(OrientedGraph g);
    const OrientedGraph& graph() const { return g_; }
    int vertex_count() const { return g_.vertex_count(); }

private:
    OrientedGraph g_;
};

/// Pairs i < j in lexicographic order, one fair coin each: i->j on heads.
Tournament random_tournament(int n, std::uint64_t seed);

bool is_prime(std::int64_t p);

/// Vertices 0..p-1, i->j iff i-j is a nonzero square mod p. Throws
/// std::invalid_argument unless p is a prime with p = 3 mod 4.
Tournament paley_tournament(int p);

struct SetPair {
    std::vector<Vertex> a;
    std::vector<Vertex> b;
};

enum class CheckMode { exact, sampled };

struct PseudorandomnessReport {
    CheckMode mode = CheckMode::exact;
    /// exact: least k for which the property holds. sampled: the k tested.
    int k = 0;
    /// exact mode with k > n/2: no two disjoint k-sets exist at all.
    bool vacuous = false;
    /// Disjoint A, B without an A->B edge; exact mode reports one of size k-1.
    std::optional<SetPair> counterexample;
    std::uint64_t trials = 0;
    std::uint64_t explored = 0;
};

nlohmann::json to_json(const PseudorandomnessReport& report);

/// Disjoint k-sets A, B with no edge from A to B, or nullopt. Exhaustive
/// over A with pruning; `explored` accumulates visited search nodes and
/// BudgetExceeded is thrown past `node_budget`.
std::optional<SetPair> find_violation(const OrientedGraph& g, int k, std::uint64_t node_budget,
                                      std::uint64_t& explored);

/// Scans k = 1, 2, ... and stops at the first k that holds.
PseudorandomnessReport pseudorandomness_exact(const OrientedGraph& g, std::uint64_t node_budget = 50'000'000);

/// Monte Carlo search for a violation at k: each trial draws 2k distinct
/// vertices (trial i seeded by derive_seed(seed, i)), the first k form A.
/// Requires 1 <= k <= n/2.
PseudorandomnessReport refute_pseudorandomness(const OrientedGraph& g, int k, std::uint64_t trials,
                                               std::uint64_t seed);

/// One more than the largest k at which a greedy search finds a violation:
/// from every start vertex, grow A by the vertex keeping V \ (A u N+(A))
/// largest. A lower bound on the exact k_star for graphs too large to search
/// exhaustively.
int greedy_k_star(const OrientedGraph& g);

struct DfsPathResult {
    DirectedPath path;
    /// Stack length at the first moment |S| = |T|.
    int snapshot_length = 0;
    int max_stack_length = 0;
};

/// Depth-first search keeping explored (S), unvisited (T) and stack (U)
/// sets, neighbors tried in ascending id order. Returns the stack path at
/// the |S| = |T| moment or the longest stack seen, whichever is longer.
DfsPathResult dfs_long_path(const OrientedGraph& g);

/// n - 2k + 1: the length a k-pseudorandom graph guarantees.
inline int dfs_path_bound(int n, int k)
{
    return n - 2 * k + 1;
}

class ThreadingFailure : public std::runtime_error {
public:
    explicit ThreadingFailure(int index);
    /// 1-based index of the set whose good subset came out empty.
    int index() const { return index_; }

private:
    int index_;
};

/// One vertex from each set, in order, forming a directed path. Computes
/// the good subsets from the back (vertices with an edge into the next good
/// subset). Throws std::invalid_argument if the sets overlap or one has
/// fewer than 2k vertices, ThreadingFailure if a good subset is empty.
DirectedPath thread_path_through_sets(const OrientedGraph& g, int k, const std::vector<std::vector<Vertex>>& sets);

/// Same construction without the size precondition. Returns nullopt and
/// sets `failed_index` (1-based) on failure.
std::optional<DirectedPath> thread_good_sets(const OrientedGraph& g, const std::vector<std::vector<Vertex>>& sets,
                                             int* failed_index = nullptr);

} // namespace dipath
