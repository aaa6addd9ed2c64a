#pragma once

// Edge colorings without long monochromatic paths: acyclic-set extraction,
// base-s digit colorings and the X / families / residue partition pipeline.

#include "dipath/config.hpp"
#include "dipath/graph.hpp"
#include "dipath/pseudorandom.hpp"

#include <json.hpp>

#include <span>
#include <vector>

namespace dipath {

/// `index` written in base `base` with exactly q digits, most significant
/// first: digits[0] is coordinate 1.
struct DigitEncoding {
    int base = 1;
    std::vector<int> digits;
};

/// Throws std::invalid_argument if index is outside [0, base^q).
DigitEncoding encode_digits(long long index, int base, int q);

/// Least s >= 1 with k <= s^q.
int minimal_base(long long k, int q);

/// Least s >= 1 with x <= s^q for real x.
int minimal_base_real(double x, int q);

/// Chain v1, v2, ... where each v is a vertex of largest out-degree among
/// the remaining candidates and the candidates shrink to its out-neighbors.
/// Size >= floor(log2 n) + 1. Throws GraphError on a non-tournament.
std::vector<Vertex> tournament_acyclic_set(const Tournament& t);

/// The same chain on a tournament completion of g[vertices]: a pair without
/// an edge counts as oriented from the smaller id, an antiparallel pair as
/// absent. Acyclic in g.
std::vector<Vertex> completion_acyclic_set(const OrientedGraph& g, std::span<const Vertex> vertices);

/// Adds vertices of `candidates` to the acyclic set `set` in the given
/// order whenever the result stays acyclic.
void extend_acyclic_set(const OrientedGraph& g, std::vector<Vertex>& set, std::span<const Vertex> candidates);

struct SparseAcyclicResult {
    std::vector<Vertex> vertices;
    double epsilon = 0.0;
    double target = 0.0;
    bool reached_target = false;
    /// The dense branch handed the work to completion_acyclic_set.
    bool delegated = false;
    int improvements = 0;
};

/// Improvement loop for a large acyclic set in a sparse graph: drop
/// vertices of in-degree above 2 eps n, then repeatedly trade the part of U
/// hit by a group R' of outside vertices for an acyclic subset of R'.
/// target < 0 selects c log n / (eps log(1/eps)). Always acyclic and of
/// size >= floor(log2 n) + 1 when n >= 1.
SparseAcyclicResult sparse_acyclic_set(const OrientedGraph& g, const ConstantsConfig& cfg, double target = -1.0);

/// First-fit coloring followed by merging classes with no edge between them.
/// Every two classes end up joined by an edge, so C(classes, 2) <= |E|.
VertexColoring constructive_chromatic(const OrientedGraph& g);

struct DigitColoring {
    EdgeColoring coloring;
    int base = 1;
    /// Upper bound on the longest monochromatic path the construction allows.
    long long bound = 0;
};

/// Colors every edge between distinct blocks: A_i -> A_j gets the lowest y
/// with (i)_y < (j)_y, or q+1 if there is none. Edges inside blocks keep
/// their `inner` color, which must be in 1..q+1; edges leaving the blocks'
/// union keep whatever `inner` holds. `inner` is indexed by g's edge ids.
/// bound = q (r+1) s. Blocks of at most 12 vertices are checked against r.
DigitColoring block_product_coloring(const OrientedGraph& g, const std::vector<std::vector<Vertex>>& blocks,
                                     const EdgeColoring& inner, int r, int q);

/// block_product_coloring over the classes of a proper vertex coloring.
DigitColoring color_classes_coloring(const OrientedGraph& g, const VertexColoring& vc, int q);

/// Levels Z_0..Z_t of an acyclic z, edge Z_i -> Z_j colored by the lowest y
/// with (j)_y > (i)_y in base s, s minimal with t+1 <= s^q. Monochromatic
/// paths have at most s vertices: bound = s - 1.
DigitColoring acyclic_edge_coloring(const OrientedGraph& z, int q);

struct FamilyRecord {
    double epsilon = 0.0;
    /// m / 2^i, the size Y' must drop to for the step to end.
    double step_size = 0.0;
    int block_size = 0;
    std::vector<std::vector<Vertex>> blocks;
    std::vector<long long> block_bounds;
    long long bound = 0;
};

struct FamilyPartition {
    std::vector<Vertex> low_degree;
    std::vector<FamilyRecord> families;
    std::vector<Vertex> residue;
    std::vector<Vertex> covered;

    int target_path_length = 0;
    int m = 0;
    double degree_threshold = 0.0;
    double termination_threshold = 0.0;
    long long residue_edges = 0;
    int steps = 0;
    /// Extractions that fell short of the step's block size.
    int shortfalls = 0;
    bool terminated_early = false;

    int low_degree_classes = 0;
    int residue_classes = 0;
    long long low_degree_bound = 0;
    long long residue_bound = 0;
    long long covered_bound = 0;
    /// Sum of the three part bounds plus the two escape edges.
    long long total_bound = 0;

    double c1 = 0.0;
    /// |E| is within the edge budget the lower-bound argument assumes.
    bool hypothesis_holds = false;
};

nlohmann::json to_json(const FamilyPartition& trace);

/// 0 = low-degree part, 1 = residue, 2 = covered; -1 if absent.
std::vector<int> part_of_vertices(const FamilyPartition& trace, int vertex_count);

struct AdversaryResult {
    EdgeColoring coloring;
    FamilyPartition trace;
};

/// (q+1)-coloring of an oriented g through the three-part partition. Edges
/// between parts go forward (low-degree < residue < covered) in color 1 and
/// backward in color 2.
AdversaryResult theorem1_adversary(const OrientedGraph& g, int q, const ConstantsConfig& cfg);

struct SymmetricAdversaryResult {
    EdgeColoring coloring;
    int classes = 0;
    long long bound = 0;
    /// q ceil((2 sqrt(m) + 1)^(1/q)).
    long long edge_bound = 0;
};

/// constructive_chromatic followed by color_classes_coloring; any digraph.
SymmetricAdversaryResult symmetric_adversary(const OrientedGraph& g, int q);

} // namespace dipath
