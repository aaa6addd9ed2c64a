#pragma once

// Exhaustive ground truth on small instances: exact monochromatic path
// lengths, min-max over all colorings and arrowing checks.

#include "dipath/graph.hpp"
#include "dipath/paths.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace dipath {

inline constexpr std::uint64_t kDefaultColoringBudget = std::uint64_t{1} << 20;

struct OracleResult {
    int value = 0;
    /// Path witness for longest_mono_path, in color `color`.
    DirectedPath path;
    int color = 0;
    /// Coloring witness for min_max_mono_path and arrowing_check.
    std::optional<EdgeColoring> coloring;
    std::uint64_t explored = 0;
};

nlohmann::json to_json(const OracleResult& r);

/// Exact longest path of every color class, indexed by color - 1. Acyclic
/// classes take the DAG path; others are searched exhaustively with
/// `component_limit` applied per strongly connected component (throws
/// BudgetExceeded beyond it). Uncolored edges are ignored.
std::vector<OracleResult> longest_mono_path(const OrientedGraph& g, const EdgeColoring& coloring,
                                            int component_limit = kDefaultExactLimit);

/// Longest monochromatic path over all colors; ties go to the lower color.
OracleResult max_mono_path(const OrientedGraph& g, const EdgeColoring& coloring,
                           int component_limit = kDefaultExactLimit);

/// Minimum over all q-colorings of the longest monochromatic path. The first
/// edge is fixed to color 1, so q^(|E|-1) colorings must fit in `budget`
/// (else BudgetExceeded). Subtrees under a fixed prefix run on up to
/// `workers` threads; the result does not depend on the worker count.
OracleResult min_max_mono_path(const OrientedGraph& g, int q, std::uint64_t budget = kDefaultColoringBudget,
                               int workers = 1);

struct ArrowingResult {
    bool arrows = true;
    /// A coloring with no monochromatic path of length n_target, when one exists.
    std::optional<EdgeColoring> witness;
    std::uint64_t explored = 0;
};

nlohmann::json to_json(const ArrowingResult& r);

/// True iff every q-coloring has a monochromatic path of length >= n_target.
ArrowingResult arrowing_check(const OrientedGraph& g, int n_target, int q,
                              std::uint64_t budget = kDefaultColoringBudget, int workers = 1);

} // namespace dipath
