#pragma once

// Monochromatic path extraction from edge-colored (pseudorandom) digraphs:
// the two-color block/cycle construction and the multicolor recursions.

#include "dipath/classic.hpp"
#include "dipath/config.hpp"
#include "dipath/graph.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace dipath {

enum class Branch { red_case, blue_case, monochromatic_shortcut, small_n_fallback };

std::string branch_name(Branch b);

/// What the constants promise for given n and k, before looking at any
/// coloring. `closes` is true when both promised lengths reach the targets.
struct BuilderChain {
    int red_threshold = 0;
    int block_size = 0;
    int min_blocks = 0;
    int red_promise = 0;
    int blue_promise = 0;
    double red_target = 0.0;
    double blue_target = 0.0;
    bool closes = false;
};

BuilderChain builder_chain(int n, int k, const ConstantsConfig& cfg);

struct BuilderTrace {
    int n = 0;
    int k = 0;
    BuilderChain chain;
    int red_classes = 0;
    std::vector<std::vector<Vertex>> blocks;
    std::vector<int> block_path_lengths;
    /// One blue cycle per surviving block, as a cyclic vertex sequence.
    std::vector<std::vector<Vertex>> cycles;
    /// Row-major colors of the auxiliary complete symmetric digraph on the
    /// cycles, 0 on the diagonal.
    std::vector<int> aux_colors;
    /// Auxiliary path (cycle indices) that was turned into the final path.
    std::vector<int> aux_path;
    int aux_color = 0;
    /// Sets threaded in the red case.
    std::vector<std::vector<Vertex>> threaded_sets;
    /// Vertex count at each level of a multicolor recursion, top first.
    std::vector<int> recursion_sizes;
    std::vector<std::string> failed_floors;
};

struct BuilderCertificate {
    DirectedPath path;
    int color = kRed;
    Branch branch = Branch::small_n_fallback;
    bool guarantee_active = false;
    /// Length the branch promises when the guarantee is active.
    double bound = 0.0;
    BuilderTrace trace;
};

nlohmann::json to_json(const BuilderCertificate& cert);

/// Red path via Gallai-Roy on the red graph, or blocks of independent red
/// classes, blue cycles inside blocks, an auxiliary 2-colored complete
/// symmetric digraph on the cycles and a two-run Hamilton cycle of it.
/// `coloring` must be a total 2-coloring (1 = red, 2 = blue).
BuilderCertificate two_color_path_finder(const OrientedGraph& g, const EdgeColoring& coloring, int k,
                                         const ConstantsConfig& cfg);

/// Peels the top color with Gallai-Roy (threshold n_target) down to two
/// colors, recursing into the largest class.
BuilderCertificate multicolor_path_finder(const OrientedGraph& g, const EdgeColoring& coloring, int k, int n_target,
                                          const ConstantsConfig& cfg);

/// Same recursion on a complete symmetric digraph with the two-run Hamilton
/// cycle at the two-color level.
BuilderCertificate symmetric_multicolor_finder(const OrientedGraph& g, const EdgeColoring& coloring, int n_target);

bool certificate_is_valid(const OrientedGraph& g, const EdgeColoring& coloring, const BuilderCertificate& cert);

} // namespace dipath
