#pragma once

// Every constant the constructions fix asymptotically, in one place, so that
// small instances can run the real pipelines with relaxed values.

#include <json.hpp>

#include <cstdint>

namespace dipath {

struct ConstantsConfig {
    // Acyclic-set size constant: sets of size c log n / (eps log(1/eps)).
    double c = 0.1;
    // Edge-count constant of the lower-bound construction; 0 selects
    // default_c1(q).
    double c1 = 0.0;
    // Path length n the adversary must avoid; 0 means |V|.
    int target_path_length = 0;
    // Degree threshold is degree_exponent_factor * (n / 2q)^q.
    double degree_exponent_factor = 1.0;
    // Termination threshold is termination_edge_factor * n^(2q) / (16q)^(2q).
    double termination_edge_factor = 1.0;

    // With relax set, the overrides below replace the formulas. Negative
    // thresholds keep the formula value.
    bool relax = false;
    double degree_threshold = -1.0;
    double termination_edge_threshold = -1.0;
    double block_size_factor = 1.0;
    int min_block_size = 1;

    // Two-color path builder: red threshold n/(d k), blocks of f k vertices,
    // block paths of p k edges, cycles of cy k vertices, guarantees
    // n/(c_R k) red and n/c_B blue.
    double red_threshold_divisor = 14.0;
    double block_factor = 7.0;
    double path_factor = 5.0;
    double cycle_factor = 3.0;
    double red_guarantee_divisor = 28.0;
    double blue_guarantee_divisor = 28.0;

    // Budgets for exhaustive routines.
    int exact_path_limit = 16;
    std::uint64_t oracle_coloring_budget = std::uint64_t{1} << 20;
    std::uint64_t pseudorandom_budget = 50'000'000;

    /// Throws std::invalid_argument on non-positive constants.
    void validate() const;

    double effective_c1(int q) const;
    /// Degree threshold for vertices kept in the low-degree part X.
    double effective_degree_threshold(int n, int q) const;
    double effective_termination_threshold(int n, int q) const;

    friend bool operator==(const ConstantsConfig&, const ConstantsConfig&) = default;
};

/// Half the largest c1 the edge-count argument allows for q.
double default_c1(double c, int q);

nlohmann::json to_json(const ConstantsConfig& cfg);
/// Missing keys keep their defaults; unknown keys are rejected.
ConstantsConfig config_from_json(const nlohmann::json& j);
ConstantsConfig read_config_file(const std::string& path);

} // namespace dipath
