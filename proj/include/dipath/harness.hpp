#pragma once

// Experiment manifests: generate instances, run one pipeline per instance,
// check its invariants and persist a CSV plus a JSON aggregate.

#include "dipath/config.hpp"
#include "dipath/graph.hpp"

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dipath {

class ManifestError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GeneratorSpec {
    /// random | paley | random-oriented | oriented-exhaustive
    std::string model = "random";
    std::vector<int> sizes;
    int seeds_per_size = 1;
    /// random-oriented: probability of an edge per pair.
    double density = 0.5;
    /// random-oriented and oriented-exhaustive: keep graphs with at most this
    /// many edges (-1 for no limit).
    int max_edges = -1;
};

struct ExperimentManifest {
    std::string id;
    /// prcheck-exact | prcheck-sampled | dfs-path | adversary-oracle |
    /// builder | raynaud
    std::string pipeline;
    GeneratorSpec generator;
    int repetitions = 1;
    int q = 1;
    /// 0 selects the pipeline's default.
    int k = 0;
    std::uint64_t trials = 100'000;
    ConstantsConfig config;
    std::string csv_path;
    std::string json_path;
};

/// Throws ManifestError on unknown keys, unknown pipelines or models, and
/// sizes outside the pipeline's budget.
ExperimentManifest manifest_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ExperimentManifest& m);
ExperimentManifest read_manifest_file(const std::string& path);

/// FNV-1a of the canonical JSON form.
std::uint64_t manifest_hash(const ExperimentManifest& m);

struct RunRow {
    int n = 0;
    int index = 0;
    int repetition = 0;
    std::uint64_t seed = 0;
    /// ok | budget-exceeded | invariant-failure
    std::string status = "ok";
    /// Pipeline columns in a fixed order.
    std::vector<std::pair<std::string, std::string>> columns;
    std::vector<std::string> failures;
    double seconds = 0.0;
};

struct ResultRecord {
    std::uint64_t manifest_hash = 0;
    ExperimentManifest manifest;
    std::vector<RunRow> rows;
    int failures = 0;
    int budget_exceeded = 0;
    double wall_clock_seconds = 0.0;
};

/// Runs every (size, index) instance on `workers` threads. Rows come back
/// sorted by (n, index, repetition); nothing but the timing fields depends
/// on the worker count.
ResultRecord run_experiment(const ExperimentManifest& m, int workers = 1);

/// One header line, one line per row; no timing columns.
std::string format_csv(const ResultRecord& r);

/// Aggregate: manifest, hash, effective config, counts, per-column
/// statistics and timing.
nlohmann::json to_json(const ResultRecord& r);

/// Writes the CSV and JSON named by the manifest (skipping empty paths).
void write_outputs(const ResultRecord& r);

/// DIPATH_WORKERS if set and positive, else the hardware thread count.
int worker_count_from_env();

/// Uniform q-coloring of `edge_count` edges.
EdgeColoring random_coloring(int edge_count, int q, std::uint64_t seed);

/// Every oriented graph on n vertices with at most max_edges edges (-1 for
/// all), in a fixed order: each pair i < j takes none, i->j or j->i.
std::vector<OrientedGraph> all_oriented_graphs(int n, int max_edges = -1);

/// Each pair i < j independently gets an edge with probability `density`,
/// oriented by a fair coin; with max_edges >= 0 only the first max_edges
/// drawn edges are kept.
OrientedGraph random_oriented_graph(int n, double density, std::uint64_t seed, int max_edges = -1);

} // namespace dipath
