#include "dipath/harness.hpp"
#include "dipath/adversary.hpp"
#include "dipath/builder.hpp"
#include "dipath/classic.hpp"
#include "dipath/io.hpp"
#include "dipath/oracle.hpp"
#include "dipath/pseudorandom.hpp"
#include "dipath/random.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

namespace dipath {

namespace {

using Clock = std::chrono::steady_clock;

const std::set<std::string> kPipelines = {"prcheck-exact", "prcheck-sampled", "dfs-path",
                                          "adversary-oracle", "builder", "raynaud"};
const std::set<std::string> kModels = {"random", "paley", "random-oriented", "oriented-exhaustive"};

constexpr int kExactTournamentLimit = 256;
constexpr int kExhaustiveLimit = 5;
constexpr int kLargeLimit = 4096;

void require(bool ok, const std::string& msg)
{
    if (!ok)
        throw ManifestError(msg);
}

template <class T>
void read_key(const nlohmann::json& j, const char* key, T& out)
{
    if (!j.contains(key))
        return;
    try {
        out = j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ManifestError(std::string("manifest key '") + key + "': " + e.what());
    }
}

void reject_unknown(const nlohmann::json& j, const std::set<std::string>& known, const std::string& where)
{
    require(j.is_object(), where + " must be a JSON object");
    for (const auto& [key, value] : j.items())
        require(known.count(key) != 0, "unknown key '" + key + "' in " + where);
}

int default_sampled_k(int n)
{
    return static_cast<int>(std::ceil(2.0 * std::log2(static_cast<double>(n)) - 1e-9));
}

bool is_tournament_model(const std::string& model)
{
    return model == "random" || model == "paley";
}

std::string str(bool b)
{
    return b ? "true" : "false";
}

template <class T>
std::string str(const T& x)
{
    std::ostringstream out;
    out << x;
    return out.str();
}

std::string str(double x)
{
    std::ostringstream out;
    out.precision(6);
    out << std::fixed << x;
    return out.str();
}

struct Instance {
    int n = 0;
    int index = 0;
    std::uint64_t seed = 0;
    const OrientedGraph* fixed = nullptr;
};

OrientedGraph make_graph(const ExperimentManifest& m, const Instance& inst)
{
    const auto& model = m.generator.model;
    if (inst.fixed)
        return *inst.fixed;
    if (model == "random")
        return random_tournament(inst.n, inst.seed).graph();
    if (model == "paley")
        return paley_tournament(inst.n).graph();
    return random_oriented_graph(inst.n, m.generator.density, inst.seed, m.generator.max_edges);
}

class RowBuilder {
public:
    explicit RowBuilder(RunRow& row) : row_(row) {}
    template <class T>
    RowBuilder& operator()(const std::string& name, const T& value)
    {
        row_.columns.emplace_back(name, str(value));
        return *this;
    }
    void fail(const std::string& what) { row_.failures.push_back(what); }

private:
    RunRow& row_;
};

void prcheck_exact(const ExperimentManifest& m, const OrientedGraph& g, RunRow& row)
{
    RowBuilder col(row);
    const auto report = pseudorandomness_exact(g, m.config.pseudorandom_budget);
    const int n = g.vertex_count();
    col("k_star", report.k)("vacuous", report.vacuous)("explored", report.explored);
    if (n >= 2 && report.k <= std::log2(static_cast<double>(n)) / 2.0)
        row.failures.push_back("k_star " + std::to_string(report.k) + " <= log2(n)/2");
}

void prcheck_sampled(const ExperimentManifest& m, const OrientedGraph& g, RunRow& row)
{
    RowBuilder col(row);
    const int n = g.vertex_count();
    const int k = m.k > 0 ? m.k : default_sampled_k(n);
    const auto report = refute_pseudorandomness(g, k, m.trials, derive_seed(row.seed, 1));
    col("k", k)("trials", report.trials)("counterexample", report.counterexample.has_value());
}

void dfs_path(const ExperimentManifest& m, const OrientedGraph& g, RunRow& row)
{
    RowBuilder col(row);
    const int n = g.vertex_count();
    const auto report = pseudorandomness_exact(g, m.config.pseudorandom_budget);
    const auto dfs = dfs_long_path(g);
    const int bound = dfs_path_bound(n, report.k);
    col("k_star", report.k)("length", dfs.path.length())("bound", bound);
    if (!is_valid_path(g, dfs.path))
        col.fail("dfs path invalid");
    if (dfs.path.length() < bound)
        col.fail("dfs path " + std::to_string(dfs.path.length()) + " < " + std::to_string(bound));
}

void adversary_oracle(const ExperimentManifest& m, const OrientedGraph& g, RunRow& row)
{
    RowBuilder col(row);
    const auto adv = theorem1_adversary(g, m.q, m.config);
    const bool total = adv.coloring.size() == g.edge_count() && adv.coloring.num_colors == m.q + 1 &&
                       adv.coloring.is_total();
    const int measured = total ? max_mono_path(g, adv.coloring, m.config.exact_path_limit).value : -1;
    const auto oracle = min_max_mono_path(g, m.q + 1, m.config.oracle_coloring_budget);
    col("edges", g.edge_count())("measured", measured)("bound", adv.trace.total_bound)("oracle", oracle.value)(
        "families", adv.trace.families.size())("hypothesis_holds", adv.trace.hypothesis_holds);
    if (!total)
        col.fail("adversary coloring is not a total (q+1)-coloring");
    if (measured > adv.trace.total_bound)
        col.fail("mono path " + std::to_string(measured) + " > bound " + std::to_string(adv.trace.total_bound));
    if (total && measured < oracle.value)
        col.fail("mono path " + std::to_string(measured) + " < oracle " + std::to_string(oracle.value));
}

void builder(const ExperimentManifest& m, const OrientedGraph& g, RunRow& row, int k, const std::string& k_method)
{
    RowBuilder col(row);
    const int colors = m.q + 1;
    const auto coloring = random_coloring(g.edge_count(), colors, derive_seed(row.seed, 1));
    BuilderCertificate cert;
    if (colors == 2)
        cert = two_color_path_finder(g, coloring, k, m.config);
    else
        cert = multicolor_path_finder(g, coloring, k, std::max(1, m.config.target_path_length), m.config);
    col("k", k)("k_method", k_method)("length", cert.path.length())("color", cert.color)(
        "branch", branch_name(cert.branch))("guarantee_active", cert.guarantee_active)("bound", cert.bound)(
        "chain_closes", cert.trace.chain.closes)("floor_failures", cert.trace.failed_floors.size());
    if (!certificate_is_valid(g, coloring, cert))
        col.fail("certificate path is not a monochromatic path");
    if (colors == 2 && cert.trace.chain.closes && cert.path.length() < cert.bound)
        col.fail("path " + std::to_string(cert.path.length()) + " below the closed chain's target " +
                 str(cert.bound));
}

void raynaud_run(const OrientedGraph& g, RunRow& row)
{
    RowBuilder col(row);
    const auto coloring = random_coloring(g.edge_count(), 2, derive_seed(row.seed, 1));
    const auto d = raynaud(g, coloring);
    const auto best = longest_segment(d);
    col("red_length", d.red_segment.length())("blue_length", d.blue_segment.length())("best", best.path.length())(
        "meets_ceil_half", best.path.length() >= (g.vertex_count() + 1) / 2);
    if (!is_valid_decomposition(g, coloring, d))
        col.fail("invalid decomposition");
    if (best.path.length() < g.vertex_count() / 2)
        col.fail("longest segment below t/2");
}

std::vector<RunRow> run_instance(const ExperimentManifest& m, const Instance& inst)
{
    const auto& p = m.pipeline;
    const bool repeated = p == "builder" || p == "raynaud";
    const int reps = repeated ? m.repetitions : 1;
    std::vector<RunRow> rows;

    std::optional<OrientedGraph> g;
    int k = 0;
    std::string k_method;
    std::string setup_error;
    std::string setup_status = "ok";
    const auto setup_start = Clock::now();
    try {
        g = p == "raynaud" ? complete_symmetric_digraph(inst.n) : make_graph(m, inst);
        if (p == "builder") {
            if (m.k > 0) {
                k = m.k;
                k_method = "manifest";
            } else {
                try {
                    k = pseudorandomness_exact(*g, m.config.pseudorandom_budget).k;
                    k_method = "exact";
                } catch (const BudgetExceeded&) {
                    k = greedy_k_star(*g);
                    k_method = "greedy";
                }
            }
        }
    } catch (const BudgetExceeded& e) {
        setup_status = "budget-exceeded";
        setup_error = e.what();
    } catch (const std::exception& e) {
        setup_status = "invariant-failure";
        setup_error = e.what();
    }
    const double setup_seconds = std::chrono::duration<double>(Clock::now() - setup_start).count();

    for (int rep = 0; rep < reps; ++rep) {
        RunRow row;
        row.n = inst.n;
        row.index = inst.index;
        row.repetition = rep;
        row.seed = repeated ? derive_seed(inst.seed, static_cast<std::uint64_t>(rep)) : inst.seed;
        const auto start = Clock::now();
        if (!g) {
            row.status = setup_status;
            row.failures.push_back(setup_error);
            row.seconds = setup_seconds;
            rows.push_back(std::move(row));
            continue;
        }
        try {
            if (p == "prcheck-exact")
                prcheck_exact(m, *g, row);
            else if (p == "prcheck-sampled")
                prcheck_sampled(m, *g, row);
            else if (p == "dfs-path")
                dfs_path(m, *g, row);
            else if (p == "adversary-oracle")
                adversary_oracle(m, *g, row);
            else if (p == "builder")
                builder(m, *g, row, k, k_method);
            else
                raynaud_run(*g, row);
            if (!row.failures.empty())
                row.status = "invariant-failure";
        } catch (const BudgetExceeded& e) {
            row.columns.clear();
            row.status = "budget-exceeded";
            row.failures = {e.what()};
        } catch (const std::exception& e) {
            row.columns.clear();
            row.status = "invariant-failure";
            row.failures = {e.what()};
        }
        row.seconds = std::chrono::duration<double>(Clock::now() - start).count() + (rep == 0 ? setup_seconds : 0.0);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> column_names(const ResultRecord& r)
{
    std::vector<std::string> names;
    std::set<std::string> seen;
    for (const auto& row : r.rows)
        for (const auto& [name, value] : row.columns)
            if (seen.insert(name).second)
                names.push_back(name);
    return names;
}

} // namespace

ExperimentManifest manifest_from_json(const nlohmann::json& j)
{
    reject_unknown(j, {"id", "pipeline", "generator", "repetitions", "q", "k", "trials", "config", "output"},
                   "manifest");
    ExperimentManifest m;
    read_key(j, "id", m.id);
    read_key(j, "pipeline", m.pipeline);
    read_key(j, "repetitions", m.repetitions);
    read_key(j, "q", m.q);
    read_key(j, "k", m.k);
    read_key(j, "trials", m.trials);
    if (j.contains("generator")) {
        const auto& gj = j.at("generator");
        reject_unknown(gj, {"model", "sizes", "seeds_per_size", "density", "max_edges"}, "generator");
        read_key(gj, "model", m.generator.model);
        read_key(gj, "sizes", m.generator.sizes);
        read_key(gj, "seeds_per_size", m.generator.seeds_per_size);
        read_key(gj, "density", m.generator.density);
        read_key(gj, "max_edges", m.generator.max_edges);
    }
    if (j.contains("config")) {
        try {
            m.config = config_from_json(j.at("config"));
        } catch (const std::exception& e) {
            throw ManifestError(std::string("config: ") + e.what());
        }
    }
    if (j.contains("output")) {
        const auto& oj = j.at("output");
        reject_unknown(oj, {"csv", "json"}, "output");
        read_key(oj, "csv", m.csv_path);
        read_key(oj, "json", m.json_path);
    }

    require(!m.id.empty(), "manifest needs an id");
    require(kPipelines.count(m.pipeline) != 0, "unknown pipeline '" + m.pipeline + "'");
    require(kModels.count(m.generator.model) != 0, "unknown generator model '" + m.generator.model + "'");
    require(m.repetitions >= 1, "repetitions must be positive");
    require(m.q >= 1, "q must be positive");
    require(m.k >= 0, "k must be nonnegative");
    require(m.generator.seeds_per_size >= 0, "seeds_per_size must be nonnegative");
    require(m.generator.density >= 0.0 && m.generator.density <= 1.0, "density must lie in [0, 1]");

    const bool tournament_pipeline = m.pipeline == "prcheck-exact" || m.pipeline == "prcheck-sampled" ||
                                     m.pipeline == "dfs-path" || m.pipeline == "builder";
    if (tournament_pipeline)
        require(is_tournament_model(m.generator.model), "pipeline " + m.pipeline + " needs a tournament model");
    for (int n : m.generator.sizes) {
        require(n >= 1, "sizes must be positive");
        require(n <= kLargeLimit, "size " + std::to_string(n) + " exceeds " + std::to_string(kLargeLimit));
        if (m.generator.model == "paley")
            require(is_prime(n) && n % 4 == 3, "paley sizes must be primes = 3 mod 4");
        if (m.generator.model == "oriented-exhaustive")
            require(n <= kExhaustiveLimit, "exhaustive sizes are limited to " + std::to_string(kExhaustiveLimit));
        if (m.pipeline == "prcheck-exact" || m.pipeline == "dfs-path")
            require(n <= kExactTournamentLimit,
                    "exact pseudorandomness is limited to n <= " + std::to_string(kExactTournamentLimit));
        if (m.pipeline == "prcheck-sampled") {
            const int k = m.k > 0 ? m.k : default_sampled_k(n);
            require(k >= 1 && 2 * k <= n, "sampled k must satisfy 1 <= k <= n/2 for n = " + std::to_string(n));
        }
    }
    return m;
}

nlohmann::json to_json(const ExperimentManifest& m)
{
    return {{"id", m.id},
            {"pipeline", m.pipeline},
            {"generator",
             {{"model", m.generator.model},
              {"sizes", m.generator.sizes},
              {"seeds_per_size", m.generator.seeds_per_size},
              {"density", m.generator.density},
              {"max_edges", m.generator.max_edges}}},
            {"repetitions", m.repetitions},
            {"q", m.q},
            {"k", m.k},
            {"trials", m.trials},
            {"config", to_json(m.config)},
            {"output", {{"csv", m.csv_path}, {"json", m.json_path}}}};
}

ExperimentManifest read_manifest_file(const std::string& path)
{
    std::string text;
    try {
        text = read_text_file(path);
    } catch (const std::runtime_error& e) {
        throw ManifestError(e.what());
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ManifestError(path + ": " + e.what());
    }
    return manifest_from_json(j);
}

std::uint64_t manifest_hash(const ExperimentManifest& m)
{
    return fnv1a(to_json(m).dump());
}

ResultRecord run_experiment(const ExperimentManifest& m, int workers)
{
    const auto start = Clock::now();
    ResultRecord record;
    record.manifest = m;
    record.manifest_hash = manifest_hash(m);

    const std::uint64_t base = fnv1a(m.id);
    std::map<int, std::vector<OrientedGraph>> exhaustive;
    std::vector<Instance> instances;
    for (int n : m.generator.sizes) {
        if (m.generator.model == "oriented-exhaustive" && m.pipeline != "raynaud") {
            auto& graphs = exhaustive[n];
            if (graphs.empty())
                graphs = all_oriented_graphs(n, m.generator.max_edges);
            for (std::size_t i = 0; i < graphs.size(); ++i)
                instances.push_back({n, static_cast<int>(i), derive_seed(base, n, i), nullptr});
        } else {
            for (int i = 0; i < m.generator.seeds_per_size; ++i)
                instances.push_back(
                    {n, i, derive_seed(base, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(i)), nullptr});
        }
    }
    for (auto& inst : instances)
        if (auto it = exhaustive.find(inst.n); it != exhaustive.end())
            inst.fixed = &it->second[static_cast<std::size_t>(inst.index)];

    std::vector<std::vector<RunRow>> results(instances.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < instances.size(); i = next++)
            results[i] = run_instance(m, instances[i]);
    };
    const int threads = std::clamp(workers, 1, std::max(1, static_cast<int>(instances.size())));
    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }

    for (auto& rows : results)
        for (auto& row : rows)
            record.rows.push_back(std::move(row));
    std::sort(record.rows.begin(), record.rows.end(), [](const RunRow& a, const RunRow& b) {
        return std::tie(a.n, a.index, a.repetition) < std::tie(b.n, b.index, b.repetition);
    });
    for (const auto& row : record.rows) {
        record.failures += row.status == "invariant-failure" ? 1 : 0;
        record.budget_exceeded += row.status == "budget-exceeded" ? 1 : 0;
    }
    record.wall_clock_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return record;
}

std::string format_csv(const ResultRecord& r)
{
    const auto names = column_names(r);
    std::string out = "n,index,repetition,seed,status";
    for (const auto& name : names)
        out += "," + csv_field(name);
    out += ",failures\n";
    for (const auto& row : r.rows) {
        out += std::to_string(row.n) + "," + std::to_string(row.index) + "," + std::to_string(row.repetition) + "," +
               std::to_string(row.seed) + "," + row.status;
        for (const auto& name : names) {
            out += ",";
            for (const auto& [key, value] : row.columns)
                if (key == name)
                    out += csv_field(value);
        }
        std::string failures;
        for (const auto& f : row.failures)
            failures += (failures.empty() ? "" : "; ") + f;
        out += "," + csv_field(failures) + "\n";
    }
    return out;
}

nlohmann::json to_json(const ResultRecord& r)
{
    nlohmann::json stats = nlohmann::json::object();
    for (const auto& name : column_names(r)) {
        std::vector<double> numbers;
        int trues = 0, bools = 0;
        bool numeric = true;
        for (const auto& row : r.rows) {
            for (const auto& [key, value] : row.columns) {
                if (key != name)
                    continue;
                if (value == "true" || value == "false") {
                    ++bools;
                    trues += value == "true" ? 1 : 0;
                    continue;
                }
                char* end = nullptr;
                const double x = std::strtod(value.c_str(), &end);
                if (value.empty() || *end != '\0')
                    numeric = false;
                else
                    numbers.push_back(x);
            }
        }
        if (bools > 0 && numbers.empty()) {
            stats[name] = {{"true", trues}, {"count", bools}};
        } else if (numeric && !numbers.empty()) {
            const auto [lo, hi] = std::minmax_element(numbers.begin(), numbers.end());
            double sum = 0;
            for (double x : numbers)
                sum += x;
            stats[name] = {{"min", *lo}, {"max", *hi}, {"mean", sum / static_cast<double>(numbers.size())},
                           {"count", numbers.size()}};
        }
    }
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows) {
        nlohmann::json cols = nlohmann::json::object();
        for (const auto& [key, value] : row.columns)
            cols[key] = value;
        rows.push_back({{"n", row.n},
                        {"index", row.index},
                        {"repetition", row.repetition},
                        {"seed", row.seed},
                        {"status", row.status},
                        {"columns", cols},
                        {"failures", row.failures},
                        {"seconds", row.seconds}});
    }
    return {{"manifest", to_json(r.manifest)},
            {"manifest_hash", r.manifest_hash},
            {"config", to_json(r.manifest.config)},
            {"runs", r.rows.size()},
            {"failures", r.failures},
            {"budget_exceeded", r.budget_exceeded},
            {"statistics", stats},
            {"rows", rows},
            {"wall_clock_seconds", r.wall_clock_seconds}};
}

void write_outputs(const ResultRecord& r)
{
    if (!r.manifest.csv_path.empty())
        write_text_file(r.manifest.csv_path, format_csv(r));
    if (!r.manifest.json_path.empty())
        write_text_file(r.manifest.json_path, to_json(r).dump(2) + "\n");
}

int worker_count_from_env()
{
    if (const char* env = std::getenv("DIPATH_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<int>(std::min<long>(v, 256));
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

EdgeColoring random_coloring(int edge_count, int q, std::uint64_t seed)
{
    if (q < 1)
        throw std::invalid_argument("q must be positive");
    Rng rng(seed);
    EdgeColoring c(q, edge_count);
    for (auto& x : c.colors)
        x = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(q)));
    return c;
}

std::vector<OrientedGraph> all_oriented_graphs(int n, int max_edges)
{
    if (n < 0 || n > kExhaustiveLimit)
        throw std::invalid_argument("all_oriented_graphs supports n <= " + std::to_string(kExhaustiveLimit));
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    std::vector<OrientedGraph> out;
    std::vector<int> state(pairs.size(), 0);
    for (;;) {
        const auto edges = static_cast<int>(std::count_if(state.begin(), state.end(), [](int s) { return s != 0; }));
        if (max_edges < 0 || edges <= max_edges) {
            OrientedGraph g(n);
            for (std::size_t p = 0; p < pairs.size(); ++p) {
                if (state[p] == 1)
                    g.add_edge(pairs[p].first, pairs[p].second);
                else if (state[p] == 2)
                    g.add_edge(pairs[p].second, pairs[p].first);
            }
            out.push_back(std::move(g));
        }
        std::size_t p = 0;
        while (p < state.size() && state[p] == 2)
            state[p++] = 0;
        if (p == state.size())
            break;
        ++state[p];
    }
    return out;
}

OrientedGraph random_oriented_graph(int n, double density, std::uint64_t seed, int max_edges)
{
    Rng rng(seed);
    OrientedGraph g(n);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            const bool present = unit_interval(rng) < density;
            const bool forward = coin(rng);
            if (present && (max_edges < 0 || g.edge_count() < max_edges)) {
                if (forward)
                    g.add_edge(i, j);
                else
                    g.add_edge(j, i);
            }
        }
    }
    return g;
}

} // namespace dipath
