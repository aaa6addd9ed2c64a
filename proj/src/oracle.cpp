#include "dipath/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

namespace dipath {

namespace {

constexpr int kLeafComponentLimit = 31;
constexpr int kPrefixTarget = 64;

using Mask = std::uint64_t;

Mask bit(Vertex v)
{
    return Mask{1} << v;
}

struct SubtreeResult {
    int value = std::numeric_limits<int>::max();
    std::optional<EdgeColoring> witness;
    std::uint64_t explored = 0;
};

// Depth-first assignment of edge colors in id order with one pruning rule:
// a partial coloring that already holds a monochromatic path of length
// >= bound is abandoned. Each such path is caught when its last edge is
// assigned, so every leaf reached has max monochromatic path < bound.
class ColoringSearch {
public:
    ColoringSearch(const OrientedGraph& g, int q) : g_(g), q_(q), m_(g.edge_count())
    {
        const auto n = static_cast<std::size_t>(g.vertex_count());
        out_.resize(n);
        in_.resize(n);
        for (int id = 0; id < m_; ++id) {
            const auto& e = g.edge(id);
            out_[static_cast<std::size_t>(e.from)].push_back({e.to, id});
            in_[static_cast<std::size_t>(e.to)].push_back({e.from, id});
        }
    }

    // Best leaf below the given prefix, searching only values < bound.
    SubtreeResult run(const std::vector<int>& prefix, int bound, int floor, bool stop_first)
    {
        colors_.assign(static_cast<std::size_t>(m_), 0);
        bound_ = bound;
        floor_ = floor;
        stop_first_ = stop_first;
        result_ = SubtreeResult{};
        done_ = false;
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            colors_[i] = prefix[i];
            ++result_.explored;
            if (long_path_through(static_cast<int>(i), bound_))
                return result_;
        }
        descend(static_cast<int>(prefix.size()));
        return result_;
    }

private:
    struct Arc {
        Vertex to;
        int id;
    };

    void descend(int index)
    {
        if (done_)
            return;
        if (index == m_) {
            leaf();
            return;
        }
        for (int c = 1; c <= q_ && !done_; ++c) {
            colors_[static_cast<std::size_t>(index)] = c;
            ++result_.explored;
            if (!long_path_through(index, bound_))
                descend(index + 1);
        }
        colors_[static_cast<std::size_t>(index)] = 0;
    }

    void leaf()
    {
        EdgeColoring coloring(q_, m_);
        coloring.colors = colors_;
        const int value = max_mono_path(g_, coloring, kLeafComponentLimit).value;
        result_.value = value;
        result_.witness = std::move(coloring);
        bound_ = value;
        if (stop_first_ || value <= floor_)
            done_ = true;
    }

    // Whether some simple path of edge id's color through that edge has
    // length >= need.
    bool long_path_through(int id, int need)
    {
        const auto& e = g_.edge(id);
        const int c = colors_[static_cast<std::size_t>(id)];
        return forward(e.to, e.from, bit(e.from) | bit(e.to), 1, need, c);
    }

    bool forward(Vertex end, Vertex start, Mask used, int length, int need, int c)
    {
        if (backward(start, used, need - length, c))
            return true;
        for (const auto& a : out_[static_cast<std::size_t>(end)]) {
            if (colors_[static_cast<std::size_t>(a.id)] != c || (used & bit(a.to)))
                continue;
            if (forward(a.to, start, used | bit(a.to), length + 1, need, c))
                return true;
        }
        return false;
    }

    bool backward(Vertex start, Mask used, int need, int c)
    {
        if (need <= 0)
            return true;
        for (const auto& a : in_[static_cast<std::size_t>(start)]) {
            if (colors_[static_cast<std::size_t>(a.id)] != c || (used & bit(a.to)))
                continue;
            if (backward(a.to, used | bit(a.to), need - 1, c))
                return true;
        }
        return false;
    }

    const OrientedGraph& g_;
    int q_;
    int m_;
    std::vector<std::vector<Arc>> out_;
    std::vector<std::vector<Arc>> in_;
    std::vector<int> colors_;
    int bound_ = 0;
    int floor_ = 0;
    bool stop_first_ = false;
    bool done_ = false;
    SubtreeResult result_;
};

void check_budget(const OrientedGraph& g, int q, std::uint64_t budget)
{
    if (q < 1)
        throw std::invalid_argument("q must be positive");
    if (g.vertex_count() > 64)
        throw BudgetExceeded("coloring search supports at most 64 vertices");
    std::uint64_t count = 1;
    for (int i = 1; i < g.edge_count(); ++i) {
        if (count > budget / static_cast<std::uint64_t>(q))
            throw BudgetExceeded("q^(|E|-1) colorings exceed the oracle budget of " + std::to_string(budget));
        count *= static_cast<std::uint64_t>(q);
    }
    if (count > budget)
        throw BudgetExceeded("q^(|E|-1) colorings exceed the oracle budget of " + std::to_string(budget));
}

// Prefixes: edge 0 fixed to color 1, then every coloring of the next few
// edges. The split depends only on q and |E|.
std::vector<std::vector<int>> prefixes(int m, int q)
{
    if (m == 0)
        return {{}};
    int depth = 0;
    long long count = 1;
    while (q > 1 && depth < m - 1 && count * q <= kPrefixTarget) {
        count *= q;
        ++depth;
    }
    std::vector<std::vector<int>> out;
    std::vector<int> digits(static_cast<std::size_t>(depth), 1);
    for (long long i = 0; i < count; ++i) {
        std::vector<int> p{1};
        p.insert(p.end(), digits.begin(), digits.end());
        out.push_back(std::move(p));
        for (int d = depth - 1; d >= 0; --d) {
            auto& x = digits[static_cast<std::size_t>(d)];
            if (++x <= q)
                break;
            x = 1;
        }
    }
    return out;
}

// Runs every prefix subtree and folds in prefix order: the first subtree
// reaching the minimum wins. Subtrees after a decisive one are skipped.
SubtreeResult search(const OrientedGraph& g, int q, int bound, int floor, bool stop_first, int workers)
{
    const auto ps = prefixes(g.edge_count(), q);
    std::vector<SubtreeResult> results(ps.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> decisive{ps.size()};
    auto is_decisive = [&](const SubtreeResult& r) { return r.witness && (stop_first || r.value <= floor); };
    auto work = [&] {
        ColoringSearch s(g, q);
        for (std::size_t i = next++; i < ps.size(); i = next++) {
            if (i > decisive.load())
                continue;
            results[i] = s.run(ps[i], bound, floor, stop_first);
            if (is_decisive(results[i])) {
                auto cur = decisive.load();
                while (i < cur && !decisive.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    const int threads = std::clamp(workers, 1, static_cast<int>(ps.size()));
    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }
    SubtreeResult out;
    const auto last = std::min(decisive.load(), ps.size() - 1);
    for (std::size_t i = 0; i <= last; ++i) {
        out.explored += results[i].explored;
        if (results[i].witness && results[i].value < out.value) {
            out.value = results[i].value;
            out.witness = results[i].witness;
        }
    }
    return out;
}

} // namespace

std::vector<OracleResult> longest_mono_path(const OrientedGraph& g, const EdgeColoring& coloring, int component_limit)
{
    if (coloring.size() != g.edge_count())
        throw std::invalid_argument("coloring does not match the graph");
    std::vector<OracleResult> out;
    for (int c = 1; c <= coloring.num_colors; ++c) {
        const auto sub = color_class_subgraph(g, coloring, c);
        OracleResult r;
        r.color = c;
        if (find_cycle(sub.graph)) {
            r.path = longest_path_exact(sub.graph, component_limit);
        } else {
            r.path = longest_path_dag(sub.graph);
        }
        r.value = r.path.length();
        r.explored = 1;
        out.push_back(std::move(r));
    }
    return out;
}

OracleResult max_mono_path(const OrientedGraph& g, const EdgeColoring& coloring, int component_limit)
{
    OracleResult best;
    for (auto& r : longest_mono_path(g, coloring, component_limit))
        if (best.color == 0 || r.value > best.value)
            best = std::move(r);
    return best;
}

OracleResult min_max_mono_path(const OrientedGraph& g, int q, std::uint64_t budget, int workers)
{
    check_budget(g, q, budget);
    const int m = g.edge_count();
    const auto s = search(g, q, m + 1, m > 0 ? 1 : 0, false, workers);
    OracleResult r;
    r.value = s.value;
    r.coloring = s.witness;
    r.explored = s.explored;
    return r;
}

ArrowingResult arrowing_check(const OrientedGraph& g, int n_target, int q, std::uint64_t budget, int workers)
{
    if (n_target < 0)
        throw std::invalid_argument("n_target must be nonnegative");
    ArrowingResult r;
    if (n_target == 0)
        return r;
    check_budget(g, q, budget);
    const auto s = search(g, q, n_target, 0, true, workers);
    r.arrows = !s.witness.has_value();
    r.witness = s.witness;
    r.explored = s.explored;
    return r;
}

nlohmann::json to_json(const OracleResult& r)
{
    nlohmann::json witness;
    if (r.coloring)
        witness = {{"coloring", r.coloring->colors}};
    else
        witness = {{"path", r.path.vertices}, {"color", r.color}};
    return {{"value", r.value}, {"witness", witness}, {"explored", r.explored}};
}

nlohmann::json to_json(const ArrowingResult& r)
{
    return {{"arrows", r.arrows},
            {"witness", r.witness ? nlohmann::json{{"coloring", r.witness->colors}} : nlohmann::json(nullptr)},
            {"explored", r.explored}};
}

} // namespace dipath
