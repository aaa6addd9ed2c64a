#include "dipath/pseudorandom.hpp"
#include "dipath/random.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace dipath {

namespace {

using Words = std::vector<std::uint64_t>;

int popcount(const Words& w)
{
    int total = 0;
    for (auto x : w)
        total += std::popcount(x);
    return total;
}

void set_bit(Words& w, Vertex v)
{
    w[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
}

bool has_bit(const Words& w, Vertex v)
{
    return (w[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
}

std::vector<Vertex> first_members(const Words& w, int count)
{
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < w.size() && static_cast<int>(out.size()) < count; ++i) {
        auto x = w[i];
        while (x && static_cast<int>(out.size()) < count) {
            out.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(x))));
            x &= x - 1;
        }
    }
    return out;
}

// Free set after adding a to A: drop a and its out-neighbors.
void remove_closed_neighborhood(const OrientedGraph& g, Vertex a, const Words& in, Words& out)
{
    const auto row = g.out_row(a);
    for (std::size_t i = 0; i < in.size(); ++i)
        out[i] = in[i] & ~row[i];
    out[static_cast<std::size_t>(a) >> 6] &= ~(std::uint64_t{1} << (a & 63));
}

struct ViolationSearch {
    const OrientedGraph& g;
    int k;
    std::uint64_t budget;
    std::uint64_t& explored;
    std::vector<Vertex> chosen;
    std::optional<SetPair> found;

    // free_set = V minus (A and N+(A)). Candidates only ever lose members as
    // A grows, so a vertex that already leaves fewer than k free vertices is
    // dropped for the whole subtree.
    void search(const Words& free_set, const std::vector<Vertex>& candidates)
    {
        if (found)
            return;
        if (++explored > budget)
            throw BudgetExceeded("pseudorandomness search exceeded its node budget");
        if (static_cast<int>(chosen.size()) == k) {
            SetPair pair;
            pair.a = chosen;
            pair.b = first_members(free_set, k);
            found = std::move(pair);
            return;
        }
        const auto need = static_cast<std::size_t>(k) - chosen.size();
        Words next(free_set.size());
        std::vector<Vertex> viable;
        std::vector<Words> frees;
        for (auto a : candidates) {
            remove_closed_neighborhood(g, a, free_set, next);
            if (popcount(next) >= k) {
                viable.push_back(a);
                frees.push_back(next);
            }
        }
        for (std::size_t i = 0; i < viable.size() && viable.size() - i >= need; ++i) {
            chosen.push_back(viable[i]);
            std::vector<Vertex> rest(viable.begin() + static_cast<std::ptrdiff_t>(i) + 1, viable.end());
            search(frees[i], rest);
            chosen.pop_back();
            if (found)
                return;
        }
    }
};

} // namespace

Tournament::Tournament(OrientedGraph g) : g_(std::move(g))
{
    if (!is_tournament(g_))
        throw GraphError("graph is not a tournament");
}

Tournament random_tournament(int n, std::uint64_t seed)
{
    if (n < 1)
        throw std::invalid_argument("random_tournament needs n >= 1");
    Rng rng(seed);
    OrientedGraph g(n);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (coin(rng))
                g.add_edge(i, j);
            else
                g.add_edge(j, i);
        }
    }
    return Tournament(std::move(g));
}

bool is_prime(std::int64_t p)
{
    if (p < 2)
        return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

Tournament paley_tournament(int p)
{
    if (!is_prime(p))
        throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (p % 4 != 3)
        throw std::invalid_argument(std::to_string(p) + " is not 3 mod 4");
    std::vector<char> square(static_cast<std::size_t>(p), 0);
    for (std::int64_t x = 1; x < p; ++x)
        square[static_cast<std::size_t>(x * x % p)] = 1;
    OrientedGraph g(p);
    for (Vertex i = 0; i < p; ++i)
        for (Vertex j = 0; j < p; ++j)
            if (i != j && square[static_cast<std::size_t>(((i - j) % p + p) % p)])
                g.add_edge(i, j);
    return Tournament(std::move(g));
}

nlohmann::json to_json(const PseudorandomnessReport& report)
{
    nlohmann::json j;
    j["mode"] = report.mode == CheckMode::exact ? "exact" : "sampled";
    if (report.mode == CheckMode::exact) {
        j["k_star"] = report.k;
        j["vacuous"] = report.vacuous;
        j["explored"] = report.explored;
    } else {
        j["k"] = report.k;
    }
    if (report.counterexample)
        j["counterexample"] = {{"A", report.counterexample->a}, {"B", report.counterexample->b}};
    else
        j["counterexample"] = nullptr;
    j["trials"] = report.trials;
    return j;
}

std::optional<SetPair> find_violation(const OrientedGraph& g, int k, std::uint64_t node_budget,
                                      std::uint64_t& explored)
{
    const int n = g.vertex_count();
    if (k < 1 || 2 * k > n)
        return std::nullopt;
    Words all(g.words(), 0);
    for (Vertex v = 0; v < n; ++v)
        set_bit(all, v);
    std::vector<Vertex> candidates(static_cast<std::size_t>(n));
    std::iota(candidates.begin(), candidates.end(), 0);
    ViolationSearch search{g, k, node_budget, explored, {}, std::nullopt};
    search.search(all, candidates);
    return search.found;
}

PseudorandomnessReport pseudorandomness_exact(const OrientedGraph& g, std::uint64_t node_budget)
{
    PseudorandomnessReport report;
    report.mode = CheckMode::exact;
    const int half = g.vertex_count() / 2;
    std::optional<SetPair> previous;
    for (int k = 1; k <= half; ++k) {
        auto violation = find_violation(g, k, node_budget, report.explored);
        if (!violation) {
            report.k = k;
            report.counterexample = std::move(previous);
            return report;
        }
        previous = std::move(violation);
    }
    report.k = half + 1;
    report.vacuous = true;
    report.counterexample = std::move(previous);
    return report;
}

int greedy_k_star(const OrientedGraph& g)
{
    const int n = g.vertex_count();
    int best = 0;
    for (Vertex start = 0; start < n; ++start) {
        std::vector<char> in_a(static_cast<std::size_t>(n), 0);
        std::vector<char> free(static_cast<std::size_t>(n), 1);
        auto take = [&](Vertex v) {
            in_a[static_cast<std::size_t>(v)] = 1;
            free[static_cast<std::size_t>(v)] = 0;
            for (auto w : g.out_neighbors(v))
                free[static_cast<std::size_t>(w)] = 0;
        };
        take(start);
        for (int size = 1;; ++size) {
            const int f = static_cast<int>(std::count(free.begin(), free.end(), 1));
            best = std::max(best, std::min(size, f));
            if (f <= size)
                break;
            Vertex pick = -1;
            int pick_free = -1;
            for (Vertex u = 0; u < n; ++u) {
                if (in_a[static_cast<std::size_t>(u)])
                    continue;
                int left = f - (free[static_cast<std::size_t>(u)] ? 1 : 0);
                for (auto w : g.out_neighbors(u))
                    left -= free[static_cast<std::size_t>(w)] ? 1 : 0;
                if (left > pick_free) {
                    pick = u;
                    pick_free = left;
                }
            }
            if (pick < 0)
                break;
            take(pick);
        }
    }
    return best + 1;
}

PseudorandomnessReport refute_pseudorandomness(const OrientedGraph& g, int k, std::uint64_t trials,
                                               std::uint64_t seed)
{
    const int n = g.vertex_count();
    if (k < 1 || 2 * k > n)
        throw std::invalid_argument("refute_pseudorandomness needs 1 <= k <= n/2");
    PseudorandomnessReport report;
    report.mode = CheckMode::sampled;
    report.k = k;

    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    Words reach(g.words()), target(g.words());
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        ++report.trials;
        Rng rng(derive_seed(seed, trial));
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = 0; i < 2 * k; ++i) {
            const auto j = static_cast<std::size_t>(i) + uniform_below(rng, static_cast<std::uint64_t>(n - i));
            std::swap(perm[static_cast<std::size_t>(i)], perm[j]);
        }
        std::fill(reach.begin(), reach.end(), 0);
        std::fill(target.begin(), target.end(), 0);
        for (int i = 0; i < k; ++i) {
            const auto row = g.out_row(perm[static_cast<std::size_t>(i)]);
            for (std::size_t w = 0; w < reach.size(); ++w)
                reach[w] |= row[w];
            set_bit(target, perm[static_cast<std::size_t>(k + i)]);
        }
        bool edge = false;
        for (std::size_t w = 0; w < reach.size() && !edge; ++w)
            edge = (reach[w] & target[w]) != 0;
        if (!edge) {
            SetPair pair;
            pair.a.assign(perm.begin(), perm.begin() + k);
            pair.b.assign(perm.begin() + k, perm.begin() + 2 * k);
            std::sort(pair.a.begin(), pair.a.end());
            std::sort(pair.b.begin(), pair.b.end());
            report.counterexample = std::move(pair);
            break;
        }
    }
    return report;
}

DfsPathResult dfs_long_path(const OrientedGraph& g)
{
    const int n = g.vertex_count();
    DfsPathResult result;
    if (n == 0)
        return result;

    std::vector<char> unvisited(static_cast<std::size_t>(n), 1);
    std::vector<std::size_t> next(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack, best;
    int explored = 0;
    int unvisited_count = n;
    Vertex scan = 0;
    std::optional<std::vector<Vertex>> snapshot;

    auto after_move = [&] {
        if (!snapshot && explored == unvisited_count)
            snapshot = stack;
        if (stack.size() > best.size())
            best = stack;
    };

    while (explored < n) {
        if (stack.empty()) {
            while (!unvisited[static_cast<std::size_t>(scan)])
                ++scan;
            unvisited[static_cast<std::size_t>(scan)] = 0;
            --unvisited_count;
            stack.push_back(scan);
            after_move();
            continue;
        }
        const Vertex v = stack.back();
        const auto outs = g.out_neighbors(v);
        auto& i = next[static_cast<std::size_t>(v)];
        while (i < outs.size() && !unvisited[static_cast<std::size_t>(outs[i])])
            ++i;
        if (i < outs.size()) {
            const Vertex u = outs[i];
            unvisited[static_cast<std::size_t>(u)] = 0;
            --unvisited_count;
            stack.push_back(u);
        } else {
            stack.pop_back();
            ++explored;
        }
        after_move();
    }

    result.snapshot_length = snapshot && !snapshot->empty() ? static_cast<int>(snapshot->size()) - 1 : 0;
    result.max_stack_length = static_cast<int>(best.size()) - 1;
    result.path.vertices = snapshot && snapshot->size() >= best.size() ? *snapshot : best;
    return result;
}

ThreadingFailure::ThreadingFailure(int index)
    : std::runtime_error("no good vertex left in set " + std::to_string(index)), index_(index)
{
}

std::optional<DirectedPath> thread_good_sets(const OrientedGraph& g, const std::vector<std::vector<Vertex>>& sets,
                                             int* failed_index)
{
    const std::size_t t = sets.size();
    if (t == 0)
        return DirectedPath{};
    std::vector<Words> good(t, Words(g.words(), 0));
    for (auto v : sets[t - 1])
        set_bit(good[t - 1], v);
    for (std::size_t j = t - 1; j-- > 0;) {
        bool any = false;
        for (auto v : sets[j]) {
            const auto row = g.out_row(v);
            for (std::size_t w = 0; w < row.size(); ++w) {
                if (row[w] & good[j + 1][w]) {
                    set_bit(good[j], v);
                    any = true;
                    break;
                }
            }
        }
        if (!any) {
            if (failed_index)
                *failed_index = static_cast<int>(j) + 1;
            return std::nullopt;
        }
    }
    if (popcount(good[0]) == 0) {
        if (failed_index)
            *failed_index = 1;
        return std::nullopt;
    }

    DirectedPath path;
    path.vertices.push_back(first_members(good[0], 1).front());
    for (std::size_t j = 1; j < t; ++j) {
        const Vertex prev = path.vertices.back();
        Vertex pick = -1;
        for (auto v : sets[j])
            if (has_bit(good[j], v) && g.has_edge(prev, v) && (pick < 0 || v < pick))
                pick = v;
        path.vertices.push_back(pick);
    }
    return path;
}

DirectedPath thread_path_through_sets(const OrientedGraph& g, int k, const std::vector<std::vector<Vertex>>& sets)
{
    if (k < 1)
        throw std::invalid_argument("k must be positive");
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (static_cast<int>(sets[i].size()) < 2 * k)
            throw std::invalid_argument("set " + std::to_string(i + 1) + " has fewer than 2k vertices");
        for (auto v : sets[i]) {
            if (v < 0 || v >= g.vertex_count())
                throw std::invalid_argument("vertex out of range in set " + std::to_string(i + 1));
            if (used[static_cast<std::size_t>(v)])
                throw std::invalid_argument("sets are not disjoint");
            used[static_cast<std::size_t>(v)] = 1;
        }
    }
    int failed = 0;
    auto path = thread_good_sets(g, sets, &failed);
    if (!path)
        throw ThreadingFailure(failed);
    return *path;
}

} // namespace dipath
