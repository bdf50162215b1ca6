// Ground-truth solvers.
//
// exact_burning_number: minimal completion round by exhaustive search. The
// search runs over ball covers rather than raw activator sequences: a graph
// burns within t rounds iff balls B(x_i, t - i), i = 1..t, can cover V
// (unused rounds allowed), and any completing lenient schedule repairs to a
// strict one with no worse completion (canonicalize), so the two spaces have
// the same optimum. Iterative deepening on t with failed-state memoization.
//
// path_dp: bottom-up reachability of burned-prefix vectors for path forests.
// A vector v is reachable at level t iff some v - i*e_j (0 <= i <= min(v_j,
// 2t-1)) is reachable at level t-1; the level-t transition corresponds to a
// fire ignited at round t* - t + 1 with spread t - 1, which burns at most
// 2t-1 path vertices. Backpointers at first insertion give the schedule.
//
// coverage_feasible: a path forest burns in t rounds iff the odd sizes
// {1, 3, ..., 2t-1} can be assigned (each at most once) so that path j
// receives total at least n_j. Serves as a second, independent exact route
// and scales far beyond the DP's table bound.
#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "burn/common.hpp"
#include "burn/graph.hpp"
#include "burn/schedule.hpp"

namespace burn {

struct ExactResult {
    int burning_number = 0;
    BurningSchedule schedule;        // strict-valid, completes in exactly burning_number
    std::uint64_t work_units = 0;    // search nodes / stored DP states
};

struct OracleCaps {
    int general_vertex_cap = 12;
    int path_forest_vertex_cap = 40;
    std::uint64_t node_budget = 80'000'000;
};

struct DpCaps {
    std::uint64_t state_cap = 20'000'000;  // bound on b * prod(n_i + 1)
};

namespace detail {

struct CoverKey {
    std::uint64_t covered;
    std::uint64_t used;
    bool operator==(const CoverKey& o) const { return covered == o.covered && used == o.used; }
};

struct CoverKeyHash {
    std::size_t operator()(const CoverKey& k) const {
        std::uint64_t x = k.covered * 0x9e3779b97f4a7c15ULL ^ (k.used + 0x7f4a7c15u);
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        return static_cast<std::size_t>(x);
    }
};

struct CoverSearch {
    int n = 0;
    int t = 0;
    std::uint64_t full = 0;
    std::uint64_t budget = 0;
    std::uint64_t nodes = 0;
    std::vector<std::vector<std::uint64_t>> ball;  // ball[v][r], r <= t-1
    std::vector<int> max_ball_size;                // per radius
    std::vector<std::uint64_t> comp_mask;          // per component
    std::unordered_set<CoverKey, CoverKeyHash> failed;
    std::vector<std::pair<int, int>> assignment;   // (round, center)

    bool dfs(std::uint64_t covered, std::uint64_t used_rounds) {
        if (covered == full) return true;
        if (++nodes > budget) throw CapExceeded("oracle search budget exceeded");
        const CoverKey key{covered, used_rounds};
        if (failed.count(key)) return false;

        int remaining = 0;
        long long capacity = 0;
        for (int i = 1; i <= t; ++i) {
            if (used_rounds & (1ULL << i)) continue;
            ++remaining;
            capacity += max_ball_size[static_cast<std::size_t>(t - i)];
        }
        const std::uint64_t uncovered = full & ~covered;
        if (static_cast<long long>(std::popcount(covered)) + capacity < n) {
            failed.insert(key);
            return false;
        }
        int open_components = 0;
        for (const auto& cm : comp_mask)
            if (cm & uncovered) ++open_components;
        if (open_components > remaining) {
            failed.insert(key);
            return false;
        }

        // Branch on the uncovered vertex with the fewest (round, center) options.
        int target = -1;
        long long best_options = -1;
        for (int v = 0; v < n; ++v) {
            if (!(uncovered >> v & 1)) continue;
            long long options = 0;
            for (int i = 1; i <= t; ++i) {
                if (used_rounds & (1ULL << i)) continue;
                options += std::popcount(ball[static_cast<std::size_t>(v)][static_cast<std::size_t>(t - i)]);
            }
            if (best_options == -1 || options < best_options) {
                best_options = options;
                target = v;
            }
        }

        for (int i = 1; i <= t; ++i) {
            if (used_rounds & (1ULL << i)) continue;
            const int radius = t - i;
            std::unordered_set<std::uint64_t> tried;
            std::uint64_t centers = ball[static_cast<std::size_t>(target)][static_cast<std::size_t>(radius)];
            while (centers) {
                int c = std::countr_zero(centers);
                centers &= centers - 1;
                std::uint64_t cover = ball[static_cast<std::size_t>(c)][static_cast<std::size_t>(radius)];
                if (!tried.insert(cover).second) continue;
                assignment.emplace_back(i, c);
                if (dfs(covered | cover, used_rounds | (1ULL << i))) return true;
                assignment.pop_back();
            }
        }
        failed.insert(key);
        return false;
    }
};

inline int isqrt_ceil(int x) {
    int r = static_cast<int>(std::sqrt(static_cast<double>(x)));
    while (r * r < x) ++r;
    while (r > 0 && (r - 1) * (r - 1) >= x) --r;
    return r;
}

}  // namespace detail

// Brute-force burning number. Throws CapExceeded above the vertex caps
// (path forests get the larger cap) or past the node budget.
inline ExactResult exact_burning_number(const Graph& g, const OracleCaps& caps = {}) {
    const int n = g.n();
    if (n == 0) return {0, {}, 0};
    const GraphShape shape = classify(g);
    const int cap = shape.kind == GraphKind::path_forest ? caps.path_forest_vertex_cap
                                                         : caps.general_vertex_cap;
    if (n > cap || n > 64)
        throw CapExceeded("oracle too large: n = " + std::to_string(n));

    std::vector<std::vector<int>> dist;
    dist.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) dist.push_back(bfs_distances(g, v));

    std::vector<int> comp_label;
    const int comp_count = detail::components(g, comp_label);
    std::vector<std::uint64_t> comp_mask(static_cast<std::size_t>(comp_count), 0);
    for (int v = 0; v < n; ++v)
        comp_mask[static_cast<std::size_t>(comp_label[static_cast<std::size_t>(v)])] |= 1ULL << v;

    const bool connected = comp_count == 1;
    const int t_limit = connected ? 2 * detail::isqrt_ceil(n) - 1 : n;

    std::uint64_t total_nodes = 0;
    for (int t = 1; t <= t_limit; ++t) {
        detail::CoverSearch search;
        search.n = n;
        search.t = t;
        search.full = n == 64 ? ~0ULL : (1ULL << n) - 1;
        search.budget = caps.node_budget - total_nodes;
        search.comp_mask = comp_mask;
        search.ball.assign(static_cast<std::size_t>(n),
                           std::vector<std::uint64_t>(static_cast<std::size_t>(t), 0));
        search.max_ball_size.assign(static_cast<std::size_t>(t), 0);
        for (int v = 0; v < n; ++v) {
            for (int r = 0; r < t; ++r) {
                std::uint64_t mask = 0;
                for (int w = 0; w < n; ++w) {
                    int d = dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
                    if (d != kUnreached && d <= r) mask |= 1ULL << w;
                }
                search.ball[static_cast<std::size_t>(v)][static_cast<std::size_t>(r)] = mask;
                search.max_ball_size[static_cast<std::size_t>(r)] =
                    std::max(search.max_ball_size[static_cast<std::size_t>(r)], std::popcount(mask));
            }
        }
        bool found = search.dfs(0, 0);
        total_nodes += search.nodes;
        if (!found) continue;

        // Materialize: fires at their assigned rounds, compressed to a
        // contiguous prefix (igniting earlier only enlarges a ball), then
        // repaired to strict form. Completion stays exactly t: it cannot
        // exceed t (coverage) and cannot beat t (minimality of the scan).
        auto fires = search.assignment;
        std::sort(fires.begin(), fires.end());
        BurningSchedule lenient;
        for (const auto& [round, center] : fires) lenient.activators.push_back(center);
        BurningSchedule strict = canonicalize(g, lenient);
        auto outcome = simulate(g, strict);
        if (!outcome.complete || outcome.completion_round != t)
            throw std::logic_error("oracle reconstruction mismatch");
        return {t, std::move(strict), total_nodes};
    }
    throw std::logic_error("oracle scan exhausted without a schedule");
}

// Polynomial DP for path forests. Throws CapExceeded when b * prod(n_i + 1)
// overruns the configured state cap.
inline ExactResult path_dp(const PathForest& f, const DpCaps& caps = {}) {
    const int b = f.path_count();
    const auto& len = f.lengths;
    std::uint64_t table_bound = static_cast<std::uint64_t>(b);
    for (int l : len) {
        if (table_bound > caps.state_cap / static_cast<std::uint64_t>(l + 1) + 1)
            throw CapExceeded("path_dp table bound exceeds state cap");
        table_bound *= static_cast<std::uint64_t>(l + 1);
    }
    if (table_bound > caps.state_cap)
        throw CapExceeded("path_dp table bound exceeds state cap");

    std::vector<std::uint64_t> weight(static_cast<std::size_t>(b), 1);
    for (int j = 1; j < b; ++j)
        weight[static_cast<std::size_t>(j)] =
            weight[static_cast<std::size_t>(j - 1)] * static_cast<std::uint64_t>(len[static_cast<std::size_t>(j - 1)] + 1);
    std::uint64_t full_code = 0;
    for (int j = 0; j < b; ++j)
        full_code += weight[static_cast<std::size_t>(j)] * static_cast<std::uint64_t>(len[static_cast<std::size_t>(j)]);

    struct Back {
        int level;
        int path;
        int amount;
    };
    std::unordered_map<std::uint64_t, Back> first_seen;  // code -> first reaching transition
    first_seen.reserve(1024);
    std::vector<std::uint64_t> prev = {0};
    first_seen[0] = {0, -1, 0};

    const int total = f.total_vertices();
    int t_star = -1;
    for (int t = 1; t <= total && t_star < 0; ++t) {
        std::vector<std::uint64_t> next = prev;  // monotone closure: reduce-by-0
        std::vector<int> coords(static_cast<std::size_t>(b));
        for (std::uint64_t code : prev) {
            std::uint64_t c = code;
            for (int j = 0; j < b; ++j) {
                coords[static_cast<std::size_t>(j)] =
                    static_cast<int>(c % static_cast<std::uint64_t>(len[static_cast<std::size_t>(j)] + 1));
                c /= static_cast<std::uint64_t>(len[static_cast<std::size_t>(j)] + 1);
            }
            for (int j = 0; j < b; ++j) {
                const int room = len[static_cast<std::size_t>(j)] - coords[static_cast<std::size_t>(j)];
                const int hi = std::min(room, 2 * t - 1);
                for (int i = 1; i <= hi; ++i) {
                    std::uint64_t code2 = code + weight[static_cast<std::size_t>(j)] * static_cast<std::uint64_t>(i);
                    if (first_seen.emplace(code2, Back{t, j, i}).second) {
                        next.push_back(code2);
                        if (first_seen.size() > caps.state_cap)
                            throw CapExceeded("path_dp stored states exceed cap");
                    }
                }
            }
        }
        if (first_seen.count(full_code) && first_seen[full_code].level <= t) t_star = t;
        prev = std::move(next);
    }
    if (t_star < 0) throw std::logic_error("path_dp scan exhausted");

    // Peel backpointers: the level-t transition is the fire ignited at round
    // t* - t + 1; it burns the next i-vertex block of path j left to right,
    // centered one spread to the right of the block start (clamped).
    struct Fire {
        int round;
        int vertex;
    };
    std::vector<Fire> fires;
    std::vector<int> remaining = len;
    std::uint64_t code = full_code;
    while (code != 0) {
        const Back bk = first_seen[code];
        const int j = bk.path;
        if (bk.amount > 0) {
            const int lo = len[static_cast<std::size_t>(j)] - remaining[static_cast<std::size_t>(j)];
            const int spread = bk.level - 1;
            const int center = std::min(lo + spread, len[static_cast<std::size_t>(j)] - 1);
            fires.push_back({t_star - bk.level + 1, f.block_start(j) + center});
            remaining[static_cast<std::size_t>(j)] -= bk.amount;
        }
        code -= weight[static_cast<std::size_t>(j)] * static_cast<std::uint64_t>(bk.amount);
    }
    std::sort(fires.begin(), fires.end(), [](const Fire& a, const Fire& b2) { return a.round < b2.round; });

    const Graph g = expand_forest(f);
    BurningSchedule lenient;
    for (const auto& fire : fires) lenient.activators.push_back(fire.vertex);
    BurningSchedule strict = canonicalize(g, lenient);
    auto outcome = simulate(g, strict);
    if (!outcome.complete || outcome.completion_round != t_star)
        throw std::logic_error("path_dp reconstruction mismatch");
    return {t_star, std::move(strict), first_seen.size()};
}

namespace detail {

struct CoverageSearch {
    std::vector<int> sizes;       // descending odd sizes
    std::vector<long long> suffix_sum;
    std::unordered_set<std::string> failed;

    bool dfs(std::size_t idx, std::vector<int>& residual) {
        long long need = 0;
        for (int r : residual) need += r;
        if (need == 0) return true;
        if (idx == sizes.size() || need > suffix_sum[idx]) return false;
        std::string key(2 * residual.size() + sizeof(std::size_t), '\0');
        std::memcpy(key.data(), &idx, sizeof(std::size_t));
        for (std::size_t i = 0; i < residual.size(); ++i) {
            key[sizeof(std::size_t) + 2 * i] = static_cast<char>(residual[i] & 0xff);
            key[sizeof(std::size_t) + 2 * i + 1] = static_cast<char>((residual[i] >> 8) & 0xff);
        }
        if (failed.count(key)) return false;

        const int s = sizes[idx];
        int last = -1;
        for (std::size_t i = 0; i < residual.size(); ++i) {
            if (residual[i] == 0 || residual[i] == last) continue;  // dedupe equal residuals
            last = residual[i];
            const int saved = residual[i];
            residual[i] = std::max(0, saved - s);
            // keep sorted descending
            std::vector<int> sorted = residual;
            std::sort(sorted.begin(), sorted.end(), std::greater<int>());
            bool ok = dfs(idx + 1, sorted);
            residual[i] = saved;
            if (ok) return true;
        }
        if (dfs(idx + 1, residual)) return true;  // leave this size unused
        failed.insert(key);
        return false;
    }
};

}  // namespace detail

// Exact decision through the odd-sizes assignment characterization.
inline bool coverage_feasible(const PathForest& f, int t) {
    if (t <= 0) return false;
    const int b = f.path_count();
    if (b > t) return false;
    long long capacity = static_cast<long long>(t) * t;  // sum of {1,3,...,2t-1}
    if (f.total_vertices() > capacity) return false;
    detail::CoverageSearch search;
    for (int i = t; i >= 1; --i) search.sizes.push_back(2 * i - 1);
    search.suffix_sum.assign(search.sizes.size() + 1, 0);
    for (std::size_t i = search.sizes.size(); i-- > 0;)
        search.suffix_sum[i] = search.suffix_sum[i + 1] + search.sizes[i];
    std::vector<int> residual(f.lengths.rbegin(), f.lengths.rend());  // descending
    return search.dfs(0, residual);
}

// Smallest t with coverage_feasible; equals the burning number.
inline int coverage_optimum(const PathForest& f) {
    int t = std::max(f.path_count(), detail::isqrt_ceil(f.total_vertices()));
    while (!coverage_feasible(f, t)) ++t;
    return t;
}

}  // namespace burn
