// Test-side helpers and independent oracles. Everything here is reference
// machinery kept apart from the library code paths it checks.
#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "burn/burning.hpp"

namespace test_util {

inline constexpr int kInf = -1;

// All-pairs shortest paths by Floyd-Warshall; reference for bfs_distances.
inline std::vector<std::vector<int>> floyd_warshall(const burn::Graph& g) {
    const int n = g.n();
    std::vector<std::vector<int>> d(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), kInf));
    for (int v = 0; v < n; ++v) {
        d[v][v] = 0;
        for (int w : g.adj[static_cast<std::size_t>(v)]) d[v][w] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (d[i][k] == kInf) continue;
            for (int j = 0; j < n; ++j) {
                if (d[k][j] == kInf) continue;
                int via = d[i][k] + d[k][j];
                if (d[i][j] == kInf || via < d[i][j]) d[i][j] = via;
            }
        }
    return d;
}

// Closed-form burn times via one full BFS per activator (independent of the
// simulator's layered traversal).
inline std::vector<int> burn_times_by_activator_bfs(const burn::Graph& g,
                                                    const burn::BurningSchedule& s) {
    std::vector<int> best(static_cast<std::size_t>(g.n()), kInf);
    for (int i = 0; i < s.length(); ++i) {
        auto dist = burn::bfs_distances(g, s.activators[static_cast<std::size_t>(i)]);
        for (int v = 0; v < g.n(); ++v) {
            if (dist[static_cast<std::size_t>(v)] == burn::kUnreached) continue;
            int t = i + 1 + dist[static_cast<std::size_t>(v)];
            if (best[static_cast<std::size_t>(v)] == kInf || t < best[static_cast<std::size_t>(v)])
                best[static_cast<std::size_t>(v)] = t;
        }
    }
    return best;
}

// Random connected graph: random spanning tree plus random extra edges.
inline burn::Graph random_connected_graph(int n, burn::Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i)
        edges.emplace_back(static_cast<int>(burn::rand_below(rng, static_cast<std::uint64_t>(i))), i);
    if (n >= 2) {
        const int extra = static_cast<int>(burn::rand_below(rng, static_cast<std::uint64_t>(n) + 1));
        for (int e = 0; e < extra; ++e) {
            int u = static_cast<int>(burn::rand_below(rng, static_cast<std::uint64_t>(n)));
            int v = static_cast<int>(burn::rand_below(rng, static_cast<std::uint64_t>(n)));
            if (u != v) edges.emplace_back(u, v);
        }
    }
    return burn::Graph::from_edges(n, edges);
}

inline burn::Graph random_gnp(int n, burn::Rng& rng) {
    // p in [0.1, 0.9] drawn from the engine
    double p = 0.1 + 0.8 * (static_cast<double>(burn::rand_below(rng, 1000)) / 999.0);
    return burn::gen_gnp(n, p, rng());
}

inline burn::BurningSchedule random_schedule(int n, int max_len, burn::Rng& rng) {
    burn::BurningSchedule s;
    const int len = static_cast<int>(burn::rand_below(rng, static_cast<std::uint64_t>(max_len) + 1));
    for (int i = 0; i < len && n > 0; ++i)
        s.activators.push_back(static_cast<int>(burn::rand_below(rng, static_cast<std::uint64_t>(n))));
    return s;
}

inline burn::PathForest random_forest(int max_b, int max_len, int max_total, burn::Rng& rng) {
    std::vector<int> lengths;
    int total = 0;
    const int b = 1 + static_cast<int>(burn::rand_below(rng, static_cast<std::uint64_t>(max_b)));
    for (int i = 0; i < b; ++i) {
        int len = 1 + static_cast<int>(burn::rand_below(rng, static_cast<std::uint64_t>(max_len)));
        if (total + len > max_total) break;
        total += len;
        lengths.push_back(len);
    }
    if (lengths.empty()) lengths.push_back(1);
    return burn::PathForest(lengths);
}

// Audits the Schedule-outcome invariants of burn_guess: pairwise center
// distance >= 2g-1, every vertex within 2g-2 of a center, count <= g-1.
inline bool audit_guess_schedule(const burn::Graph& g, const burn::GuessResult& res) {
    if (!res.accepted) return false;
    if (static_cast<int>(res.centers.size()) > res.guess - 1) return false;
    std::vector<int> best(static_cast<std::size_t>(g.n()), kInf);
    for (std::size_t i = 0; i < res.centers.size(); ++i) {
        auto dist = burn::bfs_distances(g, res.centers[i]);
        for (std::size_t j = 0; j < res.centers.size(); ++j) {
            if (i == j) continue;
            int d = dist[static_cast<std::size_t>(res.centers[j])];
            if (d != burn::kUnreached && d < 2 * res.guess - 1) return false;
        }
        for (int v = 0; v < g.n(); ++v) {
            int d = dist[static_cast<std::size_t>(v)];
            if (d == burn::kUnreached) continue;
            if (best[static_cast<std::size_t>(v)] == kInf || d < best[static_cast<std::size_t>(v)])
                best[static_cast<std::size_t>(v)] = d;
        }
    }
    for (int v = 0; v < g.n(); ++v) {
        int d = best[static_cast<std::size_t>(v)];
        if (d == kInf || d > 2 * res.guess - 2) return false;
    }
    return true;
}

// Exhaustive bin-covering maximum by trying every assignment of items to at
// most `bins` bins (or discard); reference for the branch-and-bound solver.
inline int exhaustive_cover_max(const std::vector<long long>& sizes, long long denom) {
    const int n = static_cast<int>(sizes.size());
    const int max_bins = n;
    int best = 0;
    std::vector<int> assign(static_cast<std::size_t>(n), -1);
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == n) {
            std::vector<long long> load(static_cast<std::size_t>(max_bins), 0);
            for (int i = 0; i < n; ++i)
                if (assign[static_cast<std::size_t>(i)] >= 0)
                    load[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)])] +=
                        sizes[static_cast<std::size_t>(i)];
            int covered = 0;
            for (long long l : load)
                if (l >= denom) ++covered;
            best = std::max(best, covered);
            return;
        }
        int used = 0;
        for (int i = 0; i < idx; ++i) used = std::max(used, assign[static_cast<std::size_t>(i)] + 1);
        for (int bi = -1; bi <= used && bi < max_bins; ++bi) {
            assign[static_cast<std::size_t>(idx)] = bi;
            self(self, idx + 1);
        }
        assign[static_cast<std::size_t>(idx)] = -1;
    };
    rec(rec, 0);
    return best;
}

// Brute-force fire-to-path assignment for the PTAS decision: every fire can
// serve any path or stay unused; a path is burnable if its assigned 2r-1
// capacities reach its length.
inline bool brute_force_fires_burn(const burn::PathForest& f, const burn::RadiusMultiset& fires) {
    std::vector<int> radii;
    for (const auto& c : fires.classes)
        for (int i = 0; i < c.count; ++i) radii.push_back(c.radius);
    const int b = f.path_count();
    std::vector<long long> residual(f.lengths.begin(), f.lengths.end());
    auto rec = [&](auto&& self, std::size_t idx) -> bool {
        bool done = true;
        for (long long r : residual)
            if (r > 0) done = false;
        if (done) return true;
        if (idx == radii.size()) return false;
        for (int p = 0; p < b; ++p) {
            if (residual[static_cast<std::size_t>(p)] <= 0) continue;
            residual[static_cast<std::size_t>(p)] -= 2LL * radii[idx] - 1;
            if (self(self, idx + 1)) return true;
            residual[static_cast<std::size_t>(p)] += 2LL * radii[idx] - 1;
        }
        return self(self, idx + 1);  // leave unused
    };
    return rec(rec, 0);
}

}  // namespace test_util
