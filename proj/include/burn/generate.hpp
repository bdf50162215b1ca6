// Instance generators: G(n,p), random recursive trees, random path forests,
// and the fixed hub/spoke/pendant gadget family. Deterministic for a fixed
// seed.
#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "burn/common.hpp"
#include "burn/graph.hpp"

namespace burn {

// Erdos-Renyi G(n,p) via geometric edge skipping, O(n + m) expected.
inline Graph gen_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0) throw InputError("gnp: need n >= 0 and p in [0,1]");
    std::vector<std::pair<int, int>> edges;
    if (n >= 2 && p > 0.0) {
        Rng rng(seed);
        if (p >= 1.0) {
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        } else {
            const double log1mp = std::log1p(-p);
            // Walk the strictly-upper-triangular pair sequence with geometric jumps.
            long long idx = -1;
            const long long total = static_cast<long long>(n) * (n - 1) / 2;
            while (true) {
                double u01 = (static_cast<double>(rng() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
                idx += 1 + static_cast<long long>(std::floor(std::log(u01) / log1mp));
                if (idx >= total) break;
                // Invert pair index -> (row, col).
                long long r = 0, before = 0;
                {
                    // row r covers pairs [before, before + n-1-r)
                    long long lo = 0, hi = n - 1;
                    while (lo < hi) {
                        long long mid = (lo + hi) / 2;
                        long long upto = mid * (2LL * n - mid - 1) / 2;  // pairs before row mid
                        if (upto <= idx) lo = mid + 1; else hi = mid;
                    }
                    r = lo - 1;
                    before = r * (2LL * n - r - 1) / 2;
                }
                int u = static_cast<int>(r);
                int v = static_cast<int>(r + 1 + (idx - before));
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edges(n, edges);
}

// Random recursive tree: vertex i attaches to a uniform earlier vertex.
inline Graph gen_random_tree(int n, std::uint64_t seed) {
    if (n < 0) throw InputError("random-tree: need n >= 0");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i)
        edges.emplace_back(static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(i))), i);
    return Graph::from_edges(n, edges);
}

inline PathForest gen_path_forest(int b, int min_len, int max_len, std::uint64_t seed) {
    if (b < 1 || min_len < 1 || max_len < min_len)
        throw InputError("paths: need b >= 1 and 1 <= min_len <= max_len");
    Rng rng(seed);
    std::vector<int> lengths;
    lengths.reserve(static_cast<std::size_t>(b));
    for (int i = 0; i < b; ++i)
        lengths.push_back(static_cast<int>(rand_range(rng, min_len, max_len)));
    return PathForest(lengths);
}

// Tightness gadget: hub 0; k spokes of length k reaching tips c_1..c_k
// (pairwise tip distance 2k, hub-to-tip distance k); a pendant path of
// 2k-2 edges hangs off c_k, ending at the terminal. 1 + k^2 + 2k - 2
// vertices total.
inline Graph gen_gadget(int k) {
    if (k < 2) throw InputError("gadget: need k >= 2");
    std::vector<std::pair<int, int>> edges;
    // spoke j occupies ids 1+(j-1)k .. jk, tip at jk
    for (int j = 0; j < k; ++j) {
        int first = 1 + j * k;
        edges.emplace_back(0, first);
        for (int d = 1; d < k; ++d) edges.emplace_back(first + d - 1, first + d);
    }
    int tip_k = k * k;
    int base = k * k + 1;  // pendant vertices base .. base + 2k - 3
    edges.emplace_back(tip_k, base);
    for (int e = 1; e < 2 * k - 2; ++e) edges.emplace_back(base + e - 1, base + e);
    return Graph::from_edges(1 + k * k + 2 * k - 2, edges);
}

inline int gadget_tip(int k, int j) { return j * k; }           // j in 1..k
inline int gadget_terminal(int k) { return k * k + 2 * k - 2; }  // far end of the pendant

}  // namespace burn
