// Burn-Guess-Tree and its driver: the 2-approximation for trees.
//
// The tree is rooted at an arbitrary vertex. Each step picks the unmarked
// vertex of maximum level (smallest index on ties), takes its g-ancestor
// (the root when the level is below g) as a center, and marks everything
// within tree distance g of that center. Up to g centers are allowed; the
// step that would require center g+1 refuses with Bad-Guess, which implies
// no g-site partition exists and hence the burning number exceeds g.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "burn/approx_general.hpp"
#include "burn/common.hpp"
#include "burn/graph.hpp"
#include "burn/schedule.hpp"

namespace burn {

struct RootedTree {
    const Graph* graph = nullptr;
    int root = 0;
    std::vector<int> parent;  // parent[root] == root
    std::vector<int> level;   // distance to root
};

inline RootedTree root_tree(const Graph& g, int root) {
    if (g.n() == 0) throw InputError("cannot root an empty tree");
    if (root < 0 || root >= g.n()) throw InputError("root out of range");
    const GraphShape shape = classify(g);
    if (shape.kind != GraphKind::single_tree && shape.kind != GraphKind::path_forest)
        throw InputError("not a tree");
    if (shape.component_count != 1) throw InputError("not a connected tree");
    RootedTree t;
    t.graph = &g;
    t.root = root;
    t.level = bfs_distances(g, root);
    t.parent.assign(static_cast<std::size_t>(g.n()), root);
    for (int v = 0; v < g.n(); ++v)
        for (int w : g.adj[static_cast<std::size_t>(v)])
            if (t.level[static_cast<std::size_t>(w)] == t.level[static_cast<std::size_t>(v)] + 1)
                t.parent[static_cast<std::size_t>(w)] = v;
    return t;
}

struct TreeGuessStep {
    int picked = -1;  // deepest unmarked vertex at this step
    int center = -1;  // its g-ancestor (or the root)
};

struct TreeGuessResult {
    int guess = 0;
    bool accepted = false;
    std::vector<int> centers;
    std::vector<TreeGuessStep> transcript;  // one entry per selected center
};

inline TreeGuessResult burn_guess_tree(const RootedTree& t, int guess) {
    if (guess < 1) throw InputError("guess must be positive");
    const Graph& g = *t.graph;
    TreeGuessResult res;
    res.guess = guess;
    std::vector<char> marked(static_cast<std::size_t>(g.n()), 0);
    int unmarked = g.n();
    while (unmarked > 0) {
        if (static_cast<int>(res.centers.size()) == guess) {
            res.accepted = false;  // a (g+1)-th center would be required
            return res;
        }
        int pick = -1;
        for (int v = 0; v < g.n(); ++v) {
            if (marked[static_cast<std::size_t>(v)]) continue;
            if (pick == -1 || t.level[static_cast<std::size_t>(v)] > t.level[static_cast<std::size_t>(pick)])
                pick = v;  // ties keep the smaller index
        }
        int center = pick;
        if (t.level[static_cast<std::size_t>(pick)] >= guess) {
            for (int hop = 0; hop < guess; ++hop) center = t.parent[static_cast<std::size_t>(center)];
        } else {
            center = t.root;
        }
        res.centers.push_back(center);
        res.transcript.push_back({pick, center});
        auto dist = bfs_distances(g, center, guess);
        for (int v = 0; v < g.n(); ++v) {
            if (dist[static_cast<std::size_t>(v)] != kUnreached && !marked[static_cast<std::size_t>(v)]) {
                marked[static_cast<std::size_t>(v)] = 1;
                --unmarked;
            }
        }
    }
    res.accepted = true;
    return res;
}

// Minimal accepting g* over [1, n]; emits the center schedule repaired to
// strict form. Bad-Guess at g*-1 rules out a (g*-1)-site partition, so the
// burning number is at least g*.
inline ApproxResult approx2(const Graph& g, int root_choice = -1,
                            SearchMode mode = SearchMode::binary) {
    if (classify(g).kind != GraphKind::single_tree &&
        !(classify(g).kind == GraphKind::path_forest && classify(g).component_count == 1))
        throw InputError("approx2 requires a connected tree");
    const int root = root_choice < 0 ? 0 : root_choice;
    const RootedTree t = root_tree(g, root);
    ApproxResult res;
    res.ratio_bound = {2, 1};
    TreeGuessResult accepted;
    auto accept = [&](int gv) {
        TreeGuessResult r = burn_guess_tree(t, gv);
        if (r.accepted) accepted = std::move(r);
        return r.accepted;
    };
    const int g_star = detail::minimal_accepting_guess(1, g.n(), mode, accept);
    if (!accepted.accepted || accepted.guess != g_star) accept(g_star);
    res.accepted_guess = g_star;
    BurningSchedule lenient;
    lenient.activators = accepted.centers;
    res.schedule = canonicalize(g, lenient);
    res.rounds = simulate(g, res.schedule).completion_round;
    res.opt_lower_bound = g_star;  // valid for g* = 1 too: n >= 1
    return res;
}

}  // namespace burn
