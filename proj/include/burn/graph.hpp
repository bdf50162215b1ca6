// Graph representation, edge-list / path-forest parsing, BFS distances, and
// structural classification.
//
// File formats:
//   Edge list   — optional first line "n <count>"; then lines "<u> <v>" with
//                 ASCII decimal indices; '#' starts a comment line; LF or
//                 CRLF. Duplicate edges collapse; self-loops are errors.
//   Path forest — one non-comment line "paths <n1> <n2> ...".
#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "burn/common.hpp"

namespace burn {

inline constexpr int kUnreached = -1;
inline constexpr int kNoDepthLimit = std::numeric_limits<int>::max();

// Undirected, unweighted simple graph over dense vertex ids 0..n-1.
// Immutable after construction; all operations on it are pure.
struct Graph {
    std::vector<std::vector<int>> adj;  // sorted neighbor lists
    std::int64_t m = 0;                 // edges, counted once per unordered pair

    int n() const { return static_cast<int>(adj.size()); }

    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    // Builds from an unordered edge list; dedupes, sorts adjacency, rejects
    // self-loops and out-of-range endpoints.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        if (n < 0) throw InputError("vertex count must be non-negative");
        Graph g;
        g.adj.assign(static_cast<std::size_t>(n), {});
        for (const auto& [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw InputError("edge endpoint out of range");
            if (u == v) throw InputError("self-loop");
            g.adj[static_cast<std::size_t>(u)].push_back(v);
            g.adj[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& nb : g.adj) {
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
            g.m += static_cast<std::int64_t>(nb.size());
        }
        g.m /= 2;
        return g;
    }
};

// Disjoint union of simple paths, identified by sorted vertex counts.
struct PathForest {
    std::vector<int> lengths;  // non-decreasing, all >= 1

    explicit PathForest(std::vector<int> ls) : lengths(std::move(ls)) {
        if (lengths.empty()) throw InputError("path forest needs at least one path");
        for (int len : lengths)
            if (len <= 0) throw InputError("path length must be positive");
        std::sort(lengths.begin(), lengths.end());
    }

    int path_count() const { return static_cast<int>(lengths.size()); }

    int total_vertices() const {
        return std::accumulate(lengths.begin(), lengths.end(), 0);
    }

    // First vertex id of path i in the expanded graph.
    int block_start(int i) const {
        int s = 0;
        for (int j = 0; j < i; ++j) s += lengths[static_cast<std::size_t>(j)];
        return s;
    }
};

enum class GraphKind { general, forest_of_trees, single_tree, path_forest };

struct GraphShape {
    GraphKind kind = GraphKind::general;
    int component_count = 0;
};

inline const char* to_string(GraphKind k) {
    switch (k) {
        case GraphKind::general: return "general";
        case GraphKind::forest_of_trees: return "forest-of-trees";
        case GraphKind::single_tree: return "single-tree";
        case GraphKind::path_forest: return "path-forest";
    }
    return "?";
}

namespace detail {

inline bool parse_int(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    std::size_t i = tok[0] == '-' ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (tok[i] < '0' || tok[i] > '9') return false;
    try {
        out = std::stoll(tok);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

inline std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

inline std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace detail

// Parses the edge-list format. Header "n <count>" is optional; without it,
// n = max index + 1 (so isolated vertices exist only when declared).
inline Graph parse_graph(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    long long declared_n = -1;
    long long max_index = -1;
    std::string raw;
    int line_no = 0;
    bool first_content = true;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = detail::strip_cr(raw);
        if (line.empty() || line[0] == '#') continue;
        auto toks = detail::split_ws(line);
        if (toks.empty()) continue;
        if (first_content && toks[0] == "n") {
            first_content = false;
            long long cnt;
            if (toks.size() != 2 || !detail::parse_int(toks[1], cnt) || cnt < 0)
                throw ParseError("line " + std::to_string(line_no) + ": bad header");
            declared_n = cnt;
            continue;
        }
        first_content = false;
        long long u, v;
        if (toks.size() != 2 || !detail::parse_int(toks[0], u) || !detail::parse_int(toks[1], v))
            throw ParseError("line " + std::to_string(line_no) + ": malformed edge");
        if (u < 0 || v < 0)
            throw ParseError("line " + std::to_string(line_no) + ": negative index");
        if (declared_n >= 0 && (u >= declared_n || v >= declared_n))
            throw ParseError("line " + std::to_string(line_no) + ": index out of declared range");
        if (u == v)
            throw ParseError("line " + std::to_string(line_no) + ": self-loop");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_index = std::max(max_index, std::max(u, v));
    }
    long long n = declared_n >= 0 ? declared_n : max_index + 1;
    return Graph::from_edges(static_cast<int>(n), edges);
}

// Parses "paths <n1> <n2> ..."; lengths come out sorted.
inline PathForest parse_path_forest(std::istream& in) {
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = detail::strip_cr(raw);
        if (line.empty() || line[0] == '#') continue;
        auto toks = detail::split_ws(line);
        if (toks.empty()) continue;
        if (toks[0] != "paths" || toks.size() < 2)
            throw ParseError("line " + std::to_string(line_no) + ": expected \"paths <n1> <n2> ...\"");
        std::vector<int> lengths;
        for (std::size_t i = 1; i < toks.size(); ++i) {
            long long len;
            if (!detail::parse_int(toks[i], len))
                throw ParseError("line " + std::to_string(line_no) + ": malformed length");
            if (len <= 0)
                throw ParseError("line " + std::to_string(line_no) + ": path length must be positive");
            lengths.push_back(static_cast<int>(len));
        }
        return PathForest(lengths);
    }
    throw ParseError("no \"paths\" line found");
}

// Disjoint union of paths; blocks laid out in (sorted) length order with
// consecutive ids inside each path.
inline Graph expand_forest(const PathForest& f) {
    std::vector<std::pair<int, int>> edges;
    int base = 0;
    for (int len : f.lengths) {
        for (int i = 1; i < len; ++i) edges.emplace_back(base + i - 1, base + i);
        base += len;
    }
    return Graph::from_edges(base, edges);
}

// Unweighted shortest-path distances from source, exact within depth_limit;
// vertices farther away (or unreachable) get kUnreached. edge_scans, when
// given, accrues one unit per adjacency entry inspected.
inline std::vector<int> bfs_distances(const Graph& g, int source,
                                      int depth_limit = kNoDepthLimit,
                                      std::uint64_t* edge_scans = nullptr) {
    std::vector<int> dist(static_cast<std::size_t>(g.n()), kUnreached);
    if (source < 0 || source >= g.n()) throw InputError("bfs source out of range");
    std::vector<int> queue;
    queue.reserve(16);
    queue.push_back(source);
    dist[static_cast<std::size_t>(source)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        int d = dist[static_cast<std::size_t>(v)];
        if (d >= depth_limit) continue;
        for (int w : g.adj[static_cast<std::size_t>(v)]) {
            if (edge_scans) ++*edge_scans;
            if (dist[static_cast<std::size_t>(w)] == kUnreached) {
                dist[static_cast<std::size_t>(w)] = d + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

namespace detail {

// Component ids via BFS; returns count, fills label.
inline int components(const Graph& g, std::vector<int>& label) {
    label.assign(static_cast<std::size_t>(g.n()), -1);
    int count = 0;
    std::vector<int> queue;
    for (int s = 0; s < g.n(); ++s) {
        if (label[static_cast<std::size_t>(s)] != -1) continue;
        label[static_cast<std::size_t>(s)] = count;
        queue.clear();
        queue.push_back(s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (int w : g.adj[static_cast<std::size_t>(queue[head])]) {
                if (label[static_cast<std::size_t>(w)] == -1) {
                    label[static_cast<std::size_t>(w)] = count;
                    queue.push_back(w);
                }
            }
        }
        ++count;
    }
    return count;
}

}  // namespace detail

// Most specific true classification, in the order
// path-forest > single-tree > forest-of-trees > general.
inline GraphShape classify(const Graph& g) {
    GraphShape shape;
    std::vector<int> label;
    shape.component_count = detail::components(g, label);
    if (g.n() == 0) return shape;  // empty graph: general by convention
    bool acyclic = g.m == g.n() - shape.component_count;
    bool max_deg_le2 = true;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > 2) max_deg_le2 = false;
    if (acyclic && max_deg_le2)
        shape.kind = GraphKind::path_forest;
    else if (acyclic && shape.component_count == 1)
        shape.kind = GraphKind::single_tree;
    else if (acyclic)
        shape.kind = GraphKind::forest_of_trees;
    else
        shape.kind = GraphKind::general;
    return shape;
}

// Recovers a path forest from a graph that classifies as one, together with
// the map from the canonical expanded layout (sorted blocks, left-to-right)
// back to the input's vertex ids. Each component is walked from its
// smallest-id endpoint; components are laid out in (length, smallest-id)
// order to match the sorted lengths.
inline std::pair<PathForest, std::vector<int>> recover_forest_layout(const Graph& g) {
    if (classify(g).kind != GraphKind::path_forest || g.n() == 0)
        throw InputError("graph is not a non-empty path forest");
    std::vector<int> label;
    const int count = detail::components(g, label);
    std::vector<std::vector<int>> members(static_cast<std::size_t>(count));
    for (int v = 0; v < g.n(); ++v) members[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])].push_back(v);

    std::vector<std::vector<int>> walks;
    walks.reserve(static_cast<std::size_t>(count));
    for (const auto& comp : members) {
        int start = -1;
        for (int v : comp)
            if (g.degree(v) <= 1 && (start == -1 || v < start)) start = v;
        std::vector<int> walk = {start};
        int prev = -1, cur = start;
        while (static_cast<int>(walk.size()) < static_cast<int>(comp.size())) {
            int next = -1;
            for (int w : g.adj[static_cast<std::size_t>(cur)])
                if (w != prev) next = w;
            walk.push_back(next);
            prev = cur;
            cur = next;
        }
        walks.push_back(std::move(walk));
    }
    std::sort(walks.begin(), walks.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.front() < b.front();
    });
    std::vector<int> lengths;
    std::vector<int> to_input;
    to_input.reserve(static_cast<std::size_t>(g.n()));
    for (const auto& walk : walks) {
        lengths.push_back(static_cast<int>(walk.size()));
        for (int v : walk) to_input.push_back(v);
    }
    return {PathForest(lengths), std::move(to_input)};
}

// Recovers sorted path lengths from a graph that classifies as path-forest.
inline PathForest recover_path_forest(const Graph& g) {
    return recover_forest_layout(g).first;
}

}  // namespace burn
