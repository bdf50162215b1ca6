// Burning-process semantics. A schedule is an ordered activator list; the
// activator at position i ignites at the start of round i (1-based), and a
// fire ignited at round i has spread t-i by the end of round t, so
//
//     burn_time(u) = min over i of (i + d(x_i, u)).
//
// Semantics are lenient by default: igniting a vertex that is already
// burning is a no-op (the tree algorithm can emit such activators). Strict
// validation and a lenient-to-strict repair are separate operations.
//
// Schedule text format: lines "<round> <vertex>" with contiguous rounds
// 1..len; a trailing "rounds <t>" summary line is written on output and
// accepted (ignored) on input; '#' comments allowed.
#pragma once

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "burn/common.hpp"
#include "burn/graph.hpp"

namespace burn {

struct BurningSchedule {
    std::vector<int> activators;  // activators[i] ignites at round i+1

    int length() const { return static_cast<int>(activators.size()); }
};

struct BurnOutcome {
    std::vector<int> burn_time;  // kUnreached for never-burned vertices
    int completion_round = 0;    // max burn time over burned vertices (0 if none)
    bool complete = false;       // every vertex burned
};

// Lemma-style lower-bound evidence: r vertices pairwise at distance >= 2r-1
// (unreachable pairs count as far enough) certify burning number >= r.
struct DistanceCertificate {
    int r = 0;
    std::vector<int> witnesses;
};

// Multi-source BFS with staggered source times; O(n + m + len).
inline BurnOutcome simulate(const Graph& g, const BurningSchedule& s) {
    const int n = g.n();
    BurnOutcome out;
    out.burn_time.assign(static_cast<std::size_t>(n), kUnreached);
    for (int x : s.activators)
        if (x < 0 || x >= n) throw InputError("activator out of range");
    if (n == 0) {
        out.complete = true;  // empty graph burns in 0 rounds
        return out;
    }
    // Frontier buckets per round; new sources join their round's bucket.
    std::vector<std::vector<int>> frontier;
    auto at_round = [&](int t) -> std::vector<int>& {
        if (static_cast<int>(frontier.size()) <= t) frontier.resize(static_cast<std::size_t>(t) + 1);
        return frontier[static_cast<std::size_t>(t)];
    };
    int burned = 0;
    for (int i = 0; i < s.length(); ++i) {
        int v = s.activators[static_cast<std::size_t>(i)];
        auto& bt = out.burn_time[static_cast<std::size_t>(v)];
        if (bt == kUnreached) {
            bt = i + 1;
            at_round(i + 1).push_back(v);
            ++burned;
        }
        // already burning earlier: ignition is a no-op
    }
    for (int t = 1; t < static_cast<int>(frontier.size()); ++t) {
        for (std::size_t head = 0; head < frontier[static_cast<std::size_t>(t)].size(); ++head) {
            int v = frontier[static_cast<std::size_t>(t)][head];
            if (out.burn_time[static_cast<std::size_t>(v)] != t) continue;  // superseded by an earlier fire
            for (int w : g.adj[static_cast<std::size_t>(v)]) {
                auto& bt = out.burn_time[static_cast<std::size_t>(w)];
                if (bt == kUnreached || bt > t + 1) {
                    if (bt == kUnreached) ++burned;
                    bt = t + 1;
                    at_round(t + 1).push_back(w);
                }
            }
        }
    }
    for (int v = 0; v < n; ++v)
        out.completion_round = std::max(out.completion_round, out.burn_time[static_cast<std::size_t>(v)]);
    out.complete = burned == n;
    return out;
}

// Classical burning-sequence condition: activators distinct and
// d(x_i, x_j) >= j - i for all i < j (x_j not yet burning when ignited).
inline bool validate_strict(const Graph& g, const BurningSchedule& s) {
    const int len = s.length();
    for (int i = 0; i < len; ++i) {
        int xi = s.activators[static_cast<std::size_t>(i)];
        if (xi < 0 || xi >= g.n()) throw InputError("activator out of range");
        auto dist = bfs_distances(g, xi);
        for (int j = i + 1; j < len; ++j) {
            int d = dist[static_cast<std::size_t>(s.activators[static_cast<std::size_t>(j)])];
            if (d == kUnreached) continue;  // far enough
            if (d < j - i) return false;    // covers duplicates (d == 0)
        }
    }
    return true;
}

// Lenient-to-strict repair. Requires the input to burn the whole graph.
// Round by round, an activator that is already burning (under the repaired
// prefix) is replaced by the lowest-index vertex not yet burning at that
// round; if every vertex burns earlier, the tail is dropped. The result is
// strict-valid and completes no later than the input.
inline BurningSchedule canonicalize(const Graph& g, const BurningSchedule& s) {
    if (!simulate(g, s).complete) throw InputError("canonicalize requires a completing schedule");
    BurningSchedule repaired;
    for (int i = 0; i < s.length(); ++i) {
        const int round = i + 1;
        auto outcome = simulate(g, repaired);  // prefix burn times, including future spread
        auto free_at_round = [&](int v) {
            int bt = outcome.burn_time[static_cast<std::size_t>(v)];
            return bt == kUnreached || bt >= round;
        };
        int x = s.activators[static_cast<std::size_t>(i)];
        if (free_at_round(x)) {
            repaired.activators.push_back(x);
            continue;
        }
        int replacement = -1;
        for (int v = 0; v < g.n(); ++v)
            if (free_at_round(v)) { replacement = v; break; }
        if (replacement == -1) break;  // everything burns before this round; drop the rest
        repaired.activators.push_back(replacement);
    }
    return repaired;
}

// True iff all witness pairs are at distance >= 2r-1 (unreachable counts)
// and there are exactly r distinct witnesses. True implies burning number
// >= r.
inline bool verify_certificate(const Graph& g, const DistanceCertificate& c) {
    if (c.r <= 0) return false;
    if (static_cast<int>(c.witnesses.size()) != c.r) return false;
    for (int w : c.witnesses)
        if (w < 0 || w >= g.n()) throw InputError("witness out of range");
    const int need = 2 * c.r - 1;
    for (std::size_t i = 0; i < c.witnesses.size(); ++i) {
        auto dist = bfs_distances(g, c.witnesses[i], need - 1);
        for (std::size_t j = 0; j < c.witnesses.size(); ++j) {
            if (i == j) continue;
            int d = dist[static_cast<std::size_t>(c.witnesses[j])];
            if (d != kUnreached && d < need) return false;
        }
    }
    return true;
}

inline BurningSchedule parse_schedule(std::istream& in) {
    BurningSchedule s;
    std::string raw;
    int line_no = 0;
    int expected_round = 1;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = detail::strip_cr(raw);
        if (line.empty() || line[0] == '#') continue;
        auto toks = detail::split_ws(line);
        if (toks.empty()) continue;
        if (toks[0] == "rounds") continue;  // output summary line; ignore
        long long round, vertex;
        if (toks.size() != 2 || !detail::parse_int(toks[0], round) || !detail::parse_int(toks[1], vertex))
            throw ParseError("line " + std::to_string(line_no) + ": malformed schedule entry");
        if (round != expected_round)
            throw ParseError("line " + std::to_string(line_no) + ": rounds must be contiguous from 1");
        if (vertex < 0)
            throw ParseError("line " + std::to_string(line_no) + ": negative vertex");
        s.activators.push_back(static_cast<int>(vertex));
        ++expected_round;
    }
    return s;
}

inline void write_schedule(std::ostream& out, const BurningSchedule& s, int rounds) {
    for (int i = 0; i < s.length(); ++i)
        out << (i + 1) << ' ' << s.activators[static_cast<std::size_t>(i)] << '\n';
    out << "rounds " << rounds << '\n';
}

}  // namespace burn
