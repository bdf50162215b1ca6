// Radius-grouping PTAS for arbitrary path forests.
//
// A g-round schedule is a multiset of fires with radii 1..g (the round-t
// fire has radius g - t + 1 and burns at most 2r - 1 path vertices). Radii
// are grouped into blocks of beta = floor(g/k); the weak instance drops the
// smallest group and rounds the rest down to group minima, the strong
// instance rounds every group up to its maximum. Deciding the weak instance
// exactly and materializing accepted fires back through their provenance
// (each rounded fire maps to a distinct original radius no smaller than it)
// gives schedules within a 1 + 1/(k-1) factor.
//
// The decision procedure replaces the asymptotic filters with exact ones
// (#fires >= #paths and total capacity >= total vertices are necessary), and
// replaces counted enumeration of per-path fire schedules with a memoized
// search over residual per-class fire-count vectors; leftover fires go to
// long paths greedily in decreasing radius order.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "burn/approx_general.hpp"
#include "burn/common.hpp"
#include "burn/exact.hpp"
#include "burn/graph.hpp"
#include "burn/schedule.hpp"

namespace burn {

struct RadiusClass {
    int radius = 0;                // rounded value
    int count = 0;
    std::vector<int> provenance;   // original radii in the group (count of them)
};

struct RadiusMultiset {
    std::vector<RadiusClass> classes;  // ascending radius

    int total_fires() const {
        int s = 0;
        for (const auto& c : classes) s += c.count;
        return s;
    }
    int max_radius() const { return classes.empty() ? 0 : classes.back().radius; }
    long long capacity() const {  // sum of 2r-1 over all fires
        long long s = 0;
        for (const auto& c : classes) s += static_cast<long long>(c.count) * (2LL * c.radius - 1);
        return s;
    }
};

struct WeakStrongInstances {
    RadiusMultiset weak;
    RadiusMultiset strong;
};

inline WeakStrongInstances build_instances(int g, int k) {
    if (k < 1 || g < k) throw InputError("build_instances requires g >= k >= 1");
    const int beta = g / k;
    WeakStrongInstances out;
    for (int i = 1; (i - 1) * beta < g; ++i) {
        const int lo = (i - 1) * beta + 1;
        const int hi = std::min(i * beta, g);
        RadiusClass weak_c, strong_c;
        weak_c.radius = lo;
        strong_c.radius = hi;
        for (int r = lo; r <= hi; ++r) {
            weak_c.provenance.push_back(r);
            strong_c.provenance.push_back(r);
        }
        weak_c.count = strong_c.count = hi - lo + 1;
        out.strong.classes.push_back(strong_c);
        if (i >= 2) out.weak.classes.push_back(weak_c);  // first group dropped
    }
    return out;
}

struct PtasDecision {
    bool yes = false;
    // Per path (input order): fire counts per class index into the
    // multiset's classes vector.
    std::vector<std::vector<int>> witness;
    std::uint64_t states = 0;
};

namespace detail {

struct PtasSearch {
    const std::vector<RadiusClass>* classes = nullptr;
    std::vector<long long> weight;           // 2r-1 per class
    std::vector<int> short_lengths;          // descending
    std::vector<int> long_lengths;           // descending
    std::unordered_set<std::string> failed;  // (short idx, residual counts)
    std::vector<std::vector<int>> short_choice;
    std::vector<std::vector<int>> long_choice;
    std::uint64_t states = 0;

    std::string key(std::size_t idx, const std::vector<int>& residual) const {
        std::string s(residual.size() * 2 + 1, '\0');
        s[0] = static_cast<char>(idx);
        for (std::size_t i = 0; i < residual.size(); ++i) {
            s[1 + 2 * i] = static_cast<char>(residual[i] & 0xff);
            s[2 + 2 * i] = static_cast<char>((residual[i] >> 8) & 0xff);
        }
        return s;
    }

    bool assign_long_paths(std::vector<int> residual) {
        long_choice.assign(long_lengths.size(), std::vector<int>(classes->size(), 0));
        for (std::size_t p = 0; p < long_lengths.size(); ++p) {
            long long need = long_lengths[p];
            for (std::size_t c = classes->size(); c-- > 0 && need > 0;) {
                while (residual[c] > 0 && need > 0) {
                    --residual[c];
                    ++long_choice[p][c];
                    need -= weight[c];
                }
            }
            if (need > 0) return false;
        }
        return true;
    }

    // Enumerate per-path class-count vectors covering `need`, capped per
    // class at what the remaining need justifies, largest radii first.
    bool cover_short(std::size_t path, std::size_t cls_from, long long need,
                     std::vector<int>& residual, std::vector<int>& chosen) {
        if (need <= 0) {
            short_choice[path] = chosen;
            return shorts_from(path + 1, residual);
        }
        if (cls_from == 0) return false;
        const std::size_t c = cls_from - 1;
        const long long w = weight[c];
        const int cap = std::min<long long>(residual[c], (need + w - 1) / w);
        for (int take = cap; take >= 0; --take) {
            residual[c] -= take;
            chosen[c] += take;
            bool ok = cover_short(path, c, need - take * w, residual, chosen);
            residual[c] += take;
            chosen[c] -= take;
            if (ok) return true;
        }
        return false;
    }

    bool shorts_from(std::size_t idx, std::vector<int>& residual) {
        ++states;
        if (idx == short_lengths.size()) return assign_long_paths(residual);
        const std::string k = key(idx, residual);
        if (failed.count(k)) return false;
        std::vector<int> chosen(classes->size(), 0);
        if (cover_short(idx, classes->size(), short_lengths[idx], residual, chosen)) return true;
        failed.insert(k);
        return false;
    }
};

}  // namespace detail

// Exact decision: can the given fires burn the forest? Yes-answers carry a
// per-path witness. Paths of length <= alpha * (max radius) count as short.
inline PtasDecision ptas_decide(const PathForest& f, const RadiusMultiset& fires, double alpha = 3.0) {
    for (const auto& c : fires.classes)
        if (c.radius < 1 || c.count < 1) throw InputError("radii and counts must be positive");
    PtasDecision dec;
    const int b = f.path_count();
    if (b > fires.total_fires()) return dec;                      // more paths than fires
    if (f.total_vertices() > fires.capacity()) return dec;        // capacity bound
    const int g = fires.max_radius();
    const double threshold = alpha * g;

    detail::PtasSearch search;
    search.classes = &fires.classes;
    for (const auto& c : fires.classes) search.weight.push_back(2LL * c.radius - 1);

    struct Tagged {
        int length;
        int input_index;
        bool is_short;
    };
    std::vector<Tagged> tagged;
    for (int i = 0; i < b; ++i) {
        int len = f.lengths[static_cast<std::size_t>(i)];
        tagged.push_back({len, i, static_cast<double>(len) <= threshold});
    }
    std::sort(tagged.begin(), tagged.end(), [](const Tagged& a, const Tagged& b2) {
        return a.length > b2.length;
    });
    std::vector<int> short_order, long_order;
    for (const auto& tg : tagged) {
        if (tg.is_short) {
            search.short_lengths.push_back(tg.length);
            short_order.push_back(tg.input_index);
        } else {
            search.long_lengths.push_back(tg.length);
            long_order.push_back(tg.input_index);
        }
    }
    search.short_choice.assign(search.short_lengths.size(), {});

    std::vector<int> residual;
    for (const auto& c : fires.classes) residual.push_back(c.count);
    dec.yes = search.shorts_from(0, residual);
    dec.states = search.states;
    if (dec.yes) {
        dec.witness.assign(static_cast<std::size_t>(b), std::vector<int>(fires.classes.size(), 0));
        for (std::size_t p = 0; p < short_order.size(); ++p)
            dec.witness[static_cast<std::size_t>(short_order[p])] = search.short_choice[p];
        for (std::size_t p = 0; p < long_order.size(); ++p)
            dec.witness[static_cast<std::size_t>(long_order[p])] = search.long_choice[p];
    }
    return dec;
}

struct PtasResult {
    ApproxResult approx;
    int k = 0;
    int g_star = 0;
    std::uint64_t decide_states = 0;
};

struct PtasCaps {
    int coverage_cap_vertices = 4096;  // certify the lower bound up to here
};

// Ascending scan over g (acceptance is not known to be monotone, so no
// binary search): the first weak instance the decision procedure accepts is
// materialized through provenance into a real schedule of at most g rounds.
inline PtasResult ptas_driver(const PathForest& f, double eps, double alpha = 3.0,
                              const PtasCaps& caps = {}) {
    if (eps <= 0.0) throw InputError("eps must be positive");
    PtasResult res;
    res.k = static_cast<int>(std::ceil(1.0 / eps)) + 1;
    const int k = res.k;
    const int g_limit = f.total_vertices() + 2 * k + 2;
    for (int g = k; g <= g_limit; ++g) {
        auto inst = build_instances(g, k);
        if (inst.weak.classes.empty()) continue;
        PtasDecision dec = ptas_decide(f, inst.weak, alpha);
        res.decide_states += dec.states;
        if (!dec.yes) continue;
        res.g_star = g;

        // Fires back to distinct original radii: each class hands out its
        // largest unused provenance entries.
        struct Fire {
            int round;
            int vertex;
        };
        std::vector<Fire> fires;
        std::vector<std::vector<int>> pool;
        for (const auto& c : inst.weak.classes) pool.push_back(c.provenance);  // ascending
        for (int i = 0; i < f.path_count(); ++i) {
            std::vector<int> radii;
            for (std::size_t c = 0; c < inst.weak.classes.size(); ++c) {
                for (int take = 0; take < dec.witness[static_cast<std::size_t>(i)][c]; ++take) {
                    if (pool[c].empty()) throw std::logic_error("provenance pool exhausted");
                    radii.push_back(pool[c].back());
                    pool[c].pop_back();
                }
            }
            std::sort(radii.begin(), radii.end(), std::greater<int>());
            const int len = f.lengths[static_cast<std::size_t>(i)];
            int burned_prefix = 0;
            for (int r : radii) {
                if (burned_prefix >= len) break;
                const int offset = std::min(burned_prefix + r - 1, len - 1);
                fires.push_back({g - r + 1, f.block_start(i) + offset});
                burned_prefix += 2 * r - 1;
            }
        }
        std::sort(fires.begin(), fires.end(), [](const Fire& a, const Fire& b2) { return a.round < b2.round; });
        for (std::size_t i = 1; i < fires.size(); ++i)
            if (fires[i].round == fires[i - 1].round)
                throw std::logic_error("duplicate round in ptas materialization");
        for (const auto& fire : fires) res.approx.schedule.activators.push_back(fire.vertex);

        const Graph graph = expand_forest(f);
        auto outcome = simulate(graph, res.approx.schedule);
        if (!outcome.complete || outcome.completion_round > g)
            throw std::logic_error("ptas schedule violates the g-round bound");
        res.approx.rounds = outcome.completion_round;
        res.approx.accepted_guess = g;
        res.approx.ratio_bound = {k, k - 1};  // 1 + 1/(k-1) <= 1 + eps
        if (f.total_vertices() <= caps.coverage_cap_vertices) {
            res.approx.opt_lower_bound = coverage_optimum(f);
            res.approx.lower_bound_certified = true;
        } else {
            // analytic, uncertified: opt >= g(1 - 1/k) - o(g)
            res.approx.opt_lower_bound = std::max(1, (g * (k - 1)) / k);
            res.approx.lower_bound_certified = false;
        }
        return res;
    }
    throw std::logic_error("ptas scan exhausted without acceptance");
}

}  // namespace burn
