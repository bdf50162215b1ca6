// Bin covering back end for burning path forests.
//
// The k-instance of a forest with lengths n_1 <= ... <= n_b has b large
// items of size 1 - m_i/C (m_i = ceil((n_i+1)/2), C = 3*m_b) and k small
// items of size min{j/C, 1/3}, j = 1..k. Every size is an integer multiple
// of 1/C, so all arithmetic below is exact: sizes are stored as numerators
// over C and a bin is covered iff its numerator sum reaches C.
//
// Covering solutions convert to burning schedules and back: a bin holding
// large item i and small items S_i yields fires at rounds k - j on path i
// (Lemma-style marking from the left end), and a schedule completing within
// k-1 rounds fills bins with the items q_{k-r} for its ignition rounds r.
// Small items are restricted to indices j <= k-1 when solving for guess k:
// index k would mean an ignition at round 0.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "burn/common.hpp"
#include "burn/exact.hpp"
#include "burn/graph.hpp"
#include "burn/schedule.hpp"

namespace burn {

struct CoveringInstance {
    int k = 0;
    long long denom = 0;                // C = 3 * m_b
    std::vector<int> m;                 // m_i per path
    std::vector<long long> large_num;   // size numerator of p_i: C - m_i (>= 2C/3)
    std::vector<long long> small_num;   // small_num[j-1]: min(j, m_b)  (<= C/3)
    long long cstar_num = 0;            // canonical constant c* = (C - m_1)/C

    double cstar() const { return static_cast<double>(cstar_num) / static_cast<double>(denom); }
};

struct CoveringBin {
    std::vector<int> large_ids;  // path indices 0..b-1
    std::vector<int> small_ids;  // j values 1..k
};

struct CoveringSolution {
    std::vector<CoveringBin> bins;
    int covered_count = 0;
    std::uint64_t nodes_expanded = 0;

    long long bin_sum(const CoveringInstance& inst, const CoveringBin& bin) const {
        long long s = 0;
        for (int i : bin.large_ids) s += inst.large_num[static_cast<std::size_t>(i)];
        for (int j : bin.small_ids) s += inst.small_num[static_cast<std::size_t>(j - 1)];
        return s;
    }

    int recount_covered(const CoveringInstance& inst) {
        covered_count = 0;
        for (const auto& bin : bins)
            if (bin_sum(inst, bin) >= inst.denom) ++covered_count;
        return covered_count;
    }
};

enum class CoverMode { exact, greedy };

inline CoveringInstance build_k_instance(const PathForest& f, int k) {
    if (k < 1) throw InputError("k must be positive");
    CoveringInstance inst;
    inst.k = k;
    for (int n_i : f.lengths) inst.m.push_back((n_i + 2) / 2);  // ceil((n_i+1)/2)
    const int m_b = inst.m.back();
    inst.denom = 3LL * m_b;
    for (int m_i : inst.m) inst.large_num.push_back(inst.denom - m_i);
    for (int j = 1; j <= k; ++j) inst.small_num.push_back(std::min<long long>(j, m_b));
    inst.cstar_num = inst.denom - inst.m.front();
    return inst;
}

namespace detail {

struct CoverItem {
    long long size;
    bool large;
    int id;  // path index for large, j for small
};

struct CoverBB {
    const std::vector<CoverItem>* items = nullptr;
    long long denom = 0;
    int target = -1;  // stop once this many bins are covered (-1: full max)
    std::uint64_t nodes = 0;
    std::uint64_t budget = 200'000'000;
    std::vector<long long> suffix;
    int best = -1;
    std::vector<int> best_placement;  // per item: bin ordinal or -1
    std::vector<int> placement;

    void run() {
        const std::size_t count = items->size();
        suffix.assign(count + 1, 0);
        for (std::size_t i = count; i-- > 0;)
            suffix[i] = suffix[i + 1] + (*items)[i].size;
        placement.assign(count, -1);
        best = -1;
        std::vector<long long> loads;
        dfs(0, loads, 0);
    }

    bool done() const { return target >= 0 && best >= target; }

    void record(int covered) {
        if (covered > best) {
            best = covered;
            best_placement = placement;
        }
    }

    void dfs(std::size_t idx, std::vector<long long>& loads, int covered) {
        if (done()) return;
        if (++nodes > budget) throw CapExceeded("covering search budget exceeded");
        record(covered);
        if (idx == items->size()) return;
        long long open_total = 0;
        for (long long l : loads)
            if (l > 0) open_total += l;
        const int ub = covered + static_cast<int>((suffix[idx] + open_total) / denom);
        if (target >= 0 ? ub < target : ub <= best) return;

        const long long size = (*items)[idx].size;
        // place into an existing open bin (distinct loads only)
        std::unordered_set<long long> tried;
        for (std::size_t bi = 0; bi < loads.size() && !done(); ++bi) {
            if (loads[bi] < 0) continue;  // closed
            if (!tried.insert(loads[bi]).second) continue;
            const long long saved = loads[bi];
            const long long now = saved + size;
            placement[idx] = static_cast<int>(bi);
            if (now >= denom) {
                loads[bi] = -1;  // covered, closed
                dfs(idx + 1, loads, covered + 1);
            } else {
                loads[bi] = now;
                dfs(idx + 1, loads, covered);
            }
            loads[bi] = saved;
            placement[idx] = -1;
        }
        if (done()) return;
        // open a new bin
        {
            placement[idx] = static_cast<int>(loads.size());
            if (size >= denom) {
                loads.push_back(-1);
                dfs(idx + 1, loads, covered + 1);
            } else {
                loads.push_back(size);
                dfs(idx + 1, loads, covered);
            }
            loads.pop_back();
            placement[idx] = -1;
        }
        if (done()) return;
        // discard the item
        dfs(idx + 1, loads, covered);
    }
};

inline std::vector<CoverItem> instance_items(const CoveringInstance& inst, int max_small_index) {
    std::vector<CoverItem> items;
    for (std::size_t i = 0; i < inst.large_num.size(); ++i)
        items.push_back({inst.large_num[i], true, static_cast<int>(i)});
    for (int j = 1; j <= std::min(max_small_index, inst.k); ++j)
        items.push_back({inst.small_num[static_cast<std::size_t>(j - 1)], false, j});
    std::sort(items.begin(), items.end(), [](const CoverItem& a, const CoverItem& b) {
        if (a.size != b.size) return a.size > b.size;
        if (a.large != b.large) return a.large;
        return a.id < b.id;
    });
    return items;
}

inline CoveringSolution solution_from_placement(const CoveringInstance& inst,
                                                const std::vector<CoverItem>& items,
                                                const std::vector<int>& placement,
                                                std::uint64_t nodes) {
    CoveringSolution sol;
    int max_bin = -1;
    for (int p : placement) max_bin = std::max(max_bin, p);
    sol.bins.assign(static_cast<std::size_t>(max_bin + 1), {});
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (placement[i] < 0) continue;
        auto& bin = sol.bins[static_cast<std::size_t>(placement[i])];
        if (items[i].large) bin.large_ids.push_back(items[i].id);
        else bin.small_ids.push_back(items[i].id);
    }
    sol.nodes_expanded = nodes;
    sol.recount_covered(inst);
    return sol;
}

inline CoveringSolution solve_items(const CoveringInstance& inst, int max_small_index,
                                    CoverMode mode, int target, int item_cap) {
    auto items = instance_items(inst, max_small_index);
    if (mode == CoverMode::greedy) {
        // next-fit-decreasing: items are already sorted descending
        std::vector<int> placement(items.size(), -1);
        long long load = 0;
        int bin = 0;
        for (std::size_t i = 0; i < items.size(); ++i) {
            placement[i] = bin;
            load += items[i].size;
            if (load >= inst.denom) {
                ++bin;
                load = 0;
            }
        }
        return solution_from_placement(inst, items, placement, 0);
    }
    if (static_cast<int>(items.size()) > item_cap)
        throw CapExceeded("covering instance above exact-solver item cap");
    CoverBB bb;
    bb.items = &items;
    bb.denom = inst.denom;
    bb.target = target;
    bb.run();
    return solution_from_placement(inst, items, bb.best_placement, bb.nodes);
}

}  // namespace detail

// Maximum-covered-count solution (exact) or next-fit-decreasing (greedy;
// no guarantee claimed). Exact mode refuses above item_cap items.
inline CoveringSolution solve_covering(const CoveringInstance& inst, CoverMode mode,
                                       int item_cap = 64) {
    return detail::solve_items(inst, inst.k, mode, -1, item_cap);
}

// Rearranges a solution covering >= b bins so that b covered bins hold
// exactly one large item each (Lemma-style exchange: a covered bin of only
// small items trades a small sub-multiset of size in (1/3, 2/3] against a
// surplus large). Covered count never decreases.
inline CoveringSolution normalize_bins(const CoveringInstance& inst, CoveringSolution sol) {
    const int b = static_cast<int>(inst.large_num.size());
    sol.recount_covered(inst);
    if (sol.covered_count < b) throw InputError("normalize_bins requires >= b covered bins");

    auto covered = [&](const CoveringBin& bin) { return sol.bin_sum(inst, bin) >= inst.denom; };

    // Larges not inside any covered bin are free to claim.
    auto find_unused_large = [&]() -> std::optional<std::pair<int, int>> {  // (bin idx or -1, pos)
        std::vector<char> placed(static_cast<std::size_t>(b), 0);
        for (const auto& bin : sol.bins)
            if (covered(bin))
                for (int id : bin.large_ids) placed[static_cast<std::size_t>(id)] = 1;
        for (std::size_t bi = 0; bi < sol.bins.size(); ++bi) {
            if (covered(sol.bins[bi])) continue;
            if (!sol.bins[bi].large_ids.empty()) return std::make_pair(static_cast<int>(bi), 0);
        }
        for (int id = 0; id < b; ++id)
            if (!placed[static_cast<std::size_t>(id)]) return std::make_pair(-1, id);  // never binned
        return std::nullopt;
    };

    for (int guard = 0; guard < b + static_cast<int>(sol.bins.size()) + 4; ++guard) {
        int needy = -1;
        for (std::size_t bi = 0; bi < sol.bins.size(); ++bi) {
            if (covered(sol.bins[bi]) && sol.bins[bi].large_ids.empty()) {
                needy = static_cast<int>(bi);
                break;
            }
        }
        if (needy < 0) break;
        auto& need_bin = sol.bins[static_cast<std::size_t>(needy)];

        // Donor preference: a covered bin with two or more larges (the
        // lemma's exchange); otherwise any large outside the covered bins.
        int donor = -1;
        for (std::size_t bi = 0; bi < sol.bins.size(); ++bi)
            if (covered(sol.bins[bi]) && sol.bins[bi].large_ids.size() >= 2) {
                donor = static_cast<int>(bi);
                break;
            }
        if (donor >= 0) {
            // Extract S with numerator sum in (C/3, 2C/3]: greedily add
            // smalls (each <= C/3) until the sum passes C/3.
            std::vector<int> extracted;
            long long s = 0;
            while (3 * s <= inst.denom && !need_bin.small_ids.empty()) {
                int j = need_bin.small_ids.back();
                need_bin.small_ids.pop_back();
                extracted.push_back(j);
                s += inst.small_num[static_cast<std::size_t>(j - 1)];
            }
            if (3 * s <= inst.denom) throw InputError("normalize_bins: exchange impossible (solver bug)");
            auto& donor_bin = sol.bins[static_cast<std::size_t>(donor)];
            int large = donor_bin.large_ids.back();
            donor_bin.large_ids.pop_back();
            donor_bin.small_ids.insert(donor_bin.small_ids.end(), extracted.begin(), extracted.end());
            need_bin.large_ids.push_back(large);
        } else {
            auto free_large = find_unused_large();
            if (!free_large) throw InputError("normalize_bins: no surplus large item (solver bug)");
            auto [bi, idx_or_id] = *free_large;
            if (bi >= 0) {
                auto& src = sol.bins[static_cast<std::size_t>(bi)];
                need_bin.large_ids.push_back(src.large_ids[static_cast<std::size_t>(idx_or_id)]);
                src.large_ids.erase(src.large_ids.begin() + idx_or_id);
            } else {
                need_bin.large_ids.push_back(idx_or_id);
            }
        }
    }
    sol.recount_covered(inst);
    if (sol.covered_count < b) throw std::logic_error("normalize_bins lost coverage");
    for (const auto& bin : sol.bins)
        if (covered(bin) && bin.large_ids.empty())
            throw std::logic_error("normalize_bins left a large-less covered bin");
    return sol;
}

// Lemma SSS direction: a covering of >= b bins (small indices <= k-1) turns
// into a schedule completing within k rounds. Small item q_j in path i's bin
// ignites at round k - j, one spread to the right of the already-burned
// prefix (clamped to the path), and burns 2j+1 fresh vertices.
inline BurningSchedule covering_to_schedule(const PathForest& f, int k, const CoveringSolution& sol_in) {
    const CoveringInstance inst = build_k_instance(f, k);
    for (const auto& bin : sol_in.bins)
        for (int j : bin.small_ids)
            if (j > k - 1) throw InputError("covering uses small index above k-1");
    CoveringSolution sol = normalize_bins(inst, sol_in);

    struct Fire {
        int round;
        int vertex;
    };
    std::vector<Fire> fires;
    const int b = f.path_count();
    for (int i = 0; i < b; ++i) {
        const CoveringBin* bin = nullptr;
        for (const auto& cand : sol.bins) {
            if (sol.bin_sum(inst, cand) < inst.denom) continue;
            if (std::find(cand.large_ids.begin(), cand.large_ids.end(), i) != cand.large_ids.end()) {
                bin = &cand;
                break;
            }
        }
        if (!bin) throw std::logic_error("normalized covering lacks a bin for a path");
        std::vector<int> smalls = bin->small_ids;
        std::sort(smalls.begin(), smalls.end(), std::greater<int>());
        const int len = f.lengths[static_cast<std::size_t>(i)];
        int burned_prefix = 0;
        for (int j : smalls) {
            const int offset = std::min(burned_prefix + j, len - 1);
            fires.push_back({k - j, f.block_start(i) + offset});
            burned_prefix += 2 * j + 1;
            if (burned_prefix >= len) break;
        }
    }
    std::sort(fires.begin(), fires.end(), [](const Fire& a, const Fire& b2) { return a.round < b2.round; });
    for (std::size_t i = 1; i < fires.size(); ++i)
        if (fires[i].round == fires[i - 1].round)
            throw std::logic_error("duplicate ignition round in covering conversion");
    BurningSchedule s;  // compress rounds: igniting earlier only helps
    for (const auto& fire : fires) s.activators.push_back(fire.vertex);
    return s;
}

// Lemma TTT direction: a schedule completing within k-1 rounds yields a
// covering of the k-instance with all b bins covered (bin i holds p_i plus
// q_{k-r} for each ignition round r on path i).
inline CoveringSolution schedule_to_covering(const PathForest& f, int k, const BurningSchedule& s) {
    const Graph g = expand_forest(f);
    auto outcome = simulate(g, s);
    if (!outcome.complete || outcome.completion_round > k - 1 || s.length() > k - 1)
        throw InputError("schedule must complete within k-1 rounds");
    const CoveringInstance inst = build_k_instance(f, k);
    const int b = f.path_count();
    CoveringSolution sol;
    sol.bins.assign(static_cast<std::size_t>(b), {});
    for (int i = 0; i < b; ++i) sol.bins[static_cast<std::size_t>(i)].large_ids.push_back(i);
    for (int pos = 0; pos < s.length(); ++pos) {
        const int round = pos + 1;
        const int v = s.activators[static_cast<std::size_t>(pos)];
        int i = 0, base = 0;
        while (base + f.lengths[static_cast<std::size_t>(i)] <= v) {
            base += f.lengths[static_cast<std::size_t>(i)];
            ++i;
        }
        const int y = k - round;  // in [1, k-1]
        sol.bins[static_cast<std::size_t>(i)].small_ids.push_back(y);
    }
    sol.recount_covered(inst);
    return sol;
}

// "bin i: large p_j, smalls j1 j2 ..." lines for covered bins, stable order.
inline std::string format_covering(const CoveringInstance& inst, const CoveringSolution& sol) {
    std::string out;
    int idx = 0;
    for (const auto& bin : sol.bins) {
        if (sol.bin_sum(inst, bin) < inst.denom) continue;
        out += "bin " + std::to_string(idx++) + ":";
        auto larges = bin.large_ids;
        std::sort(larges.begin(), larges.end());
        for (int i : larges) out += " large p_" + std::to_string(i + 1);
        if (!bin.small_ids.empty()) {
            out += " smalls";
            auto smalls = bin.small_ids;
            std::sort(smalls.begin(), smalls.end());
            for (int j : smalls) out += " " + std::to_string(j);
        }
        out += "\n";
    }
    return out;
}

struct FptasResult {
    ApproxResult approx;
    int k_star = 0;
    double c_star = 0.0;
    double eps0 = 0.0;
    bool regularity_warning = false;  // c* >= 0.9: the (1+eps) analysis degrades
    std::uint64_t cover_nodes = 0;
    CoveringSolution covering;
};

// Ascending scan over k: smallest k whose covering (large items plus smalls
// q_1..q_{k-1}) covers >= b bins, converted to a schedule. With the exact
// solver the failed k-1 probe certifies burning number >= k-1, so rounds
// never exceed optimum + 1. eps0 is computed and reported for audit only;
// exactness makes it play no role in correctness.
inline FptasResult fptas_driver(const PathForest& f, double eps, CoverMode mode = CoverMode::exact,
                                int item_cap = 64) {
    const int b = f.path_count();
    if (b < 2) throw InputError("fptas_driver requires at least two paths");
    if (eps <= 0.0) throw InputError("eps must be positive");
    FptasResult res;
    const CoveringInstance probe = build_k_instance(f, 1);
    res.c_star = probe.cstar();
    res.eps0 = (1.0 - res.c_star) * eps / (4.0 + (5.0 - res.c_star) * eps);
    res.regularity_warning = res.c_star >= 0.9;

    const int k_limit = probe.m.back() + b + 2;  // one 1/3-small per bin accepts by then
    for (int k = 1; k <= k_limit; ++k) {
        const CoveringInstance inst = build_k_instance(f, k);
        CoveringSolution sol = detail::solve_items(inst, k - 1, mode, mode == CoverMode::exact ? b : -1, item_cap);
        res.cover_nodes += sol.nodes_expanded;
        if (sol.covered_count < b) continue;
        res.k_star = k;
        res.covering = sol;
        res.approx.schedule = covering_to_schedule(f, k, sol);
        const Graph g = expand_forest(f);
        auto outcome = simulate(g, res.approx.schedule);
        if (!outcome.complete || outcome.completion_round > k)
            throw std::logic_error("fptas schedule violates the k-round bound");
        res.approx.rounds = outcome.completion_round;
        res.approx.accepted_guess = k;
        res.approx.opt_lower_bound = std::max(1, k - 1);
        res.approx.lower_bound_certified = mode == CoverMode::exact;
        // Unconditional with the exact solver: rounds <= k* <= optimum + 1,
        // so the achieved ratio is at most k*/(k*-1). Greedy certifies nothing.
        if (mode == CoverMode::exact && k >= 2)
            res.approx.ratio_bound = {k, k - 1};
        else
            res.approx.ratio_bound = {0, 1};
        res.approx.edge_traversals = 0;
        return res;
    }
    throw std::logic_error("fptas scan exhausted without covering b bins");
}

}  // namespace burn
