#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace burn;

TEST_CASE("build_instances grouping and rounding") {
    auto inst = build_instances(6, 3);  // beta = 2: groups {1,2},{3,4},{5,6}
    REQUIRE(inst.weak.classes.size() == 2);
    CHECK(inst.weak.classes[0].radius == 3);
    CHECK(inst.weak.classes[0].count == 2);
    CHECK(inst.weak.classes[1].radius == 5);
    CHECK(inst.weak.classes[1].count == 2);
    REQUIRE(inst.strong.classes.size() == 3);
    CHECK(inst.strong.classes[0].radius == 2);
    CHECK(inst.strong.classes[1].radius == 4);
    CHECK(inst.strong.classes[2].radius == 6);

    // g = k: unit groups, weak drops radius 1, rounding is the identity
    auto unit = build_instances(4, 4);
    REQUIRE(unit.weak.classes.size() == 3);
    for (std::size_t i = 0; i < unit.weak.classes.size(); ++i) {
        CHECK(unit.weak.classes[i].radius == static_cast<int>(i) + 2);
        CHECK(unit.weak.classes[i].count == 1);
    }

    CHECK_THROWS_AS(build_instances(2, 3), InputError);
}

TEST_CASE("rounding directions via provenance") {
    for (int k = 2; k <= 4; ++k)
        for (int g = k; g <= 4 * k; ++g) {
            auto inst = build_instances(g, k);
            for (const auto& c : inst.weak.classes) {
                CHECK(static_cast<int>(c.provenance.size()) == c.count);
                for (int orig : c.provenance) CHECK(c.radius <= orig);  // rounded down
            }
            for (const auto& c : inst.strong.classes)
                for (int orig : c.provenance) CHECK(c.radius >= orig);  // rounded up
            // weak instance = all radii above the first group, exactly once
            int weak_total = inst.weak.total_fires();
            CHECK(weak_total == g - g / k);
        }
}

TEST_CASE("ptas_decide base cases") {
    RadiusMultiset one_three;
    one_three.classes = {{3, 1, {3}}};
    CHECK(ptas_decide(PathForest({3}), one_three).yes);        // 2*3-1 = 5 >= 3
    CHECK_FALSE(ptas_decide(PathForest({3, 3}), one_three).yes);  // more paths than fires

    RadiusMultiset mix;
    mix.classes = {{2, 2, {2, 2}}, {3, 1, {3}}};
    auto dec = ptas_decide(PathForest({5, 5}), mix, 2.0);
    CHECK(dec.yes);  // {3} covers one path, {2,2} the other (3+3 >= 5)

    RadiusMultiset small;
    small.classes = {{2, 1, {2}}};
    CHECK_FALSE(ptas_decide(PathForest({10}), small).yes);  // capacity 3 < 10
}

TEST_CASE("ptas_decide witnesses cover their paths") {
    Rng rng(109);
    for (int rep = 0; rep < 100; ++rep) {
        auto f = test_util::random_forest(4, 8, 20, rng);
        const int g = 2 + static_cast<int>(rand_below(rng, 6));
        const int k = 2 + static_cast<int>(rand_below(rng, 2));
        if (g < k) continue;
        auto inst = build_instances(g, k);
        if (inst.weak.classes.empty()) continue;
        auto dec = ptas_decide(f, inst.weak);
        if (!dec.yes) continue;
        REQUIRE(dec.witness.size() == static_cast<std::size_t>(f.path_count()));
        std::vector<int> used(inst.weak.classes.size(), 0);
        for (int p = 0; p < f.path_count(); ++p) {
            long long cover = 0;
            for (std::size_t c = 0; c < inst.weak.classes.size(); ++c) {
                cover += static_cast<long long>(dec.witness[static_cast<std::size_t>(p)][c]) *
                         (2LL * inst.weak.classes[c].radius - 1);
                used[c] += dec.witness[static_cast<std::size_t>(p)][c];
            }
            CHECK(cover >= f.lengths[static_cast<std::size_t>(p)]);
        }
        for (std::size_t c = 0; c < used.size(); ++c)
            CHECK(used[c] <= inst.weak.classes[c].count);
    }
}

TEST_CASE("ptas_decide agrees with brute-force fire assignment") {
    Rng rng(113);
    int compared = 0;
    while (compared < 120) {
        auto f = test_util::random_forest(3, 6, 14, rng);
        RadiusMultiset fires;
        const int distinct = 1 + static_cast<int>(rand_below(rng, 3));
        int radius = 1 + static_cast<int>(rand_below(rng, 3));
        int total = 0;
        for (int c = 0; c < distinct && total < 6; ++c) {
            int count = 1 + static_cast<int>(rand_below(rng, 2));
            RadiusClass cls;
            cls.radius = radius;
            cls.count = count;
            for (int i = 0; i < count; ++i) cls.provenance.push_back(radius);
            fires.classes.push_back(cls);
            total += count;
            radius += 1 + static_cast<int>(rand_below(rng, 2));
        }
        ++compared;
        CHECK(ptas_decide(f, fires).yes == test_util::brute_force_fires_burn(f, fires));
    }
}

TEST_CASE("ptas_driver on tiny forests") {
    auto r1 = ptas_driver(PathForest({1}), 1.0);
    CHECK(r1.k == 2);
    CHECK(r1.approx.rounds == 1);

    // [2,2] with eps = 1: optimum 3, driver stays within 2x and above the bound
    PathForest f22({2, 2});
    auto r22 = ptas_driver(f22, 1.0);
    const int exact = path_dp(f22).burning_number;
    CHECK(exact == 3);
    CHECK(r22.approx.rounds <= 2 * exact);
    CHECK(r22.approx.rounds >= exact);
    CHECK(r22.approx.opt_lower_bound == exact);  // certified via the coverage characterization
    CHECK(r22.approx.lower_bound_certified);

    CHECK_THROWS_AS(ptas_driver(PathForest({1}), 0.0), InputError);
}

TEST_CASE("ptas_driver ratio and soundness on random forests") {
    Rng rng(127);
    for (int rep = 0; rep < 60; ++rep) {
        auto f = test_util::random_forest(8, 30, 120, rng);
        auto res = ptas_driver(f, 1.0);  // k = 2
        const int exact = coverage_optimum(f);
        CHECK(res.approx.rounds >= exact);
        CHECK(res.approx.rounds <= 2 * exact);  // 1 + 1/(k-1) = 2
        CHECK(res.approx.rounds <= res.g_star);
        auto out = simulate(expand_forest(f), res.approx.schedule);
        CHECK(out.complete);
        CHECK(out.completion_round == res.approx.rounds);
    }
}

TEST_CASE("ptas_driver with smaller eps tightens the ratio") {
    Rng rng(131);
    for (int rep = 0; rep < 25; ++rep) {
        auto f = test_util::random_forest(5, 20, 70, rng);
        auto res = ptas_driver(f, 0.5);  // k = 3, ratio 3/2
        const int exact = coverage_optimum(f);
        CHECK(res.approx.rounds >= exact);
        CHECK(2 * res.approx.rounds <= 3 * exact);
        CHECK(res.approx.ratio_bound.num == 3);
        CHECK(res.approx.ratio_bound.den == 2);
    }
}
