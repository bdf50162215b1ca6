#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "test_util.hpp"

using namespace burn;

namespace {

Graph path(int n) { return expand_forest(PathForest({n})); }

}  // namespace

TEST_CASE("simulate on small paths") {
    auto g = path(3);
    auto out = simulate(g, {{1}});
    CHECK(out.burn_time == std::vector<int>{2, 1, 2});
    CHECK(out.completion_round == 2);
    CHECK(out.complete);

    // path on 9 vertices, activators 2, 6, 8; closed form gives
    // vertex 0: 1+2 = 3 and vertex 5: min(1+3, 2+1) = 3
    auto p9 = path(9);
    auto out9 = simulate(p9, {{2, 6, 8}});
    CHECK(out9.complete);
    CHECK(out9.completion_round == 3);
    CHECK(out9.burn_time[0] == 3);
    CHECK(out9.burn_time[5] == 3);
}

TEST_CASE("simulate a three-round sequence consistent with the process figure") {
    // B - x - A - y - z - C: igniting A, B, C in rounds 1..3 burns
    // everything by round 3, C getting its own fire in the final round.
    auto g = path(6);
    BurningSchedule s{{2, 0, 5}};
    auto out = simulate(g, s);
    CHECK(out.complete);
    CHECK(out.completion_round == 3);
    CHECK(out.burn_time[5] == 3);
    CHECK(validate_strict(g, s));
}

TEST_CASE("simulate degenerate cases") {
    Graph empty;
    auto out = simulate(empty, {});
    CHECK(out.complete);
    CHECK(out.completion_round == 0);

    auto single = path(1);
    auto one = simulate(single, {{0}});
    CHECK(one.complete);
    CHECK(one.completion_round == 1);

    auto unburned = simulate(path(3), {});
    CHECK_FALSE(unburned.complete);
    CHECK(unburned.completion_round == 0);

    // two components, one activator: incomplete
    auto two = expand_forest(PathForest({2, 2}));
    auto partial = simulate(two, {{0}});
    CHECK_FALSE(partial.complete);
    CHECK(partial.burn_time[2] == kUnreached);
}

TEST_CASE("burn_time matches the per-activator BFS closed form") {
    Rng rng(11);
    for (int rep = 0; rep < 300; ++rep) {
        const int n = 1 + static_cast<int>(rand_below(rng, 14));
        auto g = test_util::random_gnp(n, rng);
        auto s = test_util::random_schedule(n, n + 2, rng);
        auto out = simulate(g, s);
        auto ref = test_util::burn_times_by_activator_bfs(g, s);
        for (int v = 0; v < n; ++v) {
            int expect = ref[static_cast<std::size_t>(v)];
            CHECK(out.burn_time[static_cast<std::size_t>(v)] ==
                  (expect == test_util::kInf ? kUnreached : expect));
        }
    }
}

TEST_CASE("monotonicity: appending activators never delays a vertex") {
    Rng rng(13);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 2 + static_cast<int>(rand_below(rng, 12));
        auto g = test_util::random_gnp(n, rng);
        auto s = test_util::random_schedule(n, n, rng);
        auto longer = s;
        longer.activators.push_back(static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(n))));
        auto a = simulate(g, s);
        auto b = simulate(g, longer);
        for (int v = 0; v < n; ++v) {
            int ta = a.burn_time[static_cast<std::size_t>(v)];
            int tb = b.burn_time[static_cast<std::size_t>(v)];
            if (ta != kUnreached) {
                REQUIRE(tb != kUnreached);
                CHECK(tb <= ta);
            }
        }
    }
}

TEST_CASE("validate_strict pair conditions") {
    auto g = path(3);
    CHECK(validate_strict(g, {{0, 2}}));
    CHECK(validate_strict(g, {{0, 1}}));      // d = 1 >= 1
    CHECK(validate_strict(g, {{0, 1, 2}}));   // all pair conditions hold
    CHECK_FALSE(validate_strict(g, {{0, 0}}));
    CHECK_FALSE(validate_strict(g, {{1, 1}}));
    CHECK_FALSE(validate_strict(g, {{0, 1, 0}}));

    // far pair across components is fine
    auto two = expand_forest(PathForest({1, 1}));
    CHECK(validate_strict(two, {{0, 1}}));
}

TEST_CASE("canonicalize repairs lenient schedules") {
    auto g = path(3);
    // already strict: unchanged
    BurningSchedule strict{{1, 0}};
    CHECK(canonicalize(g, strict).activators == std::vector<int>{1, 0});

    // duplicate activator replaced; completion preserved
    BurningSchedule dup{{1, 1}};
    auto fixed = canonicalize(g, dup);
    CHECK(validate_strict(g, fixed));
    CHECK(simulate(g, fixed).completion_round <= simulate(g, dup).completion_round);
    CHECK(simulate(g, fixed).complete);

    CHECK_THROWS_AS(canonicalize(g, {{}}), InputError);
}

TEST_CASE("canonicalize is strict and completion-preserving on random pairs") {
    Rng rng(17);
    int tested = 0;
    while (tested < 1000) {
        const int n = 1 + static_cast<int>(rand_below(rng, 12));
        auto g = test_util::random_gnp(n, rng);
        auto s = test_util::random_schedule(n, n + 3, rng);
        auto out = simulate(g, s);
        if (!out.complete) continue;
        ++tested;
        auto canon = canonicalize(g, s);
        CHECK(validate_strict(g, canon));
        auto cout_ = simulate(g, canon);
        CHECK(cout_.complete);
        CHECK(cout_.completion_round <= out.completion_round);
    }
}

TEST_CASE("verify_certificate") {
    auto iso3 = expand_forest(PathForest({1, 1, 1}));
    CHECK(verify_certificate(iso3, {3, {0, 1, 2}}));

    auto p9 = path(9);
    CHECK(verify_certificate(p9, {2, {0, 8}}));  // 8 >= 3

    auto k5 = gen_gnp(5, 1.0, 0);
    CHECK_FALSE(verify_certificate(k5, {2, {0, 1}}));  // 1 < 3

    CHECK_FALSE(verify_certificate(p9, {2, {0}}));      // wrong witness count
    CHECK_FALSE(verify_certificate(p9, {2, {0, 0}}));   // duplicate witness
}

TEST_CASE("certificates bound the oracle on small graphs") {
    Rng rng(23);
    for (int rep = 0; rep < 60; ++rep) {
        const int n = 2 + static_cast<int>(rand_below(rng, 9));
        auto g = test_util::random_gnp(n, rng);
        auto exact = exact_burning_number(g);
        // try all certificates of size 2 and 3 built from vertex pairs/triples
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                if (verify_certificate(g, {2, {a, b}}))
                    CHECK(exact.burning_number >= 2);
            }
        for (int a = 0; a < n && n <= 7; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    if (verify_certificate(g, {3, {a, b, c}}))
                        CHECK(exact.burning_number >= 3);
    }
}

TEST_CASE("schedule text round trip") {
    BurningSchedule s{{4, 0, 2}};
    std::ostringstream out;
    write_schedule(out, s, 5);
    CHECK(out.str() == "1 4\n2 0\n3 2\nrounds 5\n");
    std::istringstream in(out.str());
    auto back = parse_schedule(in);
    CHECK(back.activators == s.activators);

    std::istringstream gap("1 0\n3 1\n");
    CHECK_THROWS_AS(parse_schedule(gap), ParseError);
    std::istringstream junk("1 x\n");
    CHECK_THROWS_AS(parse_schedule(junk), ParseError);
}
