#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace burn;

TEST_CASE("burn_guess traces from small instances") {
    // K5, guess 2: one center covers everything within depth 2
    auto k5 = gen_gnp(5, 1.0, 0);
    auto res = burn_guess(k5, 2, ascending_order(5));
    REQUIRE(res.accepted);
    CHECK(res.centers == std::vector<int>{0});
    auto out = simulate(k5, {{res.centers}});
    CHECK(out.complete);
    CHECK(out.completion_round <= 3);  // 3g-3

    // any non-empty graph, guess 1: first center trips the count
    auto res1 = burn_guess(k5, 1, ascending_order(5));
    REQUIRE_FALSE(res1.accepted);
    CHECK(res1.certificate.r == 1);
    CHECK(verify_certificate(k5, res1.certificate));

    // path on 9, guess 3, ascending order: centers 0 and 5
    auto p9 = expand_forest(PathForest({9}));
    auto res9 = burn_guess(p9, 3, ascending_order(9));
    REQUIRE(res9.accepted);
    CHECK(res9.centers == std::vector<int>{0, 5});
    auto out9 = simulate(p9, {{res9.centers}});
    CHECK(out9.completion_round == 5);
    CHECK(out9.completion_round <= 6);
}

TEST_CASE("burn_guess outcome invariants on random graphs") {
    Rng rng(53);
    for (int rep = 0; rep < 150; ++rep) {
        const int n = 1 + static_cast<int>(rand_below(rng, 14));
        auto g = test_util::random_gnp(n, rng);
        const int guess = 1 + static_cast<int>(rand_below(rng, 6));
        auto res = burn_guess(g, guess, ascending_order(n));
        if (res.accepted) {
            CHECK(test_util::audit_guess_schedule(g, res));
        } else {
            CHECK(res.certificate.r == guess);
            CHECK(verify_certificate(g, res.certificate));
        }
        CHECK(res.edge_traversals <= 2 * static_cast<std::uint64_t>(g.m));
    }
}

TEST_CASE("approx3 on degenerate and path instances") {
    Graph empty;
    auto r0 = approx3(empty);
    CHECK(r0.rounds == 0);
    CHECK(r0.schedule.activators.empty());

    auto single = expand_forest(PathForest({1}));
    auto r1 = approx3(single);
    CHECK(r1.accepted_guess == 2);
    CHECK(r1.rounds == 1);
    CHECK(r1.opt_lower_bound == 1);

    auto p9 = expand_forest(PathForest({9}));
    auto r9 = approx3(p9);
    CHECK(r9.accepted_guess == 3);
    CHECK(r9.rounds == 5);
    CHECK(r9.rounds <= 6);
    CHECK(r9.opt_lower_bound == 2);
    REQUIRE(r9.certificate.has_value());
    CHECK(r9.certificate->r == 2);
    CHECK(verify_certificate(p9, *r9.certificate));
}

TEST_CASE("approx3 guarantee against the oracle") {
    Rng rng(59);
    for (int rep = 0; rep < 250; ++rep) {
        const int n = 1 + static_cast<int>(rand_below(rng, 12));
        auto g = test_util::random_gnp(n, rng);
        auto exact = exact_burning_number(g);
        auto res = approx3(g);
        CHECK(res.rounds <= 3 * exact.burning_number);
        CHECK(exact.burning_number >= res.opt_lower_bound);
        if (res.accepted_guess >= 2) {
            CHECK(res.rounds <= 3 * res.accepted_guess - 3);
            REQUIRE(res.certificate.has_value());
            CHECK(verify_certificate(g, *res.certificate));
        }
    }
}

TEST_CASE("binary and linear searches agree") {
    Rng rng(61);
    for (int rep = 0; rep < 80; ++rep) {
        const int n = 1 + static_cast<int>(rand_below(rng, 14));
        auto g = test_util::random_gnp(n, rng);
        auto bin = approx3(g, SearchMode::binary);
        auto lin = approx3(g, SearchMode::linear);
        CHECK(bin.accepted_guess == lin.accepted_guess);
        CHECK(bin.rounds == lin.rounds);
        CHECK(bin.schedule.activators == lin.schedule.activators);
    }
}

TEST_CASE("custom orders change schedules but not guarantees") {
    Rng rng(67);
    for (int rep = 0; rep < 40; ++rep) {
        const int n = 2 + static_cast<int>(rand_below(rng, 10));
        auto g = test_util::random_gnp(n, rng);
        auto order = shuffled_order(n, rng());
        auto res = approx3(g, SearchMode::binary, &order);
        auto exact = exact_burning_number(g);
        CHECK(res.rounds <= 3 * exact.burning_number);
        CHECK(exact.burning_number >= res.opt_lower_bound);
    }
}

TEST_CASE("tightness gadget: certified boundary behaves as built") {
    for (int k = 3; k <= 6; ++k) {
        auto g = gen_gadget(k);
        // adversarial order: tips first
        std::vector<int> order;
        for (int j = 1; j <= k; ++j) order.push_back(gadget_tip(k, j));
        for (int v = 0; v < g.n(); ++v)
            if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
        auto reject = burn_guess(g, k, order);
        REQUIRE_FALSE(reject.accepted);  // k tip-centers trip the count-equals-g rule
        CHECK(reject.certificate.r == k);
        CHECK(verify_certificate(g, reject.certificate));

        // hand-built optimum: hub at round 1, pendant midpoint at round 2
        BurningSchedule hand{{0, k * k + 1 + (k - 2)}};
        auto out = simulate(g, hand);
        CHECK(out.complete);
        CHECK(out.completion_round <= k + 1);
    }
}
