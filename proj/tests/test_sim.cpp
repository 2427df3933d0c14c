#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "frogbounds/analytic.hpp"
#include "frogbounds/phi.hpp"
#include "frogbounds/sim.hpp"

using namespace frogbounds;

namespace {
const Degree d2(2);

bool event_of(std::vector<int> advance) {
    ReachSample s;
    s.advance = std::move(advance);
    return child_event_from_reaches(s);
}

// Total probability of the cascade event by exhaustive enumeration of the
// (finitely many) capped reach tuples.  Also returns the total mass as a
// sanity check that the per-coordinate law is a proper distribution.
struct Enumerated {
    double event_mass = 0.0;
    double total_mass = 0.0;
};

Enumerated enumerate_child_event(int n, double b) {
    std::vector<int> adv(static_cast<size_t>(n), 0);
    Enumerated out;
    while (true) {
        double mass = 1.0;
        for (int j = 0; j < n; ++j) {
            const int cap = n - j;
            const int m = adv[static_cast<size_t>(j)];
            mass *= (m < cap) ? std::pow(b, m) * (1.0 - b) : std::pow(b, cap);
        }
        out.total_mass += mass;
        ReachSample s;
        s.advance = adv;
        if (child_event_from_reaches(s)) out.event_mass += mass;

        int j = n - 1;
        while (j >= 0 && adv[static_cast<size_t>(j)] == n - j) {
            adv[static_cast<size_t>(j)] = 0;
            --j;
        }
        if (j < 0) break;
        ++adv[static_cast<size_t>(j)];
    }
    return out;
}
}  // namespace

TEST_CASE("arena starts as a lone sleeping root") {
    TreeArena a(d2);
    CHECK_EQ(a.vertex_count(), 1);
    CHECK_EQ(a.slot_count(), 3);
    CHECK_EQ(a.parent(0), -1);
    CHECK_EQ(a.depth(0), 0);
    CHECK_FALSE(a.origin_awake(0));
    CHECK_EQ(a.neighbor_if_present(0, 1), -1);
    CHECK(a.validate());
}

TEST_CASE("arena materializes each slot once and links back") {
    TreeArena a(d2);
    const int c = a.neighbor(0, 1);
    CHECK_EQ(c, 1);
    CHECK_EQ(a.vertex_count(), 2);
    CHECK_EQ(a.neighbor(0, 1), c);
    CHECK_EQ(a.vertex_count(), 2);
    CHECK_EQ(a.parent(c), 0);
    CHECK_EQ(a.depth(c), 1);
    CHECK_EQ(a.neighbor(c, 0), 0);  // slot 0 of a non-root vertex is its parent
    CHECK_EQ(a.vertex_count(), 2);

    // the root has no parent, so its slot 0 is one more child
    const int c0 = a.neighbor(0, 0);
    CHECK_EQ(a.parent(c0), 0);
    CHECK_EQ(a.depth(c0), 1);

    const int g = a.neighbor(c, 2);
    CHECK_EQ(a.parent(g), c);
    CHECK_EQ(a.depth(g), 2);
    CHECK(a.validate());
}

TEST_CASE("arena undo restores the pre-mark shape") {
    TreeArena a(d2);
    const int c = a.neighbor(0, 2);
    const std::size_t m = a.mark();
    const int before = a.vertex_count();
    const int g1 = a.neighbor(c, 1);
    a.neighbor(g1, 2);
    CHECK_EQ(a.vertex_count(), before + 2);
    a.truncate(m);
    CHECK_EQ(a.vertex_count(), before);
    CHECK_EQ(a.neighbor_if_present(c, 1), -1);
    CHECK(a.validate());

    a.set_origin_awake(0, true);
    a.reset();
    CHECK_EQ(a.vertex_count(), 1);
    CHECK_FALSE(a.origin_awake(0));
    CHECK(a.validate());
}

TEST_CASE("arena rejects bad coordinates") {
    TreeArena a(d2);
    CHECK_THROWS_AS(a.neighbor(0, 3), std::out_of_range);
    CHECK_THROWS_AS(a.neighbor(0, -1), std::out_of_range);
    CHECK_THROWS_AS(a.neighbor(5, 0), std::out_of_range);
    CHECK_THROWS_AS(a.neighbor_if_present(0, 7), std::out_of_range);
    CHECK_THROWS_AS(a.truncate(99), std::invalid_argument);
}

TEST_CASE("arena stays consistent under a long random walk") {
    TreeArena a(Degree(3));
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, 3);
    int v = a.root();
    for (int step = 0; step < 500; ++step) {
        v = a.neighbor(v, pick(rng));
        a.set_origin_awake(v, true);
    }
    CHECK(a.validate());
    a.reset();
    CHECK_EQ(a.vertex_count(), 1);
    CHECK(a.validate());
}

TEST_CASE("config validation") {
    SimConfig cfg(d2, Probability(0.5));
    CHECK_NOTHROW(cfg.validate());
    cfg.horizon = 0;
    CHECK_THROWS_AS(cfg.validate(), std::domain_error);
    cfg.horizon = 10;
    cfg.trials = 0;
    CHECK_THROWS_AS(cfg.validate(), std::domain_error);
    cfg.trials = 10;
    cfg.awake_cap = 0;
    CHECK_THROWS_AS(cfg.validate(), std::domain_error);
}

TEST_CASE("full model at the deterministic endpoints") {
    SimConfig dead(d2, Probability(0.0));
    dead.trials = 300;
    const SurvivalEstimate none = simulate_frog_model(dead);
    CHECK_EQ(none.successes, 0);
    CHECK_EQ(none.point, 0.0);

    SimConfig immortal(d2, Probability(1.0));
    immortal.trials = 200;
    immortal.awake_cap = 10'000;
    const SurvivalEstimate all = simulate_frog_model(immortal);
    CHECK_EQ(all.successes, all.trials);
    CHECK_EQ(all.point, 1.0);
}

TEST_CASE("full model bookkeeping and determinism") {
    SimConfig cfg(d2, Probability(0.85));
    cfg.trials = 500;
    cfg.awake_cap = 2'000;
    cfg.seed = 42;
    const SurvivalEstimate a = simulate_frog_model(cfg, 1);
    CHECK(a.point > 0.0);
    CHECK_EQ(a.trials, 500);
    CHECK_EQ(a.point, static_cast<double>(a.successes) / static_cast<double>(a.trials));
    const double ci = 1.96 * std::sqrt(a.point * (1.0 - a.point) / static_cast<double>(a.trials));
    CHECK(std::abs(a.ci95_halfwidth - ci) < 1e-15);

    const SurvivalEstimate b = simulate_frog_model(cfg, 3);
    const SurvivalEstimate c = simulate_frog_model(cfg, 8);
    CHECK_EQ(a.successes, b.successes);
    CHECK_EQ(a.successes, c.successes);
    CHECK_EQ(a.successes, simulate_frog_model(cfg, 1).successes);

    CHECK_THROWS_AS(simulate_frog_model(cfg, 0), std::invalid_argument);
}

TEST_CASE("single replica leaves a valid arena and checks the degree") {
    SimConfig cfg(d2, Probability(0.6));
    TreeArena arena(d2);
    for (std::uint64_t t = 0; t < 50; ++t) {
        simulate_one_replica(cfg, t, arena);
        CHECK(arena.validate());
    }
    TreeArena wrong(Degree(3));
    CHECK_THROWS_AS(simulate_one_replica(cfg, 0, wrong), std::invalid_argument);
}

TEST_CASE("hit probability targets the decay base power") {
    CHECK_EQ(estimate_hit_probability(d2, Probability(0.0), 1, 1000, 9).point, 0.0);

    // immortal walker: hitting a fixed neighbor has probability 1/d
    const SurvivalEstimate one = estimate_hit_probability(d2, Probability(1.0), 1, 20'000, 11);
    CHECK(std::abs(one.point - 0.5) < 4.0 * one.ci95_halfwidth);

    const double b = beta(d2, Probability(0.7)).value();
    for (const int n : {1, 2}) {
        const SurvivalEstimate est = estimate_hit_probability(d2, Probability(0.7), n, 200'000, 5 + n);
        CHECK(std::abs(est.point - std::pow(b, n)) < 4.0 * est.ci95_halfwidth);
    }
    CHECK_THROWS_AS(estimate_hit_probability(d2, Probability(0.5), 0, 10, 1), std::domain_error);
}

TEST_CASE("reach samples respect the caps and the geometric tail") {
    const BranchRatio b(0.3, d2);
    std::mt19937_64 rng(12345);
    const int n = 4;
    const int trials = 40'000;
    int first_ge1 = 0;
    int last_at_cap = 0;
    for (int t = 0; t < trials; ++t) {
        const ReachSample s = sample_reaches(n, b, rng);
        REQUIRE_EQ(s.advance.size(), static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            CHECK(s.advance[static_cast<size_t>(j)] >= 0);
            CHECK(s.advance[static_cast<size_t>(j)] <= n - j);
        }
        if (s.advance[0] >= 1) ++first_ge1;
        if (s.advance[3] == 1) ++last_at_cap;
    }
    const double se = std::sqrt(0.3 * 0.7 / trials);
    // P[advance >= 1] = b, and the final coordinate is capped at 1
    CHECK(std::abs(first_ge1 / static_cast<double>(trials) - 0.3) < 4.0 * se);
    CHECK(std::abs(last_at_cap / static_cast<double>(trials) - 0.3) < 4.0 * se);

    std::mt19937_64 rng2(12345);
    const ReachSample zero = sample_reaches(3, BranchRatio(0.0, d2), rng2);
    for (const int adv : zero.advance) CHECK_EQ(adv, 0);
    CHECK_THROWS_AS(sample_reaches(0, b, rng2), std::domain_error);
}

TEST_CASE("cascade event on hand-checked reach tuples") {
    CHECK(event_of({1}));
    CHECK_FALSE(event_of({0}));

    CHECK(event_of({2, 0}));
    CHECK(event_of({1, 1}));
    CHECK_FALSE(event_of({1, 0}));
    CHECK_FALSE(event_of({0, 1}));
    CHECK_FALSE(event_of({0, 0}));

    CHECK(event_of({1, 2, 0}));
    CHECK(event_of({2, 0, 1}));
    CHECK_FALSE(event_of({2, 0, 0}));

    // Relay at depth: the frog from x_0 dies at x_2, so the event passes to
    // the frog at x_1, or to the one at x_2 only when x_1's frog never moves.
    CHECK(event_of({2, 0, 3, 2, 0}));
    CHECK_FALSE(event_of({2, 3, 3, 1, 0}));

    CHECK_THROWS_AS(event_of({}), std::domain_error);
    CHECK_THROWS_AS(event_of({5}), std::domain_error);
    CHECK_THROWS_AS(event_of({-1, 0}), std::domain_error);
}

TEST_CASE("enumerated cascade probability reproduces phi exactly") {
    for (const double b : {0.1, 0.25, 0.4}) {
        for (int n = 1; n <= 6; ++n) {
            const Enumerated e = enumerate_child_event(n, b);
            CHECK(std::abs(e.total_mass - 1.0) < 1e-12);
            CHECK(std::abs(e.event_mass - phi_recurrence(n, BranchRatio(b, d2))) < 1e-12);
        }
    }
}

TEST_CASE("sampled cascade probability matches phi") {
    const BranchRatio b = beta(d2, Probability(0.7));
    const SurvivalEstimate two = estimate_child_probability(d2, Probability(0.7), 2, 200'000, 21);
    CHECK(std::abs(two.point - 0.12309101623753043) < 4.0 * two.ci95_halfwidth);
    const SurvivalEstimate four = estimate_child_probability(d2, Probability(0.7), 4, 200'000, 22);
    CHECK(std::abs(four.point - phi_recurrence(4, b)) < 4.0 * four.ci95_halfwidth);
    CHECK_THROWS_AS(estimate_child_probability(d2, Probability(0.7), 0, 10, 1), std::domain_error);
}

TEST_CASE("offspring mean matches the scaled cascade probability") {
    const MeanEstimate none = simulate_branching_offspring(d2, Probability(0.0), 2, 500, 3);
    CHECK_EQ(none.mean, 0.0);

    const double b = beta(d2, Probability(0.7)).value();
    const MeanEstimate one = simulate_branching_offspring(d2, Probability(0.7), 1, 50'000, 31);
    CHECK(std::abs(one.mean - 2.0 * b) < 4.0 * one.ci95_halfwidth);

    const MeanEstimate two = simulate_branching_offspring(d2, Probability(0.7), 2, 50'000, 32);
    CHECK(std::abs(two.mean - 0.49236406495012171) < 4.0 * two.ci95_halfwidth);

    const MeanEstimate again = simulate_branching_offspring(d2, Probability(0.7), 2, 50'000, 32);
    CHECK_EQ(two.mean, again.mean);

    CHECK_THROWS_AS(simulate_branching_offspring(Degree(10), Probability(0.5), 5, 10, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(simulate_branching_offspring(d2, Probability(0.5), 0, 10, 1),
                    std::domain_error);
}
