#include <doctest.h>

#include <random>

#include "bibliorank/scenario.hpp"
#include "../support/property_battery.hpp"

using namespace bibliorank;

namespace {

doctest::Approx near(double value) {
    return doctest::Approx(value).epsilon(1e-12);
}

std::vector<double> prime_ascending(const IndicatorTable& table) {
    std::vector<double> values;
    for (auto it = table.rows.rbegin(); it != table.rows.rend(); ++it) {
        values.push_back(it->p100_prime);
    }
    return values;
}

} // namespace

TEST_CASE("move shifts papers between levels") {
    const auto initial = build_distribution({0, 0, 1, 2, 3});
    const auto first = apply_mutation(initial, Mutation::move_papers(1, 0, 1));
    CHECK(first.levels() == std::vector<Level>{{0, 1}, {1, 2}, {2, 1}, {3, 1}});
    CHECK(first.total_papers() == 5);
}

TEST_CASE("move can merge away a level") {
    const auto five = build_distribution({0, 1, 2, 3, 4});
    const auto merged = apply_mutation(five, Mutation::move_papers(1, 3, 4));
    CHECK(merged.levels() == std::vector<Level>{{0, 1}, {1, 1}, {2, 1}, {4, 2}});
}

TEST_CASE("move and its inverse round-trip") {
    const auto dist = build_distribution({0, 0, 1, 2, 3});
    const auto there = apply_mutation(dist, Mutation::move_papers(1, 0, 7));
    const auto back = apply_mutation(there, Mutation::move_papers(1, 7, 0));
    CHECK(back == dist);
}

TEST_CASE("add and remove change N by k") {
    const auto dist = build_distribution({0, 1});
    const auto more = apply_mutation(dist, Mutation::add_papers(3, 1));
    CHECK(more.total_papers() == 5);
    CHECK(more.levels() == std::vector<Level>{{0, 1}, {1, 4}});

    const auto fewer = apply_mutation(more, Mutation::remove_papers(2, 1));
    CHECK(fewer.total_papers() == 3);
}

TEST_CASE("mutation error cases") {
    const auto dist = build_distribution({0, 0, 1});
    CHECK_THROWS_AS(apply_mutation(dist, Mutation::move_papers(1, 7, 0)), UnknownLevel);
    CHECK_THROWS_AS(apply_mutation(dist, Mutation::move_papers(5, 0, 1)), InsufficientPapers);
    CHECK_THROWS_AS(apply_mutation(dist, Mutation::remove_papers(1, 9)), UnknownLevel);

    const auto single = build_distribution({4});
    CHECK_THROWS_AS(apply_mutation(single, Mutation::remove_papers(1, 4)), EmptyResult);

    CHECK_THROWS_AS(Mutation::move_papers(1, 3, 3), Error);
    CHECK_THROWS_AS(Mutation::add_papers(0, 3), Error);
}

TEST_CASE("scenario over the small model set") {
    const Scenario scenario{"model",
                            build_distribution({0, 0, 1, 2, 3}),
                            {Mutation::move_papers(1, 0, 1), Mutation::move_papers(1, 1, 2)}};
    const auto steps = run_scenario(scenario);
    REQUIRE(steps.size() == 3);

    const std::vector<std::vector<double>> expected = {
        {0, 50, 75, 100}, {0, 25, 75, 100}, {0, 25, 50, 100}};
    for (std::size_t s = 0; s < steps.size(); ++s) {
        const auto primes = prime_ascending(steps[s].table);
        REQUIRE(primes.size() == expected[s].size());
        for (std::size_t k = 0; k < primes.size(); ++k) {
            CHECK(primes[k] == near(expected[s][k]));
        }
    }
}

TEST_CASE("piling papers onto the top level leaves p100_prime alone") {
    // n_top grows 2 -> 3 -> 4; j_max stays 3
    const Scenario scenario{"top-heavy",
                            build_distribution({0, 1, 2, 3, 3}),
                            {Mutation::add_papers(1, 3), Mutation::add_papers(1, 3)}};
    const auto steps = run_scenario(scenario);
    REQUIRE(steps.size() == 3);
    for (const auto& step : steps) {
        const auto primes = prime_ascending(step.table);
        CHECK(primes[1] == near(100.0 / 3.0));
        CHECK(primes[2] == near(200.0 / 3.0));
        CHECK(primes[3] == 100.0);
    }
    // while every interior interval narrows
    for (std::size_t s = 1; s < steps.size(); ++s) {
        for (std::size_t k = 1; k + 1 < steps[s].table.rows.size(); ++k) {
            const auto& wide = steps[s - 1].table.rows[k];
            const auto& narrow = steps[s].table.rows[k];
            CHECK(narrow.prou - narrow.piic < wide.prou - wide.piic);
        }
    }
}

TEST_CASE("empty scenario yields the base table only") {
    const Scenario scenario{"noop", build_distribution({0, 1}), {}};
    const auto steps = run_scenario(scenario);
    REQUIRE(steps.size() == 1);
    CHECK_FALSE(steps[0].mutation.has_value());
}

TEST_CASE("scenario failures carry the step index") {
    const Scenario scenario{"broken",
                            build_distribution({0, 0, 1}),
                            {Mutation::move_papers(1, 0, 1), Mutation::move_papers(4, 1, 2)}};
    try {
        run_scenario(scenario);
        FAIL("expected ScenarioStepError");
    } catch (const ScenarioStepError& e) {
        CHECK(e.step_index == 2);
    }
}

TEST_CASE("interval escapes of the tied-top modification") {
    const auto third = indicator_table(build_distribution({0, 1, 2, 3, 3}));
    const auto escapes = detect_interval_escapes(third, Indicator::p100_prime);
    REQUIRE(escapes.size() == 1);
    CHECK(escapes[0].level == 2);
    CHECK(escapes[0].value == near(200.0 / 3.0));
    CHECK(escapes[0].lower == near(40.0));
    CHECK(escapes[0].upper == near(60.0));

    // initial situation: everything inside
    const auto initial = indicator_table(build_distribution({0, 0, 1, 2, 3}));
    CHECK(detect_interval_escapes(initial, Indicator::p100_prime).empty());

    // four tied top papers: two levels escape
    const auto fifth = indicator_table(build_distribution({0, 1, 2, 3, 3, 3, 3}));
    const auto two = detect_interval_escapes(fifth, Indicator::p100_prime);
    REQUIRE(two.size() == 2);
    CHECK(two[0].level == 1);
    CHECK(two[1].level == 2);
}

TEST_CASE("boundary contact is not an escape") {
    // n_top == 3: p100_prime(1) == 100/3 == upper bound exactly
    const auto fourth = indicator_table(build_distribution({0, 1, 2, 3, 3, 3}));
    const auto escapes = detect_interval_escapes(fourth, Indicator::p100_prime);
    REQUIRE(escapes.size() == 1);
    CHECK(escapes[0].level == 2);
}

TEST_CASE("escape detection agrees with a per-level recheck") {
    std::mt19937_64 rng(20260808);
    for (int round = 0; round < 200; ++round) {
        const auto dist = testsupport::random_distribution(rng, 60);
        const auto table = indicator_table(dist);
        for (Indicator id : {Indicator::p100_prime, Indicator::ppag,
                             Indicator::p100_double_prime}) {
            const auto escapes = detect_interval_escapes(table, id);
            std::set<int> flagged;
            for (const auto& escape : escapes) {
                flagged.insert(escape.level);
            }
            for (const auto& row : table.rows) {
                const double value = row.value(id);
                const bool outside = value < row.piic - kComparisonTolerance ||
                                     value > row.prou + kComparisonTolerance;
                CHECK(outside == flagged.contains(row.i));
            }
        }
    }
}

TEST_CASE("p100_double_prime never escapes") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 300; ++round) {
        const auto dist = testsupport::random_distribution(rng, 80);
        const auto table = indicator_table(dist);
        CHECK(detect_interval_escapes(table, Indicator::p100_double_prime).empty());
    }
}

TEST_CASE("merging the runner-up into the top inflates untouched levels") {
    const auto before = indicator_table(build_distribution({0, 1, 2, 3, 4}));
    const auto merged = apply_mutation(build_distribution({0, 1, 2, 3, 4}),
                                       Mutation::move_papers(1, 3, 4));
    const auto after = indicator_table(merged);

    const auto report = detect_counterintuitive(before, after, {3, 4});

    // p100_prime at the untouched low levels rises 25 -> 33.33 and 50 -> 66.67
    bool saw_u1 = false;
    bool saw_u2 = false;
    for (const auto& gain : report.counterintuitive_gains) {
        if (gain.indicator != Indicator::p100_prime) {
            continue;
        }
        if (gain.u == 1) {
            saw_u1 = true;
            CHECK(gain.before == near(25.0));
            CHECK(gain.after == near(100.0 / 3.0));
        }
        if (gain.u == 2) {
            saw_u2 = true;
            CHECK(gain.before == near(50.0));
            CHECK(gain.after == near(200.0 / 3.0));
        }
    }
    CHECK(saw_u1);
    CHECK(saw_u2);

    // deleting the level cascades through p100 at the untouched values
    REQUIRE(report.p100_cascade.size() == 2);
    CHECK(report.p100_cascade[0].u == 1);
    CHECK(report.p100_cascade[0].before == near(25.0));
    CHECK(report.p100_cascade[0].after == near(100.0 / 3.0));
    CHECK(report.p100_cascade[1].u == 2);

    CHECK(report.levels_deleted == std::vector<long long>{3});
    CHECK(report.levels_created.empty());
}

TEST_CASE("identical tables produce an empty diff") {
    const auto table = indicator_table(build_distribution({0, 1, 2}));
    const auto report = detect_counterintuitive(table, table, {});
    CHECK(report.empty());
}

TEST_CASE("paradox_report bundles escapes and gains") {
    const auto base = build_distribution({0, 1, 2, 3, 4});
    const auto mutation = Mutation::move_papers(1, 3, 4);
    const auto before = indicator_table(base);
    const auto after = indicator_table(apply_mutation(base, mutation));
    const auto report = paradox_report(before, after, mutation);
    CHECK_FALSE(report.counterintuitive_gains.empty());
    CHECK_FALSE(report.interval_escapes.empty()); // p100_prime escapes after the merge
    for (const auto& escape : report.interval_escapes) {
        CHECK(escape.indicator == Indicator::p100_prime);
    }
}

TEST_CASE("p100_double_prime declines along the top-heavy series") {
    const std::vector<IndicatorTable> series = {
        indicator_table(build_distribution({0, 1, 2, 3, 3})),
        indicator_table(build_distribution({0, 1, 2, 3, 3, 3})),
        indicator_table(build_distribution({0, 1, 2, 3, 3, 3, 3})),
    };
    const auto trends = p100pp_improvement_check(series);
    REQUIRE(trends.size() == 2);

    CHECK(trends[0].i == 1);
    CHECK(trends[0].non_increasing);
    CHECK(trends[0].values[0] == near(80.0 / 3.0));
    CHECK(trends[0].values[1] == near(200.0 / 9.0));
    CHECK(trends[0].values[2] == near(400.0 / 21.0));

    CHECK(trends[1].i == 2);
    CHECK(trends[1].non_increasing);
    CHECK(trends[1].values[0] == near(160.0 / 3.0));
    CHECK(trends[1].values[1] == near(400.0 / 9.0));
    CHECK(trends[1].values[2] == near(800.0 / 21.0));
}

TEST_CASE("improvement check edge cases") {
    const std::vector<IndicatorTable> one = {indicator_table(build_distribution({0, 1, 2}))};
    for (const auto& trend : p100pp_improvement_check(one)) {
        CHECK(trend.non_increasing); // vacuous
    }

    const std::vector<IndicatorTable> mismatched = {
        indicator_table(build_distribution({0, 1, 2})),
        indicator_table(build_distribution({0, 1, 5})),
    };
    CHECK_THROWS_AS(p100pp_improvement_check(mismatched), StructureMismatch);
}

TEST_CASE("touched values mark both ends of a move") {
    const auto touched = Mutation::move_papers(2, 1, 9).touched_values();
    CHECK(touched == std::vector<long long>{1, 9});
    CHECK(Mutation::add_papers(1, 4).touched_values() == std::vector<long long>{4});
    CHECK(Mutation::remove_papers(1, 4).touched_values() == std::vector<long long>{4});
}
