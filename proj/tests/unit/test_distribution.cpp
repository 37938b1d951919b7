#include <doctest.h>

#include "bibliorank/distribution.hpp"
#include "../support/table1_data.hpp"

using namespace bibliorank;

TEST_CASE("from_counts aggregates and sorts") {
    const auto dist = build_distribution({0, 0, 3, 7, 9});
    REQUIRE(dist.level_count() == 4);
    CHECK(dist.levels() == std::vector<Level>{{0, 2}, {3, 1}, {7, 1}, {9, 1}});
    CHECK(dist.total_papers() == 5);
}

TEST_CASE("from_counts is order independent") {
    const auto a = build_distribution({9, 0, 7, 0, 3});
    const auto b = build_distribution({0, 0, 3, 7, 9});
    CHECK(a == b);
}

TEST_CASE("single paper aggregates to one level") {
    const auto dist = build_distribution({5});
    CHECK(dist.levels() == std::vector<Level>{{5, 1}});
    CHECK(dist.total_papers() == 1);
}

TEST_CASE("empty input rejected") {
    CHECK_THROWS_AS(CitationDistribution::from_counts({}), EmptyInput);
}

TEST_CASE("negative count rejected with its index") {
    const long long counts[] = {3, 1, -2};
    try {
        CitationDistribution::from_counts(counts);
        FAIL("expected NegativeCount");
    } catch (const NegativeCount& e) {
        CHECK(e.position == 2);
        CHECK(e.value == -2);
    }
}

TEST_CASE("from_levels validates") {
    CHECK_THROWS_AS(CitationDistribution::from_levels({}), EmptyInput);
    CHECK_THROWS_AS(CitationDistribution::from_levels({{2, 1}, {2, 4}}), DuplicateLevel);
    CHECK_THROWS_AS(CitationDistribution::from_levels({{2, 0}}), NonPositiveFrequency);
    CHECK_THROWS_AS(CitationDistribution::from_levels({{-1, 3}}), NegativeCount);

    // unsorted input is fine, levels come out ascending
    const auto dist = CitationDistribution::from_levels({{9, 1}, {0, 2}, {3, 1}});
    CHECK(dist.levels() == std::vector<Level>{{0, 2}, {3, 1}, {9, 1}});
}

TEST_CASE("expand inverts aggregation") {
    const auto dist = build_distribution({0, 0, 3, 7, 9});
    CHECK(dist.expand() == std::vector<long long>{0, 0, 3, 7, 9});
    CHECK(CitationDistribution::from_counts(dist.expand()) == dist);
}

TEST_CASE("index_of finds levels") {
    const auto dist = build_distribution({0, 0, 3, 7, 9});
    CHECK(dist.index_of(3) == 1);
    CHECK(dist.index_of(4) == std::nullopt);
}

TEST_CASE("the 2012 reference set checks out") {
    const auto dist = testsupport::table1_distribution();
    CHECK(dist.level_count() == 34);
    CHECK(dist.total_papers() == 3424);
    CHECK(dist.total_citations() == 6260);

    // the 3424-entry per-paper expansion aggregates back to the same value
    CHECK(CitationDistribution::from_counts(dist.expand()) == dist);
}
