#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hgcauchy/combinatorics.hpp"
#include "hgcauchy/errors.hpp"
#include "oracles.hpp"

using hgc::PartitionMultiset;

TEST_CASE("factorial and binomial") {
    CHECK(hgc::factorial(0) == 1);
    CHECK(hgc::factorial(10) == 3628800);
    CHECK(hgc::factorial(300) == hgc::factorial(299) * 300);
    CHECK(hgc::binomial(5, 2) == 10);
    CHECK(hgc::binomial(3, 5) == 0);
    const std::vector<unsigned> parts{2, 1, 1};
    CHECK(hgc::multinomial(parts) == 12);
}

TEST_CASE("partition multiplicities, small m") {
    CHECK(hgc::enumerate_partition_multiplicities(1) == std::vector<PartitionMultiset>{{{1}}});
    CHECK(hgc::enumerate_partition_multiplicities(2) == std::vector<PartitionMultiset>{{{0, 1}}, {{2, 0}}});
    CHECK(hgc::enumerate_partition_multiplicities(5).size() == 7);
}

TEST_CASE("partition multiplicities are exhaustive, distinct and sorted") {
    for (unsigned m = 1; m <= 18; ++m) {
        const auto& parts = hgc::enumerate_partition_multiplicities(m);
        CHECK(parts.size() == hgc::oracle::partition_count(m));
        CHECK(std::is_sorted(parts.begin(), parts.end()));
        CHECK(std::set<PartitionMultiset>(parts.begin(), parts.end()).size() == parts.size());
        for (const auto& p : parts) {
            CHECK(p.multiplicities.size() == m);
            CHECK(p.weight() == m);
        }
    }
}

TEST_CASE("partition enumeration errors") {
    CHECK_THROWS_AS(hgc::enumerate_partition_multiplicities(0), std::invalid_argument);
    CHECK_THROWS_AS(hgc::enumerate_partition_multiplicities(25), hgc::CapExceeded);
    hgc::Caps small;
    small.partitions = 4;
    CHECK_THROWS_AS(hgc::enumerate_partition_multiplicities(5, small), hgc::CapExceeded);
}

TEST_CASE("weak compositions") {
    std::vector<std::vector<unsigned>> seen;
    hgc::for_each_weak_composition(2, 2, [&](std::span<const unsigned> c) { seen.emplace_back(c.begin(), c.end()); });
    CHECK(seen == std::vector<std::vector<unsigned>>{{0, 2}, {1, 1}, {2, 0}});

    for (unsigned n = 0; n <= 6; ++n) {
        for (unsigned k = 1; k <= 4; ++k) {
            unsigned count = 0;
            hgc::for_each_weak_composition(n, k, [&](std::span<const unsigned>) { ++count; });
            CHECK(count == hgc::binomial(n + k - 1, k - 1));
        }
    }
}

TEST_CASE("strict compositions") {
    std::vector<std::vector<unsigned>> seen;
    hgc::for_each_strict_composition(3, [&](std::span<const unsigned> c) { seen.emplace_back(c.begin(), c.end()); });
    CHECK(seen == std::vector<std::vector<unsigned>>{{1, 1, 1}, {1, 2}, {2, 1}, {3}});

    unsigned none = 0;
    hgc::for_each_strict_composition(0, [&](std::span<const unsigned>) { ++none; });
    CHECK(none == 0);

    for (unsigned n = 1; n <= 12; ++n) {
        unsigned count = 0;
        hgc::for_each_strict_composition(n, [&](std::span<const unsigned>) { ++count; });
        CHECK(count == (1u << (n - 1)));
    }
}
