#include <doctest.h>

#include "hgcauchy/cauchy.hpp"
#include "hgcauchy/errors.hpp"
#include "hgcauchy/series.hpp"
#include "hgcauchy/series_rules.hpp"
#include "oracles.hpp"

using hgc::ExactRational;
using hgc::TruncatedSeries;
using Q = ExactRational;

TEST_CASE("series_mul examples") {
    CHECK(TruncatedSeries{1, 1, 0} * TruncatedSeries{1, -1, 0} == TruncatedSeries{1, 0, -1});
    const TruncatedSeries a{Q(3, 7), -2, Q(1, 5)};
    CHECK(a * TruncatedSeries::one(2) == a);
    CHECK(TruncatedSeries{1, Q(1, 2), 0} * TruncatedSeries{1, Q(1, 3), 0} ==
          TruncatedSeries{1, Q(5, 6), Q(1, 6)});
}

TEST_CASE("mixed orders truncate to the smaller one") {
    const TruncatedSeries a{1, 2, 3, 4};
    const TruncatedSeries b{1, 1};
    CHECK((a * b).order() == 1);
    CHECK((a + b).order() == 1);
    CHECK((a - b) == TruncatedSeries{0, 1});
    CHECK(a.truncated(2) == TruncatedSeries{1, 2, 3});
}

TEST_CASE("series_reciprocal examples") {
    CHECK(series_reciprocal(TruncatedSeries{1, -1, 0, 0}) == TruncatedSeries{1, 1, 1, 1});
    CHECK(series_reciprocal(TruncatedSeries{1}) == TruncatedSeries{1});

    // b_n from the classical recurrence (N = 1).
    const auto b = hgc::oracle::normalized_hgc(1, 2);
    CHECK(b == std::vector<ExactRational>{1, Q(1, 2), Q(-1, 12)});
    const TruncatedSeries f = hgc::hgc_generating_series(1, 2);
    CHECK(series_reciprocal(f) == TruncatedSeries(b));
}

TEST_CASE("series_reciprocal rejects a zero constant term") {
    CHECK_THROWS_AS(series_reciprocal(TruncatedSeries{0, 1, 2}), hgc::ZeroConstantTerm);
}

TEST_CASE("series_pow") {
    const TruncatedSeries a{1, 1, 0, 0};
    CHECK(series_pow(a, 0) == TruncatedSeries::one(3));
    CHECK(series_pow(a, 3) == TruncatedSeries{1, 3, 3, 1});
}

TEST_CASE("log1p_series examples") {
    CHECK(hgc::log1p_series(3) == TruncatedSeries{0, 1, Q(-1, 2), Q(1, 3)});
    CHECK(hgc::log1p_series(0)[0] == 0);
    CHECK(hgc::log1p_series(5)[4] == Q(-1, 4));
}

TEST_CASE("ht_derivative examples") {
    const TruncatedSeries a{Q(2, 3), 5, -1, 7};
    CHECK(ht_derivative(a, 0) == a);
    CHECK(ht_derivative(TruncatedSeries{0, 0, 0, 1}, 2) == TruncatedSeries{0, 3});
    CHECK(ht_derivative(TruncatedSeries{1, 2, 3}, 1) == TruncatedSeries{2, 6});
    CHECK(ht_derivative(a, 3) == TruncatedSeries{7});
}

TEST_CASE("ht_derivative beyond the order throws") {
    CHECK_THROWS_AS(ht_derivative(TruncatedSeries{1, 2, 3}, 3), hgc::OrderExceeded);
}

TEST_CASE("cameron_transform examples") {
    CHECK(hgc::cameron_transform(std::vector<ExactRational>{0, 0, 0, 0}) == std::vector<ExactRational>{0, 0, 0, 0});
    CHECK(hgc::cameron_transform(std::vector<ExactRational>{1, 0, 0}) == std::vector<ExactRational>{1, 1, 1});

    std::vector<ExactRational> x;
    for (unsigned n = 1; n <= 3; ++n)
        x.push_back(hgc::sign_power(n - 1) * Q(1, n + 1));
    // Oracle: reciprocal of the explicit truncation sum (-1)^j / (j+1) x^j.
    std::vector<ExactRational> f;
    for (unsigned j = 0; j <= 3; ++j)
        f.push_back(hgc::sign_power(j) * Q(1, j + 1));
    const auto recip = hgc::oracle::reciprocal_coefficients(f);
    const std::vector<ExactRational> expected{Q(1, 2), Q(-1, 12), Q(1, 24)};
    CHECK(std::vector<ExactRational>(recip.begin() + 1, recip.end()) == expected);
    CHECK(hgc::cameron_transform(x) == expected);
    CHECK(hgc::cameron_inverse(expected) == x);
}

TEST_CASE("cameron_inverse on the empty sequence") {
    CHECK(hgc::cameron_inverse(std::vector<ExactRational>{}).empty());
}

TEST_CASE("series algebra properties on seeded random instances") {
    CHECK(hgc::check_reciprocal_unit(100).ok());
    CHECK(hgc::check_product_rule(60).ok());
    CHECK(hgc::check_quotient_rule_strict(60).ok());
    CHECK(hgc::check_quotient_rule_binomial(60).ok());
    CHECK(hgc::check_cameron_roundtrip(100).ok());
}

TEST_CASE("quotient rule, binomial form, expanded by hand at n = 2") {
    // k = 1: binomial(3,2) (-1/f0^2) f2
    // k = 2: binomial(3,3) (1/f0^3) (f0 f2 + f1 f1 + f2 f0), weak compositions of 2 into 2 parts
    const Q f0(3, 2), f1(-2, 5), f2(7, 3);
    const Q rhs = Q(3) * (-f2 / f0.pow(2)) + (f0 * f2 + f1 * f1 + f2 * f0) / f0.pow(3);
    CHECK(series_reciprocal(TruncatedSeries{f0, f1, f2})[2] == rhs);
    CHECK(rhs == (f1 * f1 - f0 * f2) / f0.pow(3));
}
