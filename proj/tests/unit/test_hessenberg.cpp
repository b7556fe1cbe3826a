#include <doctest.h>

#include "hgcauchy/hessenberg.hpp"
#include "hgcauchy/random.hpp"
#include "hgcauchy/series_rules.hpp"
#include "oracles.hpp"

using hgc::ExactRational;
using hgc::HessenbergSpec;
using Q = ExactRational;

TEST_CASE("hessenberg_det examples") {
    CHECK(hgc::hessenberg_det(HessenbergSpec{1, {}}) == 1);

    const Q a1(3, 7), a2(-5, 2);
    CHECK(hgc::hessenberg_det(HessenbergSpec{1, {a1, a2}}) == a1 * a1 - a2);

    const HessenbergSpec spec{1, {Q(1, 2), Q(1, 3)}};
    const Q dense = hgc::oracle::cofactor_det(hgc::oracle::dense_hessenberg(1, spec.band));
    CHECK(dense == Q(-1, 12));
    CHECK(hgc::hessenberg_det(spec) == dense);
}

TEST_CASE("entry layout matches the dense matrix") {
    const HessenbergSpec spec{Q(2), {1, 2, 3, 4}};
    const auto dense = hgc::oracle::dense_hessenberg(spec.super, spec.band);
    for (unsigned i = 0; i < 4; ++i)
        for (unsigned j = 0; j < 4; ++j)
            CHECK(spec.entry(i, j) == dense[i][j]);
}

TEST_CASE("hessenberg_det agrees with dense cofactor expansion") {
    hgc::RationalGenerator gen;
    for (int inst = 0; inst < 60; ++inst) {
        const auto dim = static_cast<unsigned>(gen.uniform(0, 7));
        const HessenbergSpec spec = gen.hessenberg(dim);
        CHECK(hgc::hessenberg_det(spec) == hgc::oracle::cofactor_det(hgc::oracle::dense_hessenberg(spec.super, spec.band)));
    }
}

TEST_CASE("leading minors") {
    const HessenbergSpec spec{1, {Q(1, 2), Q(1, 3), Q(1, 4)}};
    CHECK(hgc::hessenberg_minors(spec) == std::vector<ExactRational>{1, Q(1, 2), Q(-1, 12), Q(1, 24)});
}

TEST_CASE("trudi_sum examples") {
    const Q a0(5, 3), a1(-2, 7), a2(4, 9);
    CHECK(hgc::trudi_sum(HessenbergSpec{a0, {a1}}) == a1);
    CHECK(hgc::trudi_sum(HessenbergSpec{a0, {a1, a2}}) == a1 * a1 - a0 * a2);
    const HessenbergSpec spec{1, {Q(1, 2), Q(1, 3), Q(1, 4)}};
    CHECK(hgc::trudi_sum(spec) == hgc::hessenberg_det(spec));
    CHECK(hgc::trudi_sum(spec) == Q(1, 24));
    CHECK(hgc::trudi_sum(HessenbergSpec{1, {}}) == 1);
}

TEST_CASE("trudi_sum equals the determinant on seeded specs") {
    CHECK(hgc::check_trudi_equivalence(100, 9).ok());
}

TEST_CASE("unit_lower_toeplitz_inverse examples") {
    const Q c(7, 11);
    CHECK(hgc::unit_lower_toeplitz_inverse(std::vector<ExactRational>{c}) == std::vector<ExactRational>{-c});
    CHECK(hgc::unit_lower_toeplitz_inverse(std::vector<ExactRational>{0, 0, 0}) == std::vector<ExactRational>{0, 0, 0});

    const std::vector<ExactRational> alpha{Q(1, 2), Q(-1, 12), Q(1, 24)};
    const auto inv = hgc::oracle::unit_lower_inverse(hgc::oracle::unit_lower_toeplitz(alpha));
    const std::vector<ExactRational> oracle_bands{inv[1][0], inv[2][0], inv[3][0]};
    CHECK(oracle_bands == std::vector<ExactRational>{Q(-1, 2), Q(1, 3), Q(-1, 4)});
    CHECK(hgc::unit_lower_toeplitz_inverse(alpha) == oracle_bands);
}

TEST_CASE("band convolution of a matrix and its inverse vanishes") {
    hgc::RationalGenerator gen;
    for (int inst = 0; inst < 40; ++inst) {
        const auto n = static_cast<unsigned>(gen.uniform(1, 12));
        std::vector<ExactRational> alpha;
        for (unsigned i = 0; i < n; ++i)
            alpha.push_back(gen.rational());
        const auto gamma = hgc::unit_lower_toeplitz_inverse(alpha);
        for (unsigned k = 1; k <= n; ++k) {
            Q sum = alpha[k - 1] + gamma[k - 1];  // j = k and j = 0 terms
            for (unsigned j = 1; j < k; ++j)
                sum += alpha[j - 1] * gamma[k - j - 1];
            CHECK(sum == 0);
        }
    }
}

TEST_CASE("determinant inversion round trip") {
    CHECK(hgc::determinant_inversion_roundtrip("zero", [](unsigned) { return Q(0); }, 6).ok());
    const auto zero = hgc::trace_inversion([](unsigned) { return Q(0); }, 4);
    CHECK(zero.forward == std::vector<ExactRational>{0, 0, 0, 0});

    const hgc::SequenceRule cauchy = [](unsigned k) { return Q(1, k + 1); };
    const auto trace = hgc::trace_inversion(cauchy, 5);
    // Oracle: reciprocal of log(1+x)/x = sum (-1)^n x^n/(n+1).
    std::vector<ExactRational> f;
    for (unsigned n = 0; n <= 5; ++n)
        f.push_back(hgc::sign_power(n) * Q(1, n + 1));
    const auto recip = hgc::oracle::reciprocal_coefficients(f);
    const std::vector<ExactRational> expected{Q(1, 2), Q(-1, 12), Q(1, 24), Q(-19, 720), Q(3, 160)};
    CHECK(std::vector<ExactRational>(recip.begin() + 1, recip.end()) == expected);
    CHECK(trace.forward == expected);
    CHECK(trace.recovered == trace.rule);
    CHECK(hgc::determinant_inversion_roundtrip("cauchy", cauchy, 5).ok());

    const hgc::SequenceRule hgc3 = [](unsigned k) { return Q(3, 3 + k); };
    const auto t3 = hgc::trace_inversion(hgc3, 8);
    const auto b = hgc::oracle::normalized_hgc(3, 8);
    CHECK(t3.forward == std::vector<ExactRational>(b.begin() + 1, b.end()));
    CHECK(hgc::determinant_inversion_roundtrip("hgc", hgc3, 8).ok());
}

TEST_CASE("signed inverse bands") {
    const hgc::SequenceRule cauchy = [](unsigned k) { return Q(1, k + 1); };
    const auto trace = hgc::trace_inversion(cauchy, 6);
    for (unsigned k = 1; k <= 6; ++k)
        CHECK(trace.inverse_bands[k - 1] == hgc::sign_power(k) * cauchy(k));
    CHECK(hgc::signed_inverse_check("cauchy", cauchy, 6).ok());
}
