#include "hgcauchy/verify.hpp"

#include <array>
#include <string>

#include "hgcauchy/cauchy.hpp"
#include "hgcauchy/closed_forms.hpp"
#include "hgcauchy/combinatorics.hpp"
#include "hgcauchy/errata.hpp"
#include "hgcauchy/hessenberg.hpp"
#include "hgcauchy/higher_order.hpp"
#include "hgcauchy/relations.hpp"
#include "hgcauchy/series.hpp"
#include "hgcauchy/series_rules.hpp"

namespace hgc {

namespace {

constexpr std::array<std::string_view, 6> kSuiteNames{"all", "core", "higher", "relations", "inversion",
                                                      "series-rules"};

void check_zero(VerificationReport& report, const std::string& identity, ParameterPoint point,
                const std::vector<ExactRational>& residuals) {
    for (unsigned i = 0; i < residuals.size(); ++i) {
        if (!residuals[i].is_zero()) {
            point.n = i + 1;
            report.fail(identity, point, ExactRational(), residuals[i]);
            return;
        }
    }
    point.n = static_cast<unsigned>(residuals.size());
    report.pass(identity, point);
}

std::vector<ExactRational> scaled_coefficients(const TruncatedSeries& s, unsigned stride) {
    std::vector<ExactRational> out;
    for (unsigned k = 0; k * stride <= s.order(); ++k)
        out.push_back(s[k * stride] * ExactRational(factorial(k * stride)));
    return out;
}

// x / (e^x - 1) oracle: reciprocal of sum x^k/(k+1)!.
std::vector<ExactRational> bernoulli_series_oracle(unsigned n_max) {
    std::vector<ExactRational> c;
    for (unsigned k = 0; k <= n_max; ++k)
        c.push_back(ExactRational(Integer(1), factorial(k + 1)));
    return scaled_coefficients(series_reciprocal(TruncatedSeries(std::move(c))), 1);
}

// 1 / cosh x oracle, even coefficients E_0, E_2, ...
std::vector<ExactRational> euler_series_oracle(unsigned n_max) {
    std::vector<ExactRational> c(2 * n_max + 1);
    for (unsigned k = 0; k <= n_max; ++k)
        c[2 * k] = ExactRational(Integer(1), factorial(2 * k));
    return scaled_coefficients(series_reciprocal(TruncatedSeries(std::move(c))), 2);
}

// x / log(1+x) oracle for c_{1,n}/n!: reciprocal of log(1+x)/x.
std::vector<ExactRational> second_kind_oracle(unsigned n_max) {
    const auto log = log1p_series(n_max + 1);
    std::vector<ExactRational> shifted(log.coefficients().begin() + 1, log.coefficients().end());
    const auto inv = series_reciprocal(TruncatedSeries(std::move(shifted)));
    return {inv.coefficients().begin(), inv.coefficients().end()};
}

std::vector<ExactRational> brute_force_weights(unsigned N, unsigned r, unsigned e_max) {
    std::vector<ExactRational> out(e_max + 1);
    const Integer Nr = [&] {
        Integer v;
        mpz_ui_pow_ui(v.get_mpz_t(), N, r);
        return v;
    }();
    for (unsigned e = 0; e <= e_max; ++e) {
        for_each_weak_composition(e, r, [&](std::span<const unsigned> parts) {
            Integer denom = 1;
            for (unsigned i : parts)
                denom *= N + i;
            out[e] += ExactRational(Nr, denom);
        });
    }
    return out;
}

}  // namespace

std::string_view to_string(Suite suite) { return kSuiteNames[static_cast<std::size_t>(suite)]; }

std::optional<Suite> parse_suite(std::string_view text) {
    for (std::size_t i = 0; i < kSuiteNames.size(); ++i)
        if (kSuiteNames[i] == text)
            return static_cast<Suite>(i);
    return std::nullopt;
}

VerificationReport core_suite(const VerifyGrid& grid) {
    VerificationReport report;
    const unsigned n_max = grid.n_max;
    for (unsigned N = 1; N <= grid.N_max; ++N) {
        const auto reference = c_via_series(N, n_max);
        const ParameterPoint point{N, 1u, std::nullopt};
        for (const auto method : {Method::recurrence, Method::determinant, Method::compositions, Method::trudi}) {
            const auto table = compute_table(N, 1, method, n_max, grid.caps);
            compare_sequences(report, "method-agreement:" + std::string(to_string(method)), point,
                              reference.values, table.values);
        }
        check_zero(report, "hgc-recurrence-residual", point, eq3_residuals(N, reference.values));

        bool alternates = true;
        for (unsigned n = 1; n + 1 <= n_max && alternates; ++n) {
            if ((reference.values[n] * reference.values[n + 1]).sign() >= 0) {
                report.fail("sign-alternation", {N, 1u, n}, reference.values[n], reference.values[n + 1]);
                alternates = false;
            }
        }
        if (alternates)
            report.pass("sign-alternation", {N, 1u, n_max});

        std::vector<ExactRational> closed;
        for (unsigned n = 0; n <= std::min(n_max, 5u); ++n)
            closed.push_back(*c_closed_form(N, n));
        compare_sequences(report, "closed-form-c", point, closed,
                          {reference.values.begin(), reference.values.begin() + closed.size()});

        if (N == 1) {
            compare_sequences(report, "bernoulli-second-kind", point, second_kind_oracle(n_max),
                              c_via_recurrence(1, n_max).normalized());
        }
    }
    compare_sequences(report, "classical-bernoulli-det", {std::nullopt, std::nullopt, std::nullopt},
                      bernoulli_series_oracle(n_max), classical_bernoulli_det(n_max));
    compare_sequences(report, "classical-euler-det", {std::nullopt, std::nullopt, std::nullopt},
                      euler_series_oracle(n_max), classical_euler_det(n_max));
    report.append(corollary_multinomial_erratum());
    return report;
}

VerificationReport higher_suite(const VerifyGrid& grid) {
    VerificationReport report;
    const unsigned n_max = grid.n_max;
    for (unsigned N = 1; N <= grid.N_max; ++N) {
        for (unsigned r = 1; r <= grid.r_max; ++r) {
            const ParameterPoint point{N, r, std::nullopt};
            const auto reference = chor_via_recurrence(N, r, n_max);
            for (const auto method :
                 {Method::determinant, Method::explicit_sum, Method::trudi, Method::convolution, Method::series}) {
                const auto table = compute_table(N, r, method, n_max, grid.caps);
                compare_sequences(report, "higher-agreement:" + std::string(to_string(method)), point,
                                  reference.values, table.values);
            }
            if (r == 1)
                compare_sequences(report, "higher-reduces-to-r1", point, c_via_recurrence(N, n_max).values,
                                  reference.values);
            check_zero(report, "higher-recurrence-residual", point, prop2_residuals(N, r, reference.values));
            compare_sequences(report, "weight-enumeration", point, brute_force_weights(N, r, n_max),
                              weight_D(N, r, n_max).values);

            std::vector<ExactRational> closed;
            for (unsigned n = 0; n <= std::min(n_max, 4u); ++n)
                closed.push_back(*chor_closed_form(N, r, n));
            compare_sequences(report, "closed-form-c-r", point, closed,
                              {reference.values.begin(), reference.values.begin() + closed.size()});

            const auto weights = weight_D(N, r, 4).values;
            std::vector<ExactRational> shown;
            for (unsigned e = 1; e <= std::min(n_max, 4u); ++e)
                shown.push_back(*weight_display(N, r, e));
            std::string note;
            if (n_max >= 4 && *weight_display(N, r, 4, true) != weights[4])
                note = "D_r(4): binomial(r,2) term read as N^2/(N+2)^2 (printed N^2/(N+1)^2)";
            compare_sequences(report, "weight-display", point, shown,
                              {weights.begin() + 1, weights.begin() + 1 + shown.size()}, 1, std::move(note));
        }
    }
    report.append(convolution_examples_erratum());
    return report;
}

VerificationReport relations_suite(const VerifyGrid& grid) {
    VerificationReport report;
    for (unsigned N = 2; N <= grid.N_max; ++N) {
        report.append(cross_order_step(N, grid.n_max));
        report.append(chain_sum(N, grid.n_max, grid.caps));
        report.append(chain_examples(N));
    }
    return report;
}

VerificationReport inversion_suite(const VerifyGrid& grid) {
    VerificationReport report;
    const unsigned n_max = grid.n_max;
    const SequenceRule cauchy = [](unsigned k) { return ExactRational(1, static_cast<std::int64_t>(k) + 1); };
    report.append(determinant_inversion_roundtrip("roundtrip:cauchy", cauchy, n_max, {1u, 1u, std::nullopt}));
    report.append(signed_inverse_check("signed-inverse:cauchy", cauchy, n_max, {1u, 1u, std::nullopt}));

    for (unsigned N = 1; N <= grid.N_max; ++N) {
        report.append(ratio_inversion(N, n_max));
        const SequenceRule hgc_rule = [N](unsigned k) { return hgc_ratio(N, k); };
        report.append(determinant_inversion_roundtrip("roundtrip:hgc", hgc_rule, n_max, {N, 1u, std::nullopt}));
        report.append(signed_inverse_check("signed-inverse:hgc", hgc_rule, n_max, {N, 1u, std::nullopt}));
        for (unsigned r = 1; r <= grid.r_max; ++r) {
            report.append(D_inversion(N, r, n_max));
            const auto weights = weight_D(N, r, n_max).values;
            const SequenceRule weight_rule = [&weights](unsigned k) { return weights[k]; };
            report.append(
                determinant_inversion_roundtrip("roundtrip:weights", weight_rule, n_max, {N, r, std::nullopt}));
            report.append(signed_inverse_check("signed-inverse:weights", weight_rule, n_max, {N, r, std::nullopt}));
        }
    }
    report.append(check_trudi_equivalence(grid.random_instances / 2, 9));
    report.append(inverse_sign_erratum());
    return report;
}

VerificationReport series_rules_suite(const VerifyGrid& grid) {
    VerificationReport report;
    report.append(check_reciprocal_unit(grid.random_instances, 25));
    report.append(check_product_rule(grid.random_instances, 10));
    report.append(check_quotient_rule_strict(grid.random_instances, 8));
    report.append(check_quotient_rule_binomial(grid.random_instances, 8));
    report.append(check_cameron_roundtrip(grid.random_instances, 20));
    for (unsigned N = 1; N <= grid.N_max; ++N) {
        std::vector<ExactRational> x;
        for (unsigned n = 1; n <= grid.n_max; ++n)
            x.push_back(-sign_power(n) * hgc_ratio(N, n));
        const auto b = c_via_series(N, grid.n_max).normalized();
        compare_sequences(report, "cameron-hgc", {N, 1u, std::nullopt}, {b.begin() + 1, b.end()},
                          cameron_transform(x), 1);
    }
    report.append(cameron_direction_erratum());
    return report;
}

VerificationReport run_suite(Suite suite, const VerifyGrid& grid) {
    switch (suite) {
    case Suite::core:
        return core_suite(grid);
    case Suite::higher:
        return higher_suite(grid);
    case Suite::relations:
        return relations_suite(grid);
    case Suite::inversion:
        return inversion_suite(grid);
    case Suite::series_rules:
        return series_rules_suite(grid);
    case Suite::all:
        break;
    }
    VerificationReport report;
    report.append(core_suite(grid));
    report.append(higher_suite(grid));
    report.append(relations_suite(grid));
    report.append(inversion_suite(grid));
    report.append(series_rules_suite(grid));
    return report;
}

}  // namespace hgc
