#include "hgcauchy/series_rules.hpp"

#include <vector>

#include "hgcauchy/combinatorics.hpp"
#include "hgcauchy/hessenberg.hpp"
#include "hgcauchy/series.hpp"

namespace hgc {

namespace {

// First differing coefficient of two series, compared up to the smaller order.
std::optional<unsigned> first_difference(const TruncatedSeries& a, const TruncatedSeries& b) {
    const unsigned order = std::min(a.order(), b.order());
    for (unsigned k = 0; k <= order; ++k)
        if (a[k] != b[k])
            return k;
    return std::nullopt;
}

TruncatedSeries random_invertible(RationalGenerator& gen, unsigned order) {
    const auto draw = gen.series(order);
    std::vector<ExactRational> c(draw.coefficients().begin(), draw.coefficients().end());
    c[0] = gen.nonzero_rational();
    return TruncatedSeries(std::move(c));
}

// H^(n)(1/f) at x = 0 is the n-th coefficient of 1/f.
ExactRational quotient_lhs(const TruncatedSeries& f, unsigned n) {
    return ht_derivative(series_reciprocal(f), n)[0];
}

}  // namespace

VerificationReport check_reciprocal_unit(unsigned instances, unsigned max_order, std::uint64_t seed) {
    RationalGenerator gen(seed);
    VerificationReport report;
    for (unsigned i = 0; i < instances; ++i) {
        const auto order = static_cast<unsigned>(gen.uniform(0, max_order));
        const auto a = random_invertible(gen, order);
        const auto product = series_mul(a, series_reciprocal(a));
        if (!product.is_unit()) {
            const auto k = first_difference(product, TruncatedSeries::one(order)).value_or(0);
            report.fail("series-reciprocal-unit", {std::nullopt, std::nullopt, k}, k == 0 ? 1 : 0, product[k],
                        "instance " + std::to_string(i));
            return report;
        }
    }
    report.pass("series-reciprocal-unit", {std::nullopt, std::nullopt, max_order},
                std::to_string(instances) + " seeded instances");
    return report;
}

VerificationReport check_product_rule(unsigned instances, unsigned max_order, std::uint64_t seed) {
    RationalGenerator gen(seed);
    VerificationReport report;
    for (unsigned inst = 0; inst < instances; ++inst) {
        const auto k = static_cast<unsigned>(gen.uniform(2, 4));
        const auto order = static_cast<unsigned>(gen.uniform(0, max_order));
        std::vector<TruncatedSeries> factors;
        for (unsigned j = 0; j < k; ++j)
            factors.push_back(gen.series(order));

        // derivatives[j][i] = H^(i)(f_j)
        std::vector<std::vector<TruncatedSeries>> derivatives(k);
        for (unsigned j = 0; j < k; ++j)
            for (unsigned i = 0; i <= order; ++i)
                derivatives[j].push_back(ht_derivative(factors[j], i));

        TruncatedSeries product = factors[0];
        for (unsigned j = 1; j < k; ++j)
            product = series_mul(product, factors[j]);

        for (unsigned n = 0; n <= order; ++n) {
            const auto lhs = ht_derivative(product, n);
            TruncatedSeries rhs = TruncatedSeries::zero(order - n);
            for_each_weak_composition(n, k, [&](std::span<const unsigned> idx) {
                TruncatedSeries term = derivatives[0][idx[0]];
                for (unsigned j = 1; j < k; ++j)
                    term = series_mul(term, derivatives[j][idx[j]]);
                rhs = rhs + term;
            });
            if (const auto diff = first_difference(lhs, rhs)) {
                report.fail("ht-product-rule", {std::nullopt, std::nullopt, n}, lhs[*diff], rhs[*diff],
                            "instance " + std::to_string(inst) + ", coefficient " + std::to_string(*diff));
                return report;
            }
        }
    }
    report.pass("ht-product-rule", {std::nullopt, std::nullopt, max_order},
                std::to_string(instances) + " seeded instances");
    return report;
}

VerificationReport check_quotient_rule_strict(unsigned instances, unsigned max_order, std::uint64_t seed) {
    RationalGenerator gen(seed);
    VerificationReport report;
    for (unsigned inst = 0; inst < instances; ++inst) {
        const auto order = static_cast<unsigned>(gen.uniform(1, max_order));
        const auto f = random_invertible(gen, order);
        std::vector<ExactRational> at_zero;
        for (unsigned i = 0; i <= order; ++i)
            at_zero.push_back(ht_derivative(f, i)[0]);
        const ExactRational inv0 = f[0].reciprocal();
        for (unsigned n = 1; n <= order; ++n) {
            // by_parts[k] = sum over strict compositions of n into k parts of prod f_{i_j}
            std::vector<ExactRational> by_parts(n + 1);
            for_each_strict_composition(n, [&](std::span<const unsigned> idx) {
                ExactRational p(1);
                for (unsigned i : idx)
                    p *= at_zero[i];
                by_parts[idx.size()] += p;
            });
            ExactRational rhs;
            for (unsigned k = 1; k <= n; ++k)
                rhs += sign_power(k) * inv0.pow(k + 1) * by_parts[k];
            const auto lhs = quotient_lhs(f, n);
            if (lhs != rhs) {
                report.fail("ht-quotient-rule-strict", {std::nullopt, std::nullopt, n}, lhs, rhs,
                            "instance " + std::to_string(inst));
                return report;
            }
        }
    }
    report.pass("ht-quotient-rule-strict", {std::nullopt, std::nullopt, max_order},
                std::to_string(instances) + " seeded instances");
    return report;
}

VerificationReport check_quotient_rule_binomial(unsigned instances, unsigned max_order, std::uint64_t seed) {
    RationalGenerator gen(seed);
    VerificationReport report;
    for (unsigned inst = 0; inst < instances; ++inst) {
        const auto order = static_cast<unsigned>(gen.uniform(1, max_order));
        const auto f = random_invertible(gen, order);
        std::vector<ExactRational> at_zero;
        for (unsigned i = 0; i <= order; ++i)
            at_zero.push_back(ht_derivative(f, i)[0]);
        const ExactRational inv0 = f[0].reciprocal();
        for (unsigned n = 1; n <= order; ++n) {
            ExactRational rhs;
            for (unsigned k = 1; k <= n; ++k) {
                ExactRational inner;
                for_each_weak_composition(n, k, [&](std::span<const unsigned> idx) {
                    ExactRational p(1);
                    for (unsigned i : idx)
                        p *= at_zero[i];
                    inner += p;
                });
                rhs += ExactRational(binomial(n + 1, k + 1)) * sign_power(k) * inv0.pow(k + 1) * inner;
            }
            const auto lhs = quotient_lhs(f, n);
            if (lhs != rhs) {
                report.fail("ht-quotient-rule-binomial", {std::nullopt, std::nullopt, n}, lhs, rhs,
                            "instance " + std::to_string(inst));
                return report;
            }
        }
    }
    report.pass("ht-quotient-rule-binomial", {std::nullopt, std::nullopt, max_order},
                std::to_string(instances) + " seeded instances");
    return report;
}

VerificationReport check_cameron_roundtrip(unsigned instances, unsigned max_order, std::uint64_t seed) {
    RationalGenerator gen(seed);
    VerificationReport report;
    for (unsigned inst = 0; inst < instances; ++inst) {
        const auto len = static_cast<unsigned>(gen.uniform(1, max_order));
        std::vector<ExactRational> x;
        for (unsigned i = 0; i < len; ++i)
            x.push_back(gen.rational());
        const auto back = cameron_inverse(cameron_transform(x));
        for (unsigned i = 0; i < len; ++i) {
            if (back[i] != x[i]) {
                report.fail("cameron-roundtrip", {std::nullopt, std::nullopt, i + 1}, x[i], back[i],
                            "instance " + std::to_string(inst));
                return report;
            }
        }
    }
    report.pass("cameron-roundtrip", {std::nullopt, std::nullopt, max_order},
                std::to_string(instances) + " seeded instances");
    return report;
}

VerificationReport check_trudi_equivalence(unsigned instances, unsigned max_dimension, std::uint64_t seed) {
    RationalGenerator gen(seed);
    VerificationReport report;
    for (unsigned inst = 0; inst < instances; ++inst) {
        const auto n = static_cast<unsigned>(gen.uniform(1, max_dimension));
        const auto spec = gen.hessenberg(n);
        const auto det = hessenberg_det(spec);
        const auto trudi = trudi_sum(spec);
        if (det != trudi) {
            report.fail("trudi-equivalence", {std::nullopt, std::nullopt, n}, det, trudi,
                        "instance " + std::to_string(inst));
            return report;
        }
    }
    report.pass("trudi-equivalence", {std::nullopt, std::nullopt, max_dimension},
                std::to_string(instances) + " seeded instances");
    return report;
}

}  // namespace hgc
