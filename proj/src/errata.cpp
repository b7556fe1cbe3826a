#include "hgcauchy/errata.hpp"

#include "hgcauchy/cauchy.hpp"
#include "hgcauchy/combinatorics.hpp"
#include "hgcauchy/hessenberg.hpp"
#include "hgcauchy/series.hpp"

namespace hgc {

namespace {

constexpr unsigned kWitnessLength = 4;

}  // namespace

VerificationReport inverse_sign_erratum() {
    const SequenceRule rule = [](unsigned k) { return ExactRational(1, static_cast<std::int64_t>(k) + 1); };
    VerificationReport report = signed_inverse_check("inverse-matrix-signs", rule, kWitnessLength);
    if (!report.ok())
        return report;

    const auto trace = trace_inversion(rule, kWitnessLength);
    VerificationReport out;
    for (unsigned k = 1; k <= kWitnessLength; ++k) {
        if (trace.inverse_bands[k - 1] != trace.rule[k - 1]) {
            out.erratum("inverse-matrix-signs", {1u, 1u, k}, trace.rule[k - 1], trace.inverse_bands[k - 1],
                        "printed inverse bands R(k); computed bands are (-1)^k R(k); corrected form holds");
            return out;
        }
    }
    out.pass("inverse-matrix-signs", {1u, 1u, kWitnessLength}, "printed form holds");
    return out;
}

VerificationReport corollary_multinomial_erratum() {
    constexpr unsigned N = 1;
    const auto det = c_via_determinant(N, kWitnessLength).values;
    const auto trudi = c_via_trudi(N, kWitnessLength).values;
    VerificationReport out;
    for (unsigned n = 0; n <= kWitnessLength; ++n) {
        if (trudi[n] != det[n]) {
            out.fail("corollary-multinomial", {N, 1u, n}, det[n], trudi[n], "corrected trudi form disagrees");
            return out;
        }
    }
    for (unsigned n = 1; n <= kWitnessLength; ++n) {
        const auto literal = c_corollary_literal(N, n);
        if (literal != det[n]) {
            out.erratum("corollary-multinomial", {N, 1u, n}, literal, det[n],
                        "printed multinomial(n - sum t; t) with sign (-1)^(sum t); "
                        "multinomial(sum t; t) with sign (-1)^(n - sum t) holds");
            return out;
        }
    }
    out.pass("corollary-multinomial", {N, 1u, kWitnessLength}, "printed form holds");
    return out;
}

VerificationReport convolution_examples_erratum() {
    constexpr unsigned N = 1;
    VerificationReport out;
    // Generic zeroth term: C_n = 2 c_{N,n}. The relation is the exponential
    // power identity, so it applies to any sequence.
    std::vector<ExactRational> C = c_via_series(N, 2).values;
    for (auto& v : C)
        v *= ExactRational(2);
    std::vector<ExactRational> egf;
    for (unsigned n = 0; n < C.size(); ++n)
        egf.push_back(C[n] / ExactRational(factorial(n)));

    std::optional<VerificationRecord> literal_failure;
    for (unsigned r = 2; r <= 4; ++r) {
        const auto power = series_pow(TruncatedSeries(egf), r);
        std::vector<ExactRational> lemma;
        for (unsigned n = 0; n <= 2; ++n)
            lemma.push_back(power[n] * ExactRational(factorial(n)));
        const ExactRational rr(static_cast<std::int64_t>(r));

        const ExactRational corrected[3] = {
            C[0].pow(r),
            rr * C[1] * C[0].pow(r - 1),
            rr * C[2] * C[0].pow(r - 1) + rr * (rr - ExactRational(1)) * C[1].pow(2) * C[0].pow(r - 2),
        };
        const ExactRational printed[3] = {
            C[0].pow(r + 1),
            rr * C[1],
            rr * C[2] * C[0].pow(N - 1) + rr * (rr - ExactRational(1)) * C[1].pow(2) * C[0].pow(r - 2),
        };
        for (unsigned n = 0; n <= 2; ++n) {
            if (corrected[n] != lemma[n]) {
                out.fail("convolution-examples", {N, r, n}, lemma[n], corrected[n], "corrected example disagrees");
                return out;
            }
            if (!literal_failure && printed[n] != lemma[n]) {
                VerificationRecord rec;
                rec.identity = "convolution-examples";
                rec.point = {N, r, n};
                rec.status = Status::erratum_noted;
                rec.detail = ValuePair{printed[n], lemma[n]};
                literal_failure = rec;
            }
        }
    }
    if (literal_failure) {
        out.erratum(literal_failure->identity, literal_failure->point, literal_failure->detail->expected,
                    literal_failure->detail->actual,
                    "printed zeroth-term exponents are invisible on c_{N,n} (c_{N,0} = 1) but fail on the "
                    "formal identity with C_0 = 2; exponents r, r-1, r-2 hold");
        return out;
    }
    out.pass("convolution-examples", {N, 2u, 2u}, "printed form holds");
    return out;
}

VerificationReport cameron_direction_erratum() {
    constexpr unsigned N = 1;
    const auto b = c_via_series(N, kWitnessLength).normalized();
    std::vector<ExactRational> ratios;  // (-1)^(n-1) N/(N+n)
    std::vector<ExactRational> normalized(b.begin() + 1, b.end());
    for (unsigned n = 1; n <= kWitnessLength; ++n)
        ratios.push_back(-sign_power(n) * hgc_ratio(N, n));

    VerificationReport out;
    const auto verified = cameron_transform(ratios);
    for (unsigned n = 1; n <= kWitnessLength; ++n) {
        if (verified[n - 1] != normalized[n - 1]) {
            out.fail("cameron-direction", {N, 1u, n}, normalized[n - 1], verified[n - 1],
                     "x_n = (-1)^(n-1) N/(N+n) does not map to c_{N,n}/n!");
            return out;
        }
    }
    const auto printed = cameron_transform(normalized);
    for (unsigned n = 1; n <= kWitnessLength; ++n) {
        if (printed[n - 1] != ratios[n - 1]) {
            out.erratum("cameron-direction", {N, 1u, n}, ratios[n - 1], printed[n - 1],
                        "operator maps x_n = (-1)^(n-1) N/(N+n) to z_n = c_{N,n}/n!, not the reverse");
            return out;
        }
    }
    out.pass("cameron-direction", {N, 1u, kWitnessLength}, "printed form holds");
    return out;
}

}  // namespace hgc
