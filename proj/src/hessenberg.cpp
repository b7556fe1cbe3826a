#include "hgcauchy/hessenberg.hpp"

namespace hgc {

ExactRational HessenbergSpec::entry(unsigned i, unsigned j) const {
    if (j > i + 1)
        return {};
    const unsigned k = i + 1 - j;
    return k == 0 ? super : band[k - 1];
}

std::vector<ExactRational> hessenberg_minors(const HessenbergSpec& spec) {
    const unsigned n = spec.dimension();
    // Expanding along the last column; the (l-1) superdiagonal entries
    // removed along the way contribute a_0^(l-1).
    std::vector<ExactRational> super_powers(n + 1);
    super_powers[0] = 1;
    for (unsigned l = 1; l <= n; ++l)
        super_powers[l] = super_powers[l - 1] * spec.super;

    std::vector<ExactRational> d(n + 1);
    d[0] = 1;
    for (unsigned k = 1; k <= n; ++k) {
        ExactRational acc;
        for (unsigned l = 1; l <= k; ++l) {
            ExactRational term = super_powers[l - 1] * spec.band[l - 1] * d[k - l];
            if (l % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        d[k] = std::move(acc);
    }
    return d;
}

ExactRational hessenberg_det(const HessenbergSpec& spec) { return hessenberg_minors(spec).back(); }

ExactRational trudi_sum(const HessenbergSpec& spec, const Caps& caps) {
    const unsigned m = spec.dimension();
    if (m == 0)
        return 1;
    const ExactRational neg_super = -spec.super;
    ExactRational total;
    for (const auto& p : enumerate_partition_multiplicities(m, caps)) {
        const unsigned parts = p.total_parts();
        ExactRational term(multinomial(p.multiplicities));
        term *= neg_super.pow(m - parts);
        for (unsigned k = 0; k < m; ++k)
            if (p.multiplicities[k] != 0)
                term *= spec.band[k].pow(p.multiplicities[k]);
        total += term;
    }
    return total;
}

std::vector<ExactRational> unit_lower_toeplitz_inverse(std::span<const ExactRational> alpha) {
    const auto n = static_cast<unsigned>(alpha.size());
    std::vector<ExactRational> gamma(n + 1);
    gamma[0] = 1;
    for (unsigned k = 1; k <= n; ++k) {
        ExactRational acc;
        for (unsigned j = 1; j <= k; ++j)
            acc += alpha[j - 1] * gamma[k - j];
        gamma[k] = -acc;
    }
    gamma.erase(gamma.begin());
    return gamma;
}

InversionTrace trace_inversion(const SequenceRule& rule, unsigned n_max) {
    InversionTrace trace;
    trace.rule.reserve(n_max);
    for (unsigned k = 1; k <= n_max; ++k)
        trace.rule.push_back(rule(k));

    // The minors of the n_max matrix are exactly the determinants of the
    // smaller matrices built from the same band prefix.
    auto forward = hessenberg_minors({ExactRational(1), trace.rule});
    trace.forward.assign(forward.begin() + 1, forward.end());
    auto recovered = hessenberg_minors({ExactRational(1), trace.forward});
    trace.recovered.assign(recovered.begin() + 1, recovered.end());
    trace.inverse_bands = unit_lower_toeplitz_inverse(trace.forward);
    return trace;
}

VerificationReport determinant_inversion_roundtrip(std::string_view identity, const SequenceRule& rule,
                                                   unsigned n_max, ParameterPoint point) {
    const auto trace = trace_inversion(rule, n_max);
    VerificationReport report;
    compare_sequences(report, identity, point, trace.rule, trace.recovered, 1);
    return report;
}

VerificationReport signed_inverse_check(std::string_view identity, const SequenceRule& rule, unsigned n_max,
                                        ParameterPoint point) {
    const auto trace = trace_inversion(rule, n_max);
    std::vector<ExactRational> expected;
    expected.reserve(n_max);
    for (unsigned k = 1; k <= n_max; ++k)
        expected.push_back(sign_power(k) * trace.rule[k - 1]);
    VerificationReport report;
    compare_sequences(report, identity, point, expected, trace.inverse_bands, 1);
    return report;
}

}  // namespace hgc
