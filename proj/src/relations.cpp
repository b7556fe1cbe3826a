#include "hgcauchy/relations.hpp"

#include <algorithm>
#include <stdexcept>

#include "hgcauchy/cauchy.hpp"
#include "hgcauchy/combinatorics.hpp"

namespace hgc {

namespace {

void require_N_at_least_2(unsigned N) {
    if (N < 2)
        throw std::invalid_argument("cross-order relations need N >= 2");
}

}  // namespace

std::vector<ChainIndex> enumerate_chains(unsigned n) {
    std::vector<ChainIndex> out;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    out.reserve(subsets);
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        ChainIndex idx{{n}};
        for (unsigned v = n; v-- > 0;)
            if (mask & (std::uint64_t{1} << v))
                idx.chain.push_back(v);
        out.push_back(std::move(idx));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.chain < b.chain; });
    return out;
}

ExactRational cross_order_rhs(unsigned N, unsigned n, const std::vector<ExactRational>& cN,
                              const std::vector<ExactRational>& cN1) {
    ExactRational sum;
    for (unsigned m = 0; m < n; ++m)
        sum += ExactRational(binomial(n + 1, m)) * cN[m] * cN1[n - m + 1];
    const ExactRational factor(static_cast<std::int64_t>(N), static_cast<std::int64_t>((n + 1) * (N - 1)));
    return cN1[n] - factor * sum;
}

ExactRational chain_expansion(unsigned N, unsigned n, const std::vector<ExactRational>& cN1) {
    // N/(1-N) is negative for every N >= 2.
    const ExactRational ratio(static_cast<std::int64_t>(N), 1 - static_cast<std::int64_t>(N));
    ExactRational total;
    for (const auto& idx : enumerate_chains(n)) {
        const auto& chain = idx.chain;
        const unsigned last = chain.back();
        ExactRational term = ratio.pow(idx.length()) * ExactRational(factorial(n), factorial(last)) * cN1[last];
        for (std::size_t k = 1; k < chain.size(); ++k) {
            const unsigned gap = chain[k - 1] - chain[k] + 1;
            term *= cN1[gap] / ExactRational(factorial(gap));
        }
        total += term;
    }
    return total;
}

VerificationReport cross_order_step(unsigned N, unsigned n_max) {
    require_N_at_least_2(N);
    const auto cN = c_via_series(N, n_max).values;
    const auto cN1 = c_via_series(N - 1, n_max + 1).values;
    VerificationReport report;
    for (unsigned n = 0; n <= n_max; ++n) {
        const auto rhs = cross_order_rhs(N, n, cN, cN1);
        if (rhs != cN[n]) {
            report.fail("cross-order-step", {N, 1u, n}, cN[n], rhs);
            return report;
        }
    }
    report.pass("cross-order-step", {N, 1u, n_max});
    return report;
}

VerificationReport chain_sum(unsigned N, unsigned n_max, const Caps& caps) {
    require_N_at_least_2(N);
    if (n_max > caps.chains)
        throw CapExceeded("chain", caps.chains, n_max);
    const auto cN = c_via_series(N, n_max).values;
    const auto cN1 = c_via_series(N - 1, n_max + 1).values;
    VerificationReport report;
    for (unsigned n = 0; n <= n_max; ++n) {
        const auto rhs = chain_expansion(N, n, cN1);
        if (rhs != cN[n]) {
            report.fail("chain-expansion", {N, 1u, n}, cN[n], rhs);
            return report;
        }
    }
    report.pass("chain-expansion", {N, 1u, n_max});
    return report;
}

VerificationReport chain_examples(unsigned N) {
    require_N_at_least_2(N);
    const auto cN = c_via_series(N, 2).values;
    const auto c = c_via_series(N - 1, 3).values;
    const ExactRational q(static_cast<std::int64_t>(N), 1 - static_cast<std::int64_t>(N));

    VerificationReport report;
    // (i)  c_{N,1} = c_{N-1,1} + q c_{N-1,0} c_{N-1,2} / 2
    const ExactRational ex1 = c[1] + q * c[0] * c[2] / ExactRational(2);
    if (ex1 == cN[1])
        report.pass("chain-example-i", {N, 1u, 1u});
    else
        report.fail("chain-example-i", {N, 1u, 1u}, cN[1], ex1);

    // (ii) c_{N,2} = c_{N-1,2} + q (c_{N-1,3}/3 + c_{N-1,1} c_{N-1,2}) + q^2 c_{N-1,2}^2 / 2
    const ExactRational ex2 =
        c[2] + q * (c[3] / ExactRational(3) + c[1] * c[2]) + q * q * c[2] * c[2] / ExactRational(2);
    if (ex2 == cN[2])
        report.pass("chain-example-ii", {N, 1u, 2u});
    else
        report.fail("chain-example-ii", {N, 1u, 2u}, cN[2], ex2);
    return report;
}

}  // namespace hgc
