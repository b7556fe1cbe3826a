#pragma once

#include <vector>

#include "hgcauchy/errors.hpp"
#include "hgcauchy/rational.hpp"
#include "hgcauchy/report.hpp"

namespace hgc {

/// Strictly decreasing chain n = i_0 > i_1 > ... > i_m >= 0; `chain[0]` is n.
struct ChainIndex {
    std::vector<unsigned> chain;

    unsigned length() const { return static_cast<unsigned>(chain.size() - 1); }  // m
    friend bool operator==(const ChainIndex&, const ChainIndex&) = default;
};

/// All descending chains starting at n: subsets of {0..n-1} (taken in
/// decreasing order) prefixed with n, in lexicographic subset order.
std::vector<ChainIndex> enumerate_chains(unsigned n);

/// Right side of the N -> N-1 step:
/// c_{N-1,n} - N/((n+1)(N-1)) sum_{m<n} binomial(n+1, m) c_{N,m} c_{N-1,n-m+1}.
/// `cN` needs entries 0..n-1, `cN1` entries 0..n+1.
ExactRational cross_order_rhs(unsigned N, unsigned n, const std::vector<ExactRational>& cN,
                              const std::vector<ExactRational>& cN1);

/// Descending-chain expansion of c_{N,n} in terms of c_{N-1,*}; `cN1` needs
/// entries 0..n+1.
ExactRational chain_expansion(unsigned N, unsigned n, const std::vector<ExactRational>& cN1);

/// Checks the cross-order step for 0 <= n <= n_max. Requires N >= 2.
VerificationReport cross_order_step(unsigned N, unsigned n_max);

/// Checks the chain expansion for 0 <= n <= n_max. Requires N >= 2;
/// throws CapExceeded when n_max > caps.chains.
VerificationReport chain_sum(unsigned N, unsigned n_max, const Caps& caps = {});

/// The two worked examples (n = 1, n = 2) evaluated from their printed forms.
VerificationReport chain_examples(unsigned N);

}  // namespace hgc
