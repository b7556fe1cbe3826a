#pragma once

#include <cstdint>

#include "hgcauchy/random.hpp"
#include "hgcauchy/report.hpp"

namespace hgc {

// Randomized exact checks of the series algebra. Each returns a single
// record: pass after all instances, or the first counterexample.

/// a * (1/a) is the unit series, for random a with a_0 != 0, orders 0..max_order.
VerificationReport check_reciprocal_unit(unsigned instances, unsigned max_order = 25,
                                         std::uint64_t seed = kPropertySeed);

/// H^(n)(f_1...f_k) = sum_{i_1+...+i_k=n} H^(i_1)(f_1)...H^(i_k)(f_k),
/// 2 <= k <= 4, order <= max_order, every n up to the order.
VerificationReport check_product_rule(unsigned instances, unsigned max_order = 10,
                                      std::uint64_t seed = kPropertySeed);

/// H^(n)(1/f)|_0 = sum_k (-1)^k / f_0^(k+1) sum_{i_1+...+i_k=n, i_j>=1} prod H^(i_j)(f)|_0
VerificationReport check_quotient_rule_strict(unsigned instances, unsigned max_order = 8,
                                              std::uint64_t seed = kPropertySeed);

/// Same left side against the binomial(n+1, k+1)-weighted sum over i_j >= 0.
VerificationReport check_quotient_rule_binomial(unsigned instances, unsigned max_order = 8,
                                                std::uint64_t seed = kPropertySeed);

/// cameron_inverse(cameron_transform(x)) = x for random x, lengths 1..max_order.
VerificationReport check_cameron_roundtrip(unsigned instances, unsigned max_order = 20,
                                           std::uint64_t seed = kPropertySeed);

/// Trudi sum equals the band-recurrence determinant on random specs,
/// dimensions 1..max_dimension.
VerificationReport check_trudi_equivalence(unsigned instances, unsigned max_dimension = 9,
                                           std::uint64_t seed = kPropertySeed);

}  // namespace hgc
