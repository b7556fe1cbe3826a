#pragma once

#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "hgcauchy/combinatorics.hpp"
#include "hgcauchy/errors.hpp"
#include "hgcauchy/rational.hpp"
#include "hgcauchy/report.hpp"

namespace hgc {

/// Toeplitz lower-Hessenberg matrix of dimension n = band.size():
///
///     M[i][j] = a_{i-j+1}  for j <= i+1 (1-indexed),  0 for j > i+1,
///
/// where a_0 = super sits on the superdiagonal, a_1 = band[0] on the main
/// diagonal and a_k = band[k-1] k-1 places below it. The transposed layout
/// has the same determinant, so both orientations use this type.
struct HessenbergSpec {
    ExactRational super{1};
    std::vector<ExactRational> band;

    unsigned dimension() const { return static_cast<unsigned>(band.size()); }
    /// Entry (i, j), 0-indexed.
    ExactRational entry(unsigned i, unsigned j) const;
};

/// Determinant via d_k = sum_{l=1..k} (-1)^(l-1) a_0^(l-1) a_l d_{k-l}, d_0 = 1.
ExactRational hessenberg_det(const HessenbergSpec& spec);

/// All leading principal minors d_0..d_n from the same recurrence.
std::vector<ExactRational> hessenberg_minors(const HessenbergSpec& spec);

/// Trudi's multinomial expansion of the same determinant:
/// sum over t_1 + 2t_2 + ... + n t_n = n of
/// multinomial(t) (-a_0)^(n - sum t) a_1^t_1 ... a_n^t_n.
ExactRational trudi_sum(const HessenbergSpec& spec, const Caps& caps = {});

/// Bands gamma_1..gamma_n of the inverse of the unit lower-triangular
/// Toeplitz matrix with bands alpha_1..alpha_n.
std::vector<ExactRational> unit_lower_toeplitz_inverse(std::span<const ExactRational> alpha);

/// A band sequence R(1), R(2), ... given by rule.
using SequenceRule = std::function<ExactRational(unsigned)>;

/// Forward and backward determinant sequences for one rule.
struct InversionTrace {
    std::vector<ExactRational> rule;           // R(1..n_max)
    std::vector<ExactRational> forward;        // alpha_n = det Hessenberg(R(1..n))
    std::vector<ExactRational> recovered;      // det Hessenberg(alpha_1..alpha_n)
    std::vector<ExactRational> inverse_bands;  // bands of (I + alpha bands)^(-1)
};

InversionTrace trace_inversion(const SequenceRule& rule, unsigned n_max);

/// Checks that the determinant map is an involution on `rule` up to n_max.
VerificationReport determinant_inversion_roundtrip(std::string_view identity, const SequenceRule& rule,
                                                   unsigned n_max, ParameterPoint point = {});

/// Checks the matrix form of the inversion: the inverse of the unit
/// triangular matrix with bands alpha_k has bands (-1)^k R(k).
VerificationReport signed_inverse_check(std::string_view identity, const SequenceRule& rule, unsigned n_max,
                                        ParameterPoint point = {});

}  // namespace hgc
