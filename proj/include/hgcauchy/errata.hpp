#pragma once

#include "hgcauchy/report.hpp"

namespace hgc {

// Four printed statements that fail literally but hold in a corrected form.
// Each check returns one record: erratum-noted when the literal form fails
// and the corrected form holds, fail when the corrected form fails, pass if
// the literal form unexpectedly holds.

/// Inverse of the unit triangular matrix with bands alpha_k: printed bands
/// R(k), computed bands (-1)^k R(k).
VerificationReport inverse_sign_erratum();

/// r = 1 Trudi corollary printed with multinomial(n - sum t; t) and sign
/// (-1)^(sum t) instead of multinomial(sum t; t) and (-1)^(n - sum t).
VerificationReport corollary_multinomial_erratum();

/// Worked examples of the power-convolution relation: printed exponents on
/// the zeroth term (r+1, missing r-1, N-1) are masked by c_{N,0} = 1 and
/// surface on the underlying formal identity with a zeroth term of 2.
VerificationReport convolution_examples_erratum();

/// The sequence operator maps x_n = (-1)^(n-1) N/(N+n) to z_n = c_{N,n}/n!;
/// the printed assignment x_n = c_{N,n}/n!, z_n = (-1)^(n-1) N/(N+n) does not hold.
VerificationReport cameron_direction_erratum();

}  // namespace hgc
