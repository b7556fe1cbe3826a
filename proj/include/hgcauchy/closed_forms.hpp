#pragma once

#include <optional>

#include "hgcauchy/rational.hpp"

namespace hgc {

// Published closed forms for small indices, evaluated exactly. Used only as
// cross-checks against the computed tables.

/// c_{N,n} for n <= 5; nullopt beyond.
std::optional<ExactRational> c_closed_form(unsigned N, unsigned n);

/// c^{(r)}_{N,n} for n <= 4; nullopt beyond.
std::optional<ExactRational> chor_closed_form(unsigned N, unsigned r, unsigned n);

/// Displayed D_r(e) for 1 <= e <= 4. With `as_printed` the binomial(r,2)
/// term of D_r(4) uses N^2/(N+1)^2 as printed; otherwise N^2/(N+2)^2, which
/// is the (2,2) weak-composition term.
std::optional<ExactRational> weight_display(unsigned N, unsigned r, unsigned e, bool as_printed = false);

}  // namespace hgc
