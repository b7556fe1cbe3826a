#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hgcauchy/errors.hpp"
#include "hgcauchy/rational.hpp"
#include "hgcauchy/report.hpp"
#include "hgcauchy/series.hpp"

namespace hgc {

enum class Method { series, recurrence, determinant, compositions, trudi, explicit_sum, convolution };

std::string_view to_string(Method method);
std::optional<Method> parse_method(std::string_view text);

/// Values c^{(r)}_{N,0..n_max} for fixed (N, r), tagged with the method
/// that produced them.
struct CauchyTable {
    unsigned N = 1;
    unsigned r = 1;
    Method method = Method::series;
    std::vector<ExactRational> values;

    unsigned n_max() const { return static_cast<unsigned>(values.size() - 1); }
    /// values[n] / n!
    std::vector<ExactRational> normalized() const;
};

/// N/(N+k)
ExactRational hgc_ratio(unsigned N, unsigned k);

/// 2F1(1, N; N+1; -x) = sum_j (-1)^j N/(N+j) x^j, truncated at `order`.
TruncatedSeries hgc_generating_series(unsigned N, unsigned order);

// Hypergeometric Cauchy numbers c_{N,n}, n = 0..n_max, by independent routes.
// All require N >= 1 and throw std::invalid_argument otherwise.

/// n! [x^n] 1 / 2F1(1, N; N+1; -x). Reference route.
CauchyTable c_via_series(unsigned N, unsigned n_max);
/// c_n = sum_{i<n} (-1)^(n-i-1) (n!/i!) N/(N+n-i) c_i, c_0 = 1.
CauchyTable c_via_recurrence(unsigned N, unsigned n_max);
/// n! times the Hessenberg determinant with bands N/(N+k).
CauchyTable c_via_determinant(unsigned N, unsigned n_max);
/// (-1)^n n! sum_r (-N)^r sum over strict compositions of n into r parts of
/// 1/prod(N+i_j). Enumerates 2^(n-1) compositions; capped.
CauchyTable c_via_compositions(unsigned N, unsigned n_max, const Caps& caps = {});
/// n! times the Trudi multinomial sum over the same bands; capped.
CauchyTable c_via_trudi(unsigned N, unsigned n_max, const Caps& caps = {});

/// Residual of sum_{i=0..n} (-1)^i c_i / ((N+n-i) i!) for n = 1..n_max.
std::vector<ExactRational> eq3_residuals(unsigned N, const std::vector<ExactRational>& values);

/// Checks det Hessenberg(bands c_{N,k}/k!) = N/(N+n) for n = 1..n_max.
VerificationReport ratio_inversion(unsigned N, unsigned n_max);

/// B_0..B_{n_max} from B_n = (-1)^n n! det(bands 1/(k+1)!).
std::vector<ExactRational> classical_bernoulli_det(unsigned n_max);
/// E_0, E_2, ..., E_{2 n_max} from E_{2n} = (-1)^n (2n)! det(bands 1/(2k)!).
std::vector<ExactRational> classical_euler_det(unsigned n_max);

/// The trudi-form sum with the multinomial coefficient and sign exactly as
/// printed in the r = 1 corollary: multinomial(n - sum t; t) (-1)^(sum t),
/// where multinomial(a; t) = a! / prod t_k!. Used only to document that the
/// printed form disagrees with the determinant.
ExactRational c_corollary_literal(unsigned N, unsigned n, const Caps& caps = {});

}  // namespace hgc
