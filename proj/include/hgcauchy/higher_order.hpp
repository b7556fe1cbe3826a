#pragma once

#include <vector>

#include "hgcauchy/cauchy.hpp"
#include "hgcauchy/errors.hpp"
#include "hgcauchy/rational.hpp"
#include "hgcauchy/report.hpp"

namespace hgc {

/// D_r(e) = sum over weak compositions i_1 + ... + i_r = e of N^r / prod(N + i_j),
/// for e = 0..e_max.
struct WeightTable {
    unsigned N = 1;
    unsigned r = 1;
    std::vector<ExactRational> values;
};

/// Computed as the r-fold Cauchy self-convolution of g_j = N/(N+j).
WeightTable weight_D(unsigned N, unsigned r, unsigned e_max);

// Higher-order numbers c^{(r)}_{N,n}: coefficients of x^n/n! in
// 2F1(1, N; N+1; -x)^(-r). All require N, r >= 1.

/// Direct form of the defining recurrence:
/// c_n = -n! sum_{m<n} (-1)^(n-m) D_r(n-m) c_m / m!, c_0 = 1.
CauchyTable chor_via_recurrence(unsigned N, unsigned r, unsigned n_max);
/// n! det Hessenberg(bands D_r(k)).
CauchyTable chor_via_determinant(unsigned N, unsigned r, unsigned n_max);
/// n! sum_k (-1)^(n-k) sum over strict compositions e_1..e_k of n of
/// D_r(e_1)...D_r(e_k); capped by caps.compositions.
CauchyTable chor_via_explicit(unsigned N, unsigned r, unsigned n_max, const Caps& caps = {});
/// n! Trudi sum over the D_r bands; capped by caps.partitions.
CauchyTable chor_via_trudi(unsigned N, unsigned r, unsigned n_max, const Caps& caps = {});
/// r-th power of sum c_{N,n} x^n/n!, rescaled by n!.
CauchyTable chor_via_convolution(unsigned N, unsigned r, unsigned n_max);
/// n! [x^n] of the reciprocal of 2F1(1, N; N+1; -x)^r.
CauchyTable chor_via_series(unsigned N, unsigned r, unsigned n_max);

/// Any (N, r, method) table; compositions is only defined for r = 1.
/// Throws std::invalid_argument for that combination, CapExceeded past caps.
CauchyTable compute_table(unsigned N, unsigned r, Method method, unsigned n_max, const Caps& caps = {});

/// Residual of sum_{m=0..n} sum_{weak comp of n-m into r} (-1)^(n-m) c_m / (m! prod(N+i_j))
/// for n = 1..n_max, by brute-force weak-composition enumeration.
std::vector<ExactRational> prop2_residuals(unsigned N, unsigned r, const std::vector<ExactRational>& values);

/// Checks (i) det Hessenberg(bands c^{(r)}_k / k!) = D_r(n) and (ii) the
/// inverse of the unit triangular matrix with bands c^{(r)}_k / k! has bands
/// (-1)^k D_r(k), for n up to n_max.
VerificationReport D_inversion(unsigned N, unsigned r, unsigned n_max);

}  // namespace hgc
