#include "hgcauchy/higher_order.hpp"

#include <stdexcept>

#include "hgcauchy/combinatorics.hpp"
#include "hgcauchy/hessenberg.hpp"
#include "hgcauchy/series.hpp"

namespace hgc {

namespace {

void require_positive(unsigned N, unsigned r) {
    if (N == 0)
        throw std::invalid_argument("N must be at least 1");
    if (r == 0)
        throw std::invalid_argument("r must be at least 1");
}

CauchyTable scale_by_factorial(unsigned N, unsigned r, Method method, std::vector<ExactRational> b) {
    for (unsigned n = 0; n < b.size(); ++n)
        b[n] *= ExactRational(factorial(n));
    return CauchyTable{N, r, method, std::move(b)};
}

// Walk over strict compositions of all s <= n_max, accumulating the signed
// product of weights into out[s]; the sign (-1)^(n-k) is applied later.
void weighted_walk(const std::vector<ExactRational>& D, unsigned n_max, unsigned sum, unsigned parts,
                   const ExactRational& product, std::vector<ExactRational>& out) {
    for (unsigned next = 1; sum + next <= n_max; ++next) {
        const ExactRational p = product * D[next];
        const unsigned s = sum + next;
        if ((s - parts - 1) % 2 == 0)
            out[s] += p;
        else
            out[s] -= p;
        weighted_walk(D, n_max, s, parts + 1, p, out);
    }
}

}  // namespace

WeightTable weight_D(unsigned N, unsigned r, unsigned e_max) {
    require_positive(N, r);
    std::vector<ExactRational> g;
    g.reserve(e_max + 1);
    for (unsigned j = 0; j <= e_max; ++j)
        g.push_back(hgc_ratio(N, j));
    const auto power = series_pow(TruncatedSeries(std::move(g)), r);
    return WeightTable{N, r, {power.coefficients().begin(), power.coefficients().end()}};
}

CauchyTable chor_via_recurrence(unsigned N, unsigned r, unsigned n_max) {
    const auto D = weight_D(N, r, n_max).values;
    std::vector<ExactRational> c(n_max + 1);
    c[0] = 1;
    for (unsigned n = 1; n <= n_max; ++n) {
        ExactRational acc;
        for (unsigned m = 0; m < n; ++m)
            acc += sign_power(n - m) * D[n - m] * c[m] / ExactRational(factorial(m));
        c[n] = -ExactRational(factorial(n)) * acc;
    }
    return CauchyTable{N, r, Method::recurrence, std::move(c)};
}

CauchyTable chor_via_determinant(unsigned N, unsigned r, unsigned n_max) {
    const auto D = weight_D(N, r, n_max).values;
    const auto minors = hessenberg_minors({ExactRational(1), {D.begin() + 1, D.end()}});
    return scale_by_factorial(N, r, Method::determinant, minors);
}

CauchyTable chor_via_explicit(unsigned N, unsigned r, unsigned n_max, const Caps& caps) {
    require_positive(N, r);
    if (n_max > caps.compositions)
        throw CapExceeded("composition", caps.compositions, n_max);
    const auto D = weight_D(N, r, n_max).values;
    std::vector<ExactRational> b(n_max + 1);
    b[0] = 1;
    weighted_walk(D, n_max, 0, 0, ExactRational(1), b);
    return scale_by_factorial(N, r, Method::explicit_sum, std::move(b));
}

CauchyTable chor_via_trudi(unsigned N, unsigned r, unsigned n_max, const Caps& caps) {
    require_positive(N, r);
    if (n_max > caps.partitions)
        throw CapExceeded("partition", caps.partitions, n_max);
    const auto D = weight_D(N, r, n_max).values;
    std::vector<ExactRational> b(n_max + 1);
    b[0] = 1;
    for (unsigned n = 1; n <= n_max; ++n)
        b[n] = trudi_sum({ExactRational(1), {D.begin() + 1, D.begin() + 1 + n}}, caps);
    return scale_by_factorial(N, r, Method::trudi, std::move(b));
}

CauchyTable chor_via_convolution(unsigned N, unsigned r, unsigned n_max) {
    require_positive(N, r);
    const auto base = c_via_series(N, n_max).normalized();
    const auto power = series_pow(TruncatedSeries(base), r);
    return scale_by_factorial(N, r, Method::convolution,
                              {power.coefficients().begin(), power.coefficients().end()});
}

CauchyTable chor_via_series(unsigned N, unsigned r, unsigned n_max) {
    require_positive(N, r);
    const auto inv = series_reciprocal(series_pow(hgc_generating_series(N, n_max), r));
    return scale_by_factorial(N, r, Method::series, {inv.coefficients().begin(), inv.coefficients().end()});
}

CauchyTable compute_table(unsigned N, unsigned r, Method method, unsigned n_max, const Caps& caps) {
    require_positive(N, r);
    switch (method) {
    case Method::series:
        return r == 1 ? c_via_series(N, n_max) : chor_via_series(N, r, n_max);
    case Method::recurrence:
        return r == 1 ? c_via_recurrence(N, n_max) : chor_via_recurrence(N, r, n_max);
    case Method::determinant:
        return r == 1 ? c_via_determinant(N, n_max) : chor_via_determinant(N, r, n_max);
    case Method::compositions:
        if (r != 1)
            throw std::invalid_argument("method 'compositions' is only defined for r = 1");
        return c_via_compositions(N, n_max, caps);
    case Method::trudi:
        return r == 1 ? c_via_trudi(N, n_max, caps) : chor_via_trudi(N, r, n_max, caps);
    case Method::explicit_sum:
        return chor_via_explicit(N, r, n_max, caps);
    case Method::convolution:
        return chor_via_convolution(N, r, n_max);
    }
    throw std::invalid_argument("unknown method");
}

std::vector<ExactRational> prop2_residuals(unsigned N, unsigned r, const std::vector<ExactRational>& values) {
    require_positive(N, r);
    const unsigned n_max = values.empty() ? 0 : static_cast<unsigned>(values.size() - 1);
    // inner[e] = sum over weak compositions of e into r parts of 1/prod(N+i_j)
    std::vector<ExactRational> inner(n_max + 1);
    for (unsigned e = 0; e <= n_max; ++e) {
        for_each_weak_composition(e, r, [&](std::span<const unsigned> parts) {
            Integer denom = 1;
            for (unsigned i : parts)
                denom *= N + i;
            inner[e] += ExactRational(Integer(1), denom);
        });
    }
    std::vector<ExactRational> residuals;
    for (unsigned n = 1; n <= n_max; ++n) {
        ExactRational acc;
        for (unsigned m = 0; m <= n; ++m)
            acc += sign_power(n - m) * values[m] / ExactRational(factorial(m)) * inner[n - m];
        residuals.push_back(std::move(acc));
    }
    return residuals;
}

VerificationReport D_inversion(unsigned N, unsigned r, unsigned n_max) {
    const auto D = weight_D(N, r, n_max).values;
    const auto b = chor_via_recurrence(N, r, n_max).normalized();
    const std::vector<ExactRational> bands(b.begin() + 1, b.end());
    const std::vector<ExactRational> weights(D.begin() + 1, D.end());

    VerificationReport report;
    const auto minors = hessenberg_minors({ExactRational(1), bands});
    compare_sequences(report, "weight-inversion-det", {N, r, std::nullopt}, weights,
                      {minors.begin() + 1, minors.end()}, 1);

    std::vector<ExactRational> signed_weights;
    for (unsigned k = 1; k <= n_max; ++k)
        signed_weights.push_back(sign_power(k) * D[k]);
    compare_sequences(report, "weight-inversion-matrix", {N, r, std::nullopt}, signed_weights,
                      unit_lower_toeplitz_inverse(bands), 1);
    return report;
}

}  // namespace hgc
