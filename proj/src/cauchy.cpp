#include "hgcauchy/cauchy.hpp"

#include <array>
#include <stdexcept>

#include "hgcauchy/combinatorics.hpp"
#include "hgcauchy/hessenberg.hpp"

namespace hgc {

namespace {

constexpr std::array<std::string_view, 7> kMethodNames{"series", "recurrence", "determinant", "compositions",
                                                       "trudi",  "explicit",   "convolution"};

void require_positive_N(unsigned N) {
    if (N == 0)
        throw std::invalid_argument("N must be at least 1");
}

CauchyTable make_table(unsigned N, Method method, std::vector<ExactRational> values) {
    return CauchyTable{N, 1, method, std::move(values)};
}

HessenbergSpec ratio_spec(unsigned N, unsigned n) {
    HessenbergSpec spec;
    spec.band.reserve(n);
    for (unsigned k = 1; k <= n; ++k)
        spec.band.push_back(hgc_ratio(N, k));
    return spec;
}

// Depth-first walk over strict compositions of every s <= n_max, carrying
// the running product 1/prod(N+i_j) and the number of parts.
void composition_walk(unsigned N, unsigned n_max, unsigned sum, unsigned parts, const ExactRational& product,
                      std::vector<std::vector<ExactRational>>& by_parts) {
    for (unsigned next = 1; sum + next <= n_max; ++next) {
        const ExactRational p = product * ExactRational(1, static_cast<std::int64_t>(N + next));
        by_parts[sum + next][parts + 1] += p;
        composition_walk(N, n_max, sum + next, parts + 1, p, by_parts);
    }
}

}  // namespace

std::string_view to_string(Method method) { return kMethodNames[static_cast<std::size_t>(method)]; }

std::optional<Method> parse_method(std::string_view text) {
    for (std::size_t i = 0; i < kMethodNames.size(); ++i)
        if (kMethodNames[i] == text)
            return static_cast<Method>(i);
    return std::nullopt;
}

std::vector<ExactRational> CauchyTable::normalized() const {
    std::vector<ExactRational> out;
    out.reserve(values.size());
    for (unsigned n = 0; n < values.size(); ++n)
        out.push_back(values[n] / ExactRational(factorial(n)));
    return out;
}

ExactRational hgc_ratio(unsigned N, unsigned k) {
    return {static_cast<std::int64_t>(N), static_cast<std::int64_t>(N) + k};
}

TruncatedSeries hgc_generating_series(unsigned N, unsigned order) {
    require_positive_N(N);
    std::vector<ExactRational> c;
    c.reserve(order + 1);
    for (unsigned j = 0; j <= order; ++j)
        c.push_back(sign_power(j) * hgc_ratio(N, j));
    return TruncatedSeries(std::move(c));
}

CauchyTable c_via_series(unsigned N, unsigned n_max) {
    const auto inv = series_reciprocal(hgc_generating_series(N, n_max));
    std::vector<ExactRational> values;
    values.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n)
        values.push_back(inv[n] * ExactRational(factorial(n)));
    return make_table(N, Method::series, std::move(values));
}

CauchyTable c_via_recurrence(unsigned N, unsigned n_max) {
    require_positive_N(N);
    std::vector<ExactRational> c(n_max + 1);
    c[0] = 1;
    for (unsigned n = 1; n <= n_max; ++n) {
        ExactRational acc;
        for (unsigned i = 0; i < n; ++i) {
            ExactRational term = ExactRational(factorial(n), factorial(i)) * hgc_ratio(N, n - i) * c[i];
            if ((n - i - 1) % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        c[n] = std::move(acc);
    }
    return make_table(N, Method::recurrence, std::move(c));
}

CauchyTable c_via_determinant(unsigned N, unsigned n_max) {
    require_positive_N(N);
    const auto minors = hessenberg_minors(ratio_spec(N, n_max));
    std::vector<ExactRational> values;
    values.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n)
        values.push_back(ExactRational(factorial(n)) * minors[n]);
    return make_table(N, Method::determinant, std::move(values));
}

CauchyTable c_via_compositions(unsigned N, unsigned n_max, const Caps& caps) {
    require_positive_N(N);
    if (n_max > caps.compositions)
        throw CapExceeded("composition", caps.compositions, n_max);

    // by_parts[n][r] = sum over compositions of n into r parts of 1/prod(N+i_j)
    std::vector<std::vector<ExactRational>> by_parts(n_max + 1, std::vector<ExactRational>(n_max + 1));
    composition_walk(N, n_max, 0, 0, ExactRational(1), by_parts);

    std::vector<ExactRational> values(n_max + 1);
    values[0] = 1;
    const ExactRational minus_N(-static_cast<std::int64_t>(N));
    for (unsigned n = 1; n <= n_max; ++n) {
        ExactRational acc;
        for (unsigned r = 1; r <= n; ++r)
            acc += minus_N.pow(r) * by_parts[n][r];
        values[n] = sign_power(n) * ExactRational(factorial(n)) * acc;
    }
    return make_table(N, Method::compositions, std::move(values));
}

CauchyTable c_via_trudi(unsigned N, unsigned n_max, const Caps& caps) {
    require_positive_N(N);
    if (n_max > caps.partitions)
        throw CapExceeded("partition", caps.partitions, n_max);
    const auto full = ratio_spec(N, n_max);
    std::vector<ExactRational> values(n_max + 1);
    values[0] = 1;
    for (unsigned n = 1; n <= n_max; ++n) {
        HessenbergSpec spec{ExactRational(1), {full.band.begin(), full.band.begin() + n}};
        values[n] = ExactRational(factorial(n)) * trudi_sum(spec, caps);
    }
    return make_table(N, Method::trudi, std::move(values));
}

std::vector<ExactRational> eq3_residuals(unsigned N, const std::vector<ExactRational>& values) {
    std::vector<ExactRational> residuals;
    for (unsigned n = 1; n < values.size(); ++n) {
        ExactRational acc;
        for (unsigned i = 0; i <= n; ++i) {
            const ExactRational denom = ExactRational(static_cast<std::int64_t>(N + n - i)) * ExactRational(factorial(i));
            acc += sign_power(i) * values[i] / denom;
        }
        residuals.push_back(std::move(acc));
    }
    return residuals;
}

VerificationReport ratio_inversion(unsigned N, unsigned n_max) {
    const auto b = c_via_series(N, n_max).normalized();
    HessenbergSpec spec{ExactRational(1), {b.begin() + 1, b.end()}};
    const auto minors = hessenberg_minors(spec);
    std::vector<ExactRational> expected;
    for (unsigned n = 1; n <= n_max; ++n)
        expected.push_back(hgc_ratio(N, n));
    VerificationReport report;
    compare_sequences(report, "ratio-inversion", {N, 1u, std::nullopt}, expected,
                      std::vector<ExactRational>(minors.begin() + 1, minors.end()), 1);
    return report;
}

std::vector<ExactRational> classical_bernoulli_det(unsigned n_max) {
    HessenbergSpec spec;
    for (unsigned k = 1; k <= n_max; ++k)
        spec.band.push_back(ExactRational(Integer(1), factorial(k + 1)));
    const auto minors = hessenberg_minors(spec);
    std::vector<ExactRational> out;
    for (unsigned n = 0; n <= n_max; ++n)
        out.push_back(sign_power(n) * ExactRational(factorial(n)) * minors[n]);
    return out;
}

std::vector<ExactRational> classical_euler_det(unsigned n_max) {
    HessenbergSpec spec;
    for (unsigned k = 1; k <= n_max; ++k)
        spec.band.push_back(ExactRational(Integer(1), factorial(2 * k)));
    const auto minors = hessenberg_minors(spec);
    std::vector<ExactRational> out;
    for (unsigned n = 0; n <= n_max; ++n)
        out.push_back(sign_power(n) * ExactRational(factorial(2 * n)) * minors[n]);
    return out;
}

ExactRational c_corollary_literal(unsigned N, unsigned n, const Caps& caps) {
    require_positive_N(N);
    if (n == 0)
        return 1;
    ExactRational total;
    for (const auto& p : enumerate_partition_multiplicities(n, caps)) {
        const unsigned parts = p.total_parts();
        Integer denom = 1;
        for (unsigned t : p.multiplicities)
            denom *= factorial(t);
        ExactRational term(factorial(n - parts), denom);
        term *= sign_power(parts);
        for (unsigned k = 0; k < n; ++k)
            if (p.multiplicities[k] != 0)
                term *= hgc_ratio(N, k + 1).pow(p.multiplicities[k]);
        total += term;
    }
    return ExactRational(factorial(n)) * total;
}

}  // namespace hgc
