#include "hgcauchy/closed_forms.hpp"

#include "hgcauchy/combinatorics.hpp"

namespace hgc {

namespace {

ExactRational q(std::int64_t v) { return ExactRational(v); }

ExactRational choose(unsigned n, unsigned k) { return n < k ? ExactRational() : ExactRational(binomial(n, k)); }

}  // namespace

std::optional<ExactRational> c_closed_form(unsigned N, unsigned n) {
    const ExactRational x(static_cast<std::int64_t>(N));
    const auto p = [&](std::int64_t shift) { return x + q(shift); };
    switch (n) {
    case 0:
        return q(1);
    case 1:
        return x / p(1);
    case 2:
        return -q(2) * x / (p(1).pow(2) * p(2));
    case 3:
        return q(6) * x * (x.pow(2) + x + q(2)) / (p(1).pow(3) * p(2) * p(3));
    case 4: {
        const auto poly = x.pow(5) + q(5) * x.pow(4) + q(14) * x.pow(3) + q(24) * x.pow(2) + q(20) * x + q(12);
        return -q(24) * x * poly / (p(1).pow(4) * p(2).pow(2) * p(3) * p(4));
    }
    case 5: {
        const auto poly = x.pow(7) + q(8) * x.pow(6) + q(35) * x.pow(5) + q(96) * x.pow(4) + q(160) * x.pow(3) +
                          q(184) * x.pow(2) + q(116) * x + q(48);
        return q(120) * x * poly / (p(1).pow(5) * p(2).pow(2) * p(3) * p(4) * p(5));
    }
    default:
        return std::nullopt;
    }
}

std::optional<ExactRational> chor_closed_form(unsigned N, unsigned r, unsigned n) {
    const ExactRational x(static_cast<std::int64_t>(N));
    const ExactRational k(static_cast<std::int64_t>(r));
    const auto p = [&](std::int64_t shift) { return x + q(shift); };
    switch (n) {
    case 0:
        return q(1);
    case 1:
        return k * x / p(1);
    case 2:
        return k * (k + q(1)) * x.pow(2) / p(1).pow(2) - q(2) * k * x / p(2);
    case 3:
        return k * (k + q(1)) * (k + q(2)) * x.pow(3) / p(1).pow(3) -
               q(6) * k * (k + q(1)) * x.pow(2) / (p(1) * p(2)) + q(6) * k * x / p(3);
    case 4:
        return k * (k + q(1)) * (k + q(2)) * (k + q(3)) * x.pow(4) / p(1).pow(4) -
               q(12) * k * (k + q(1)) * (k + q(2)) * x.pow(3) / (p(1).pow(2) * p(2)) +
               q(24) * k * (k + q(1)) * x.pow(2) / (p(1) * p(3)) + q(12) * k * (k + q(1)) * x.pow(2) / p(2).pow(2) -
               q(24) * k * x / p(4);
    default:
        return std::nullopt;
    }
}

std::optional<ExactRational> weight_display(unsigned N, unsigned r, unsigned e, bool as_printed) {
    const ExactRational x(static_cast<std::int64_t>(N));
    const ExactRational k(static_cast<std::int64_t>(r));
    const auto p = [&](std::int64_t shift) { return x + q(shift); };
    switch (e) {
    case 1:
        return k * x / p(1);
    case 2:
        return k * x / p(2) + k * (k - q(1)) * x.pow(2) / (q(2) * p(1).pow(2));
    case 3:
        return k * x / p(3) + k * (k - q(1)) * x.pow(2) / (p(1) * p(2)) + choose(r, 3) * x.pow(3) / p(1).pow(3);
    case 4: {
        const ExactRational pair_term = choose(r, 2) * x.pow(2) / (as_printed ? p(1).pow(2) : p(2).pow(2));
        const ExactRational triple_term = r >= 1 ? k * choose(r - 1, 2) * x.pow(3) / (p(1).pow(2) * p(2)) : q(0);
        return k * x / p(4) + k * (k - q(1)) * x.pow(2) / (p(1) * p(3)) + pair_term + triple_term +
               choose(r, 4) * x.pow(4) / p(1).pow(4);
    }
    default:
        return std::nullopt;
    }
}

}  // namespace hgc
