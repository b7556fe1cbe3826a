#include "hgcauchy/random.hpp"

namespace hgc {

std::int64_t RationalGenerator::uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
}

ExactRational RationalGenerator::rational() { return {uniform(-50, 50), uniform(1, 50)}; }

ExactRational RationalGenerator::nonzero_rational() {
    ExactRational value;
    while (value.is_zero())
        value = rational();
    return value;
}

TruncatedSeries RationalGenerator::series(unsigned order) {
    std::vector<ExactRational> c;
    c.reserve(order + 1);
    for (unsigned k = 0; k <= order; ++k)
        c.push_back(rational());
    return TruncatedSeries(std::move(c));
}

HessenbergSpec RationalGenerator::hessenberg(unsigned dimension) {
    HessenbergSpec spec;
    spec.super = rational();
    for (unsigned k = 0; k < dimension; ++k)
        spec.band.push_back(rational());
    return spec;
}

}  // namespace hgc
