#pragma once

#include <cstdint>
#include <random>

#include "hgcauchy/hessenberg.hpp"
#include "hgcauchy/rational.hpp"
#include "hgcauchy/series.hpp"

namespace hgc {

/// Seed shared by every randomized identity check.
inline constexpr std::uint64_t kPropertySeed = 20160817;

/// Reproducible source of random rationals with |numerator| <= 50 and
/// 1 <= denominator <= 50. Uses raw mt19937_64 output (fully specified by
/// the standard) instead of the implementation-defined distributions.
class RationalGenerator {
public:
    explicit RationalGenerator(std::uint64_t seed = kPropertySeed) : engine_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi);  // inclusive
    ExactRational rational();
    ExactRational nonzero_rational();
    TruncatedSeries series(unsigned order);
    HessenbergSpec hessenberg(unsigned dimension);

private:
    std::mt19937_64 engine_;
};

}  // namespace hgc
