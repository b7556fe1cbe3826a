#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hgcauchy/errors.hpp"
#include "hgcauchy/rational.hpp"

namespace hgc {

/// n! from a table shared by every module; thread-safe.
const Integer& factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
/// (t_1 + ... + t_m)! / (t_1! ... t_m!)
Integer multinomial(std::span<const unsigned> parts);

/// Multiplicity form of an integer partition of m: t_k copies of part k,
/// with sum_k k * t_k = m. Index 0 of `multiplicities` holds t_1.
struct PartitionMultiset {
    std::vector<unsigned> multiplicities;

    unsigned total_parts() const;
    unsigned weight() const;  // sum_k k * t_k
    friend bool operator==(const PartitionMultiset&, const PartitionMultiset&) = default;
    friend auto operator<=>(const PartitionMultiset&, const PartitionMultiset&) = default;
};

/// Every (t_1..t_m) with sum k*t_k = m, ascending lexicographic order.
/// Results for m within the default partition cap are memoized.
/// Throws std::invalid_argument for m = 0 and CapExceeded past caps.partitions.
const std::vector<PartitionMultiset>& enumerate_partition_multiplicities(unsigned m, const Caps& caps = {});

using CompositionVisitor = std::function<void(std::span<const unsigned>)>;

/// Visits every ordered tuple of `parts` non-negative integers summing to n,
/// in lexicographic order.
void for_each_weak_composition(unsigned n, unsigned parts, const CompositionVisitor& visit);

/// Visits every ordered tuple of positive integers summing to n (any length),
/// in lexicographic order. n = 0 visits nothing.
void for_each_strict_composition(unsigned n, const CompositionVisitor& visit);

}  // namespace hgc
