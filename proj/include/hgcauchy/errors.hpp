#pragma once

#include <stdexcept>
#include <string>

namespace hgc {

/// Reciprocal requested for a series whose constant term is zero.
class ZeroConstantTerm : public std::domain_error {
public:
    ZeroConstantTerm() : std::domain_error("series has zero constant term") {}
};

/// Hasse-Teichmueller derivative of order larger than the series order.
class OrderExceeded : public std::domain_error {
public:
    OrderExceeded(unsigned requested, unsigned available)
        : std::domain_error("derivative order " + std::to_string(requested) + " exceeds series order " +
                            std::to_string(available)) {}
};

/// An enumeration-based method was asked to go beyond its configured cap.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& cap_name, unsigned cap, unsigned requested)
        : std::runtime_error(cap_name + " cap exceeded: requested n = " + std::to_string(requested) +
                             ", cap is " + std::to_string(cap) + " (use --unsafe-caps to override)"),
          cap_name_(cap_name), cap_(cap) {}

    const std::string& cap_name() const { return cap_name_; }
    unsigned cap() const { return cap_; }

private:
    std::string cap_name_;
    unsigned cap_;
};

/// Upper limits for the exponential enumerations.
struct Caps {
    unsigned compositions = 22;  // strict compositions of n: 2^(n-1)
    unsigned chains = 14;        // descending chains from n: 2^n
    unsigned partitions = 24;    // integer partitions of m (Trudi sums)

    static Caps unlimited() { return {~0u, ~0u, ~0u}; }
};

}  // namespace hgc
