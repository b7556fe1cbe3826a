#include "hgcauchy/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hgc {

namespace {

constexpr unsigned kFactorialTable = 256;

const std::vector<Integer>& factorial_table() {
    static const std::vector<Integer> table = [] {
        std::vector<Integer> t(kFactorialTable + 1);
        t[0] = 1;
        for (unsigned i = 1; i <= kFactorialTable; ++i)
            t[i] = t[i - 1] * i;
        return t;
    }();
    return table;
}

// Partitions of m as non-increasing part lists, generated iteratively.
std::vector<PartitionMultiset> generate_partitions(unsigned m) {
    std::vector<PartitionMultiset> out;
    std::vector<unsigned> parts{m};
    while (true) {
        PartitionMultiset p{std::vector<unsigned>(m, 0)};
        for (unsigned part : parts)
            ++p.multiplicities[part - 1];
        out.push_back(std::move(p));

        // Next partition in reverse lexicographic order of the part list.
        unsigned ones = 0;
        while (!parts.empty() && parts.back() == 1) {
            parts.pop_back();
            ++ones;
        }
        if (parts.empty())
            break;
        const unsigned k = --parts.back();
        unsigned rest = ones + 1;
        while (rest > k) {
            parts.push_back(k);
            rest -= k;
        }
        if (rest > 0)
            parts.push_back(rest);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void weak_compositions(unsigned remaining, unsigned slot, std::vector<unsigned>& buf,
                       const CompositionVisitor& visit) {
    if (slot + 1 == buf.size()) {
        buf[slot] = remaining;
        visit(buf);
        return;
    }
    for (unsigned v = 0; v <= remaining; ++v) {
        buf[slot] = v;
        weak_compositions(remaining - v, slot + 1, buf, visit);
    }
}

void strict_compositions(unsigned remaining, std::vector<unsigned>& buf, const CompositionVisitor& visit) {
    if (remaining == 0) {
        visit(buf);
        return;
    }
    for (unsigned v = 1; v <= remaining; ++v) {
        buf.push_back(v);
        strict_compositions(remaining - v, buf, visit);
        buf.pop_back();
    }
}

}  // namespace

const Integer& factorial(unsigned n) {
    const auto& table = factorial_table();
    if (n < table.size())
        return table[n];
    // Rare path: cache larger values under a lock.
    static std::mutex mutex;
    static std::map<unsigned, Integer> large;
    std::lock_guard lock(mutex);
    auto it = large.find(n);
    if (it == large.end()) {
        Integer value;
        mpz_fac_ui(value.get_mpz_t(), n);
        it = large.emplace(n, std::move(value)).first;
    }
    return it->second;
}

Integer binomial(unsigned n, unsigned k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Integer multinomial(std::span<const unsigned> parts) {
    const unsigned total = std::accumulate(parts.begin(), parts.end(), 0u);
    Integer out = factorial(total);
    for (unsigned p : parts)
        out /= factorial(p);
    return out;
}

unsigned PartitionMultiset::total_parts() const {
    return std::accumulate(multiplicities.begin(), multiplicities.end(), 0u);
}

unsigned PartitionMultiset::weight() const {
    unsigned w = 0;
    for (std::size_t k = 0; k < multiplicities.size(); ++k)
        w += static_cast<unsigned>(k + 1) * multiplicities[k];
    return w;
}

const std::vector<PartitionMultiset>& enumerate_partition_multiplicities(unsigned m, const Caps& caps) {
    if (m == 0)
        throw std::invalid_argument("enumerate_partition_multiplicities: m must be positive");
    if (m > caps.partitions)
        throw CapExceeded("partition", caps.partitions, m);

    static std::mutex mutex;
    static std::map<unsigned, std::vector<PartitionMultiset>> memo;
    std::lock_guard lock(mutex);
    auto it = memo.find(m);
    if (it == memo.end())
        it = memo.emplace(m, generate_partitions(m)).first;
    return it->second;
}

void for_each_weak_composition(unsigned n, unsigned parts, const CompositionVisitor& visit) {
    if (parts == 0) {
        if (n == 0)
            visit({});
        return;
    }
    std::vector<unsigned> buf(parts, 0);
    weak_compositions(n, 0, buf, visit);
}

void for_each_strict_composition(unsigned n, const CompositionVisitor& visit) {
    if (n == 0)
        return;
    std::vector<unsigned> buf;
    buf.reserve(n);
    strict_compositions(n, buf, visit);
}

}  // namespace hgc
